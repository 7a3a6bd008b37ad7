#include "rca/extensions.hpp"

#include <algorithm>

#include "rca/errors.hpp"
#include "rca/sampling.hpp"

namespace rca {

namespace {

Counterexample ce(std::vector<std::pair<std::string, Element>> b,
                  std::string note = {}) {
  return Counterexample{std::move(b), std::move(note)};
}

std::vector<Element> algebra_elements(const RegularClosedAlgebra& a) {
  return enumerate_elements(a.carrier());
}

void require_space_backed(const SpaceBackedStructure& s, const char* what) {
  if (!(s.algebra.carrier() == s.structure.carrier()))
    throw PreconditionError(std::string(what) +
                            ": structure does not live on its algebra");
}

}  // namespace

std::vector<AxiomReport> check_admissible(const SpaceBackedStructure& s) {
  require_space_backed(s, "check_admissible");
  const RegularClosedAlgebra& rca = s.algebra;
  const FiniteSpace& X = rca.space();
  auto elems = algebra_elements(rca);
  std::vector<AxiomReport> out;

  AxiomReport a1 = AxiomReport::passed("A1");
  for (const Element& f : elems) {
    for (const Element& g : elems)
      if ((rca.points_of(f) & rca.points_of(g)) != 0 &&
          !s.structure.contact(f, g)) {
        a1 = AxiomReport::failed("A1", ce({{"F", f}, {"G", g}}));
        break;
      }
    if (!a1.ok()) break;
  }
  out.push_back(a1);

  AxiomReport a2 = AxiomReport::passed("A2");
  for (const Element& f : elems) {
    std::uint32_t interior = X.interior(rca.points_of(f));
    for (int x = 0; x < X.size() && a2.ok(); ++x) {
      if (!(interior >> x & 1)) continue;
      bool found = false;
      for (const Element& g : elems) {
        if (!s.structure.in_ideal(g)) continue;
        if ((X.interior(rca.points_of(g)) >> x & 1) &&
            way_below(s.structure, g, f)) {
          found = true;
          break;
        }
      }
      if (!found)
        a2 = AxiomReport::failed(
            "A2", ce({{"F", f}}, "point " + X.names()[x] +
                                     " admits no bounded neighborhood"));
    }
    if (!a2.ok()) break;
  }
  out.push_back(a2);
  return out;
}

std::vector<AxiomReport> check_la(const SpaceBackedStructure& s) {
  require_space_backed(s, "check_la");
  const RegularClosedAlgebra& rca = s.algebra;
  auto elems = algebra_elements(rca);
  std::vector<AxiomReport> out;

  AxiomReport la1 = AxiomReport::passed("LA1");
  for (const Element& f : elems) {
    for (const Element& g : elems)
      if ((rca.points_of(f) & rca.points_of(g)) != 0 &&
          !s.structure.contact(f, g)) {
        la1 = AxiomReport::failed("LA1", ce({{"F", f}, {"G", g}}));
        break;
      }
    if (!la1.ok()) break;
  }
  out.push_back(la1);

  // Every regular closed set of a finite space is compact, so LA2 says the
  // ideal is everything.
  AxiomReport la2 = AxiomReport::passed("LA2");
  for (const Element& f : elems)
    if (!s.structure.in_ideal(f)) {
      la2 = AxiomReport::failed("LA2", ce({{"F", f}}));
      break;
    }
  out.push_back(la2);

  AxiomReport la3 = AxiomReport::passed("LA3");
  for (const Element& f : elems) {
    for (const Element& g : elems)
      if (s.structure.contact(f, g) &&
          (rca.points_of(f) & rca.points_of(g)) == 0) {
        la3 = AxiomReport::failed("LA3", ce({{"F", f}, {"G", g}}));
        break;
      }
    if (!la3.ok()) break;
  }
  out.push_back(la3);
  return out;
}

std::vector<AxiomReport> check_la_interval(const ContactStructure& s,
                                           const CheckOptions& opts) {
  if (s.carrier().finite())
    throw UnsupportedError("check_la_interval is for the interval carrier");
  std::vector<AxiomReport> out;
  Sampler s1(opts.seed * 0x9E3779B97F4A7C15ull + 21);
  AxiomReport la1 = AxiomReport::sampled("LA1", opts.samples);
  for (int i = 0; i < opts.samples; ++i) {
    Element f = s1.element(s.carrier());
    Element g = s1.element(s.carrier());
    if (f.interval().intersects(g.interval()) && !s.contact(f, g)) {
      la1 = AxiomReport::failed("LA1", ce({{"F", f}, {"G", g}}));
      break;
    }
  }
  out.push_back(la1);

  Sampler s2(opts.seed * 0x9E3779B97F4A7C15ull + 22);
  AxiomReport la2 = AxiomReport::sampled("LA2", opts.samples);
  for (int i = 0; i < opts.samples; ++i) {
    Element f = s2.bounded_element(s.carrier());
    if (!s.in_ideal(f)) {
      la2 = AxiomReport::failed("LA2", ce({{"F", f}}));
      break;
    }
  }
  out.push_back(la2);

  Sampler s3(opts.seed * 0x9E3779B97F4A7C15ull + 23);
  AxiomReport la3 = AxiomReport::sampled("LA3", opts.samples);
  for (int i = 0; i < opts.samples; ++i) {
    Element f = s3.element(s.carrier());
    Element g = s3.bounded_element(s.carrier());
    if (s.contact(f, g) && !f.interval().intersects(g.interval())) {
      la3 = AxiomReport::failed("LA3", ce({{"F", f}, {"G", g}}));
      break;
    }
  }
  out.push_back(la3);
  return out;
}

AlphaResult alpha(const Extension& ext) {
  const SpaceMap& f = ext.embedding.map();
  RegularClosedAlgebra ax(ext.base());
  RegularClosedAlgebra ay(ext.total());

  // eta on atoms: closures of the embedded images meet in the total space.
  auto cl_image = [&](const Element& e) {
    return ext.total().closure(f.image(ax.points_of(e)));
  };
  std::size_t k = ax.atom_sets().size();
  std::vector<std::vector<bool>> adj(k, std::vector<bool>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      adj[i][j] = (cl_image(atom(ax.carrier(), static_cast<int>(i))) &
                   cl_image(atom(ax.carrier(), static_cast<int>(j)))) != 0;

  // Every regular closed set of a finite total space is compact, so the
  // pulled-back ideal is everything.
  ContactStructure structure(ax.carrier(), ContactRelation::atom_graph(adj),
                             Ideal::all());

  // The transport G -> f^-1(G) must be an isomorphism onto the new
  // structure; verify it.
  std::size_t ny = std::size_t{1} << ay.atom_count();
  std::vector<Element> r_table;
  r_table.reserve(ny);
  for (std::size_t m = 0; m < ny; ++m) {
    Element g = from_atom_bits(ay.carrier(), m);
    std::uint32_t pre = f.preimage(ay.points_of(g));
    if (!ax.is_rc(pre))
      throw Error("transport image is not regular closed in the base");
    r_table.push_back(ax.element_of(pre));
  }
  std::vector<bool> hit(std::size_t{1} << ax.atom_count(), false);
  for (const Element& e : r_table) hit[e.bits()] = true;
  if (std::count(hit.begin(), hit.end(), false) != 0)
    throw Error("transport is not onto RC of the base");
  for (std::size_t m1 = 0; m1 < ny; ++m1)
    for (std::size_t m2 = 0; m2 < ny; ++m2) {
      Element g1 = from_atom_bits(ay.carrier(), m1);
      Element g2 = from_atom_bits(ay.carrier(), m2);
      bool rho_y = (ay.points_of(g1) & ay.points_of(g2)) != 0;
      if (rho_y != structure.contact(r_table[m1], r_table[m2]))
        throw Error("transport does not carry the standard contact to eta");
      if (!(r_table[join(g1, g2).bits()] == join(r_table[m1], r_table[m2])))
        throw Error("transport is not a join homomorphism");
      if (!(r_table[meet(g1, g2).bits()] == meet(r_table[m1], r_table[m2])))
        throw Error("transport is not a meet homomorphism");
    }

  return AlphaResult{SpaceBackedStructure{std::move(ax), std::move(structure)},
                     std::move(r_table)};
}

BetaResult beta(const SpaceBackedStructure& s) {
  require_space_backed(s, "beta");
  for (const AxiomReport& r : check_admissible(s))
    if (!r.ok())
      throw PreconditionError("beta input fails " + r.axiom + ": " +
                              to_text(r));
  for (const AxiomReport& r : check_lca(s.structure))
    if (!r.ok())
      throw PreconditionError("beta input fails " + r.axiom + ": " +
                              to_text(r));

  DualSpaceResult dual = psi_a(s.structure);
  const FiniteSpace& X = s.algebra.space();
  std::vector<int> mapping;
  mapping.reserve(X.size());
  for (int x = 0; x < X.size(); ++x) {
    Cluster sigma_x = point_cluster(s.algebra, x);
    int found = -1;
    for (std::size_t i = 0; i < dual.points.size(); ++i)
      if (dual.points[i].same_members(sigma_x)) {
        found = static_cast<int>(i);
        break;
      }
    if (found < 0)
      throw PreconditionError(
          "sigma_" + X.names()[x] +
          " is not a cluster of the dual space (space not embeddable)");
    mapping.push_back(found);
  }
  SpaceMap t(X, dual.space, std::move(mapping));
  if (!DenseEmbedding::qualifies(t))
    throw PreconditionError(
        "x -> sigma_x is not a dense embedding for this space");
  return BetaResult{std::move(dual), Extension{DenseEmbedding(std::move(t))}};
}

AdmissibleFamily enumerate_admissible(const FiniteSpace& space,
                                      int atom_bound) {
  RegularClosedAlgebra rca(space);
  int k = rca.atom_count();
  if (k > atom_bound)
    throw PreconditionError("regular closed algebra exceeds the atom bound");

  AdmissibleFamily fam;
  int offdiag = k * (k - 1) / 2;
  std::uint64_t graphs = std::uint64_t{1} << offdiag;
  std::uint64_t gens = std::uint64_t{1} << k;
  for (std::uint64_t gbits = 0; gbits < graphs; ++gbits) {
    std::vector<std::vector<bool>> adj(k, std::vector<bool>(k, false));
    int bit = 0;
    for (int i = 0; i < k; ++i) {
      adj[i][i] = true;
      for (int j = i + 1; j < k; ++j, ++bit)
        if (gbits >> bit & 1) adj[i][j] = adj[j][i] = true;
    }
    for (std::uint64_t gen = 0; gen < gens; ++gen) {
      ContactStructure candidate(rca.carrier(),
                                 ContactRelation::atom_graph(adj),
                                 Ideal::generated(from_atom_bits(rca.carrier(), gen)));
      if (!all_pass(check_lca(candidate))) continue;
      SpaceBackedStructure sbs{rca, candidate};
      if (!all_pass(check_admissible(sbs))) continue;
      fam.structures.push_back(std::move(sbs));
    }
  }
  std::size_t n = fam.structures.size();
  fam.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      fam.leq[i][j] = admissible_leq(fam.structures[i], fam.structures[j]);
  return fam;
}

bool admissible_leq(const SpaceBackedStructure& s1,
                    const SpaceBackedStructure& s2) {
  if (!(s1.algebra.carrier() == s2.algebra.carrier()))
    throw PreconditionError("structures over different algebras");
  auto elems = algebra_elements(s1.algebra);
  // s1 precedes s2 iff rho2 is contained in rho1 and the second ideal in
  // the first.
  for (const Element& a : elems) {
    if (s2.structure.in_ideal(a) && !s1.structure.in_ideal(a)) return false;
    for (const Element& b : elems)
      if (s2.structure.contact(a, b) && !s1.structure.contact(a, b))
        return false;
  }
  return true;
}

bool extension_leq(const Extension& e1, const Extension& e2) {
  if (!(e1.base() == e2.base()))
    throw PreconditionError("extensions of different spaces");
  for (const SpaceMap& h : all_maps(e2.total(), e1.total())) {
    if (!map_is(h, MapProperty::continuous)) continue;
    if (compose(h, e2.embedding.map()) == e1.embedding.map()) return true;
  }
  return false;
}

bool extensions_equivalent(const Extension& e1, const Extension& e2) {
  if (!(e1.base() == e2.base()))
    throw PreconditionError("extensions of different spaces");
  for (const SpaceMap& h : all_maps(e1.total(), e2.total())) {
    if (!is_homeomorphism(h)) continue;
    if (compose(h, e1.embedding.map()) == e2.embedding.map()) return true;
  }
  return false;
}

bool LocalProximity::proximally_inside(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t full = space.full_mask();
  return !beta[a][full & ~b];
}

LocalProximity bridge_to_local_proximity(const SpaceBackedStructure& s) {
  require_space_backed(s, "bridge_to_local_proximity");
  const FiniteSpace& X = s.algebra.space();
  if (X.size() > 4)
    throw PreconditionError("power-set bridge supports up to 4 points");
  auto elems = algebra_elements(s.algebra);
  std::uint32_t full = X.full_mask();
  std::size_t subsets = std::size_t{1} << X.size();

  LocalProximity lp;
  lp.space = X;
  lp.b_family.assign(subsets, false);
  for (std::uint32_t m = 0; m < subsets; ++m)
    for (const Element& e : elems)
      if (s.structure.in_ideal(e) && (m & ~s.algebra.points_of(e)) == 0) {
        lp.b_family[m] = true;
        break;
      }

  // Precompute interiors of the regular closed sets.
  std::vector<std::uint32_t> ints(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i)
    ints[i] = X.interior(s.algebra.points_of(elems[i]));

  lp.beta.assign(subsets, std::vector<bool>(subsets, true));
  for (std::uint32_t m = 0; m < subsets; ++m)
    for (std::uint32_t n = 0; n < subsets; ++n) {
      // m apart from n iff for every bounded B some rho-apart pair of
      // regular closed sets swallows the B-traces.
      bool apart = true;
      for (std::uint32_t b = 0; b < subsets && apart; ++b) {
        if (!lp.b_family[b]) continue;
        bool witnessed = false;
        for (std::size_t fi = 0; fi < elems.size() && !witnessed; ++fi) {
          if ((m & b) & ~ints[fi]) continue;
          for (std::size_t gi = 0; gi < elems.size(); ++gi) {
            if ((n & b) & ~ints[gi]) continue;
            if (!s.structure.contact(elems[fi], elems[gi])) {
              witnessed = true;
              break;
            }
          }
        }
        if (!witnessed) apart = false;
      }
      lp.beta[m][n] = !apart;
    }
  return lp;
}

SpaceBackedStructure restrict_local_proximity(const LocalProximity& lp) {
  RegularClosedAlgebra rca(lp.space);
  int k = rca.atom_count();
  std::vector<std::vector<bool>> adj(k, std::vector<bool>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      adj[i][j] = lp.beta[rca.atom_sets()[i]][rca.atom_sets()[j]];

  Element gen = zero(rca.carrier());
  for (const Element& e : enumerate_elements(rca.carrier()))
    if (lp.b_family[rca.points_of(e)]) gen = join(gen, e);
  Ideal ideal = is_one(gen) ? Ideal::all() : Ideal::generated(gen);
  ContactStructure st(rca.carrier(), ContactRelation::atom_graph(adj),
                      std::move(ideal));
  return SpaceBackedStructure{std::move(rca), std::move(st)};
}

std::vector<AxiomReport> check_local_proximity(const LocalProximity& lp) {
  std::vector<AxiomReport> out;
  const FiniteSpace& X = lp.space;
  std::uint32_t subsets = std::uint32_t{1} << X.size();
  auto pt = [&](int i) { return std::uint32_t{1} << i; };
  auto elem_of = [&](std::uint32_t m) {
    // Power-set members rendered on a helper carrier for reports.
    return from_atom_bits(Carrier::atoms(X.size()), m);
  };

  AxiomReport sep = AxiomReport::passed("separated");
  for (int x = 0; x < X.size() && sep.ok(); ++x)
    for (int y = 0; y < X.size(); ++y)
      if (x != y && lp.beta[pt(x)][pt(y)]) {
        sep = AxiomReport::failed(
            "separated", ce({{"x", elem_of(pt(x))}, {"y", elem_of(pt(y))}}));
        break;
      }
  out.push_back(sep);

  AxiomReport c1 = AxiomReport::passed("C1");
  for (std::uint32_t m = 1; m < subsets; ++m)
    if (!lp.beta[m][m]) {
      c1 = AxiomReport::failed("C1", ce({{"a", elem_of(m)}}));
      break;
    }
  out.push_back(c1);

  AxiomReport c2 = AxiomReport::passed("C2");
  for (std::uint32_t m = 0; m < subsets; ++m)
    if (lp.beta[0][m] || lp.beta[m][0]) {
      c2 = AxiomReport::failed("C2", ce({{"a", elem_of(m)}}));
      break;
    }
  out.push_back(c2);

  AxiomReport c3 = AxiomReport::passed("C3");
  for (std::uint32_t m = 0; m < subsets && c3.ok(); ++m)
    for (std::uint32_t n = 0; n < subsets; ++n)
      if (lp.beta[m][n] != lp.beta[n][m]) {
        c3 = AxiomReport::failed("C3",
                                 ce({{"a", elem_of(m)}, {"b", elem_of(n)}}));
        break;
      }
  out.push_back(c3);

  AxiomReport c4 = AxiomReport::passed("C4");
  for (std::uint32_t m = 0; m < subsets && c4.ok(); ++m)
    for (std::uint32_t n1 = 0; n1 < subsets && c4.ok(); ++n1)
      for (std::uint32_t n2 = 0; n2 < subsets; ++n2)
        if (lp.beta[m][n1 | n2] != (lp.beta[m][n1] || lp.beta[m][n2])) {
          c4 = AxiomReport::failed(
              "C4", ce({{"a", elem_of(m)}, {"b", elem_of(n1)}, {"c", elem_of(n2)}}));
          break;
        }
  out.push_back(c4);

  AxiomReport bc1 = AxiomReport::passed("BC1");
  for (std::uint32_t a = 0; a < subsets && bc1.ok(); ++a) {
    if (!lp.b_family[a]) continue;
    for (std::uint32_t c = 0; c < subsets; ++c) {
      if (!lp.proximally_inside(a, c)) continue;
      bool found = false;
      for (std::uint32_t b = 0; b < subsets; ++b)
        if (lp.b_family[b] && lp.proximally_inside(a, b) &&
            lp.proximally_inside(b, c)) {
          found = true;
          break;
        }
      if (!found) {
        bc1 = AxiomReport::failed("BC1",
                                  ce({{"a", elem_of(a)}, {"c", elem_of(c)}}));
        break;
      }
    }
  }
  out.push_back(bc1);

  AxiomReport bc2 = AxiomReport::passed("BC2");
  for (std::uint32_t a = 0; a < subsets && bc2.ok(); ++a)
    for (std::uint32_t b = 0; b < subsets; ++b) {
      if (!lp.beta[a][b]) continue;
      bool found = false;
      for (std::uint32_t c = 0; c < subsets; ++c)
        if (lp.b_family[c] && lp.beta[a][c & b]) {
          found = true;
          break;
        }
      if (!found) {
        bc2 = AxiomReport::failed("BC2",
                                  ce({{"a", elem_of(a)}, {"b", elem_of(b)}}));
        break;
      }
    }
  out.push_back(bc2);
  return out;
}

namespace {

// cl(int(f^-1(F))) for a point set F of the codomain, as a point set.
std::uint32_t regularized_preimage(const SpaceMap& f, std::uint32_t set) {
  return f.domain.closure(f.domain.interior(f.preimage(set)));
}

}  // namespace

std::vector<AxiomReport> check_req(const SpaceMap& f,
                                   const SpaceBackedStructure& s1,
                                   const SpaceBackedStructure& s2) {
  if (!(f.domain == s1.algebra.space()) || !(f.codomain == s2.algebra.space()))
    throw PreconditionError("map endpoints do not match the structures");
  if (!map_is(f, MapProperty::continuous))
    throw PreconditionError("check_req needs a continuous map");
  auto e2 = algebra_elements(s2.algebra);
  std::vector<AxiomReport> out;

  AxiomReport req1 = AxiomReport::passed("REQ1");
  for (const Element& F : e2) {
    for (const Element& G : e2) {
      Element pf = s1.algebra.element_of(
          regularized_preimage(f, s2.algebra.points_of(F)));
      Element pg = s1.algebra.element_of(
          regularized_preimage(f, s2.algebra.points_of(G)));
      if (s1.structure.contact(pf, pg) && !s2.structure.contact(F, G)) {
        req1 = AxiomReport::failed("REQ1", ce({{"F", F}, {"G", G}}));
        break;
      }
    }
    if (!req1.ok()) break;
  }
  out.push_back(req1);

  AxiomReport req2 = AxiomReport::passed("REQ2");
  for (const Element& F : algebra_elements(s1.algebra)) {
    if (!s1.structure.in_ideal(F)) continue;
    std::uint32_t img = f.image(s1.algebra.points_of(F));
    bool found = false;
    for (const Element& G : e2)
      if (s2.structure.in_ideal(G) &&
          (img & ~s2.algebra.points_of(G)) == 0) {
        found = true;
        break;
      }
    if (!found) {
      req2 = AxiomReport::failed("REQ2", ce({{"F", F}}));
      break;
    }
  }
  out.push_back(req2);
  return out;
}

AlgebraMorphism induced_morphism(const SpaceMap& f,
                                 const SpaceBackedStructure& s1,
                                 const SpaceBackedStructure& s2) {
  std::size_t count = std::size_t{1} << s2.algebra.atom_count();
  std::vector<Element> table;
  table.reserve(count);
  for (std::size_t m = 0; m < count; ++m) {
    Element g = from_atom_bits(s2.algebra.carrier(), m);
    std::uint32_t pts =
        f.domain.closure(f.preimage(f.codomain.interior(s2.algebra.points_of(g))));
    table.push_back(s1.algebra.element_of(pts));
  }
  return AlgebraMorphism::from_table(s2.structure, s1.structure,
                                     std::move(table));
}

ExtendResult extend_map(const SpaceMap& f, const SpaceBackedStructure& s1,
                        const SpaceBackedStructure& s2) {
  auto req = check_req(f, s1, s2);
  if (!all_pass(req))
    throw PreconditionError("extend_map requires REQ1/REQ2:\n" + to_text(req));
  BetaResult b1 = beta(s1);
  BetaResult b2 = beta(s2);
  AlgebraMorphism phi = induced_morphism(f, s1, s2);
  SpaceMap g = lambda_a(phi);
  // lambda_a rebuilds the duals from equal structure values, so the spaces
  // coincide with the beta ones.
  if (!(g.domain == b1.dual.space) || !(g.codomain == b2.dual.space))
    throw Error("dual spaces diverged between beta and lambda_a");
  SpaceMap left = compose(g, b1.extension.embedding.map());
  SpaceMap right = compose(b2.extension.embedding.map(), f);
  if (!(left == right))
    throw Error("extension does not commute with the embeddings");
  return ExtendResult{std::move(b1), std::move(b2), std::move(g)};
}

std::vector<SpaceMap> search_extensions(const SpaceMap& f,
                                        const BetaResult& b1,
                                        const BetaResult& b2) {
  std::vector<SpaceMap> out;
  SpaceMap right = compose(b2.extension.embedding.map(), f);
  for (const SpaceMap& g : all_maps(b1.dual.space, b2.dual.space)) {
    if (!map_is(g, MapProperty::continuous)) continue;
    if (compose(g, b1.extension.embedding.map()) == right)
      out.push_back(g);
  }
  return out;
}

MainConditionsReport check_main_conditions(const SpaceMap& f,
                                           const SpaceBackedStructure& s1,
                                           const SpaceBackedStructure& s2) {
  MainConditionsReport rep{.conditions = {}, .matrix = {}, .extended = extend_map(f, s1, s2)};
  const SpaceMap& g = rep.extended.g;
  const FiniteSpace& X1 = s1.algebra.space();
  const FiniteSpace& X2 = s2.algebra.space();
  auto e1 = algebra_elements(s1.algebra);
  auto e2 = algebra_elements(s2.algebra);
  AlgebraMorphism phi = induced_morphism(f, s1, s2);
  LocalProximity lp1 = bridge_to_local_proximity(s1);
  LocalProximity lp2 = bridge_to_local_proximity(s2);

  bool f_skeletal = map_is(f, MapProperty::skeletal);
  rep.conditions.push_back(f_skeletal
                               ? AxiomReport::passed("skeletal")
                               : AxiomReport::failed("skeletal", ce({})));

  auto cl_image = [&](const Element& e) {
    return X2.closure(f.image(s1.algebra.points_of(e)));
  };

  // (O): transported way-below, literal on the regular closed algebra.
  AxiomReport cond_o = AxiomReport::passed("O");
  for (const Element& F : e1) {
    if (!s1.structure.in_ideal(F)) continue;
    for (const Element& G : e1) {
      if (!way_below(s1.structure, F, G)) continue;
      std::uint32_t cf = cl_image(F);
      std::uint32_t cg = cl_image(G);
      bool ok = s2.algebra.is_rc(cf) && s2.algebra.is_rc(cg) &&
                way_below(s2.structure, s2.algebra.element_of(cf),
                          s2.algebra.element_of(cg));
      if (!ok) {
        cond_o = AxiomReport::failed("O", ce({{"F", F}, {"G", G}}));
        break;
      }
    }
    if (!cond_o.ok()) break;
  }
  rep.conditions.push_back(cond_o);

  // (O1): same premise, conclusion under the bridged proximity.
  AxiomReport cond_o1 = AxiomReport::passed("O1");
  for (const Element& F : e1) {
    if (!s1.structure.in_ideal(F)) continue;
    for (const Element& G : e1) {
      if (!way_below(s1.structure, F, G)) continue;
      if (!lp2.proximally_inside(cl_image(F), cl_image(G))) {
        cond_o1 = AxiomReport::failed("O1", ce({{"F", F}, {"G", G}}));
        break;
      }
    }
    if (!cond_o1.ok()) break;
  }
  rep.conditions.push_back(cond_o1);

  // (O2): full subset quantification through both bridged proximities.
  AxiomReport cond_o2 = AxiomReport::passed("O2");
  std::uint32_t subsets1 = std::uint32_t{1} << X1.size();
  for (std::uint32_t a = 0; a < subsets1 && cond_o2.ok(); ++a) {
    if (!lp1.b_family[a]) continue;
    for (std::uint32_t b = 0; b < subsets1; ++b) {
      if (!lp1.proximally_inside(a, b)) continue;
      std::uint32_t fa = f.image(a);
      std::uint32_t cfb = X2.closure(f.image(b));
      if (!lp2.proximally_inside(fa, cfb)) {
        cond_o2 = AxiomReport::failed(
            "O2", ce({}, "A=" + X1.set_to_string(a) +
                             " B=" + X1.set_to_string(b)));
        break;
      }
    }
  }
  rep.conditions.push_back(cond_o2);

  // (P): bounded sets pull back to bounded sets.
  AxiomReport cond_p = AxiomReport::passed("P");
  for (const Element& G : e2) {
    if (!s2.structure.in_ideal(G)) continue;
    if (!s1.structure.in_ideal(phi.apply(G))) {
      cond_p = AxiomReport::failed("P", ce({{"G", G}}));
      break;
    }
  }
  rep.conditions.push_back(cond_p);

  // (I): apart bounded sets are separated through the preimage operator.
  AxiomReport cond_i = AxiomReport::passed("I");
  for (const Element& F1 : e1) {
    if (!s1.structure.in_ideal(F1)) continue;
    for (const Element& F2 : e1) {
      if (!s1.structure.in_ideal(F2)) continue;
      if (s1.structure.contact(F1, F2)) continue;
      bool found = false;
      for (const Element& G2 : e2) {
        if (!s2.structure.in_ideal(G2)) continue;
        Element pulled = phi.apply(G2);
        if (!leq(F1, pulled) || s1.structure.contact(pulled, F2)) continue;
        for (const Element& G1 : e2)
          if (s2.structure.in_ideal(G1) && way_below(s2.structure, G1, G2)) {
            found = true;
            break;
          }
        if (found) break;
      }
      if (!found) {
        cond_i = AxiomReport::failed("I", ce({{"F1", F1}, {"F2", F2}}));
        break;
      }
    }
    if (!cond_i.ok()) break;
  }
  rep.conditions.push_back(cond_i);

  // (OI): the preimage operator is onto RC of the domain side.
  AxiomReport cond_oi = AxiomReport::passed("OI");
  for (const Element& F : e1) {
    bool found = false;
    for (const Element& G : e2)
      if (phi.apply(G) == F) {
        found = true;
        break;
      }
    if (!found) {
      cond_oi = AxiomReport::failed("OI", ce({{"F", F}}));
      break;
    }
  }
  rep.conditions.push_back(cond_oi);

  bool o = cond_o.ok(), o1 = cond_o1.ok(), o2 = cond_o2.ok();
  bool p = cond_p.ok(), icond = cond_i.ok(), oi = cond_oi.ok();
  bool g_skeletal = map_is(g, MapProperty::skeletal);
  bool g_open = map_is(g, MapProperty::open);
  bool g_perfect = map_is(g, MapProperty::perfect);
  bool g_dense = map_is(g, MapProperty::dense_image);
  bool g_inj = map_is(g, MapProperty::injective);
  bool f_dense = map_is(f, MapProperty::dense_image);

  rep.matrix = {
      {"a", "f skeletal", f_skeletal, g_skeletal},
      {"b", "f skeletal and (O)", f_skeletal && o, g_open},
      {"b1", "(O1)", o1, g_open},
      {"b2", "(O2)", o2, g_open},
      {"c", "(P)", p, g_perfect},
      {"d", "cl(f(X1)) = X2", f_dense, g_dense},
      {"e", "(I)", icond, g_inj},
      {"f", "(O1) and (OI)", o1 && oi, g_open && g_inj},
      {"g", "(P) and cl(f(X1)) = X2", p && f_dense, g_perfect &&
                                                        map_is(g, MapProperty::surjective)},
  };
  return rep;
}

std::vector<AxiomReport> check_compactification_conditions(
    const SpaceMap& f, const SpaceBackedStructure& s1,
    const SpaceBackedStructure& s2) {
  const FiniteSpace& X1 = s1.algebra.space();
  const FiniteSpace& X2 = s2.algebra.space();
  LocalProximity lp1 = bridge_to_local_proximity(s1);
  LocalProximity lp2 = bridge_to_local_proximity(s2);
  std::uint32_t subsets1 = std::uint32_t{1} << X1.size();
  std::vector<AxiomReport> out;

  AxiomReport oc = AxiomReport::passed("OC");
  for (std::uint32_t a = 0; a < subsets1 && oc.ok(); ++a)
    for (std::uint32_t b = 0; b < subsets1; ++b) {
      if (!lp1.proximally_inside(a, b)) continue;
      if (!lp2.proximally_inside(f.image(a), X2.closure(f.image(b)))) {
        oc = AxiomReport::failed("OC", ce({}, "A=" + X1.set_to_string(a) +
                                                  " B=" + X1.set_to_string(b)));
        break;
      }
    }
  out.push_back(oc);

  AxiomReport ob = AxiomReport::passed("OB");
  for (std::uint32_t a = 0; a < subsets1 && ob.ok(); ++a)
    for (std::uint32_t b = 0; b < subsets1; ++b) {
      if (!completely_separated(X1, a, b)) continue;
      std::uint32_t target =
          X2.full_mask() & ~X2.closure(f.image(X1.full_mask() & ~b));
      if (!completely_separated(X2, f.image(a), target)) {
        ob = AxiomReport::failed("OB", ce({}, "A=" + X1.set_to_string(a) +
                                                  " B=" + X1.set_to_string(b)));
        break;
      }
    }
  out.push_back(ob);

  // The classical sharper form: sufficient for openness of the extension,
  // not necessary; reported, never asserted equivalent to OB.
  AxiomReport pol = AxiomReport::passed("poljakov (sufficient, not necessary)");
  for (std::uint32_t a = 0; a < subsets1 && pol.ok(); ++a)
    for (std::uint32_t b = 0; b < subsets1; ++b) {
      if (!completely_separated(X1, a, b)) continue;
      std::uint32_t sharp = 0;
      for (int y = 0; y < X2.size(); ++y) {
        std::uint32_t fiber = f.preimage(std::uint32_t{1} << y);
        if ((fiber & ~b) == 0) sharp |= std::uint32_t{1} << y;
      }
      if (!completely_separated(X2, f.image(a), sharp)) {
        pol = AxiomReport::failed(
            "poljakov (sufficient, not necessary)",
            ce({}, "A=" + X1.set_to_string(a) + " B=" + X1.set_to_string(b)));
        break;
      }
    }
  out.push_back(pol);
  return out;
}

}  // namespace rca
