#include "rca/space.hpp"

#include <algorithm>
#include <bit>

#include "rca/errors.hpp"

namespace rca {

namespace {

constexpr int kMaxPoints = 16;

void require_points(std::size_t n) {
  if (n == 0) throw PreconditionError("a space needs at least one point");
  if (n > kMaxPoints) throw PreconditionError("too many points");
}

}  // namespace

FiniteSpace FiniteSpace::from_opens(std::vector<std::string> names,
                                    std::vector<std::uint32_t> opens) {
  require_points(names.size());
  {
    auto sorted = names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError("duplicate point names");
  }
  std::uint32_t full = (std::uint32_t{1} << names.size()) - 1;
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  for (std::uint32_t u : opens)
    if (u & ~full) throw ParseError("open set mentions unknown points");
  auto member = [&](std::uint32_t s) {
    return std::binary_search(opens.begin(), opens.end(), s);
  };
  if (!member(0) || !member(full))
    throw ParseError("open family must contain the empty set and the space");
  for (std::uint32_t u : opens)
    for (std::uint32_t v : opens) {
      if (!member(u | v))
        throw ParseError("open family not closed under union");
      if (!member(u & v))
        throw ParseError("open family not closed under intersection");
    }
  FiniteSpace sp;
  sp.names_ = std::move(names);
  sp.opens_ = std::move(opens);
  return sp;
}

FiniteSpace FiniteSpace::from_point_sets(
    std::vector<std::string> names,
    const std::vector<std::vector<std::string>>& opens) {
  require_points(names.size());
  auto index = [&](const std::string& p) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == p) return static_cast<int>(i);
    throw ParseError("unknown point name: " + p);
  };
  std::vector<std::uint32_t> masks;
  masks.reserve(opens.size());
  for (const auto& set : opens) {
    std::uint32_t m = 0;
    for (const auto& p : set) m |= std::uint32_t{1} << index(p);
    masks.push_back(m);
  }
  return from_opens(std::move(names), std::move(masks));
}

FiniteSpace FiniteSpace::from_preorder(
    std::vector<std::string> names,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  require_points(names.size());
  std::size_t n = names.size();
  std::vector<std::uint32_t> below(n);  // below[y] = {x | x in cl({y})}
  for (std::size_t i = 0; i < n; ++i) below[i] = std::uint32_t{1} << i;
  auto index = [&](const std::string& p) {
    for (std::size_t i = 0; i < n; ++i)
      if (names[i] == p) return static_cast<int>(i);
    throw ParseError("unknown point name: " + p);
  };
  for (const auto& [x, y] : pairs) below[index(y)] |= std::uint32_t{1} << index(x);
  // Transitive closure.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t x = 0; x < n; ++x)
        if ((below[y] >> x & 1) && (below[y] | below[x]) != below[y]) {
          below[y] |= below[x];
          changed = true;
        }
  }
  // Opens are the up-sets: U open iff y in U and x in cl({y}) imply nothing
  // escapes, i.e. every point of U has its entire up-set inside U.
  std::vector<std::uint32_t> opens;
  std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t u = 0; u <= full; ++u) {
    bool up = true;
    for (std::size_t y = 0; y < n && up; ++y)
      if (!(u >> y & 1) && (below[y] & u)) up = false;
    if (up) opens.push_back(u);
  }
  return from_opens(std::move(names), std::move(opens));
}

FiniteSpace FiniteSpace::discrete(int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return discrete(std::move(names));
}

FiniteSpace FiniteSpace::discrete(std::vector<std::string> names) {
  require_points(names.size());
  std::uint32_t full = (std::uint32_t{1} << names.size()) - 1;
  std::vector<std::uint32_t> opens;
  for (std::uint32_t u = 0; u <= full; ++u) opens.push_back(u);
  return from_opens(std::move(names), std::move(opens));
}

std::uint32_t FiniteSpace::full_mask() const {
  return (std::uint32_t{1} << names_.size()) - 1;
}

int FiniteSpace::point_index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  throw ParseError("unknown point name: " + name);
}

bool FiniteSpace::is_open(std::uint32_t set) const {
  return std::binary_search(opens_.begin(), opens_.end(), set);
}

bool FiniteSpace::is_closed(std::uint32_t set) const {
  return is_open(full_mask() & ~set);
}

std::uint32_t FiniteSpace::interior(std::uint32_t set) const {
  std::uint32_t out = 0;
  for (std::uint32_t u : opens_)
    if ((u & ~set) == 0) out |= u;
  return out;
}

std::uint32_t FiniteSpace::closure(std::uint32_t set) const {
  return full_mask() & ~interior(full_mask() & ~set);
}

bool FiniteSpace::is_discrete() const {
  return opens_.size() == (std::size_t{1} << names_.size());
}

std::vector<std::pair<int, int>> FiniteSpace::specialization_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int y = 0; y < size(); ++y) {
    std::uint32_t cl = closure(std::uint32_t{1} << y);
    for (int x = 0; x < size(); ++x)
      if (x != y && (cl >> x & 1)) out.push_back({x, y});
  }
  return out;
}

std::string FiniteSpace::set_to_string(std::uint32_t set) const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < size(); ++i)
    if (set >> i & 1) {
      if (!first) out += ",";
      out += names_[i];
      first = false;
    }
  return out + "}";
}

FiniteSpace subspace(const FiniteSpace& space, std::uint32_t points) {
  if (points == 0) throw PreconditionError("empty subspace");
  std::vector<std::string> names;
  std::vector<int> position(space.size(), -1);
  for (int i = 0; i < space.size(); ++i)
    if (points >> i & 1) {
      position[i] = static_cast<int>(names.size());
      names.push_back(space.names()[i]);
    }
  std::vector<std::uint32_t> opens;
  for (std::uint32_t u : space.opens()) {
    std::uint32_t trace = 0;
    for (int i = 0; i < space.size(); ++i)
      if ((u & points) >> i & 1) trace |= std::uint32_t{1} << position[i];
    opens.push_back(trace);
  }
  return FiniteSpace::from_opens(std::move(names), std::move(opens));
}

SpaceMap::SpaceMap(FiniteSpace d, FiniteSpace c, std::vector<int> m)
    : domain(std::move(d)), codomain(std::move(c)), mapping(std::move(m)) {
  if (mapping.size() != static_cast<std::size_t>(domain.size()))
    throw PreconditionError("map is not total");
  for (int v : mapping)
    if (v < 0 || v >= codomain.size())
      throw PreconditionError("map value out of range");
}

std::uint32_t SpaceMap::image(std::uint32_t set) const {
  std::uint32_t out = 0;
  for (int i = 0; i < domain.size(); ++i)
    if (set >> i & 1) out |= std::uint32_t{1} << mapping[i];
  return out;
}

std::uint32_t SpaceMap::preimage(std::uint32_t set) const {
  std::uint32_t out = 0;
  for (int i = 0; i < domain.size(); ++i)
    if (set >> mapping[i] & 1) out |= std::uint32_t{1} << i;
  return out;
}

SpaceMap compose(const SpaceMap& g, const SpaceMap& f) {
  if (!(f.codomain == g.domain))
    throw PreconditionError("composition endpoints do not match");
  std::vector<int> m(f.mapping.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = g.mapping[f.mapping[i]];
  return SpaceMap(f.domain, g.codomain, std::move(m));
}

SpaceMap identity_map(const FiniteSpace& space) {
  std::vector<int> m(space.size());
  for (int i = 0; i < space.size(); ++i) m[i] = i;
  return SpaceMap(space, space, std::move(m));
}

bool map_is(const SpaceMap& f, MapProperty property) {
  const FiniteSpace& X = f.domain;
  const FiniteSpace& Y = f.codomain;
  switch (property) {
    case MapProperty::continuous:
      for (std::uint32_t v : Y.opens())
        if (!X.is_open(f.preimage(v))) return false;
      return true;
    case MapProperty::open:
      for (std::uint32_t u : X.opens())
        if (!Y.is_open(f.image(u))) return false;
      return true;
    case MapProperty::closed:
      for (std::uint32_t u : X.opens())
        if (!Y.is_closed(f.image(X.full_mask() & ~u))) return false;
      return true;
    case MapProperty::perfect:
      // Point inverses in a finite space are compact, so perfect = closed.
      return map_is(f, MapProperty::closed);
    case MapProperty::injective: {
      std::uint32_t seen = 0;
      for (int v : f.mapping) {
        if (seen >> v & 1) return false;
        seen |= std::uint32_t{1} << v;
      }
      return true;
    }
    case MapProperty::surjective:
      return f.image(X.full_mask()) == Y.full_mask();
    case MapProperty::dense_image:
      return Y.closure(f.image(X.full_mask())) == Y.full_mask();
    case MapProperty::skeletal:
      for (std::uint32_t v : Y.opens())
        if (X.interior(f.preimage(Y.closure(v))) &
            ~X.closure(f.preimage(v)))
          return false;
      return true;
    case MapProperty::quasi_open:
      for (std::uint32_t u : X.opens())
        if (u && Y.interior(f.image(u)) == 0) return false;
      return true;
  }
  throw Error("unreachable map property");
}

SkeletalReport skeletal_equivalences(const SpaceMap& f) {
  if (!map_is(f, MapProperty::continuous))
    throw PreconditionError("skeletal criteria need a continuous map");
  const FiniteSpace& X = f.domain;
  const FiniteSpace& Y = f.codomain;
  SkeletalReport r{};
  r.by_definition = map_is(f, MapProperty::skeletal);

  r.by_rc_closure = true;
  for (std::uint32_t u : X.opens()) {
    std::uint32_t rc = X.closure(u);
    std::uint32_t img = Y.closure(f.image(rc));
    if (Y.closure(Y.interior(img)) != img) {
      r.by_rc_closure = false;
      break;
    }
  }

  r.by_dense_preimage = true;
  for (std::uint32_t v : Y.opens()) {
    if (Y.closure(v) != Y.full_mask()) continue;
    if (X.closure(f.preimage(v)) != X.full_mask()) {
      r.by_dense_preimage = false;
      break;
    }
  }
  return r;
}

bool DenseEmbedding::qualifies(const SpaceMap& f) {
  if (!map_is(f, MapProperty::injective)) return false;
  if (!map_is(f, MapProperty::continuous)) return false;
  if (!map_is(f, MapProperty::dense_image)) return false;
  // Open onto the image: every open of the domain is the trace of an open.
  std::uint32_t img = f.image(f.domain.full_mask());
  for (std::uint32_t u : f.domain.opens()) {
    bool matched = false;
    for (std::uint32_t v : f.codomain.opens())
      if ((v & img) == f.image(u)) {
        matched = true;
        break;
      }
    if (!matched) return false;
  }
  return true;
}

DenseEmbedding::DenseEmbedding(SpaceMap f) : map_(std::move(f)) {
  if (!qualifies(map_))
    throw PreconditionError("map is not a dense homeomorphic embedding");
}

RegularClosedAlgebra::RegularClosedAlgebra(FiniteSpace space)
    : space_(std::move(space)), carrier_(Carrier::atoms(0)) {
  for (std::uint32_t u : space_.opens()) rc_sets_.push_back(space_.closure(u));
  std::sort(rc_sets_.begin(), rc_sets_.end());
  rc_sets_.erase(std::unique(rc_sets_.begin(), rc_sets_.end()),
                 rc_sets_.end());
  for (std::uint32_t s : rc_sets_) {
    if (s == 0) continue;
    bool minimal = true;
    for (std::uint32_t t : rc_sets_)
      if (t != 0 && t != s && (t & ~s) == 0) {
        minimal = false;
        break;
      }
    if (minimal) atom_sets_.push_back(s);
  }
  carrier_ = Carrier::atoms(static_cast<int>(atom_sets_.size()));
  // RC(X) is a finite Boolean algebra, so the atom decomposition must be
  // exact; anything else means the open family was inconsistent.
  if (rc_sets_.size() != (std::size_t{1} << atom_sets_.size()))
    throw Error("regular closed family is not a Boolean algebra");
  for (std::uint32_t s : rc_sets_) {
    std::uint32_t u = 0;
    for (std::uint32_t a : atom_sets_)
      if ((a & ~s) == 0) u |= a;
    if (u != s) throw Error("regular closed set is not a join of atoms");
  }
}

bool RegularClosedAlgebra::is_rc(std::uint32_t point_set) const {
  return std::binary_search(rc_sets_.begin(), rc_sets_.end(), point_set);
}

Element RegularClosedAlgebra::element_of(std::uint32_t point_set) const {
  if (!is_rc(point_set))
    throw PreconditionError("point set is not regular closed: " +
                            space_.set_to_string(point_set));
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < atom_sets_.size(); ++i)
    if ((atom_sets_[i] & ~point_set) == 0) bits |= std::uint64_t{1} << i;
  return from_atom_bits(carrier_, bits);
}

std::uint32_t RegularClosedAlgebra::points_of(const Element& e) const {
  if (!(e.carrier() == carrier_))
    throw PreconditionError("element does not belong to this algebra");
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < atom_sets_.size(); ++i)
    if (e.bits() >> i & 1) out |= atom_sets_[i];
  return out;
}

ContactStructure RegularClosedAlgebra::standard_structure() const {
  std::size_t k = atom_sets_.size();
  std::vector<std::vector<bool>> adj(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      adj[i][j] = (atom_sets_[i] & atom_sets_[j]) != 0;
  return ContactStructure(carrier_, ContactRelation::atom_graph(adj),
                          Ideal::all());
}

Cluster point_cluster(const RegularClosedAlgebra& rca, int point) {
  if (point < 0 || point >= rca.space().size())
    throw PreconditionError("unknown point");
  ContactStructure s = rca.standard_structure();
  std::size_t count = std::size_t{1} << rca.atom_count();
  std::vector<bool> members(count, false);
  for (std::size_t m = 0; m < count; ++m) {
    Element e = from_atom_bits(rca.carrier(), m);
    members[m] = (rca.points_of(e) >> point) & 1;
  }
  return finite_cluster(s, std::move(members));
}

std::vector<Element> point_filter(const RegularClosedAlgebra& rca, int point) {
  if (point < 0 || point >= rca.space().size())
    throw PreconditionError("unknown point");
  std::vector<Element> out;
  std::size_t count = std::size_t{1} << rca.atom_count();
  for (std::size_t m = 0; m < count; ++m) {
    Element e = from_atom_bits(rca.carrier(), m);
    if (rca.space().interior(rca.points_of(e)) >> point & 1) out.push_back(e);
  }
  return out;
}

DenseRestrictionIso dense_restriction_iso(const DenseEmbedding& emb) {
  RegularClosedAlgebra ax(emb.domain());
  RegularClosedAlgebra ay(emb.codomain());
  const SpaceMap& f = emb.map();

  std::size_t ny = std::size_t{1} << ay.atom_count();
  std::size_t nx = std::size_t{1} << ax.atom_count();
  DenseRestrictionIso iso;
  iso.r_table.reserve(ny);
  for (std::size_t m = 0; m < ny; ++m) {
    Element g = from_atom_bits(ay.carrier(), m);
    std::uint32_t trace = f.preimage(ay.points_of(g));
    iso.r_table.push_back(ax.element_of(trace));
  }
  iso.e_table.reserve(nx);
  for (std::size_t m = 0; m < nx; ++m) {
    Element g = from_atom_bits(ax.carrier(), m);
    std::uint32_t cl = emb.codomain().closure(f.image(ax.points_of(g)));
    iso.e_table.push_back(ay.element_of(cl));
  }
  // e o r = id and r o e = id, and both preserve the Boolean operations.
  for (std::size_t m = 0; m < ny; ++m)
    if (iso.e_table[iso.r_table[m].bits()].bits() != m)
      throw Error("dense restriction: e o r is not the identity");
  for (std::size_t m = 0; m < nx; ++m)
    if (iso.r_table[iso.e_table[m].bits()].bits() != m)
      throw Error("dense restriction: r o e is not the identity");
  for (std::size_t m1 = 0; m1 < ny; ++m1)
    for (std::size_t m2 = 0; m2 < ny; ++m2) {
      Element a = from_atom_bits(ay.carrier(), m1);
      Element b = from_atom_bits(ay.carrier(), m2);
      if (!(iso.r_table[join(a, b).bits()] ==
            join(iso.r_table[m1], iso.r_table[m2])) ||
          !(iso.r_table[meet(a, b).bits()] ==
            meet(iso.r_table[m1], iso.r_table[m2])))
        throw Error("dense restriction: r is not a homomorphism");
    }
  for (std::size_t m = 0; m < ny; ++m)
    if (!(iso.r_table[complement(from_atom_bits(ay.carrier(), m)).bits()] ==
          complement(iso.r_table[m])))
      throw Error("dense restriction: r does not preserve complement");
  return iso;
}

std::vector<FiniteSpace> all_topologies(int n) {
  if (n < 1 || n > 4)
    throw PreconditionError("topology enumeration supports 1..4 points");
  std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint32_t> middle;
  for (std::uint32_t s = 1; s < full; ++s) middle.push_back(s);

  std::vector<FiniteSpace> out;
  std::uint64_t families = std::uint64_t{1} << middle.size();
  for (std::uint64_t pick = 0; pick < families; ++pick) {
    std::vector<std::uint32_t> opens = {0, full};
    for (std::size_t i = 0; i < middle.size(); ++i)
      if (pick >> i & 1) opens.push_back(middle[i]);
    std::sort(opens.begin(), opens.end());
    auto member = [&](std::uint32_t s) {
      return std::binary_search(opens.begin(), opens.end(), s);
    };
    bool closed = true;
    for (std::size_t i = 0; i < opens.size() && closed; ++i)
      for (std::size_t j = i + 1; j < opens.size(); ++j)
        if (!member(opens[i] | opens[j]) || !member(opens[i] & opens[j])) {
          closed = false;
          break;
        }
    if (!closed) continue;
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
    out.push_back(FiniteSpace::from_opens(std::move(names), std::move(opens)));
  }
  return out;
}

std::vector<SpaceMap> all_maps(const FiniteSpace& domain,
                               const FiniteSpace& codomain) {
  std::vector<SpaceMap> out;
  std::size_t count = 1;
  for (int i = 0; i < domain.size(); ++i) count *= codomain.size();
  for (std::size_t code = 0; code < count; ++code) {
    std::vector<int> m(domain.size());
    std::size_t rest = code;
    for (int i = domain.size() - 1; i >= 0; --i) {
      m[i] = static_cast<int>(rest % codomain.size());
      rest /= codomain.size();
    }
    out.emplace_back(domain, codomain, std::move(m));
  }
  return out;
}

std::vector<SpaceMap> all_continuous_maps(const FiniteSpace& domain,
                                          const FiniteSpace& codomain) {
  std::vector<SpaceMap> out;
  for (auto& f : all_maps(domain, codomain))
    if (map_is(f, MapProperty::continuous)) out.push_back(std::move(f));
  return out;
}

bool completely_separated(const FiniteSpace& space, std::uint32_t a,
                          std::uint32_t b) {
  // A continuous function into [0,1] on a finite space has finitely many
  // values, so a separating function yields a clopen separator and back.
  std::uint32_t ca = space.closure(a);
  std::uint32_t cb = space.closure(b);
  for (std::uint32_t u : space.opens()) {
    if (!space.is_closed(u)) continue;
    if ((ca & ~u) == 0 && (cb & u) == 0) return true;
  }
  return false;
}

}  // namespace rca
