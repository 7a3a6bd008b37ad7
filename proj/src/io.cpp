#include "rca/io.hpp"

#include "rca/errors.hpp"
#include "rca/registry.hpp"

namespace rca {

namespace {

std::optional<Rational> endpoint_from_json(const Json& j, bool lower) {
  if (!j.is_string()) throw ParseError("interval endpoint must be a string");
  std::string s = j.get<std::string>();
  if (s == "-inf") {
    if (!lower) throw ParseError("-inf is only a lower endpoint");
    return std::nullopt;
  }
  if (s == "inf") {
    if (lower) throw ParseError("inf is only an upper endpoint");
    return std::nullopt;
  }
  return parse_rational(s);
}

Json endpoint_to_json(const std::optional<Rational>& r, bool lower) {
  if (!r) return lower ? "-inf" : "inf";
  return rational_to_string(*r);
}

}  // namespace

Json parse_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON input");
  return j;
}

Json element_to_json(const Element& e) {
  if (e.carrier().finite()) {
    Json out = Json::array();
    for (int i : atoms_below(e)) out.push_back(i);
    return out;
  }
  Json out = Json::array();
  for (const auto& c : e.interval().components())
    out.push_back(Json::array(
        {endpoint_to_json(c.lo, true), endpoint_to_json(c.hi, false)}));
  return out;
}

Element element_from_json(const Carrier& c, const Json& j) {
  if (!j.is_array()) throw ParseError("element literal must be an array");
  if (c.finite()) {
    std::uint64_t bits = 0;
    for (const Json& v : j) {
      if (!v.is_number_integer()) throw ParseError("atom index expected");
      int i = v.get<int>();
      if (i < 0 || i >= c.atom_count())
        throw ParseError("atom index out of range: " + std::to_string(i));
      bits |= std::uint64_t{1} << i;
    }
    return from_atom_bits(c, bits);
  }
  std::vector<IntervalSet::Component> comps;
  for (const Json& pair : j) {
    if (!pair.is_array() || pair.size() != 2)
      throw ParseError("interval component must be an endpoint pair");
    comps.push_back({endpoint_from_json(pair[0], true),
                     endpoint_from_json(pair[1], false)});
  }
  return from_interval_set(IntervalSet::from_components(std::move(comps)));
}

Json carrier_to_json(const Carrier& c) {
  if (c.finite()) return Json{{"kind", "atoms"}, {"n", c.atom_count()}};
  return Json{{"kind", "interval"}};
}

Json ideal_to_json(const Ideal& i) {
  switch (i.kind()) {
    case Ideal::Kind::all:
      return Json{{"kind", "all"}};
    case Ideal::Kind::bounded:
      return Json{{"kind", "bounded"}};
    case Ideal::Kind::generated:
      return Json{{"kind", "generated"},
                  {"generator", element_to_json(i.generator())}};
  }
  throw Error("unreachable ideal kind");
}

Ideal ideal_from_json(const Json& j, const Carrier& c) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "all") return Ideal::all();
  if (kind == "bounded") return Ideal::bounded();
  if (kind == "generated")
    return Ideal::generated(element_from_json(c, j.at("generator")));
  throw ParseError("unknown ideal kind: " + kind);
}

Json relation_to_json(const ContactRelation& r) {
  switch (r.kind()) {
    case ContactRelation::Kind::atom_graph: {
      Json rows = Json::array();
      for (const auto& row : r.adjacency()) {
        Json cells = Json::array();
        for (bool b : row) cells.push_back(b ? 1 : 0);
        rows.push_back(cells);
      }
      return Json{{"kind", "atom_graph"}, {"graph", rows}};
    }
    case ContactRelation::Kind::standard:
      return Json{{"kind", "standard"}};
    case ContactRelation::Kind::two_point:
      return Json{{"kind", "two_point"}};
    case ContactRelation::Kind::alexandroff:
      return Json{{"kind", "alexandroff"},
                  {"base", structure_to_json({r.base(), std::nullopt})}};
    case ContactRelation::Kind::beta_rho:
      return Json{{"kind", "beta_rho"},
                  {"base", structure_to_json({r.base(), std::nullopt})}};
    case ContactRelation::Kind::supremum: {
      Json members = Json::array();
      for (const auto& m : r.members()) members.push_back(relation_to_json(m));
      return Json{{"kind", "supremum"}, {"members", members}};
    }
    case ContactRelation::Kind::custom:
      throw UnsupportedError("custom relations are not serializable");
  }
  throw Error("unreachable relation kind");
}

ContactRelation relation_from_json(const Json& j, const Carrier& c) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "atom_graph") {
    const Json& rows = j.at("graph");
    std::vector<std::vector<bool>> adj;
    for (const Json& row : rows) {
      std::vector<bool> r;
      for (const Json& cell : row) r.push_back(cell.get<int>() != 0);
      adj.push_back(std::move(r));
    }
    return ContactRelation::atom_graph(std::move(adj));
  }
  if (kind == "standard") return ContactRelation::standard();
  if (kind == "two_point") return ContactRelation::two_point();
  if (kind == "alexandroff")
    return ContactRelation::alexandroff(
        structure_from_json(j.at("base")).structure);
  if (kind == "beta_rho")
    return ContactRelation::beta_rho_of(
        structure_from_json(j.at("base")).structure);
  if (kind == "supremum") {
    std::vector<ContactRelation> members;
    for (const Json& m : j.at("members"))
      members.push_back(relation_from_json(m, c));
    return ContactRelation::supremum_of(std::move(members));
  }
  throw ParseError("unknown relation kind: " + kind);
}

Json structure_to_json(const ParsedStructure& s) {
  Json out;
  if (s.space_backed)
    out["carrier"] = Json{{"kind", "rc_of_space"},
                          {"space", space_to_json(s.space_backed->algebra.space())}};
  else
    out["carrier"] = carrier_to_json(s.structure.carrier());
  out["relation"] = relation_to_json(s.structure.rho());
  out["ideal"] = ideal_to_json(s.structure.ib());
  return out;
}

ParsedStructure structure_from_json(const Json& j) {
  if (j.is_string()) {
    auto named = registry_structure(j.get<std::string>());
    if (!named)
      throw ParseError("unknown structure name: " + j.get<std::string>());
    return *named;
  }
  const Json& cj = j.at("carrier");
  std::string ckind = cj.at("kind").get<std::string>();
  if (ckind == "rc_of_space") {
    FiniteSpace space = space_from_json(cj.at("space"));
    RegularClosedAlgebra algebra(space);
    Carrier carrier = algebra.carrier();
    ContactRelation rho = [&] {
      const Json& rj = j.at("relation");
      if (rj.is_object() && rj.at("kind").get<std::string>() == "space_standard")
        return algebra.standard_structure().rho();
      return relation_from_json(rj, carrier);
    }();
    Ideal ib = j.contains("ideal") ? ideal_from_json(j.at("ideal"), carrier)
                                   : Ideal::all();
    ContactStructure st(carrier, std::move(rho), std::move(ib));
    return ParsedStructure{st, SpaceBackedStructure{std::move(algebra), st}};
  }
  Carrier carrier = [&] {
    if (ckind == "atoms") return Carrier::atoms(cj.at("n").get<int>());
    if (ckind == "interval") return Carrier::interval_line();
    throw ParseError("unknown carrier kind: " + ckind);
  }();
  ContactRelation rho = relation_from_json(j.at("relation"), carrier);
  Ideal ib = j.contains("ideal") ? ideal_from_json(j.at("ideal"), carrier)
                                 : Ideal::all();
  return ParsedStructure{ContactStructure(carrier, std::move(rho), std::move(ib)),
                         std::nullopt};
}

Json space_to_json(const FiniteSpace& s) {
  Json points = Json::array();
  for (const auto& n : s.names()) points.push_back(n);
  Json opens = Json::array();
  for (std::uint32_t u : s.opens()) {
    Json set = Json::array();
    for (int i = 0; i < s.size(); ++i)
      if (u >> i & 1) set.push_back(s.names()[i]);
    opens.push_back(set);
  }
  return Json{{"points", points}, {"opens", opens}};
}

FiniteSpace space_from_json(const Json& j) {
  if (j.is_string()) {
    auto named = registry_space(j.get<std::string>());
    if (!named) throw ParseError("unknown space name: " + j.get<std::string>());
    return *named;
  }
  std::vector<std::string> names;
  for (const Json& p : j.at("points")) names.push_back(p.get<std::string>());
  if (j.contains("preorder")) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const Json& p : j.at("preorder")) {
      if (!p.is_array() || p.size() != 2)
        throw ParseError("preorder entries are [x, y] pairs");
      pairs.push_back({p[0].get<std::string>(), p[1].get<std::string>()});
    }
    return FiniteSpace::from_preorder(std::move(names), pairs);
  }
  std::vector<std::vector<std::string>> opens;
  for (const Json& set : j.at("opens")) {
    std::vector<std::string> pts;
    for (const Json& p : set) pts.push_back(p.get<std::string>());
    opens.push_back(std::move(pts));
  }
  return FiniteSpace::from_point_sets(std::move(names), opens);
}

Json map_to_json(const SpaceMap& m) {
  Json pairs = Json::array();
  for (int i = 0; i < m.domain.size(); ++i)
    pairs.push_back(Json::array(
        {m.domain.names()[i], m.codomain.names()[m.mapping[i]]}));
  return Json{{"domain", space_to_json(m.domain)},
              {"codomain", space_to_json(m.codomain)},
              {"pairs", pairs}};
}

SpaceMap map_from_json(const Json& j) {
  FiniteSpace domain = space_from_json(j.at("domain"));
  FiniteSpace codomain = space_from_json(j.at("codomain"));
  std::vector<int> mapping(domain.size(), -1);
  for (const Json& p : j.at("pairs")) {
    if (!p.is_array() || p.size() != 2)
      throw ParseError("map entries are [x, y] pairs");
    int from = domain.point_index(p[0].get<std::string>());
    int to = codomain.point_index(p[1].get<std::string>());
    if (mapping[from] != -1) throw ParseError("map defined twice at a point");
    mapping[from] = to;
  }
  for (int v : mapping)
    if (v < 0) throw ParseError("map is not total");
  return SpaceMap(std::move(domain), std::move(codomain), std::move(mapping));
}

Json morphism_to_json(const AlgebraMorphism& m) {
  Json out;
  out["source"] = structure_to_json({m.source(), std::nullopt});
  out["target"] = structure_to_json({m.target(), std::nullopt});
  switch (m.rule()) {
    case AlgebraMorphism::Rule::table: {
      Json table = Json::array();
      for (const Element& src : enumerate_elements(m.source().carrier()))
        table.push_back(Json::array(
            {element_to_json(src), element_to_json(m.apply(src))}));
      out["table"] = table;
      break;
    }
    case AlgebraMorphism::Rule::identity:
      out["rule"] = "identity";
      break;
    case AlgebraMorphism::Rule::meet_with:
      out["rule"] = "meet_with";
      out["element"] = element_to_json(m.fixed_element());
      break;
    case AlgebraMorphism::Rule::affine:
      out["rule"] = "affine";
      out["scale"] = rational_to_string(m.scale());
      out["shift"] = rational_to_string(m.shift());
      break;
  }
  return out;
}

AlgebraMorphism morphism_from_json(const Json& j) {
  ContactStructure source = structure_from_json(j.at("source")).structure;
  ContactStructure target = structure_from_json(j.at("target")).structure;
  if (j.contains("rule")) {
    std::string rule = j.at("rule").get<std::string>();
    if (rule == "identity") return AlgebraMorphism::identity(std::move(source));
    if (rule == "meet_with")
      return AlgebraMorphism::meet_with(
          source, element_from_json(source.carrier(), j.at("element")));
    if (rule == "affine")
      return AlgebraMorphism::affine(
          std::move(source), parse_rational(j.at("scale").get<std::string>()),
          parse_rational(j.at("shift").get<std::string>()));
    throw ParseError("unknown morphism rule: " + rule);
  }
  std::size_t count = std::size_t{1} << source.carrier().atom_count();
  std::vector<Element> table(count, zero(target.carrier()));
  std::vector<bool> seen(count, false);
  for (const Json& p : j.at("table")) {
    if (!p.is_array() || p.size() != 2)
      throw ParseError("morphism table entries are [from, to] pairs");
    Element from = element_from_json(source.carrier(), p[0]);
    table[from.bits()] = element_from_json(target.carrier(), p[1]);
    seen[from.bits()] = true;
  }
  for (bool s : seen)
    if (!s) throw ParseError("morphism table is not total");
  return AlgebraMorphism::from_table(std::move(source), std::move(target),
                                     std::move(table));
}

Json report_to_json(const AxiomReport& r) {
  Json out{{"axiom", r.axiom}, {"verdict", verdict_to_string(r.verdict)}};
  if (r.verdict == Verdict::sampled_pass) out["samples"] = r.samples;
  if (r.counterexample) {
    Json ce = Json::object();
    for (const auto& [name, value] : r.counterexample->bindings)
      ce[name] = element_to_json(value);
    out["counterexample"] = ce;
    if (!r.counterexample->note.empty()) out["note"] = r.counterexample->note;
  }
  return out;
}

Json reports_to_json(std::span<const AxiomReport> rs) {
  Json out = Json::array();
  for (const auto& r : rs) out.push_back(report_to_json(r));
  return out;
}

Scenario scenario_from_json(const Json& j) {
  Scenario sc{.x1 = space_from_json(j.at("x1")),
              .x2 = space_from_json(j.at("x2")),
              .mapping = {},
              .structure1 = std::nullopt,
              .structure2 = std::nullopt,
              .conditions = {}};
  sc.mapping.assign(sc.x1.size(), -1);
  for (const Json& p : j.at("map")) {
    if (!p.is_array() || p.size() != 2)
      throw ParseError("map entries are [x, y] pairs");
    sc.mapping[sc.x1.point_index(p[0].get<std::string>())] =
        sc.x2.point_index(p[1].get<std::string>());
  }
  for (int v : sc.mapping)
    if (v < 0) throw ParseError("scenario map is not total");
  if (j.contains("structure1")) sc.structure1 = j.at("structure1");
  if (j.contains("structure2")) sc.structure2 = j.at("structure2");
  if (j.contains("conditions"))
    for (const Json& c : j.at("conditions"))
      sc.conditions.push_back(c.get<std::string>());
  return sc;
}

Json dual_to_json(const DualSpaceResult& d) {
  Json out;
  out["space"] = space_to_json(d.space);
  out["bounded_only"] = d.bounded_only;
  Json lambda = Json::array();
  std::size_t count = d.lambda.size();
  for (std::size_t m = 0; m < count; ++m) {
    Element e = from_atom_bits(d.source->carrier(), m);
    Json pts = Json::array();
    for (std::size_t i = 0; i < d.points.size(); ++i)
      if (d.lambda[m] >> i & 1) pts.push_back(d.space.names()[i]);
    lambda.push_back(Json::array({element_to_json(e), pts}));
  }
  out["lambda"] = lambda;
  return out;
}

Json clusters_to_json(const ContactStructure& s,
                      const std::vector<Cluster>& cs) {
  Json out = Json::array();
  for (const Cluster& c : cs) {
    Json members = Json::array();
    auto elems = enumerate_elements(s.carrier());
    for (const Element& e : elems)
      if (c.contains(e)) members.push_back(element_to_json(e));
    Json seeds = Json::array();
    for (int p : c.seed_atoms()) seeds.push_back(p);
    out.push_back(Json{{"seeds", seeds},
                       {"bounded", c.bounded()},
                       {"members", members}});
  }
  return out;
}

}  // namespace rca
