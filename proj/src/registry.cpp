#include "rca/registry.hpp"

namespace rca {

namespace {

std::vector<std::vector<bool>> loops_only(int n) {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) adj[i][i] = true;
  return adj;
}

std::vector<std::vector<bool>> complete_graph(int n) {
  return std::vector<std::vector<bool>>(n, std::vector<bool>(n, true));
}

ContactStructure interval_standard_structure() {
  return ContactStructure(Carrier::interval_line(), ContactRelation::standard(),
                          Ideal::bounded());
}

FiniteSpace circle4_space() {
  return FiniteSpace::from_point_sets(
      {"a", "b", "c", "d"},
      {{}, {"a"}, {"c"}, {"a", "c"}, {"a", "b", "c"}, {"a", "c", "d"},
       {"a", "b", "c", "d"}});
}

FiniteSpace sierpinski_space() {
  // One closed point "0", one open dense point "1".
  return FiniteSpace::from_preorder({"0", "1"}, {{"0", "1"}});
}

ParsedStructure space_standard(const FiniteSpace& space) {
  RegularClosedAlgebra algebra(space);
  ContactStructure st = algebra.standard_structure();
  return ParsedStructure{st, SpaceBackedStructure{std::move(algebra), st}};
}

}  // namespace

std::optional<FiniteSpace> registry_space(const std::string& name) {
  if (name == "discrete1") return FiniteSpace::discrete(1);
  if (name == "discrete2") return FiniteSpace::discrete(2);
  if (name == "discrete3") return FiniteSpace::discrete(3);
  if (name == "discrete4") return FiniteSpace::discrete(4);
  if (name == "sierpinski") return sierpinski_space();
  if (name == "circle4") return circle4_space();
  return std::nullopt;
}

std::optional<ParsedStructure> registry_structure(const std::string& name) {
  if (name == "p3_overlap")
    return ParsedStructure{
        ContactStructure(Carrier::atoms(3),
                         ContactRelation::atom_graph(loops_only(3)),
                         Ideal::all()),
        std::nullopt};
  if (name == "p2_complete")
    return ParsedStructure{
        ContactStructure(Carrier::atoms(2),
                         ContactRelation::atom_graph(complete_graph(2)),
                         Ideal::all()),
        std::nullopt};
  if (name == "path3") {
    auto adj = loops_only(3);
    adj[0][1] = adj[1][0] = true;
    adj[1][2] = adj[2][1] = true;
    return ParsedStructure{
        ContactStructure(Carrier::atoms(3), ContactRelation::atom_graph(adj),
                         Ideal::all()),
        std::nullopt};
  }
  if (name == "interval_standard")
    return ParsedStructure{interval_standard_structure(), std::nullopt};
  if (name == "interval_two_point")
    return ParsedStructure{
        ContactStructure(Carrier::interval_line(),
                         ContactRelation::two_point(), Ideal::bounded()),
        std::nullopt};
  if (name == "interval_alexandroff")
    return ParsedStructure{
        ContactStructure(Carrier::interval_line(),
                         ContactRelation::alexandroff(interval_standard_structure()),
                         Ideal::bounded()),
        std::nullopt};
  if (name == "interval_beta_rho")
    return ParsedStructure{
        ContactStructure(Carrier::interval_line(),
                         ContactRelation::beta_rho_of(interval_standard_structure()),
                         Ideal::bounded()),
        std::nullopt};
  if (name == "circle4_standard") return space_standard(circle4_space());
  if (name == "sierpinski_standard") return space_standard(sierpinski_space());
  return std::nullopt;
}

std::vector<std::string> registry_names() {
  return {"p3_overlap",          "p2_complete",
          "path3",               "circle4",
          "sierpinski",          "discrete1",
          "discrete2",           "discrete3",
          "discrete4",           "circle4_standard",
          "sierpinski_standard", "interval_standard",
          "interval_two_point",  "interval_alexandroff",
          "interval_beta_rho"};
}

}  // namespace rca
