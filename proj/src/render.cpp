#include "rca/render.hpp"

#include "rca/errors.hpp"

namespace rca {

std::string dot_preorder(const FiniteSpace& space) {
  std::string out = "digraph specialization {\n";
  for (const auto& name : space.names()) out += "  \"" + name + "\";\n";
  for (auto [x, y] : space.specialization_pairs())
    out += "  \"" + space.names()[x] + "\" -> \"" + space.names()[y] + "\";\n";
  out += "}\n";
  return out;
}

std::string dot_atom_graph(const ContactStructure& s) {
  if (s.rho().kind() != ContactRelation::Kind::atom_graph)
    throw UnsupportedError("DOT output needs an atom-graph relation");
  const auto& adj = s.rho().adjacency();
  std::string out = "digraph contact {\n";
  for (std::size_t i = 0; i < adj.size(); ++i)
    out += "  \"" + std::to_string(i) + "\";\n";
  for (std::size_t i = 0; i < adj.size(); ++i)
    for (std::size_t j = i; j < adj.size(); ++j)
      if (adj[i][j])
        out += "  \"" + std::to_string(i) + "\" -> \"" + std::to_string(j) +
               "\" [dir=none];\n";
  out += "}\n";
  return out;
}

std::string dot_admissible_poset(const AdmissibleFamily& family) {
  std::string out = "digraph admissible {\n";
  std::size_t n = family.structures.size();
  for (std::size_t i = 0; i < n; ++i)
    out += "  \"s" + std::to_string(i) + "\";\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !family.leq[i][j]) continue;
      // Transitive reduction: skip edges factoring through a third node.
      bool covered = false;
      for (std::size_t k = 0; k < n && !covered; ++k)
        if (k != i && k != j && family.leq[i][k] && family.leq[k][j] &&
            !(family.leq[k][i] && family.leq[i][k]))
          covered = true;
      if (!covered)
        out += "  \"s" + std::to_string(i) + "\" -> \"s" + std::to_string(j) +
               "\";\n";
    }
  out += "}\n";
  return out;
}

}  // namespace rca
