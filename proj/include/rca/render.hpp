#ifndef RCA_RENDER_HPP
#define RCA_RENDER_HPP

#include <string>

#include "rca/extensions.hpp"

namespace rca {

// DOT digraphs with deterministic node ordering.
std::string dot_preorder(const FiniteSpace& space);
std::string dot_atom_graph(const ContactStructure& s);  // finite backend
std::string dot_admissible_poset(const AdmissibleFamily& family);

}  // namespace rca

#endif
