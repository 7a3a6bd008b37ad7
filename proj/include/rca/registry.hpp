#ifndef RCA_REGISTRY_HPP
#define RCA_REGISTRY_HPP

#include <optional>
#include <string>
#include <vector>

#include "rca/io.hpp"

namespace rca {

// Built-in instances addressable by name from the CLI and scenario files:
// the small algebras and spaces every suite exercises, plus the interval
// structures. Names: p3_overlap, p2_complete, path3, circle4, sierpinski,
// discrete1..discrete4, circle4_standard, sierpinski_standard,
// interval_standard, interval_two_point, interval_alexandroff,
// interval_beta_rho.
std::optional<FiniteSpace> registry_space(const std::string& name);
std::optional<ParsedStructure> registry_structure(const std::string& name);
std::vector<std::string> registry_names();

}  // namespace rca

#endif
