#ifndef RCA_IO_HPP
#define RCA_IO_HPP

#include <optional>
#include <string>

#include "json.hpp"
#include "rca/extensions.hpp"

namespace rca {

using Json = nlohmann::json;

// Element literals: atom sets are sorted integer arrays, interval sets are
// arrays of endpoint pairs with "-inf"/"inf" tokens and rationals rendered
// "p" or "p/q". Round-trips are bit-exact.
Json element_to_json(const Element& e);
Element element_from_json(const Carrier& c, const Json& j);

Json carrier_to_json(const Carrier& c);

Json ideal_to_json(const Ideal& i);
Ideal ideal_from_json(const Json& j, const Carrier& c);

// Relation descriptions: {kind, graph? | base? | members?}. Custom
// evaluators are not serializable.
Json relation_to_json(const ContactRelation& r);
ContactRelation relation_from_json(const Json& j, const Carrier& c);

// A parsed structure; when the carrier is the regular closed algebra of a
// space the algebra is kept so space-level checks stay available.
struct ParsedStructure {
  ContactStructure structure;
  std::optional<SpaceBackedStructure> space_backed;
};
Json structure_to_json(const ParsedStructure& s);
ParsedStructure structure_from_json(const Json& j);

Json space_to_json(const FiniteSpace& s);
FiniteSpace space_from_json(const Json& j);

Json map_to_json(const SpaceMap& m);
SpaceMap map_from_json(const Json& j);

Json morphism_to_json(const AlgebraMorphism& m);
AlgebraMorphism morphism_from_json(const Json& j);

Json report_to_json(const AxiomReport& r);
Json reports_to_json(std::span<const AxiomReport> rs);

// Scenario files drive the extension checkers: two spaces, a point map,
// optional structure overrides (default: the unique admissible structure of
// each side), and the condition ids to evaluate.
struct Scenario {
  FiniteSpace x1;
  FiniteSpace x2;
  std::vector<int> mapping;
  std::optional<Json> structure1;
  std::optional<Json> structure2;
  std::vector<std::string> conditions;
};
Scenario scenario_from_json(const Json& j);

Json dual_to_json(const DualSpaceResult& d);
Json clusters_to_json(const ContactStructure& s,
                      const std::vector<Cluster>& cs);

Json parse_text(const std::string& text);  // wraps nlohmann parse errors

}  // namespace rca

#endif
