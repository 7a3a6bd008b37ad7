#ifndef RCA_SPACE_HPP
#define RCA_SPACE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rca/contact.hpp"

namespace rca {

// A finite topological space: named points plus the family of open point
// sets (validated closed under union and intersection). Point sets are bit
// masks over the point list.
class FiniteSpace {
 public:
  static FiniteSpace from_opens(std::vector<std::string> names,
                                std::vector<std::uint32_t> opens);
  // Opens given as lists of point names.
  static FiniteSpace from_point_sets(
      std::vector<std::string> names,
      const std::vector<std::vector<std::string>>& opens);
  // Finite topologies are Alexandrov, so a specialization preorder is an
  // equivalent presentation; a pair [x,y] declares x in cl({y}). Opens are
  // the up-sets of the induced preorder.
  static FiniteSpace from_preorder(
      std::vector<std::string> names,
      const std::vector<std::pair<std::string, std::string>>& pairs);
  static FiniteSpace discrete(int n);
  static FiniteSpace discrete(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::uint32_t>& opens() const { return opens_; }
  std::uint32_t full_mask() const;
  int point_index(const std::string& name) const;

  bool is_open(std::uint32_t set) const;
  bool is_closed(std::uint32_t set) const;
  std::uint32_t interior(std::uint32_t set) const;
  std::uint32_t closure(std::uint32_t set) const;
  bool is_discrete() const;

  // Non-reflexive specialization pairs (x,y) with x in cl({y}).
  std::vector<std::pair<int, int>> specialization_pairs() const;

  std::string set_to_string(std::uint32_t set) const;

  bool operator==(const FiniteSpace&) const = default;

 private:
  FiniteSpace() = default;
  std::vector<std::string> names_;
  std::vector<std::uint32_t> opens_;  // sorted ascending
};

// Subspace on the given point set, keeping the original point names.
FiniteSpace subspace(const FiniteSpace& space, std::uint32_t points);

struct SpaceMap {
  SpaceMap(FiniteSpace domain, FiniteSpace codomain, std::vector<int> mapping);

  FiniteSpace domain;
  FiniteSpace codomain;
  std::vector<int> mapping;

  std::uint32_t image(std::uint32_t set) const;
  std::uint32_t preimage(std::uint32_t set) const;

  bool operator==(const SpaceMap&) const = default;
};

SpaceMap compose(const SpaceMap& g, const SpaceMap& f);  // g after f
SpaceMap identity_map(const FiniteSpace& space);

enum class MapProperty {
  continuous,
  open,
  closed,
  perfect,
  injective,
  surjective,
  dense_image,
  skeletal,
  quasi_open,
};

// Literal quantification over the finite open families. On finite spaces
// point inverses are compact, so perfect coincides with closed.
bool map_is(const SpaceMap& f, MapProperty property);

// The three equivalent skeletal criteria, evaluated independently:
// the interior/closure definition, regularity of closures of images of
// regular closed sets, and density of preimages of dense opens.
struct SkeletalReport {
  bool by_definition;
  bool by_rc_closure;
  bool by_dense_preimage;
  bool agree() const {
    return by_definition == by_rc_closure && by_definition == by_dense_preimage;
  }
};
SkeletalReport skeletal_equivalences(const SpaceMap& f);

// A homeomorphic embedding with dense image; both facts are verified at
// construction.
class DenseEmbedding {
 public:
  static bool qualifies(const SpaceMap& f);
  explicit DenseEmbedding(SpaceMap f);

  const SpaceMap& map() const { return map_; }
  const FiniteSpace& domain() const { return map_.domain; }
  const FiniteSpace& codomain() const { return map_.codomain; }

 private:
  SpaceMap map_;
};

// The Boolean algebra of regular closed point sets, re-labeled over its
// atoms so all algebra machinery applies. Joins are unions; meets and
// complements are the regular-closed ones (closure of interior of the
// intersection, closure of the set complement).
class RegularClosedAlgebra {
 public:
  explicit RegularClosedAlgebra(FiniteSpace space);

  const FiniteSpace& space() const { return space_; }
  const Carrier& carrier() const { return carrier_; }
  int atom_count() const { return static_cast<int>(atom_sets_.size()); }
  const std::vector<std::uint32_t>& rc_sets() const { return rc_sets_; }
  const std::vector<std::uint32_t>& atom_sets() const { return atom_sets_; }

  bool is_rc(std::uint32_t point_set) const;
  Element element_of(std::uint32_t point_set) const;
  std::uint32_t points_of(const Element& e) const;

  // (RC(X), rho_X, all): contact is nonempty intersection of the point sets;
  // every regular closed set of a finite space is compact, so the ideal is
  // everything.
  ContactStructure standard_structure() const;

 private:
  FiniteSpace space_;
  std::vector<std::uint32_t> rc_sets_;
  std::vector<std::uint32_t> atom_sets_;
  Carrier carrier_;
};

// A contact structure over RC(X) that remembers its space.
struct SpaceBackedStructure {
  RegularClosedAlgebra algebra;
  ContactStructure structure;
};

// sigma_x and nu_x over the standard structure of the space.
Cluster point_cluster(const RegularClosedAlgebra& rca, int point);
std::vector<Element> point_filter(const RegularClosedAlgebra& rca, int point);

// r: RC(Y) -> RC(X), F -> F n X  and  e: RC(X) -> RC(Y), G -> cl_Y(G) for a
// dense embedding of X into Y. Both directions are verified to be mutually
// inverse Boolean isomorphisms.
struct DenseRestrictionIso {
  std::vector<Element> r_table;  // indexed by RC(Y) element bits
  std::vector<Element> e_table;  // indexed by RC(X) element bits
};
DenseRestrictionIso dense_restriction_iso(const DenseEmbedding& emb);

// All topologies on n labeled points (n <= 4), lexicographic on the
// characteristic vector of the open family.
std::vector<FiniteSpace> all_topologies(int n);

// All point functions / all continuous ones, lexicographic on
// (f(0), f(1), ...).
std::vector<SpaceMap> all_maps(const FiniteSpace& domain,
                               const FiniteSpace& codomain);
std::vector<SpaceMap> all_continuous_maps(const FiniteSpace& domain,
                                          const FiniteSpace& codomain);

// Finite-space test: some continuous [0,1]-valued function separates A and
// B; equivalently some clopen set contains cl(A) and misses cl(B).
bool completely_separated(const FiniteSpace& space, std::uint32_t a,
                          std::uint32_t b);

}  // namespace rca

#endif
