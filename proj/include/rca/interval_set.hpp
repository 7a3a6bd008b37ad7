#ifndef RCA_INTERVAL_SET_HPP
#define RCA_INTERVAL_SET_HPP

#include <optional>
#include <string>
#include <vector>

#include "rca/rational.hpp"

namespace rca {

// A regular closed subset of the rational line presented as a finite union
// of closed intervals and rays. Canonical form: components sorted, pairwise
// separated by gaps of positive length (touching intervals are merged), no
// degenerate single-point components. An absent endpoint is an infinite ray
// in that direction; the empty set has no components and the full line is
// the single component (-inf, +inf).
class IntervalSet {
 public:
  struct Component {
    std::optional<Rational> lo;  // nullopt = -inf
    std::optional<Rational> hi;  // nullopt = +inf
    bool operator==(const Component&) const = default;
  };

  IntervalSet() = default;  // empty set

  static IntervalSet empty();
  static IntervalSet line();
  static IntervalSet closed(const Rational& lo, const Rational& hi);  // lo < hi
  static IntervalSet ray_below(const Rational& hi);                   // (-inf, hi]
  static IntervalSet ray_above(const Rational& lo);                   // [lo, +inf)
  // Canonicalizes: sorts, merges overlapping/touching components. Degenerate
  // single-point components are rejected (they are not regular closed).
  static IntervalSet from_components(std::vector<Component> comps);

  const std::vector<Component>& components() const { return comps_; }
  bool is_empty() const { return comps_.empty(); }
  bool is_line() const;
  // No ray component in either direction.
  bool bounded() const;
  bool unbounded_below() const;
  bool unbounded_above() const;

  bool contains(const Rational& x) const;
  // Point-set containment (not just lattice order; for these sets they agree).
  bool subset_of(const IntervalSet& other) const;
  // Point-set intersection test: true iff the two closed sets share a point.
  bool intersects(const IntervalSet& other) const;

  // Lattice operations of the regular closed algebra:
  //   join = union, meet = cl(int(intersection)), complement = cl of set complement.
  IntervalSet join(const IntervalSet& other) const;
  IntervalSet meet(const IntervalSet& other) const;
  IntervalSet complement() const;

  // Closed delta-neighborhood: each component extended by delta on its finite
  // ends, then re-canonicalized. Requires delta > 0.
  IntervalSet neighborhood(const Rational& delta) const;

  // Minimum distance between the two point sets; 0 when they intersect.
  // Both sets must be nonempty.
  Rational distance_to(const IntervalSet& other) const;

  // Image under x -> scale*x + shift with scale > 0 (an automorphism of the
  // carrier).
  IntervalSet affine(const Rational& scale, const Rational& shift) const;

  // Compact display form, e.g. "[0,1] u [2,inf)".
  std::string to_string() const;

  bool operator==(const IntervalSet&) const = default;
  // Lexicographic on the component list; a total order used only for
  // deterministic tie-breaking in reports.
  bool operator<(const IntervalSet& other) const;

 private:
  std::vector<Component> comps_;

  static IntervalSet canonical(std::vector<Component> comps, bool drop_points);
  friend class IntervalMath;
};

}  // namespace rca

#endif
