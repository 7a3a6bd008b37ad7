#include "rca/interval_set.hpp"

#include <algorithm>

#include "rca/errors.hpp"

namespace rca {

namespace {

// Extended-line comparisons. A missing lower endpoint is -inf, a missing
// upper endpoint is +inf.
int cmp_lo_lo(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a && !b) return 0;
  if (!a) return -1;
  if (!b) return 1;
  return *a < *b ? -1 : (*a == *b ? 0 : 1);
}

int cmp_hi_hi(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a && !b) return 0;
  if (!a) return 1;
  if (!b) return -1;
  return *a < *b ? -1 : (*a == *b ? 0 : 1);
}

// lo vs hi: only both-finite can be compared numerically; -inf < anything,
// anything < +inf.
int cmp_lo_hi(const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
  if (!lo || !hi) return -1;
  return *lo < *hi ? -1 : (*lo == *hi ? 0 : 1);
}

}  // namespace

IntervalSet IntervalSet::empty() { return IntervalSet(); }

IntervalSet IntervalSet::line() {
  IntervalSet s;
  s.comps_.push_back({std::nullopt, std::nullopt});
  return s;
}

IntervalSet IntervalSet::closed(const Rational& lo, const Rational& hi) {
  if (!(lo < hi))
    throw ParseError("closed interval needs lo < hi (single points are not regular closed)");
  IntervalSet s;
  s.comps_.push_back({lo, hi});
  return s;
}

IntervalSet IntervalSet::ray_below(const Rational& hi) {
  IntervalSet s;
  s.comps_.push_back({std::nullopt, hi});
  return s;
}

IntervalSet IntervalSet::ray_above(const Rational& lo) {
  IntervalSet s;
  s.comps_.push_back({lo, std::nullopt});
  return s;
}

IntervalSet IntervalSet::canonical(std::vector<Component> comps, bool drop_points) {
  std::vector<Component> kept;
  kept.reserve(comps.size());
  for (auto& c : comps) {
    int rel = cmp_lo_hi(c.lo, c.hi);
    if (rel > 0) throw ParseError("interval has lo > hi");
    if (rel == 0) {
      if (drop_points) continue;
      throw ParseError("degenerate single-point interval");
    }
    kept.push_back(std::move(c));
  }
  std::sort(kept.begin(), kept.end(), [](const Component& a, const Component& b) {
    int c = cmp_lo_lo(a.lo, b.lo);
    if (c != 0) return c < 0;
    return cmp_hi_hi(a.hi, b.hi) < 0;
  });
  IntervalSet out;
  for (auto& c : kept) {
    if (!out.comps_.empty()) {
      Component& last = out.comps_.back();
      // Merge when touching or overlapping: next.lo <= last.hi.
      bool merge;
      if (!last.hi || !c.lo)
        merge = true;
      else
        merge = !(*last.hi < *c.lo);
      if (merge) {
        if (last.hi && c.hi && *c.hi <= *last.hi) continue;  // contained
        last.hi = c.hi;
        continue;
      }
    }
    out.comps_.push_back(std::move(c));
  }
  return out;
}

IntervalSet IntervalSet::from_components(std::vector<Component> comps) {
  return canonical(std::move(comps), /*drop_points=*/false);
}

bool IntervalSet::is_line() const {
  return comps_.size() == 1 && !comps_[0].lo && !comps_[0].hi;
}

bool IntervalSet::bounded() const {
  return comps_.empty() || (comps_.front().lo && comps_.back().hi);
}

bool IntervalSet::unbounded_below() const {
  return !comps_.empty() && !comps_.front().lo;
}

bool IntervalSet::unbounded_above() const {
  return !comps_.empty() && !comps_.back().hi;
}

bool IntervalSet::contains(const Rational& x) const {
  for (const auto& c : comps_) {
    if (c.lo && x < *c.lo) return false;  // components sorted
    if (!c.hi || x <= *c.hi) {
      if (!c.lo || *c.lo <= x) return true;
    }
  }
  return false;
}

bool IntervalSet::subset_of(const IntervalSet& other) const {
  for (const auto& a : comps_) {
    bool covered = false;
    for (const auto& b : other.comps_) {
      if (cmp_lo_lo(b.lo, a.lo) <= 0 && cmp_hi_hi(a.hi, b.hi) <= 0) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

bool IntervalSet::intersects(const IntervalSet& other) const {
  for (const auto& a : comps_)
    for (const auto& b : other.comps_) {
      // max(lo) <= min(hi) on the extended line.
      const std::optional<Rational>& lo = cmp_lo_lo(a.lo, b.lo) >= 0 ? a.lo : b.lo;
      const std::optional<Rational>& hi = cmp_hi_hi(a.hi, b.hi) <= 0 ? a.hi : b.hi;
      if (cmp_lo_hi(lo, hi) <= 0) return true;
    }
  return false;
}

IntervalSet IntervalSet::join(const IntervalSet& other) const {
  std::vector<Component> all = comps_;
  all.insert(all.end(), other.comps_.begin(), other.comps_.end());
  return canonical(std::move(all), /*drop_points=*/true);
}

IntervalSet IntervalSet::meet(const IntervalSet& other) const {
  // cl(int(F n G)): componentwise intersection, then degenerate points vanish.
  std::vector<Component> pieces;
  for (const auto& a : comps_)
    for (const auto& b : other.comps_) {
      Component piece;
      piece.lo = cmp_lo_lo(a.lo, b.lo) >= 0 ? a.lo : b.lo;
      piece.hi = cmp_hi_hi(a.hi, b.hi) <= 0 ? a.hi : b.hi;
      if (cmp_lo_hi(piece.lo, piece.hi) <= 0) pieces.push_back(std::move(piece));
    }
  return canonical(std::move(pieces), /*drop_points=*/true);
}

IntervalSet IntervalSet::complement() const {
  if (comps_.empty()) return line();
  std::vector<Component> gaps;
  if (comps_.front().lo) gaps.push_back({std::nullopt, comps_.front().lo});
  for (std::size_t i = 0; i + 1 < comps_.size(); ++i)
    gaps.push_back({comps_[i].hi, comps_[i + 1].lo});
  if (comps_.back().hi) gaps.push_back({comps_.back().hi, std::nullopt});
  // Gaps between canonical components have positive length, so nothing
  // degenerate can appear here.
  return canonical(std::move(gaps), /*drop_points=*/false);
}

IntervalSet IntervalSet::neighborhood(const Rational& delta) const {
  if (!(delta > 0)) throw PreconditionError("neighborhood radius must be positive");
  std::vector<Component> widened;
  widened.reserve(comps_.size());
  for (const auto& c : comps_) {
    Component w = c;
    if (w.lo) w.lo = *w.lo - delta;
    if (w.hi) w.hi = *w.hi + delta;
    widened.push_back(std::move(w));
  }
  return canonical(std::move(widened), /*drop_points=*/true);
}

Rational IntervalSet::distance_to(const IntervalSet& other) const {
  if (comps_.empty() || other.comps_.empty())
    throw PreconditionError("distance undefined for the empty set");
  std::optional<Rational> best;
  for (const auto& a : comps_)
    for (const auto& b : other.comps_) {
      Rational d;
      if (a.lo && b.hi && *b.hi < *a.lo)
        d = *a.lo - *b.hi;
      else if (b.lo && a.hi && *a.hi < *b.lo)
        d = *b.lo - *a.hi;
      else
        return Rational(0);  // this pair overlaps
      if (!best || d < *best) best = d;
    }
  return *best;
}

IntervalSet IntervalSet::affine(const Rational& scale, const Rational& shift) const {
  if (!(scale > 0)) throw PreconditionError("affine scale must be positive");
  std::vector<Component> mapped;
  mapped.reserve(comps_.size());
  for (const auto& c : comps_) {
    Component m;
    if (c.lo) m.lo = scale * (*c.lo) + shift;
    if (c.hi) m.hi = scale * (*c.hi) + shift;
    mapped.push_back(std::move(m));
  }
  return canonical(std::move(mapped), /*drop_points=*/false);
}

std::string IntervalSet::to_string() const {
  if (comps_.empty()) return "empty";
  std::string out;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (i) out += " u ";
    const auto& c = comps_[i];
    out += c.lo ? "[" + rational_to_string(*c.lo) : "(-inf";
    out += ",";
    out += c.hi ? rational_to_string(*c.hi) + "]" : "inf)";
  }
  return out;
}

bool IntervalSet::operator<(const IntervalSet& other) const {
  std::size_t n = std::min(comps_.size(), other.comps_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp_lo_lo(comps_[i].lo, other.comps_[i].lo);
    if (c != 0) return c < 0;
    c = cmp_hi_hi(comps_[i].hi, other.comps_[i].hi);
    if (c != 0) return c < 0;
  }
  return comps_.size() < other.comps_.size();
}

}  // namespace rca
