#ifndef RCA_SAMPLING_HPP
#define RCA_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "rca/carrier.hpp"

namespace rca {

// Deterministic element sampler. All randomized checks draw from this, so a
// (seed, budget) pair reproduces a run exactly. Interval elements come from
// a small rational grid: up to three components, optional rays, endpoints
// p/q with |p| <= 48 and q in {1,2,3,4}.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next() { return rng_(); }
  std::uint64_t below(std::uint64_t n) { return n ? rng_() % n : 0; }

  Rational rational();
  Element element(const Carrier& c);
  Element bounded_element(const Carrier& c);
  Element nonzero_element(const Carrier& c);

 private:
  IntervalSet interval_set(bool allow_rays, bool allow_extremes);
  std::mt19937_64 rng_;
};

}  // namespace rca

#endif
