#include "rca/sampling.hpp"

#include <algorithm>

#include "rca/errors.hpp"

namespace rca {

Rational Sampler::rational() {
  static const int dens[4] = {1, 2, 3, 4};
  long num = static_cast<long>(below(97)) - 48;
  int den = dens[below(4)];
  return Rational(num, den);
}

IntervalSet Sampler::interval_set(bool allow_rays, bool allow_extremes) {
  if (allow_extremes) {
    std::uint64_t r = below(10);
    if (r == 0) return IntervalSet::empty();
    if (r == 1 && allow_rays) return IntervalSet::line();
  }
  std::size_t pieces = 1 + below(3);
  std::vector<Rational> cuts;
  for (int tries = 0; cuts.size() < 2 * pieces && tries < 64; ++tries) {
    Rational r = rational();
    if (std::find(cuts.begin(), cuts.end(), r) == cuts.end())
      cuts.push_back(r);
  }
  if (cuts.size() % 2) cuts.pop_back();
  if (cuts.empty()) return IntervalSet::empty();
  std::sort(cuts.begin(), cuts.end());
  std::vector<IntervalSet::Component> comps;
  for (std::size_t i = 0; i + 1 < cuts.size(); i += 2)
    comps.push_back({cuts[i], cuts[i + 1]});
  if (allow_rays && below(4) == 0) comps.front().lo.reset();
  if (allow_rays && below(4) == 0) comps.back().hi.reset();
  return IntervalSet::from_components(std::move(comps));
}

Element Sampler::element(const Carrier& c) {
  if (c.finite()) {
    std::uint64_t mask =
        c.atom_count() == 0 ? 0 : ((std::uint64_t{1} << c.atom_count()) - 1);
    return from_atom_bits(c, next() & mask);
  }
  return from_interval_set(interval_set(/*allow_rays=*/true,
                                        /*allow_extremes=*/true));
}

Element Sampler::bounded_element(const Carrier& c) {
  if (c.finite()) return element(c);
  return from_interval_set(interval_set(/*allow_rays=*/false,
                                        /*allow_extremes=*/true));
}

Element Sampler::nonzero_element(const Carrier& c) {
  for (int tries = 0; tries < 256; ++tries) {
    Element e = element(c);
    if (!is_zero(e)) return e;
  }
  throw Error("sampler failed to produce a nonzero element");
}

}  // namespace rca
