#pragma once

#include "qcircle/circle.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace qcircle {

// Seeded generator with portable integer reduction: the same seed yields the
// same draws on every platform, independent of std distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  std::uint64_t below(std::uint64_t n) { return n <= 1 ? 0 : next() % n; }
  bool flip() { return (next() & 1) != 0; }

  Int below_int(const Int& n) {
    if (n <= 1) return 0;
    Int r = 0;
    for (int chunk = 0; chunk < 2; ++chunk) r = (r << 64) | Int(next());
    return r % n;
  }

 private:
  std::mt19937_64 eng_;
};

inline RatPoint random_point(Rng& rng, const Int& max_denominator) {
  const Int den = rng.below_int(max_denominator) + 1;
  const Int num = rng.below_int(den);
  return RatPoint::from_ratio(num, den);
}

std::vector<RatPoint> random_distinct_points(Rng& rng, std::size_t count,
                                             const Int& max_denominator);

Cycle random_cycle(Rng& rng, std::size_t size, const Int& max_denominator);

// A point strictly inside the counter-clockwise arc (a, b), a != b.
RatPoint random_point_in_arc(Rng& rng, const RatPoint& a, const RatPoint& b,
                             const Int& max_denominator);

}  // namespace qcircle
