#pragma once

#include "qcircle/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qcircle {

// An element of the rational circle Q/Z, stored as the reduced fraction
// representative in [0, 1). Equality is structural equality of that form.
class RatPoint {
 public:
  RatPoint() = default;  // 0/1
  explicit RatPoint(const Rat& value) : v_(rat_frac(value)) {}
  static RatPoint from_ratio(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    return RatPoint(Rat(num, den));
  }
  static RatPoint parse(const std::string& text) { return RatPoint(parse_rat(text)); }

  const Rat& value() const { return v_; }
  Int numerator() const { return rat_num(v_); }
  Int denominator() const { return rat_den(v_); }
  std::string str() const { return format_rat(v_); }

  friend bool operator==(const RatPoint& a, const RatPoint& b) { return a.v_ == b.v_; }
  friend bool operator!=(const RatPoint& a, const RatPoint& b) { return a.v_ != b.v_; }
  // Order of representatives in [0, 1). Circular comparisons go through
  // between(); this order exists for sorting and container use.
  friend bool operator<(const RatPoint& a, const RatPoint& b) { return a.v_ < b.v_; }

 private:
  Rat v_;
};

// The ternary circular order on Q/Z: [a, b, c] holds iff the three points are
// distinct and b lies on the counter-clockwise arc from a to c. Non-distinct
// triples are false, never an error.
bool between(const RatPoint& a, const RatPoint& b, const RatPoint& c);

enum class CutOrder { precedes, equal, follows };

// Comparison of a and b in the linear order <_z obtained by cutting the
// circle at z (z is the least element).
CutOrder cut_compare(const RatPoint& z, const RatPoint& a, const RatPoint& b);

// Length of the counter-clockwise arc from `from` to `to`, in [0, 1).
inline Rat arc_length(const RatPoint& from, const RatPoint& to) {
  return rat_frac(to.value() - from.value());
}

// min(|a-b|, 1-|a-b|) on representatives; symmetric, at most 1/2.
Rat circle_distance(const RatPoint& a, const RatPoint& b);

// The point halfway along the counter-clockwise arc from a to b (a != b).
RatPoint ccw_midpoint(const RatPoint& a, const RatPoint& b);

enum class IntervalKind { open, closed, left_closed, right_closed };

// An oriented circular interval. Membership is decided purely through the
// ternary relation, so wrap-around intervals need no special casing.
// (a,a) is empty and [a,a] is the singleton {a}.
class Interval {
 public:
  Interval(RatPoint left, RatPoint right, IntervalKind kind)
      : left_(std::move(left)), right_(std::move(right)), kind_(kind) {}

  const RatPoint& left() const { return left_; }
  const RatPoint& right() const { return right_; }
  IntervalKind kind() const { return kind_; }

  bool contains(const RatPoint& x) const;
  bool is_empty() const;
  Rat width() const { return arc_length(left_, right_); }
  std::string str() const;

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.kind_ == b.kind_ && a.left_ == b.left_ && a.right_ == b.right_;
  }

 private:
  RatPoint left_;
  RatPoint right_;
  IntervalKind kind_;
};

inline Interval open_interval(RatPoint a, RatPoint b) {
  return Interval(std::move(a), std::move(b), IntervalKind::open);
}

// (l, r) subseteq (a, b) for nonempty open arcs (l != r, a != b).
bool open_arc_subset(const RatPoint& l, const RatPoint& r, const RatPoint& a,
                     const RatPoint& b);

// [l, r] subseteq (a, b) for l != r, a != b.
bool closed_arc_in_open(const RatPoint& l, const RatPoint& r, const RatPoint& a,
                        const RatPoint& b);

// Whether the closed arcs [l1, r1] and [l2, r2] are disjoint.
bool closed_arcs_disjoint(const RatPoint& l1, const RatPoint& r1,
                          const RatPoint& l2, const RatPoint& r2);

// True iff the tuple is a cycle: length >= 3, points pairwise distinct, and
// every c-ordered index triple satisfies the ternary relation. Decided in
// O(n) by the winding argument: all consecutive arc steps positive and their
// sum equal to one full turn. Fewer than 3 points is invalid input.
bool is_cycle(std::span<const RatPoint> points);

// A circularly ordered tuple [a_1, ..., a_n], n >= 3. Validated on
// construction.
class Cycle {
 public:
  explicit Cycle(std::vector<RatPoint> points);

  std::size_t size() const { return pts_.size(); }
  const RatPoint& operator[](std::size_t i) const { return pts_[i]; }
  // Index modulo n, accepting offsets like i-1, i+2 on a signed argument.
  const RatPoint& at_mod(std::ptrdiff_t i) const {
    const auto n = static_cast<std::ptrdiff_t>(pts_.size());
    return pts_[static_cast<std::size_t>(((i % n) + n) % n)];
  }
  const std::vector<RatPoint>& points() const { return pts_; }
  bool contains(const RatPoint& x) const;

 private:
  std::vector<RatPoint> pts_;
};

enum class CoveringVariant { cov, cov_star };

struct CoveringCell {
  bool singleton;
  RatPoint left;
  RatPoint right;  // singleton cells have left == right

  bool contains(const RatPoint& x) const {
    return singleton ? x == left : between(left, x, right);
  }
  std::string str() const;
};

// The disjoint covering induced by a cycle: variant cov alternates singleton
// and open-interval cells ({a_1}, (a_1,a_2), {a_2}, ..., (a_n,a_1)); variant
// cov_star keeps the n open intervals only and covers no cycle point.
class Covering {
 public:
  Covering(Cycle source, CoveringVariant variant);

  const std::vector<CoveringCell>& cells() const { return cells_; }
  const Cycle& source() const { return source_; }
  CoveringVariant variant() const { return variant_; }

  // Index of the unique cell containing x. Throws std::domain_error
  // ("not covered") for cov_star at a cycle point.
  std::size_t locate(const RatPoint& x) const;

 private:
  Cycle source_;
  CoveringVariant variant_;
  std::vector<CoveringCell> cells_;
};

inline Covering cov_cells(const Cycle& nu, CoveringVariant variant) {
  return Covering(nu, variant);
}

std::size_t locate(const Cycle& nu, const RatPoint& x, CoveringVariant variant);

// Result of the randomized circular-order axiom suite.
struct OrderAxiomReport {
  int samples = 0;
  int cyclicity_failures = 0;
  int asymmetry_failures = 0;
  int transitivity_failures = 0;
  int totality_failures = 0;
  int transitivity_hits = 0;  // quadruples where both premises held
  bool passed() const {
    return cyclicity_failures == 0 && asymmetry_failures == 0 &&
           transitivity_failures == 0 && totality_failures == 0;
  }
};

OrderAxiomReport check_order_axioms(int samples, const Int& denominator_bound,
                                    std::uint64_t seed);

}  // namespace qcircle
