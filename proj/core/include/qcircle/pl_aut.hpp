#pragma once

#include "qcircle/circle.hpp"
#include "qcircle/random.hpp"

#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace qcircle {

// An orientation preserving piecewise affine bijection of the rational
// circle, given by breakpoint pairs (x_i -> y_i) with affine interpolation in
// the lift between consecutive breakpoints. Stored canonically: x_i strictly
// increasing in [0, 1), no collinear interior breakpoints, and pure rotations
// anchored at x = 0, so structural equality is extensional equality.
class PLAut {
 public:
  using Pair = std::pair<RatPoint, RatPoint>;

  PLAut() : PLAut(identity()) {}

  static PLAut identity();
  static PLAut rotation(const RatPoint& offset);
  // Validates (distinct x's, image winding one) and canonicalizes. Throws
  // std::invalid_argument("not a circular isomorphism") otherwise.
  static PLAut from_pairs(std::vector<Pair> pairs);

  RatPoint operator()(const RatPoint& x) const;
  RatPoint apply(const RatPoint& x) const { return (*this)(x); }

  PLAut inverse() const;

  const std::vector<Pair>& breakpoints() const { return bps_; }
  std::size_t size() const { return bps_.size(); }
  bool is_identity() const;

  friend PLAut compose(const PLAut& g, const PLAut& h);  // x -> g(h(x))
  friend bool operator==(const PLAut& a, const PLAut& b) { return a.bps_ == b.bps_; }
  friend bool operator!=(const PLAut& a, const PLAut& b) { return !(a == b); }

  // Lift value at x + k for the representative x in [0,1); the lift fixes
  // tilde(g)(x_1) = y_1 in [0,1) and increases by 1 per period.
  Rat lift_at(const Rat& lifted_x) const;

 private:
  struct Canonical {};
  PLAut(Canonical, std::vector<Pair> bps);
  void build_lift();

  std::vector<Pair> bps_;
  std::vector<Rat> lift_x_;  // representatives, strictly increasing in [0,1)
  std::vector<Rat> lift_y_;  // lifted images, strictly increasing
};

PLAut compose(const PLAut& g, const PLAut& h);

// Extends a finite circular-order isomorphism to a full automorphism by
// affine interpolation between consecutive matched pairs. Throws
// std::invalid_argument("not a circular isomorphism") when the correspondence
// does not preserve the circular order.
PLAut extend(std::vector<PLAut::Pair> pairs);

struct PointwiseStabilizer {
  std::vector<RatPoint> points;  // the subgroup G_{a_1,...,a_n}
};

struct CycleNeighborhood {
  Cycle cycle;  // { g : g(a_i) in (a_{i-1}, a_{i+1}) for all i mod n }
};

using NbhdDescriptor = std::variant<PointwiseStabilizer, CycleNeighborhood>;

bool in_nbhd(const PLAut& g, const NbhdDescriptor& descriptor);

// Exact description of { x : g(x) != x } as a finite union of open arcs.
struct MoveSet {
  bool full_circle = false;
  std::vector<Interval> arcs;  // open, pairwise disjoint, in circular order

  bool empty() const { return !full_circle && arcs.empty(); }
  bool contains(const RatPoint& x) const;
  // Whole move set inside the open arc (a, b).
  bool within(const RatPoint& a, const RatPoint& b) const;
};

MoveSet move_set(const PLAut& g);

// sup over the circle of circle_distance(g(x), h(x)), computed exactly from
// the breakpoints of both maps and the points where the lift difference
// crosses a half-integer. A right-invariant metric.
Rat sup_distance(const PLAut& g, const PLAut& h);

// Deterministic in the generator state; output satisfies all invariants.
PLAut random_aut(Rng& rng, int breakpoint_budget, const Int& denominator_bound);

// Random element of the pointwise stabilizer of `fixed`: each complementary
// gap is mapped to itself by a random piecewise affine rearrangement.
PLAut random_aut_fixing(Rng& rng, std::span<const RatPoint> fixed,
                        int budget_per_gap, const Int& denominator_bound);

// Random automorphism with a prescribed value at one point.
PLAut random_aut_with_value(Rng& rng, const RatPoint& point, const RatPoint& image,
                            int extra_breakpoints, const Int& denominator_bound);

}  // namespace qcircle
