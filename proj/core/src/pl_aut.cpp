#include "qcircle/pl_aut.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qcircle {

namespace {

Rat rat_ceil(const Rat& r) { return Rat(-rat_floor(-r)); }

// Distance from a rational to the nearest integer.
Rat dist_to_int(const Rat& r) {
  const Rat f = rat_frac(r);
  const Rat g = 1 - f;
  return f < g ? f : g;
}

}  // namespace

PLAut::PLAut(Canonical, std::vector<Pair> bps) : bps_(std::move(bps)) { build_lift(); }

void PLAut::build_lift() {
  lift_x_.clear();
  lift_y_.clear();
  lift_x_.reserve(bps_.size());
  lift_y_.reserve(bps_.size());
  for (const auto& [x, y] : bps_) lift_x_.push_back(x.value());
  Rat y = bps_.front().second.value();
  lift_y_.push_back(y);
  for (std::size_t i = 1; i < bps_.size(); ++i) {
    y += arc_length(bps_[i - 1].second, bps_[i].second);
    lift_y_.push_back(y);
  }
}

PLAut PLAut::identity() {
  return PLAut(Canonical{}, {{RatPoint(), RatPoint()}});
}

PLAut PLAut::rotation(const RatPoint& offset) {
  return PLAut(Canonical{}, {{RatPoint(), offset}});
}

PLAut PLAut::from_pairs(std::vector<Pair> pairs) {
  if (pairs.empty()) throw std::invalid_argument("not a circular isomorphism");
  std::sort(pairs.begin(), pairs.end(),
            [](const Pair& a, const Pair& b) { return a.first < b.first; });
  // Exact duplicates collapse; conflicting images at one point are invalid.
  std::vector<Pair> nodes;
  nodes.reserve(pairs.size());
  for (auto& p : pairs) {
    if (!nodes.empty() && nodes.back().first == p.first) {
      if (nodes.back().second != p.second)
        throw std::invalid_argument("conflicting breakpoint pair");
      continue;
    }
    nodes.push_back(std::move(p));
  }
  const std::size_t n = nodes.size();
  if (n >= 2) {
    Rat winding = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Rat step = arc_length(nodes[i].second, nodes[(i + 1) % n].second);
      if (step == 0) throw std::invalid_argument("not a circular isomorphism");
      winding += step;
    }
    if (winding != 1) throw std::invalid_argument("not a circular isomorphism");
  }

  // Canonicalize: drop breakpoints where the slope does not change; anchor
  // pure rotations at x = 0.
  if (n >= 2) {
    std::vector<Rat> lx, ly;
    lx.reserve(n);
    ly.reserve(n);
    for (const auto& [x, y] : nodes) lx.push_back(x.value());
    Rat acc = nodes.front().second.value();
    ly.push_back(acc);
    for (std::size_t i = 1; i < n; ++i) {
      acc += arc_length(nodes[i - 1].second, nodes[i].second);
      ly.push_back(acc);
    }
    // Piece i runs from node i to node i+1 (the last wraps by one period).
    std::vector<Rat> slope(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Rat x1 = (i + 1 < n) ? lx[i + 1] : lx[0] + 1;
      const Rat y1 = (i + 1 < n) ? ly[i + 1] : ly[0] + 1;
      slope[i] = (y1 - ly[i]) / (x1 - lx[i]);
    }
    std::vector<Pair> kept;
    for (std::size_t i = 0; i < n; ++i) {
      const Rat& before = slope[(i + n - 1) % n];
      if (before != slope[i]) kept.push_back(nodes[i]);
    }
    if (kept.empty()) {
      const RatPoint offset(nodes.front().second.value() - nodes.front().first.value());
      return rotation(offset);
    }
    nodes = std::move(kept);
  } else {
    const RatPoint offset(nodes.front().second.value() - nodes.front().first.value());
    return rotation(offset);
  }
  return PLAut(Canonical{}, std::move(nodes));
}

RatPoint PLAut::operator()(const RatPoint& p) const {
  const Rat& x = p.value();
  const std::size_t n = lift_x_.size();
  if (x < lift_x_.front()) {
    const Rat x0 = lift_x_.back() - 1;
    const Rat y0 = lift_y_.back() - 1;
    const Rat s = (lift_y_.front() - y0) / (lift_x_.front() - x0);
    return RatPoint(y0 + s * (x - x0));
  }
  const auto it = std::upper_bound(lift_x_.begin(), lift_x_.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - lift_x_.begin()) - 1;
  if (x == lift_x_[i]) return RatPoint(lift_y_[i]);
  const Rat x1 = (i + 1 < n) ? lift_x_[i + 1] : lift_x_[0] + 1;
  const Rat y1 = (i + 1 < n) ? lift_y_[i + 1] : lift_y_[0] + 1;
  const Rat s = (y1 - lift_y_[i]) / (x1 - lift_x_[i]);
  return RatPoint(lift_y_[i] + s * (x - lift_x_[i]));
}

Rat PLAut::lift_at(const Rat& lifted_x) const {
  const Rat base = lift_x_.front();
  const Int period = rat_floor(lifted_x - base);
  const Rat t = lifted_x - Rat(period);  // in [base, base + 1)
  const std::size_t n = lift_x_.size();
  const auto it = std::upper_bound(lift_x_.begin(), lift_x_.end(), t);
  const std::size_t i = static_cast<std::size_t>(it - lift_x_.begin()) - 1;
  const Rat x1 = (i + 1 < n) ? lift_x_[i + 1] : lift_x_[0] + 1;
  const Rat y1 = (i + 1 < n) ? lift_y_[i + 1] : lift_y_[0] + 1;
  const Rat s = (y1 - lift_y_[i]) / (x1 - lift_x_[i]);
  return lift_y_[i] + s * (t - lift_x_[i]) + Rat(period);
}

bool PLAut::is_identity() const {
  return bps_.size() == 1 && bps_[0].first == RatPoint() && bps_[0].second == RatPoint();
}

PLAut PLAut::inverse() const {
  std::vector<Pair> swapped;
  swapped.reserve(bps_.size());
  for (const auto& [x, y] : bps_) swapped.emplace_back(y, x);
  return from_pairs(std::move(swapped));
}

PLAut compose(const PLAut& g, const PLAut& h) {
  std::set<RatPoint> xs;
  for (const auto& [x, y] : h.bps_) xs.insert(x);
  const PLAut hi = h.inverse();
  for (const auto& [x, y] : g.bps_) xs.insert(hi(x));
  std::vector<PLAut::Pair> pairs;
  pairs.reserve(xs.size());
  for (const auto& x : xs) pairs.emplace_back(x, g(h(x)));
  return PLAut::from_pairs(std::move(pairs));
}

PLAut extend(std::vector<PLAut::Pair> pairs) {
  return PLAut::from_pairs(std::move(pairs));
}

bool in_nbhd(const PLAut& g, const NbhdDescriptor& descriptor) {
  if (const auto* pw = std::get_if<PointwiseStabilizer>(&descriptor)) {
    for (const auto& p : pw->points)
      if (g(p) != p) return false;
    return true;
  }
  const auto& nu = std::get<CycleNeighborhood>(descriptor).cycle;
  const auto n = static_cast<std::ptrdiff_t>(nu.size());
  for (std::ptrdiff_t i = 0; i < n; ++i)
    if (!between(nu.at_mod(i - 1), g(nu[static_cast<std::size_t>(i)]), nu.at_mod(i + 1)))
      return false;
  return true;
}

bool MoveSet::contains(const RatPoint& x) const {
  if (full_circle) return true;
  for (const auto& arc : arcs)
    if (arc.contains(x)) return true;
  return false;
}

bool MoveSet::within(const RatPoint& a, const RatPoint& b) const {
  if (full_circle) return false;
  for (const auto& arc : arcs) {
    if (arc.left() == arc.right()) {
      if (!between(a, arc.left(), b)) return false;
    } else if (!open_arc_subset(arc.left(), arc.right(), a, b)) {
      return false;
    }
  }
  return true;
}

MoveSet move_set(const PLAut& g) {
  MoveSet out;
  if (g.is_identity()) return out;

  struct CArc {
    Rat start;  // representative in [0, 1)
    Rat end;    // start <= end <= 1, closed
  };
  std::vector<CArc> fixed;
  const auto add_fixed = [&](const Rat& lo, const Rat& hi) {
    const Rat s = rat_frac(lo);
    const Rat e = s + (hi - lo);
    if (e > 1) {
      fixed.push_back({s, Rat(1)});
      fixed.push_back({Rat(0), e - 1});
    } else {
      fixed.push_back({s, e});
    }
  };

  const auto& bps = g.breakpoints();
  const std::size_t n = bps.size();
  std::vector<Rat> lx, ly;
  for (const auto& [x, y] : bps) lx.push_back(x.value());
  {
    Rat acc = bps.front().second.value();
    ly.push_back(acc);
    for (std::size_t i = 1; i < n; ++i) {
      acc += arc_length(bps[i - 1].second, bps[i].second);
      ly.push_back(acc);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Rat x0 = lx[i], y0 = ly[i];
    const Rat x1 = (i + 1 < n) ? lx[i + 1] : lx[0] + 1;
    const Rat y1 = (i + 1 < n) ? ly[i + 1] : ly[0] + 1;
    const Rat s = (y1 - y0) / (x1 - x0);
    if (s == 1) {
      if (rat_frac(y0 - x0) == 0) add_fixed(x0, x1);
      continue;
    }
    const Rat d0 = y0 - x0;
    const Rat d1 = y1 - x1;
    const Rat lo = d0 < d1 ? d0 : d1;
    const Rat hi = d0 < d1 ? d1 : d0;
    for (Int m = rat_floor(rat_ceil(lo)); Rat(m) <= hi; ++m) {
      const Rat xs = (Rat(m) - y0 + s * x0) / (s - 1);
      if (x0 <= xs && xs <= x1) add_fixed(xs, xs);
    }
  }

  if (fixed.empty()) {
    out.full_circle = true;
    return out;
  }

  std::sort(fixed.begin(), fixed.end(),
            [](const CArc& a, const CArc& b) { return a.start < b.start; });
  std::vector<CArc> merged;
  for (const auto& arc : fixed) {
    if (!merged.empty() && arc.start <= merged.back().end) {
      if (arc.end > merged.back().end) merged.back().end = arc.end;
    } else {
      merged.push_back(arc);
    }
  }
  // Circular joins: an arc reaching 1 continues at 0.
  std::vector<std::pair<RatPoint, RatPoint>> arcs;  // closed [l, r] in order
  const bool wraps = merged.size() >= 2 && merged.front().start == 0 && merged.back().end == 1;
  if (merged.size() == 1 && merged.front().start == 0 && merged.front().end == 1)
    return out;  // everything fixed (cannot happen for canonical non-identity)
  for (std::size_t i = wraps ? 1 : 0; i + (wraps ? 1 : 0) < merged.size(); ++i)
    arcs.emplace_back(RatPoint(merged[i].start), RatPoint(rat_frac(merged[i].end)));
  if (wraps)
    arcs.emplace_back(RatPoint(merged.back().start), RatPoint(merged.front().end));

  if (arcs.size() == 1 && arcs[0].first == arcs[0].second) {
    // Punctured circle: everything moves except one point p. Decompose as
    // (p, q) + {q} + (q, p) with q the antipode.
    const RatPoint& p = arcs[0].first;
    const RatPoint q(p.value() + Rat(1, 2));
    out.arcs.push_back(open_interval(p, q));
    out.arcs.push_back(Interval(q, q, IntervalKind::closed));
    out.arcs.push_back(open_interval(q, p));
    return out;
  }
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const RatPoint& gap_left = arcs[i].second;
    const RatPoint& gap_right = arcs[(i + 1) % arcs.size()].first;
    out.arcs.push_back(open_interval(gap_left, gap_right));
  }
  return out;
}

Rat sup_distance(const PLAut& g, const PLAut& h) {
  std::set<RatPoint> node_set;
  for (const auto& [x, y] : g.breakpoints()) node_set.insert(x);
  for (const auto& [x, y] : h.breakpoints()) node_set.insert(x);
  std::vector<Rat> nodes;
  for (const auto& p : node_set) nodes.push_back(p.value());

  std::vector<Rat> diff;
  diff.reserve(nodes.size() + 1);
  for (const Rat& x : nodes) diff.push_back(g.lift_at(x) - h.lift_at(x));
  diff.push_back(diff.front());  // at nodes.front() + 1 both lifts gained 1

  Rat best = 0;
  for (const Rat& f : diff) {
    const Rat d = dist_to_int(f);
    if (d > best) best = d;
  }
  const Rat half(1, 2);
  if (best == half) return best;
  for (std::size_t i = 0; i + 1 < diff.size(); ++i) {
    const Rat lo = diff[i] < diff[i + 1] ? diff[i] : diff[i + 1];
    const Rat hi = diff[i] < diff[i + 1] ? diff[i + 1] : diff[i];
    if (lo == hi) continue;
    // Smallest odd integer strictly above 2*lo; the difference crosses a
    // half-integer iff it stays strictly below 2*hi.
    Int odd = rat_floor(2 * lo) + 1;
    if (odd % 2 == 0) ++odd;
    if (Rat(odd) < 2 * hi) return half;
  }
  return best;
}

PLAut random_aut(Rng& rng, int breakpoint_budget, const Int& denominator_bound) {
  if (breakpoint_budget < 1) throw std::invalid_argument("breakpoint budget must be >= 1");
  const auto count = static_cast<std::size_t>(breakpoint_budget);
  auto xs = random_distinct_points(rng, count, denominator_bound);
  auto ys = random_distinct_points(rng, count, denominator_bound);
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  const std::size_t shift = rng.below(count);
  std::rotate(ys.begin(), ys.begin() + static_cast<std::ptrdiff_t>(shift), ys.end());
  std::vector<PLAut::Pair> pairs;
  for (std::size_t i = 0; i < count; ++i) pairs.emplace_back(xs[i], ys[i]);
  return PLAut::from_pairs(std::move(pairs));
}

PLAut random_aut_fixing(Rng& rng, std::span<const RatPoint> fixed,
                        int budget_per_gap, const Int& denominator_bound) {
  if (fixed.empty()) throw std::invalid_argument("need at least one fixed point");
  std::set<RatPoint> anchor_set(fixed.begin(), fixed.end());
  std::vector<RatPoint> anchors(anchor_set.begin(), anchor_set.end());

  std::vector<PLAut::Pair> pairs;
  for (const auto& a : anchors) pairs.emplace_back(a, a);

  const auto arc_point = [&](const RatPoint& base, const Rat& len) {
    const Int den = rng.below_int(denominator_bound - 1) + 2;
    const Int num = rng.below_int(den - 1) + 1;
    return RatPoint(base.value() + len * Rat(num, den));
  };

  for (std::size_t i = 0; i < anchors.size(); ++i) {
    const RatPoint& a = anchors[i];
    const RatPoint& b = anchors[(i + 1) % anchors.size()];
    const Rat len = (a == b) ? Rat(1) : arc_length(a, b);
    const std::size_t k = rng.below(static_cast<std::uint64_t>(budget_per_gap) + 1);
    if (k == 0) continue;
    std::set<RatPoint> dom, img;
    while (dom.size() < k) dom.insert(arc_point(a, len));
    while (img.size() < k) img.insert(arc_point(a, len));
    // Both sets sorted along the gap: pair them up in order.
    std::vector<RatPoint> ds(dom.begin(), dom.end()), is(img.begin(), img.end());
    const auto gap_order = [&](const RatPoint& p, const RatPoint& q) {
      return arc_length(a, p) < arc_length(a, q);
    };
    std::sort(ds.begin(), ds.end(), gap_order);
    std::sort(is.begin(), is.end(), gap_order);
    for (std::size_t j = 0; j < k; ++j) pairs.emplace_back(ds[j], is[j]);
  }
  return PLAut::from_pairs(std::move(pairs));
}

PLAut random_aut_with_value(Rng& rng, const RatPoint& point, const RatPoint& image,
                            int extra_breakpoints, const Int& denominator_bound) {
  const auto extra = static_cast<std::size_t>(std::max(extra_breakpoints, 0));
  std::set<RatPoint> dom{point}, img{image};
  while (dom.size() < extra + 1) dom.insert(random_point(rng, denominator_bound));
  while (img.size() < extra + 1) img.insert(random_point(rng, denominator_bound));
  std::vector<RatPoint> ds(dom.begin(), dom.end()), is(img.begin(), img.end());
  const auto ip = static_cast<std::size_t>(
      std::find(ds.begin(), ds.end(), point) - ds.begin());
  const auto ii = static_cast<std::size_t>(
      std::find(is.begin(), is.end(), image) - is.begin());
  const std::size_t k = ds.size();
  std::vector<PLAut::Pair> pairs;
  for (std::size_t j = 0; j < k; ++j)
    pairs.emplace_back(ds[j], is[(j + k + ii - ip) % k]);
  return PLAut::from_pairs(std::move(pairs));
}

}  // namespace qcircle
