#include "qcircle/circle.hpp"

#include "qcircle/random.hpp"

#include <algorithm>
#include <set>

namespace qcircle {

bool between(const RatPoint& a, const RatPoint& b, const RatPoint& c) {
  const Rat& x = a.value();
  const Rat& y = b.value();
  const Rat& z = c.value();
  // Exactly one of the three rotations of x < y < z; non-distinct triples
  // fail all three.
  return (x < y && y < z) || (y < z && z < x) || (z < x && x < y);
}

CutOrder cut_compare(const RatPoint& z, const RatPoint& a, const RatPoint& b) {
  if (a == b) return CutOrder::equal;
  if (a == z) return CutOrder::precedes;
  if (b == z) return CutOrder::follows;
  return between(z, a, b) ? CutOrder::precedes : CutOrder::follows;
}

Rat circle_distance(const RatPoint& a, const RatPoint& b) {
  const Rat d = arc_length(a, b);
  const Rat e = 1 - d;
  return d == 0 ? Rat(0) : (d < e ? d : e);
}

RatPoint ccw_midpoint(const RatPoint& a, const RatPoint& b) {
  if (a == b) throw std::invalid_argument("midpoint of a degenerate arc");
  return RatPoint(a.value() + arc_length(a, b) / 2);
}

bool Interval::contains(const RatPoint& x) const {
  switch (kind_) {
    case IntervalKind::open:
      return between(left_, x, right_);
    case IntervalKind::closed:
      return x == left_ || x == right_ || between(left_, x, right_);
    case IntervalKind::left_closed:
      return x == left_ || between(left_, x, right_);
    case IntervalKind::right_closed:
      return x == right_ || between(left_, x, right_);
  }
  return false;
}

bool Interval::is_empty() const {
  if (left_ != right_) return false;
  return kind_ != IntervalKind::closed;  // [a,a] = {a}; the rest are empty
}

std::string Interval::str() const {
  const char open_mark = (kind_ == IntervalKind::closed || kind_ == IntervalKind::left_closed) ? '[' : '(';
  const char close_mark = (kind_ == IntervalKind::closed || kind_ == IntervalKind::right_closed) ? ']' : ')';
  return open_mark + left_.str() + ", " + right_.str() + close_mark;
}

bool open_arc_subset(const RatPoint& l, const RatPoint& r, const RatPoint& a,
                     const RatPoint& b) {
  if (l == r || a == b) throw std::invalid_argument("degenerate arc");
  // (l, r) fits inside (a, b) iff it does not pass through a and ends no
  // later than b in the cut order at a.
  if (r == a) return false;
  if (between(l, a, r)) return false;
  return arc_length(a, r) <= arc_length(a, b);
}

bool closed_arc_in_open(const RatPoint& l, const RatPoint& r, const RatPoint& a,
                        const RatPoint& b) {
  return between(a, l, b) && between(a, r, b) && open_arc_subset(l, r, a, b);
}

bool closed_arcs_disjoint(const RatPoint& l1, const RatPoint& r1,
                          const RatPoint& l2, const RatPoint& r2) {
  const auto in_closed = [](const RatPoint& x, const RatPoint& l, const RatPoint& r) {
    return x == l || x == r || between(l, x, r);
  };
  return !in_closed(l2, l1, r1) && !in_closed(r2, l1, r1) &&
         !in_closed(l1, l2, r2) && !in_closed(r1, l2, r2);
}

bool is_cycle(std::span<const RatPoint> points) {
  if (points.size() < 3)
    throw std::invalid_argument("a cycle needs at least 3 points");
  // Closed walk a_1 -> a_2 -> ... -> a_n -> a_1. Each step must advance
  // (consecutive points distinct) and the total winding must be exactly one
  // full turn; that forces pairwise distinctness and every c-ordered triple.
  Rat winding = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Rat step = arc_length(points[i], points[(i + 1) % points.size()]);
    if (step == 0) return false;
    winding += step;
  }
  return winding == 1;
}

Cycle::Cycle(std::vector<RatPoint> points) : pts_(std::move(points)) {
  if (!is_cycle(pts_)) throw std::invalid_argument("points do not form a cycle");
}

bool Cycle::contains(const RatPoint& x) const {
  return std::find(pts_.begin(), pts_.end(), x) != pts_.end();
}

std::string CoveringCell::str() const {
  return singleton ? "{" + left.str() + "}" : "(" + left.str() + ", " + right.str() + ")";
}

Covering::Covering(Cycle source, CoveringVariant variant)
    : source_(std::move(source)), variant_(variant) {
  const std::size_t n = source_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (variant_ == CoveringVariant::cov)
      cells_.push_back({true, source_[i], source_[i]});
    cells_.push_back({false, source_[i], source_[(i + 1) % n]});
  }
}

std::size_t Covering::locate(const RatPoint& x) const {
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i].contains(x)) return i;
  throw std::domain_error("not covered");
}

std::size_t locate(const Cycle& nu, const RatPoint& x, CoveringVariant variant) {
  return Covering(nu, variant).locate(x);
}

std::vector<RatPoint> random_distinct_points(Rng& rng, std::size_t count,
                                             const Int& max_denominator) {
  std::set<RatPoint> seen;
  std::vector<RatPoint> out;
  int stall = 0;
  while (out.size() < count) {
    RatPoint p = random_point(rng, max_denominator);
    if (seen.insert(p).second) {
      out.push_back(p);
      stall = 0;
    } else if (++stall > 4096) {
      throw std::invalid_argument("denominator bound too small for distinct points");
    }
  }
  return out;
}

Cycle random_cycle(Rng& rng, std::size_t size, const Int& max_denominator) {
  auto pts = random_distinct_points(rng, size, max_denominator);
  std::sort(pts.begin(), pts.end());
  const std::size_t shift = rng.below(size);
  std::rotate(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(shift), pts.end());
  return Cycle(std::move(pts));
}

RatPoint random_point_in_arc(Rng& rng, const RatPoint& a, const RatPoint& b,
                             const Int& max_denominator) {
  if (a == b) throw std::invalid_argument("degenerate arc");
  const Int den = rng.below_int(max_denominator - 1) + 2;
  const Int num = rng.below_int(den - 1) + 1;  // t in (0, 1)
  return RatPoint(a.value() + arc_length(a, b) * Rat(num, den));
}

OrderAxiomReport check_order_axioms(int samples, const Int& denominator_bound,
                                    std::uint64_t seed) {
  Rng rng(seed);
  OrderAxiomReport report;
  report.samples = samples;
  for (int it = 0; it < samples; ++it) {
    const RatPoint a = random_point(rng, denominator_bound);
    const RatPoint b = random_point(rng, denominator_bound);
    const RatPoint c = random_point(rng, denominator_bound);
    const RatPoint d = random_point(rng, denominator_bound);

    if (between(a, b, c) && !between(b, c, a)) ++report.cyclicity_failures;
    if (between(a, b, c) && between(b, a, c)) ++report.asymmetry_failures;
    if (between(a, b, c) && between(a, c, d)) {
      ++report.transitivity_hits;
      if (!between(a, b, d)) ++report.transitivity_failures;
    }
    if (a != b && b != c && a != c) {
      const bool fwd = between(a, b, c);
      const bool rev = between(a, c, b);
      if (fwd == rev) ++report.totality_failures;
    }
  }
  return report;
}

}  // namespace qcircle
