#pragma once

#include "qcircle/circle.hpp"
#include "qcircle/pl_aut.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace qcircle {

inline constexpr int kDefaultPrecision = 20;
inline constexpr int kDefaultRefinementCap = 64;

// A deterministic generator of open rational intervals, cached so that the
// same index always yields the same interval. Generators are invoked once per
// index, in increasing order, and may keep internal state.
//
// A stream is *conforming* when it is strictly nested (closed interval n+1
// inside open interval n) with width(n) <= 2^-n; conforming streams with no
// rational point in every interval represent irrational circle points.
class IntervalStream {
 public:
  using Generator = std::function<Interval(int)>;  // index n >= 1

  explicit IntervalStream(Generator gen)
      : state_(std::make_shared<State>(State{std::move(gen), {}})) {}

  Interval at(int n) const;

 private:
  struct State {
    Generator gen;
    std::vector<Interval> cache;
  };
  std::shared_ptr<State> state_;
};

// Wraps a nested shrinking stream into a conforming one by skipping ahead.
// Each output interval scans at most `refinement_cap` input intervals; when
// the input stalls the scan throws stream_error("stream does not shrink").
IntervalStream normalize(IntervalStream raw, int refinement_cap = kDefaultRefinementCap);

// Conforming stream converging to frac((p + sqrt(D))/q) built from the
// periodic continued fraction; D positive and not a perfect square, q > 0.
IntervalStream quad_irrational(const Int& D, const Int& p, const Int& q);

// Depth at which the stream width is <= 2^-precision (scans up to cap).
int refine_to_width(const IntervalStream& s, int precision, int cap = kDefaultRefinementCap);

// Whether the two streams are consistent with representing the same point at
// the given precision: both refined to width 2^-precision, closed intervals
// intersect. Streams of the same point always overlap; distinct points fail
// once separated.
bool streams_overlap_at(const IntervalStream& a, const IntervalStream& b,
                        int precision, int cap = kDefaultRefinementCap);

// An irrational point of the completion, held intensionally: a conforming
// interval stream plus the recipe that built it (a quadratic irrational,
// optionally pushed forward by a PL automorphism). Recipes make structural
// equality decidable; extensional equality of distinct recipes is only
// semi-decidable and every comparison takes a precision.
class IrrPoint {
 public:
  struct Quad {
    Int D, p, q;
    friend bool operator==(const Quad&, const Quad&) = default;
  };

  static IrrPoint quadratic(const Int& D, const Int& p, const Int& q);

  // The image point under g, with the recipe flattened to a single map.
  IrrPoint mapped_by(const PLAut& g) const;

  const IntervalStream& stream() const { return node_->stream; }
  Interval interval(int n) const { return node_->stream.at(n); }
  const Quad& base() const { return node_->base; }
  const std::optional<PLAut>& map() const { return node_->map; }

  bool same_recipe(const IrrPoint& other) const {
    return node_->base == other.node_->base && node_->map == other.node_->map;
  }

 private:
  struct Node {
    Quad base;
    std::optional<PLAut> map;
    IntervalStream base_stream;
    IntervalStream stream;
  };
  explicit IrrPoint(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

enum class OrbitLabel { Q0, Q0_minus, Q0_plus, J };
const char* orbit_name(OrbitLabel label);

// A point of the completed circle: a rational q, one of its satellites
// q^- / q^+, or an irrational interval stream. The satellite triple is
// ordered [q^-, q, q^+] in the completion's circular order.
class CompletionPoint {
 public:
  enum class Kind { rational, minus, plus, irrational };

  static CompletionPoint rational(RatPoint q) { return CompletionPoint(Kind::rational, std::move(q)); }
  static CompletionPoint minus(RatPoint q) { return CompletionPoint(Kind::minus, std::move(q)); }
  static CompletionPoint plus(RatPoint q) { return CompletionPoint(Kind::plus, std::move(q)); }
  static CompletionPoint irrational(IrrPoint u) {
    CompletionPoint p(Kind::irrational, RatPoint());
    p.irr_ = std::move(u);
    return p;
  }

  Kind kind() const { return kind_; }
  bool is_rational_family() const { return kind_ != Kind::irrational; }
  const RatPoint& base() const {
    if (!is_rational_family()) throw std::logic_error("irrational point has no base");
    return base_;
  }
  const IrrPoint& irr() const {
    if (is_rational_family()) throw std::logic_error("rational-family point has no stream");
    return *irr_;
  }

 private:
  CompletionPoint(Kind kind, RatPoint base) : kind_(kind), base_(std::move(base)) {}
  Kind kind_;
  RatPoint base_;
  std::optional<IrrPoint> irr_;
};

OrbitLabel orbit_of(const CompletionPoint& x);

// The ternary circular order on the completion. Satellites of q sit in the
// order [q^-, q, q^+]; irrationals are compared through any separating
// refinement depth. Structurally non-distinct triples are false; streams
// that fail to separate within `precision` refinements raise
// undecided_error("undecided at precision").
bool c_between(const CompletionPoint& x, const CompletionPoint& y,
               const CompletionPoint& z, int precision = kDefaultPrecision);

// The action of a PL automorphism on the completion: bases map through g,
// satellites follow their base, irrational streams map intervalwise.
CompletionPoint act(const PLAut& g, const CompletionPoint& x);

// A limit automorphism: a sequence of PL stages agreeing outside shrinking
// controlling intervals, so evaluation at any rational point stabilizes at a
// computable index. Stage n maps the n-th controlling interval of each moved
// stream onto the n-th interval of its target; stage n+1 equals stage n
// outside the n-th controlling intervals.
class LazyAut {
 public:
  static LazyAut transport(const IrrPoint& u, const IrrPoint& v,
                           int refinement_cap = kDefaultRefinementCap);
  static LazyAut transport_fixing(const IrrPoint& u, const IrrPoint& v,
                                  const IrrPoint& z,
                                  int refinement_cap = kDefaultRefinementCap);
  static LazyAut transport_finite(std::vector<std::pair<IrrPoint, IrrPoint>> pairs,
                                  int refinement_cap = kDefaultRefinementCap);

  PLAut stage(int n) const;  // n >= 1

  // Controlling intervals at depth n for the moved pairs (empty when every
  // pair is anchored). Forward = domain side, inverse = image side.
  std::vector<Interval> forward_intervals(int n) const;
  std::vector<Interval> inverse_intervals(int n) const;

  std::size_t moving_pair_count() const;
  const std::vector<std::pair<IrrPoint, IrrPoint>>& pairs() const;
  const std::optional<IrrPoint>& fixing() const;
  int depth_offset() const;

  // Least n with x outside every forward controlling interval at depth n.
  int first_exclusion_index(const RatPoint& x, int cap = kDefaultRefinementCap) const;
  // Stabilized evaluation at a rational point.
  RatPoint eval(const RatPoint& x, int cap = kDefaultRefinementCap) const;

 private:
  struct State;
  explicit LazyAut(std::shared_ptr<State> st) : st_(std::move(st)) {}
  static LazyAut make(std::vector<std::pair<IrrPoint, IrrPoint>> pairs,
                      std::optional<IrrPoint> fix, int refinement_cap);
  std::shared_ptr<State> st_;
};

// Evaluation of a limit automorphism on the completion. Rational-family
// points stabilize; irrational points map through the first stage that is
// final on their stream, or shortcut structurally when the point is one of
// the transported streams.
CompletionPoint act_lazy(const LazyAut& g, const CompletionPoint& x,
                         int cap = kDefaultRefinementCap);

}  // namespace qcircle
