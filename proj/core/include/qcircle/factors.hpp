#pragma once

#include "qcircle/completion.hpp"

#include <optional>
#include <string_view>

namespace qcircle {

// The six natural equivariant quotients of the completed circle.
enum class FactorId { F1, F2, F3, F4, F5, F6 };

const char* factor_name(FactorId id);
FactorId factor_from_name(std::string_view name);

// A point of the plain circle: a rational position or an irrational stream.
struct CirclePt {
  std::optional<RatPoint> rat;
  std::optional<IrrPoint> irr;

  static CirclePt rational(RatPoint q) { return {std::move(q), std::nullopt}; }
  static CirclePt irrational(IrrPoint u) { return {std::nullopt, std::move(u)}; }
};

// A value in the target space of one of the quotients:
//   F1 -> the circle;  F2 -> the one-point compactification of discrete Q0;
//   F3, F4 -> the split circle;  F5 -> the double-circle subspace;
//   F6 -> the completion itself.
class FactorTarget {
 public:
  enum class Kind { circle, star, discrete, completion, double_circle };
  enum class Layer { circle, isolated };

  static FactorTarget circle(CirclePt p);
  static FactorTarget star();
  static FactorTarget discrete(RatPoint q);
  static FactorTarget completion(CompletionPoint x);
  static FactorTarget double_circle(CirclePt p, Layer layer);

  Kind kind() const { return kind_; }
  const CirclePt& circle_point() const;
  const RatPoint& discrete_point() const;
  const CompletionPoint& completion_point() const;
  Layer layer() const;

 private:
  FactorTarget() = default;
  Kind kind_ = Kind::star;
  std::optional<CirclePt> circle_;
  std::optional<RatPoint> discrete_;
  std::optional<CompletionPoint> completion_;
  Layer layer_ = Layer::circle;
};

// Evaluates the chosen quotient map at a completion point.
FactorTarget factor_apply(FactorId id, const CompletionPoint& x);

// The induced action of g on each target space: circle points map through
// the PL extension, * stays fixed, layers are preserved.
FactorTarget act_on_target(FactorId id, const PLAut& g, const FactorTarget& t);

// Equality of target values; irrational stream comparisons are resolved at
// the given precision (same recipes are equal outright).
bool targets_equal(const FactorTarget& a, const FactorTarget& b,
                   int precision = kDefaultPrecision);

// factor_apply(id, g. x) == g . factor_apply(id, x) at the given precision.
bool check_equivariance(FactorId id, const PLAut& g, const CompletionPoint& x,
                        int precision = kDefaultPrecision);

}  // namespace qcircle
