#include "qcircle/factors.hpp"

namespace qcircle {

const char* factor_name(FactorId id) {
  switch (id) {
    case FactorId::F1: return "F1";
    case FactorId::F2: return "F2";
    case FactorId::F3: return "F3";
    case FactorId::F4: return "F4";
    case FactorId::F5: return "F5";
    case FactorId::F6: return "F6";
  }
  return "?";
}

FactorId factor_from_name(std::string_view name) {
  if (name == "F1") return FactorId::F1;
  if (name == "F2") return FactorId::F2;
  if (name == "F3") return FactorId::F3;
  if (name == "F4") return FactorId::F4;
  if (name == "F5") return FactorId::F5;
  if (name == "F6") return FactorId::F6;
  throw std::invalid_argument("unknown factor id");
}

FactorTarget FactorTarget::circle(CirclePt p) {
  FactorTarget t;
  t.kind_ = Kind::circle;
  t.circle_ = std::move(p);
  return t;
}

FactorTarget FactorTarget::star() {
  FactorTarget t;
  t.kind_ = Kind::star;
  return t;
}

FactorTarget FactorTarget::discrete(RatPoint q) {
  FactorTarget t;
  t.kind_ = Kind::discrete;
  t.discrete_ = std::move(q);
  return t;
}

FactorTarget FactorTarget::completion(CompletionPoint x) {
  FactorTarget t;
  t.kind_ = Kind::completion;
  t.completion_ = std::move(x);
  return t;
}

FactorTarget FactorTarget::double_circle(CirclePt p, Layer layer) {
  FactorTarget t;
  t.kind_ = Kind::double_circle;
  t.circle_ = std::move(p);
  t.layer_ = layer;
  return t;
}

const CirclePt& FactorTarget::circle_point() const {
  if (!circle_) throw std::logic_error("target carries no circle point");
  return *circle_;
}

const RatPoint& FactorTarget::discrete_point() const {
  if (!discrete_) throw std::logic_error("target carries no discrete point");
  return *discrete_;
}

const CompletionPoint& FactorTarget::completion_point() const {
  if (!completion_) throw std::logic_error("target carries no completion point");
  return *completion_;
}

FactorTarget::Layer FactorTarget::layer() const {
  if (kind_ != Kind::double_circle) throw std::logic_error("target carries no layer");
  return layer_;
}

namespace {

CirclePt collapse_to_circle(const CompletionPoint& x) {
  if (x.is_rational_family()) return CirclePt::rational(x.base());
  return CirclePt::irrational(x.irr());
}

}  // namespace

FactorTarget factor_apply(FactorId id, const CompletionPoint& x) {
  using K = CompletionPoint::Kind;
  switch (id) {
    case FactorId::F1:
      // Satellites collapse onto their base point of the circle.
      return FactorTarget::circle(collapse_to_circle(x));
    case FactorId::F2:
      // Rationals stay isolated, the minimal flow collapses to *.
      return x.kind() == K::rational ? FactorTarget::discrete(x.base())
                                     : FactorTarget::star();
    case FactorId::F3:
      return FactorTarget::completion(
          x.kind() == K::rational ? CompletionPoint::minus(x.base()) : x);
    case FactorId::F4:
      return FactorTarget::completion(
          x.kind() == K::rational ? CompletionPoint::plus(x.base()) : x);
    case FactorId::F5:
      // Both satellites land on the circle copy; rationals keep an isolated
      // copy of their own.
      if (x.kind() == K::rational)
        return FactorTarget::double_circle(CirclePt::rational(x.base()),
                                           FactorTarget::Layer::isolated);
      return FactorTarget::double_circle(collapse_to_circle(x),
                                         FactorTarget::Layer::circle);
    case FactorId::F6:
      return FactorTarget::completion(x);
  }
  throw std::logic_error("bad factor id");
}

namespace {

CirclePt act_on_circle(const PLAut& g, const CirclePt& p) {
  if (p.rat) return CirclePt::rational(g(*p.rat));
  return CirclePt::irrational(p.irr->mapped_by(g));
}

bool circle_points_equal(const CirclePt& a, const CirclePt& b, int precision) {
  if (a.rat && b.rat) return *a.rat == *b.rat;
  if (a.irr && b.irr) {
    if (a.irr->same_recipe(*b.irr)) return true;
    return streams_overlap_at(a.irr->stream(), b.irr->stream(), precision);
  }
  // Rational versus irrational: distinct once the stream separates from the
  // rational; a stream converging to the rational never separates.
  const RatPoint& q = a.rat ? *a.rat : *b.rat;
  const IrrPoint& u = a.rat ? *b.irr : *a.irr;
  for (int d = 1; d <= precision; ++d) {
    const Interval iv = u.interval(d);
    if (q != iv.left() && q != iv.right() && !between(iv.left(), q, iv.right()))
      return false;
  }
  throw undecided_error("undecided at precision");
}

}  // namespace

FactorTarget act_on_target(FactorId id, const PLAut& g, const FactorTarget& t) {
  (void)id;
  switch (t.kind()) {
    case FactorTarget::Kind::circle:
      return FactorTarget::circle(act_on_circle(g, t.circle_point()));
    case FactorTarget::Kind::star:
      return FactorTarget::star();
    case FactorTarget::Kind::discrete:
      return FactorTarget::discrete(g(t.discrete_point()));
    case FactorTarget::Kind::completion:
      return FactorTarget::completion(act(g, t.completion_point()));
    case FactorTarget::Kind::double_circle:
      return FactorTarget::double_circle(act_on_circle(g, t.circle_point()), t.layer());
  }
  throw std::logic_error("bad target kind");
}

bool targets_equal(const FactorTarget& a, const FactorTarget& b, int precision) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case FactorTarget::Kind::star:
      return true;
    case FactorTarget::Kind::discrete:
      return a.discrete_point() == b.discrete_point();
    case FactorTarget::Kind::circle:
      return circle_points_equal(a.circle_point(), b.circle_point(), precision);
    case FactorTarget::Kind::double_circle:
      return a.layer() == b.layer() &&
             circle_points_equal(a.circle_point(), b.circle_point(), precision);
    case FactorTarget::Kind::completion: {
      const CompletionPoint& x = a.completion_point();
      const CompletionPoint& y = b.completion_point();
      if (x.kind() != y.kind()) return false;
      if (x.is_rational_family()) return x.base() == y.base();
      if (x.irr().same_recipe(y.irr())) return true;
      return streams_overlap_at(x.irr().stream(), y.irr().stream(), precision);
    }
  }
  throw std::logic_error("bad target kind");
}

bool check_equivariance(FactorId id, const PLAut& g, const CompletionPoint& x,
                        int precision) {
  const FactorTarget lhs = factor_apply(id, act(g, x));
  const FactorTarget rhs = act_on_target(id, g, factor_apply(id, x));
  return targets_equal(lhs, rhs, precision);
}

}  // namespace qcircle
