#include "qcircle/completion.hpp"

#include <algorithm>

namespace qcircle {

Interval IntervalStream::at(int n) const {
  if (n < 1) throw std::invalid_argument("stream index starts at 1");
  auto& cache = state_->cache;
  while (cache.size() < static_cast<std::size_t>(n)) {
    Interval next = state_->gen(static_cast<int>(cache.size()) + 1);
    if (next.left() == next.right())
      throw stream_error("degenerate stream interval");
    cache.push_back(std::move(next));
  }
  return cache[static_cast<std::size_t>(n - 1)];
}

IntervalStream normalize(IntervalStream raw, int refinement_cap) {
  struct NState {
    IntervalStream src;
    int cursor = 0;
    std::optional<Interval> prev;
    int cap;
  };
  auto st = std::make_shared<NState>(NState{std::move(raw), 0, std::nullopt, refinement_cap});
  return IntervalStream([st](int n) -> Interval {
    const Rat limit(Int(1), Int(1) << n);
    for (int tries = 0; tries < st->cap; ++tries) {
      const Interval& cand = st->src.at(++st->cursor);
      bool ok = cand.width() <= limit;
      if (ok && st->prev)
        ok = closed_arc_in_open(cand.left(), cand.right(), st->prev->left(),
                                st->prev->right());
      if (ok) {
        st->prev = cand;
        return cand;
      }
    }
    throw stream_error("stream does not shrink");
  });
}

IntervalStream quad_irrational(const Int& D, const Int& p, const Int& q) {
  if (D <= 0) throw std::invalid_argument("D must be positive");
  if (q <= 0) throw std::invalid_argument("q must be positive");
  Int sq = boost::multiprecision::sqrt(D);
  if (sq * sq == D) throw std::invalid_argument("D is a perfect square");

  // Reduce mod 1 and arrange the divisibility invariant Q | D - P^2.
  Int DD = D;
  Int P = p - floor_div(p + sq, q) * q;
  Int Q = q;
  if ((DD - P * P) % Q != 0) {
    P *= q;
    DD *= q * q;
    Q *= q;
    sq = boost::multiprecision::sqrt(DD);
  }

  struct CF {
    Int D, sq, P, Q;
    Int pm1{1}, pm2{0}, qm1{0}, qm2{1};
    std::vector<Rat> conv;

    void step() {
      // floor((P + sqrt(D)) / Q), exact for either sign of Q.
      const Int a = Q > 0 ? floor_div(P + sq, Q) : floor_div(-P - sq - 1, -Q);
      const Int pn = a * pm1 + pm2;
      const Int qn = a * qm1 + qm2;
      conv.emplace_back(pn, qn);
      pm2 = pm1;
      pm1 = pn;
      qm2 = qm1;
      qm1 = qn;
      const Int Pn = a * Q - P;
      const Int Qn = (D - Pn * Pn) / Q;
      P = Pn;
      Q = Qn;
    }
    void ensure(std::size_t count) {
      while (conv.size() < count) step();
    }
  };
  auto cf = std::make_shared<CF>(CF{DD, sq, P, Q, 1, 0, 0, 1, {}});

  // Interval n brackets the value between convergents 2n (below) and 2n+1
  // (above); the pair (c_0, c_1) is skipped since c_1 may be a full turn.
  return IntervalStream([cf](int n) {
    cf->ensure(static_cast<std::size_t>(2 * n + 2));
    const Rat& lo = cf->conv[static_cast<std::size_t>(2 * n)];
    const Rat& hi = cf->conv[static_cast<std::size_t>(2 * n + 1)];
    return open_interval(RatPoint(lo), RatPoint(hi));
  });
}

int refine_to_width(const IntervalStream& s, int precision, int cap) {
  const Rat limit(Int(1), Int(1) << precision);
  for (int n = 1; n <= cap; ++n)
    if (s.at(n).width() <= limit) return n;
  throw stream_error("stream does not shrink");
}

bool streams_overlap_at(const IntervalStream& a, const IntervalStream& b,
                        int precision, int cap) {
  const Interval& ia = a.at(refine_to_width(a, precision, cap));
  const Interval& ib = b.at(refine_to_width(b, precision, cap));
  return !closed_arcs_disjoint(ia.left(), ia.right(), ib.left(), ib.right());
}

IrrPoint IrrPoint::quadratic(const Int& D, const Int& p, const Int& q) {
  IntervalStream s = quad_irrational(D, p, q);
  return IrrPoint(std::make_shared<const Node>(Node{Quad{D, p, q}, std::nullopt, s, s}));
}

IrrPoint IrrPoint::mapped_by(const PLAut& g) const {
  const PLAut m = node_->map ? compose(g, *node_->map) : g;
  if (m.is_identity())
    return IrrPoint(std::make_shared<const Node>(
        Node{node_->base, std::nullopt, node_->base_stream, node_->base_stream}));
  IntervalStream raw(
      [src = node_->base_stream, m](int n) {
        const Interval& in = src.at(n);
        return open_interval(m(in.left()), m(in.right()));
      });
  return IrrPoint(std::make_shared<const Node>(
      Node{node_->base, m, node_->base_stream, normalize(std::move(raw))}));
}

const char* orbit_name(OrbitLabel label) {
  switch (label) {
    case OrbitLabel::Q0: return "Q0";
    case OrbitLabel::Q0_minus: return "Q0_minus";
    case OrbitLabel::Q0_plus: return "Q0_plus";
    case OrbitLabel::J: return "J";
  }
  return "?";
}

OrbitLabel orbit_of(const CompletionPoint& x) {
  switch (x.kind()) {
    case CompletionPoint::Kind::rational: return OrbitLabel::Q0;
    case CompletionPoint::Kind::minus: return OrbitLabel::Q0_minus;
    case CompletionPoint::Kind::plus: return OrbitLabel::Q0_plus;
    case CompletionPoint::Kind::irrational: return OrbitLabel::J;
  }
  throw std::logic_error("bad kind");
}

namespace {

int satellite_tag(CompletionPoint::Kind k) {
  switch (k) {
    case CompletionPoint::Kind::minus: return -1;
    case CompletionPoint::Kind::plus: return 1;
    default: return 0;
  }
}

struct Surrogate {
  RatPoint pos;
  int tag;
};

bool tagged_between(const Surrogate& a, const Surrogate& b, const Surrogate& c) {
  const bool ab = a.pos == b.pos, bc = b.pos == c.pos, ac = a.pos == c.pos;
  if (!ab && !bc && !ac) return between(a.pos, b.pos, c.pos);
  if (ab && bc) {
    const int t1 = a.tag, t2 = b.tag, t3 = c.tag;
    return (t1 < t2 && t2 < t3) || (t2 < t3 && t3 < t1) || (t3 < t1 && t1 < t2);
  }
  if (ab) return a.tag < b.tag;
  if (bc) return b.tag < c.tag;
  return c.tag < a.tag;
}

}  // namespace

bool c_between(const CompletionPoint& x, const CompletionPoint& y,
               const CompletionPoint& z, int precision) {
  const CompletionPoint* pts[3] = {&x, &y, &z};

  // Structural duplicates are non-distinct triples: false, by the order
  // axioms.
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const CompletionPoint& a = *pts[i];
      const CompletionPoint& b = *pts[j];
      if (a.is_rational_family() && b.is_rational_family()) {
        if (a.kind() == b.kind() && a.base() == b.base()) return false;
      } else if (!a.is_rational_family() && !b.is_rational_family()) {
        if (a.irr().same_recipe(b.irr())) return false;
      }
    }

  // Refine the streams until every irrational is separated from the other
  // points of the triple.
  int depth = 0;
  for (int d = 1; d <= precision; ++d) {
    bool resolved = true;
    for (int i = 0; i < 3 && resolved; ++i) {
      if (pts[i]->is_rational_family()) continue;
      const Interval& si = pts[i]->irr().interval(d);
      for (int j = 0; j < 3 && resolved; ++j) {
        if (j == i) continue;
        if (pts[j]->is_rational_family()) {
          const RatPoint& b = pts[j]->base();
          if (b == si.left() || b == si.right() || between(si.left(), b, si.right()))
            resolved = false;
        } else if (j > i) {
          const Interval& sj = pts[j]->irr().interval(d);
          if (!closed_arcs_disjoint(si.left(), si.right(), sj.left(), sj.right()))
            resolved = false;
        }
      }
    }
    if (resolved) {
      depth = d;
      break;
    }
  }
  if (depth == 0) throw undecided_error("undecided at precision");

  Surrogate s[3];
  for (int i = 0; i < 3; ++i) {
    if (pts[i]->is_rational_family()) {
      s[i] = Surrogate{pts[i]->base(), satellite_tag(pts[i]->kind())};
    } else {
      const Interval& si = pts[i]->irr().interval(depth);
      s[i] = Surrogate{ccw_midpoint(si.left(), si.right()), 0};
    }
  }
  return tagged_between(s[0], s[1], s[2]);
}

CompletionPoint act(const PLAut& g, const CompletionPoint& x) {
  switch (x.kind()) {
    case CompletionPoint::Kind::rational: return CompletionPoint::rational(g(x.base()));
    case CompletionPoint::Kind::minus: return CompletionPoint::minus(g(x.base()));
    case CompletionPoint::Kind::plus: return CompletionPoint::plus(g(x.base()));
    case CompletionPoint::Kind::irrational:
      return CompletionPoint::irrational(x.irr().mapped_by(g));
  }
  throw std::logic_error("bad kind");
}

struct LazyAut::State {
  std::vector<std::pair<IrrPoint, IrrPoint>> given;
  std::optional<IrrPoint> fix;
  std::vector<std::pair<IrrPoint, IrrPoint>> moving;
  std::vector<IrrPoint> anchored;
  int offset = 0;
  mutable std::vector<PLAut> stages;
};

LazyAut LazyAut::make(std::vector<std::pair<IrrPoint, IrrPoint>> pairs,
                      std::optional<IrrPoint> fix, int refinement_cap) {
  if (pairs.empty()) throw std::invalid_argument("transport needs at least one pair");
  auto st = std::make_shared<State>();
  st->given = pairs;
  st->fix = fix;
  for (auto& pr : pairs) {
    if (pr.first.same_recipe(pr.second))
      st->anchored.push_back(pr.first);
    else
      st->moving.push_back(pr);
  }
  if (fix) st->anchored.push_back(*fix);

  // Distinct streams must have pairwise disjoint first closed intervals;
  // refine all of them in lockstep until they do.
  std::vector<const IrrPoint*> streams;
  const auto add_stream = [&](const IrrPoint& s) {
    for (const auto* t : streams)
      if (t->same_recipe(s)) return;
    streams.push_back(&s);
  };
  for (const auto& pr : st->moving) {
    add_stream(pr.first);
    add_stream(pr.second);
  }
  for (const auto& s : st->anchored) add_stream(s);

  if (streams.size() >= 2) {
    int found = 0;
    for (int d = 1; d <= refinement_cap && !found; ++d) {
      bool ok = true;
      for (std::size_t i = 0; i < streams.size() && ok; ++i)
        for (std::size_t j = i + 1; j < streams.size() && ok; ++j) {
          const Interval& a = streams[i]->interval(d);
          const Interval& b = streams[j]->interval(d);
          if (!closed_arcs_disjoint(a.left(), a.right(), b.left(), b.right()))
            ok = false;
        }
      if (ok) found = d;
    }
    if (!found) throw undecided_error("points not separated");
    st->offset = found - 1;
  }
  return LazyAut(std::move(st));
}

LazyAut LazyAut::transport(const IrrPoint& u, const IrrPoint& v, int refinement_cap) {
  return make({{u, v}}, std::nullopt, refinement_cap);
}

LazyAut LazyAut::transport_fixing(const IrrPoint& u, const IrrPoint& v,
                                  const IrrPoint& z, int refinement_cap) {
  return make({{u, v}}, z, refinement_cap);
}

LazyAut LazyAut::transport_finite(std::vector<std::pair<IrrPoint, IrrPoint>> pairs,
                                  int refinement_cap) {
  return make(std::move(pairs), std::nullopt, refinement_cap);
}

PLAut LazyAut::stage(int n) const {
  if (n < 1) throw std::invalid_argument("stage index starts at 1");
  auto& stages = st_->stages;
  while (stages.size() < static_cast<std::size_t>(n)) {
    const int k = static_cast<int>(stages.size()) + 1;
    std::vector<PLAut::Pair> pairs;
    for (const auto& [u, v] : st_->moving) {
      for (int j = 1; j <= k; ++j) {
        const Interval& du = u.interval(st_->offset + j);
        const Interval& dv = v.interval(st_->offset + j);
        pairs.emplace_back(du.left(), dv.left());
        pairs.emplace_back(du.right(), dv.right());
      }
    }
    for (const auto& s : st_->anchored) {
      for (int j = 1; j <= k; ++j) {
        const Interval& ds = s.interval(st_->offset + j);
        pairs.emplace_back(ds.left(), ds.left());
        pairs.emplace_back(ds.right(), ds.right());
      }
    }
    if (pairs.empty())
      stages.push_back(PLAut::identity());
    else
      stages.push_back(extend(std::move(pairs)));
  }
  return stages[static_cast<std::size_t>(n - 1)];
}

std::vector<Interval> LazyAut::forward_intervals(int n) const {
  std::vector<Interval> out;
  for (const auto& [u, v] : st_->moving) out.push_back(u.interval(st_->offset + n));
  return out;
}

std::vector<Interval> LazyAut::inverse_intervals(int n) const {
  std::vector<Interval> out;
  for (const auto& [u, v] : st_->moving) out.push_back(v.interval(st_->offset + n));
  return out;
}

std::size_t LazyAut::moving_pair_count() const { return st_->moving.size(); }

const std::vector<std::pair<IrrPoint, IrrPoint>>& LazyAut::pairs() const {
  return st_->given;
}

const std::optional<IrrPoint>& LazyAut::fixing() const { return st_->fix; }

int LazyAut::depth_offset() const { return st_->offset; }

int LazyAut::first_exclusion_index(const RatPoint& x, int cap) const {
  if (st_->moving.empty()) return 1;
  for (int n = 1; n <= cap; ++n) {
    bool outside = true;
    for (const auto& [u, v] : st_->moving) {
      const Interval& du = u.interval(st_->offset + n);
      if (du.contains(x)) {
        outside = false;
        break;
      }
    }
    if (outside) return n;
  }
  throw stream_error("stream does not shrink");
}

RatPoint LazyAut::eval(const RatPoint& x, int cap) const {
  return stage(first_exclusion_index(x, cap))(x);
}

CompletionPoint act_lazy(const LazyAut& g, const CompletionPoint& x, int cap) {
  switch (x.kind()) {
    case CompletionPoint::Kind::rational:
      return CompletionPoint::rational(g.eval(x.base(), cap));
    case CompletionPoint::Kind::minus:
      return CompletionPoint::minus(g.eval(x.base(), cap));
    case CompletionPoint::Kind::plus:
      return CompletionPoint::plus(g.eval(x.base(), cap));
    case CompletionPoint::Kind::irrational:
      break;
    default:
      throw std::logic_error("bad kind");
  }

  const IrrPoint& p = x.irr();
  // Structural shortcuts: transported streams map to their targets, anchored
  // streams are fixed.
  for (const auto& [u, v] : g.pairs()) {
    if (p.same_recipe(u))
      return CompletionPoint::irrational(u.same_recipe(v) ? p : v);
  }
  if (g.fixing() && p.same_recipe(*g.fixing()))
    return CompletionPoint::irrational(p);

  // Otherwise find a depth at which the point is separated from every
  // controlling interval; the stage there is final on its stream.
  if (g.moving_pair_count() == 0)
    return CompletionPoint::irrational(p);
  for (int d = 1; d <= cap; ++d) {
    const Interval& ix = p.interval(d);
    bool separated = true;
    for (const Interval& du : g.forward_intervals(d)) {
      if (!closed_arcs_disjoint(ix.left(), ix.right(), du.left(), du.right())) {
        separated = false;
        break;
      }
    }
    if (separated)
      return CompletionPoint::irrational(p.mapped_by(g.stage(d)));
  }
  throw undecided_error("points not separated");
}

}  // namespace qcircle
