#include "qcircle/serial.hpp"

namespace qcircle {

namespace {

Json int_to_json(const Int& v) { return Json(v.str()); }

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.empty()) throw std::invalid_argument("empty integer field");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("malformed integer: " + s);
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("malformed integer: " + s);
    return Int(s);
  }
  throw std::invalid_argument("expected an integer");
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw std::invalid_argument(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

const char* kind_name(IntervalKind k) {
  switch (k) {
    case IntervalKind::open: return "open";
    case IntervalKind::closed: return "closed";
    case IntervalKind::left_closed: return "left_closed";
    case IntervalKind::right_closed: return "right_closed";
  }
  return "?";
}

Json circle_pt_to_json(const CirclePt& p) {
  if (p.rat) return Json{{"rat", to_json(*p.rat)}};
  return Json{{"irr", to_json(*p.irr)}};
}

}  // namespace

Json to_json(const RatPoint& p) { return Json(p.str()); }

RatPoint ratpoint_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected a rational string \"p/q\"");
  return RatPoint::parse(j.get<std::string>());
}

Json to_json(const Interval& iv) {
  return Json{{"kind", kind_name(iv.kind())},
              {"left", to_json(iv.left())},
              {"right", to_json(iv.right())}};
}

Json to_json(const PLAut& g) {
  Json out = Json::array();
  for (const auto& [x, y] : g.breakpoints()) out.push_back({to_json(x), to_json(y)});
  return out;
}

PLAut plaut_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("expected a nonempty list of breakpoint pairs");
  std::vector<PLAut::Pair> pairs;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("breakpoint pair must be [\"p/q\",\"r/s\"]");
    pairs.emplace_back(ratpoint_from_json(e[0]), ratpoint_from_json(e[1]));
  }
  return PLAut::from_pairs(std::move(pairs));
}

Json to_json(const Cycle& nu) {
  Json out = Json::array();
  for (const auto& p : nu.points()) out.push_back(to_json(p));
  return out;
}

Cycle cycle_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a list of cycle points");
  std::vector<RatPoint> pts;
  for (const auto& e : j) pts.push_back(ratpoint_from_json(e));
  return Cycle(std::move(pts));
}

Json to_json(const CoveringCell& cell) {
  if (cell.singleton) return Json{{"point", to_json(cell.left)}};
  return Json{{"open", Json::array({to_json(cell.left), to_json(cell.right)})}};
}

Json to_json(const Covering& c) {
  Json cells = Json::array();
  for (const auto& cell : c.cells()) cells.push_back(to_json(cell));
  return Json{{"variant", c.variant() == CoveringVariant::cov ? "cov" : "cov_star"},
              {"cells", cells}};
}

CoveringVariant covering_variant_from_json(const Json& j) {
  const std::string v = j.get<std::string>();
  if (v == "cov") return CoveringVariant::cov;
  if (v == "cov_star") return CoveringVariant::cov_star;
  throw std::invalid_argument("unknown covering variant: " + v);
}

Json to_json(const MoveSet& m) {
  Json arcs = Json::array();
  for (const auto& arc : m.arcs) {
    if (arc.left() == arc.right())
      arcs.push_back(Json{{"point", to_json(arc.left())}});
    else
      arcs.push_back(Json{{"open", Json::array({to_json(arc.left()), to_json(arc.right())})}});
  }
  return Json{{"full_circle", m.full_circle}, {"arcs", arcs}};
}

Json to_json(const IrrPoint& u, int prefix_len) {
  Json quad{{"kind", "quad"},
            {"D", int_to_json(u.base().D)},
            {"p", int_to_json(u.base().p)},
            {"q", int_to_json(u.base().q)}};
  Json out;
  if (u.map())
    out = Json{{"kind", "image"}, {"map", to_json(*u.map())}, {"of", quad}};
  else
    out = quad;
  if (prefix_len > 0) {
    Json prefix = Json::array();
    for (int n = 1; n <= prefix_len; ++n) {
      const Interval iv = u.interval(n);
      prefix.push_back(Json::array({to_json(iv.left()), to_json(iv.right())}));
    }
    out["prefix"] = prefix;
  }
  return out;
}

IrrPoint irr_from_json(const Json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "quad") {
    return IrrPoint::quadratic(int_from_json(field(j, "D")), int_from_json(field(j, "p")),
                               int_from_json(field(j, "q")));
  }
  if (kind == "image") {
    const PLAut g = plaut_from_json(field(j, "map"));
    return irr_from_json(field(j, "of")).mapped_by(g);
  }
  throw std::invalid_argument("unknown irrational kind: " + kind);
}

Json to_json(const CompletionPoint& x, int prefix_len) {
  switch (x.kind()) {
    case CompletionPoint::Kind::rational: return Json{{"rat", to_json(x.base())}};
    case CompletionPoint::Kind::minus: return Json{{"minus", to_json(x.base())}};
    case CompletionPoint::Kind::plus: return Json{{"plus", to_json(x.base())}};
    case CompletionPoint::Kind::irrational:
      return Json{{"irr", to_json(x.irr(), prefix_len)}};
  }
  throw std::logic_error("bad kind");
}

CompletionPoint completion_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("expected a completion point record");
  if (j.contains("rat")) return CompletionPoint::rational(ratpoint_from_json(j.at("rat")));
  if (j.contains("minus")) return CompletionPoint::minus(ratpoint_from_json(j.at("minus")));
  if (j.contains("plus")) return CompletionPoint::plus(ratpoint_from_json(j.at("plus")));
  if (j.contains("irr")) return CompletionPoint::irrational(irr_from_json(j.at("irr")));
  throw std::invalid_argument("unknown completion point variant");
}

Json to_json(const LazyAut& t) {
  Json pairs = Json::array();
  for (const auto& [u, v] : t.pairs())
    pairs.push_back(Json::array({to_json(u), to_json(v)}));
  Json out{{"pairs", pairs}};
  if (t.fixing()) out["fixing"] = to_json(*t.fixing());
  return out;
}

LazyAut lazy_from_json(const Json& j, int refinement_cap) {
  const Json& pj = field(j, "pairs");
  if (!pj.is_array() || pj.empty())
    throw std::invalid_argument("transport needs at least one pair");
  std::vector<std::pair<IrrPoint, IrrPoint>> pairs;
  for (const auto& e : pj) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("transport pair must be [irr, irr]");
    pairs.emplace_back(irr_from_json(e[0]), irr_from_json(e[1]));
  }
  if (j.contains("fixing")) {
    if (pairs.size() != 1)
      throw std::invalid_argument("fixing mode takes exactly one pair");
    return LazyAut::transport_fixing(pairs[0].first, pairs[0].second,
                                     irr_from_json(j.at("fixing")), refinement_cap);
  }
  if (pairs.size() == 1)
    return LazyAut::transport(pairs[0].first, pairs[0].second, refinement_cap);
  return LazyAut::transport_finite(std::move(pairs), refinement_cap);
}

Json to_json(const NbhdDescriptor& d) {
  if (const auto* pw = std::get_if<PointwiseStabilizer>(&d)) {
    Json pts = Json::array();
    for (const auto& p : pw->points) pts.push_back(to_json(p));
    return Json{{"pointwise", pts}};
  }
  return Json{{"cycle", to_json(std::get<CycleNeighborhood>(d).cycle)}};
}

NbhdDescriptor nbhd_from_json(const Json& j) {
  if (j.contains("pointwise")) {
    PointwiseStabilizer pw;
    for (const auto& e : j.at("pointwise")) pw.points.push_back(ratpoint_from_json(e));
    return pw;
  }
  if (j.contains("cycle")) return CycleNeighborhood{cycle_from_json(j.at("cycle"))};
  throw std::invalid_argument("unknown neighborhood descriptor");
}

namespace {

CirclePt circle_pt_from_json(const Json& j) {
  if (j.contains("rat")) return CirclePt::rational(ratpoint_from_json(j.at("rat")));
  if (j.contains("irr")) return CirclePt::irrational(irr_from_json(j.at("irr")));
  throw std::invalid_argument("unknown circle point variant");
}

}  // namespace

FactorTarget factor_target_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("expected a factor target record");
  if (j.contains("circle")) return FactorTarget::circle(circle_pt_from_json(j.at("circle")));
  if (j.contains("star")) return FactorTarget::star();
  if (j.contains("discrete"))
    return FactorTarget::discrete(ratpoint_from_json(j.at("discrete")));
  if (j.contains("double")) {
    const Json& d = j.at("double");
    const std::string layer = field(d, "layer").get<std::string>();
    if (layer != "circle" && layer != "isolated")
      throw std::invalid_argument("unknown double-circle layer: " + layer);
    return FactorTarget::double_circle(circle_pt_from_json(field(d, "point")),
                                       layer == "circle" ? FactorTarget::Layer::circle
                                                         : FactorTarget::Layer::isolated);
  }
  return FactorTarget::completion(completion_from_json(j));
}

WordWitness witness_from_json(const Json& j) {
  WordWitness w;
  for (const auto& fj : field(j, "factors")) {
    WitnessFactor f;
    f.element = plaut_from_json(field(fj, "element"));
    f.label = field(fj, "label").get<std::string>();
    if (!fj.at("tag").is_null()) f.tag = nbhd_from_json(fj.at("tag"));
    w.factors.push_back(std::move(f));
  }
  w.claimed_product = plaut_from_json(field(j, "product"));
  w.verification = field(j, "verification").get<bool>();
  return w;
}

Json to_json(const FactorTarget& t) {
  switch (t.kind()) {
    case FactorTarget::Kind::circle:
      return Json{{"circle", circle_pt_to_json(t.circle_point())}};
    case FactorTarget::Kind::star:
      return Json{{"star", true}};
    case FactorTarget::Kind::discrete:
      return Json{{"discrete", to_json(t.discrete_point())}};
    case FactorTarget::Kind::completion:
      return to_json(t.completion_point());
    case FactorTarget::Kind::double_circle:
      return Json{{"double",
                   Json{{"layer", t.layer() == FactorTarget::Layer::circle ? "circle" : "isolated"},
                        {"point", circle_pt_to_json(t.circle_point())}}}};
  }
  throw std::logic_error("bad target kind");
}

Json to_json(const WordWitness& w) {
  Json factors = Json::array();
  for (const auto& f : w.factors) {
    Json fj{{"element", to_json(f.element)}, {"label", f.label}};
    fj["tag"] = f.tag ? to_json(*f.tag) : Json(nullptr);
    factors.push_back(fj);
  }
  return Json{{"factors", factors},
              {"product", to_json(w.claimed_product)},
              {"verification", w.verification}};
}

Json to_json(const U1Witness& w) {
  Json out{{"phi", to_json(w.phi)},
           {"witness", to_json(w.witness)},
           {"degenerate", w.degenerate},
           {"mirrored", w.mirrored}};
  if (w.support)
    out["support"] = Json::array({to_json(w.support->left()), to_json(w.support->right())});
  return out;
}

Json to_json(const MaximalityWitness& w) {
  return Json{{"phi", to_json(w.phi)},
              {"h", to_json(w.h)},
              {"witness", to_json(w.witness)},
              {"case", std::string(1, w.proof_case)}};
}

Json to_json(const ConjugationReport& r) {
  return Json{{"samples", r.samples},
              {"failures", r.failures},
              {"adversarial_samples", r.adversarial_samples},
              {"adversarial_failures", r.adversarial_failures},
              {"details", r.details},
              {"passed", r.passed()}};
}

Json to_json(const OrderAxiomReport& r) {
  return Json{{"samples", r.samples},
              {"cyclicity_failures", r.cyclicity_failures},
              {"asymmetry_failures", r.asymmetry_failures},
              {"transitivity_failures", r.transitivity_failures},
              {"totality_failures", r.totality_failures},
              {"transitivity_hits", r.transitivity_hits},
              {"passed", r.passed()}};
}

}  // namespace qcircle
