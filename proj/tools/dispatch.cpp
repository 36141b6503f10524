#include "dispatch.hpp"

#include "qcircle/serial.hpp"

#include <functional>
#include <istream>
#include <map>
#include <ostream>

namespace qcircle::cli {

namespace {

using Json = qcircle::Json;

struct RequestContext {
  Json payload;
  std::uint64_t seed;
  int precision;
  int samples;
  int cap;
};

Json handle_axioms(const RequestContext& rc) {
  const int samples = rc.payload.value("samples", rc.samples);
  const Int bound = rc.payload.contains("denominator_bound")
                        ? Int(rc.payload.at("denominator_bound").get<long long>())
                        : Int(10000);
  return to_json(check_order_axioms(samples, bound, rc.seed));
}

Json handle_extend(const RequestContext& rc) {
  std::vector<PLAut::Pair> pairs;
  for (const auto& e : rc.payload.at("pairs")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("pair must be [\"p/q\",\"r/s\"]");
    pairs.emplace_back(ratpoint_from_json(e[0]), ratpoint_from_json(e[1]));
  }
  return to_json(extend(std::move(pairs)));
}

Json handle_apply(const RequestContext& rc) {
  const PLAut g = plaut_from_json(rc.payload.at("g"));
  return to_json(g(ratpoint_from_json(rc.payload.at("x"))));
}

Json handle_compose(const RequestContext& rc) {
  return to_json(compose(plaut_from_json(rc.payload.at("g")),
                         plaut_from_json(rc.payload.at("h"))));
}

Json handle_locate(const RequestContext& rc) {
  const Cycle nu = cycle_from_json(rc.payload.at("cycle"));
  const Covering c(nu, covering_variant_from_json(rc.payload.at("variant")));
  const std::size_t index = c.locate(ratpoint_from_json(rc.payload.at("x")));
  return Json{{"index", index}, {"cell", to_json(c.cells()[index])}};
}

Json handle_cov(const RequestContext& rc) {
  const Cycle nu = cycle_from_json(rc.payload.at("cycle"));
  return to_json(Covering(nu, covering_variant_from_json(rc.payload.at("variant"))));
}

Json handle_distance(const RequestContext& rc) {
  if (rc.payload.contains("a")) {
    const Rat d = circle_distance(ratpoint_from_json(rc.payload.at("a")),
                                  ratpoint_from_json(rc.payload.at("b")));
    return Json(format_rat(d));
  }
  const Rat d = sup_distance(plaut_from_json(rc.payload.at("g")),
                             plaut_from_json(rc.payload.at("h")));
  return Json(format_rat(d));
}

LazyAut lazy_from_payload(const Json& payload, int cap) {
  if (payload.contains("pairs")) return lazy_from_json(payload, cap);
  Json recipe{{"pairs", Json::array({Json::array({payload.at("u"), payload.at("v")})})}};
  if (payload.contains("fixing")) recipe["fixing"] = payload.at("fixing");
  return lazy_from_json(recipe, cap);
}

Json handle_transport(const RequestContext& rc) {
  const LazyAut t = lazy_from_payload(rc.payload, rc.cap);
  return Json{{"transport", to_json(t)}, {"offset", t.depth_offset()}};
}

Json handle_act(const RequestContext& rc) {
  const CompletionPoint x = completion_from_json(rc.payload.at("x"));
  const int prefix = rc.payload.value("prefix", 0);
  if (rc.payload.contains("g")) {
    const PLAut g = plaut_from_json(rc.payload.at("g"));
    return to_json(act(g, x), prefix);
  }
  const LazyAut t = lazy_from_payload(rc.payload.at("transport"), rc.cap);
  return to_json(act_lazy(t, x, rc.cap), prefix);
}

Json handle_orbit(const RequestContext& rc) {
  const CompletionPoint x = completion_from_json(rc.payload.at("x"));
  return Json{{"orbit", orbit_name(orbit_of(x))}};
}

Json handle_factor(const RequestContext& rc) {
  const FactorId id = factor_from_name(rc.payload.at("id").get<std::string>());
  const CompletionPoint x = completion_from_json(rc.payload.at("point"));
  return to_json(factor_apply(id, x));
}

Json handle_equivariance(const RequestContext& rc) {
  const FactorId id = factor_from_name(rc.payload.at("id").get<std::string>());
  const PLAut g = plaut_from_json(rc.payload.at("g"));
  const CompletionPoint x = completion_from_json(rc.payload.at("x"));
  return Json{{"equivariant", check_equivariance(id, g, x, rc.precision)}};
}

Json handle_u1_witness(const RequestContext& rc) {
  const Cycle nu = cycle_from_json(rc.payload.at("cycle"));
  const std::size_t k = rc.payload.at("k").get<std::size_t>();
  const PLAut f = plaut_from_json(rc.payload.at("f"));
  const PLAut g = plaut_from_json(rc.payload.at("g"));
  return to_json(witness_u1(nu, k, f, g));
}

Json handle_max_witness(const RequestContext& rc) {
  const RatPoint a = ratpoint_from_json(rc.payload.at("a"));
  const PLAut f = plaut_from_json(rc.payload.at("f"));
  const PLAut g = plaut_from_json(rc.payload.at("g"));
  return to_json(maximality_witness(a, f, g));
}

Json handle_conj_check(const RequestContext& rc) {
  const PLAut g = plaut_from_json(rc.payload.at("g"));
  const RatPoint a = ratpoint_from_json(rc.payload.at("a"));
  const int samples = rc.payload.value("samples", rc.samples);
  return to_json(conjugation_check(g, a, samples, rc.seed));
}

Json handle_stab_index(const RequestContext& rc) {
  const LazyAut t = lazy_from_payload(rc.payload.at("transport"), rc.cap);
  const RatPoint x = ratpoint_from_json(rc.payload.at("x"));
  return Json{{"index", stabilization_index(t, x, rc.cap)}};
}

using Handler = Json (*)(const RequestContext&);

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"axioms", handle_axioms},         {"extend", handle_extend},
      {"apply", handle_apply},           {"compose", handle_compose},
      {"locate", handle_locate},         {"cov", handle_cov},
      {"distance", handle_distance},     {"transport", handle_transport},
      {"act", handle_act},               {"orbit", handle_orbit},
      {"factor", handle_factor},         {"equivariance", handle_equivariance},
      {"u1-witness", handle_u1_witness}, {"max-witness", handle_max_witness},
      {"conj-check", handle_conj_check}, {"stab-index", handle_stab_index},
  };
  return table;
}

Json error_response(const char* status, const std::string& diagnostic) {
  return Json{{"schema_version", kSchemaVersion},
              {"status", status},
              {"diagnostics", Json::array({diagnostic})}};
}

}  // namespace

std::string dispatch_line(const std::string& request_line, const Options& defaults) {
  Json response;
  try {
    Json req;
    try {
      req = Json::parse(request_line);
    } catch (const Json::parse_error& e) {
      return error_response("error", std::string("malformed request: ") + e.what()).dump();
    }
    if (!req.is_object() || !req.contains("command"))
      return error_response("error", "request must carry a \"command\"").dump();
    const std::string command = req.at("command").get<std::string>();
    const auto it = handlers().find(command);
    if (it == handlers().end())
      return error_response("error", "unknown command: " + command).dump();

    RequestContext rc{req.value("payload", Json::object()),
                      req.value("seed", defaults.seed),
                      req.value("precision", defaults.precision),
                      req.value("samples", defaults.samples),
                      req.value("cap", static_cast<int>(kDefaultRefinementCap))};
    const Json result = it->second(rc);
    response = Json{{"schema_version", kSchemaVersion}, {"status", "ok"}, {"result", result}};
  } catch (const undecided_error& e) {
    response = error_response("undecided", e.what());
  } catch (const std::exception& e) {
    response = error_response("error", e.what());
  }
  return response.dump();
}

int run(std::istream& in, std::ostream& out, const Options& defaults) {
  int rc = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::string response = dispatch_line(line, defaults);
    out << response << "\n";
    const Json parsed = Json::parse(response);
    if (parsed.at("status") != "ok") rc = 1;
  }
  return rc;
}

}  // namespace qcircle::cli
