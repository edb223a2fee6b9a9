#include "isotone/json_io.hpp"

#include <cmath>

#include "isotone/errors.hpp"

namespace isotone::io {

namespace {

double finite_number(const json& j, const char* what) {
  require(j.is_number(), Errc::parse, std::string(what) + " must be a number");
  double v = j.get<double>();
  require(std::isfinite(v), Errc::parse, std::string(what) + " must be finite");
  return v;
}

std::vector<double> number_array(const json& j, const char* what) {
  require(j.is_array() && !j.empty(), Errc::parse,
          std::string(what) + " must be a nonempty array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(finite_number(e, what));
  return out;
}

json nan_safe(double v) {
  if (std::isnan(v)) return nullptr;
  return v;
}

}  // namespace

json norm_to_json(const Norm& kind) {
  if (kind.is_sup()) return "sup";
  return json{{"p", kind.exponent()}};
}

Norm norm_from_json(const json& j) {
  if (j.is_string()) {
    require(j.get<std::string>() == "sup", Errc::parse, R"(norm must be "sup" or {"p": value})");
    return Norm::sup();
  }
  require(j.is_object() && j.contains("p"), Errc::parse, R"(norm must be "sup" or {"p": value})");
  return Norm::lp(finite_number(j.at("p"), "norm exponent"));
}

json vector_to_json(const RealVector& x) {
  return json{{"entries", x.entries()}, {"norm", norm_to_json(x.norm_kind())}};
}

RealVector vector_from_json(const json& j) {
  require(j.is_object() && j.contains("entries"), Errc::parse,
          R"(vector must be {"entries": [...], "norm": ...})");
  Norm kind = j.contains("norm") ? norm_from_json(j.at("norm")) : Norm::lp(2.0);
  return RealVector(number_array(j.at("entries"), "vector entry"), kind);
}

json cone_to_json(const ConeDescriptor& cone) {
  if (cone.is_circular()) {
    const auto& c = cone.circular_cone();
    return json{{"type", "circular"}, {"axis", c.axis}, {"half_angle", c.half_angle}};
  }
  const auto& c = cone.orthant_cone();
  return json{{"type", "orthant"}, {"dim", c.dim}, {"norm", norm_to_json(c.norm_kind)}};
}

ConeDescriptor cone_from_json(const json& j) {
  require(j.is_object() && j.contains("type"), Errc::parse, "cone must carry a \"type\"");
  std::string type = j.at("type").get<std::string>();
  if (type == "circular") {
    require(j.contains("axis"), Errc::parse, "circular cone needs an \"axis\"");
    double half_angle = j.contains("half_angle")
                            ? finite_number(j.at("half_angle"), "half_angle")
                            : 0.7853981633974483;
    return ConeDescriptor::circular(number_array(j.at("axis"), "axis entry"), half_angle);
  }
  if (type == "orthant") {
    require(j.contains("dim"), Errc::parse, "orthant cone needs a \"dim\"");
    std::size_t dim = j.at("dim").get<std::size_t>();
    Norm kind = j.contains("norm") ? norm_from_json(j.at("norm")) : Norm::lp(2.0);
    return ConeDescriptor(OrthantCone{dim, kind});
  }
  fail(Errc::parse, "unknown cone type: " + type);
}

json profile_to_json(const sup::ProjectionProfile& p) {
  return json{{"nonpositive", p.nonpositive},
              {"max_violation", p.max_violation},
              {"binding", p.binding}};
}

json counterexample_to_json(const circular::CounterexampleReport& r) {
  return json{{"lower", vector_to_json(r.lower)},
              {"upper", vector_to_json(r.upper)},
              {"proj_lower", vector_to_json(r.proj_lower)},
              {"proj_upper", vector_to_json(r.proj_upper)},
              {"difference", vector_to_json(r.difference)},
              {"ratio", r.ratio},
              {"threshold", r.threshold},
              {"order_holds_on_inputs", r.order_holds_on_inputs},
              {"order_holds_on_outputs", r.order_holds_on_outputs},
              {"reproduced", r.reproduced()}};
}

json isotone_report_to_json(const check::Report& r) {
  json violations = json::array();
  for (const auto& v : r.violations)
    violations.push_back(json{{"x", vector_to_json(v.x)},
                              {"y", vector_to_json(v.y)},
                              {"member", vector_to_json(v.member)},
                              {"explanation", v.explanation}});
  return json{{"cone", cone_to_json(r.cone)},
              {"direction", r.direction == check::Direction::Down ? "down" : "up"},
              {"pairs_tested", r.pairs_tested},
              {"seed", r.seed},
              {"violations", violations},
              {"verdict", r.holds_on_samples() ? "holds_on_samples" : "violated"}};
}

order::FinitePoset poset_from_json(const json& j) {
  require(j.is_object() && j.contains("elements") && j.contains("leq"), Errc::parse,
          R"(poset must be {"elements": [...], "leq": [[...], ...]})");
  std::vector<std::string> labels;
  for (const auto& e : j.at("elements")) labels.push_back(e.get<std::string>());
  std::vector<std::vector<bool>> leq;
  for (const auto& row : j.at("leq")) {
    std::vector<bool> r;
    for (const auto& e : row) r.push_back(e.get<bool>());
    leq.push_back(std::move(r));
  }
  return order::FinitePoset(std::move(labels), std::move(leq));
}

order::SetValuedMap setmap_from_json(const json& j, const order::FinitePoset& poset) {
  require(j.is_object() && j.contains("images"), Errc::parse,
          R"(map must be {"images": {"label": ["label", ...]}})");
  std::vector<std::vector<std::size_t>> images(poset.size());
  for (const auto& [label, targets] : j.at("images").items()) {
    std::size_t x = poset.index_of(label);
    for (const auto& t : targets) images[x].push_back(poset.index_of(t.get<std::string>()));
  }
  return order::SetValuedMap(std::move(images), poset.size());
}

namespace {

json label_list(const std::vector<std::size_t>& indices, const order::FinitePoset& poset) {
  json out = json::array();
  for (std::size_t i : indices) out.push_back(poset.label(i));
  return out;
}

}  // namespace

json fixpoint_scan_to_json(const order::FixpointScan& scan, const order::FinitePoset& poset) {
  return json{{"fixed_points", label_list(scan.fixed_points, poset)},
              {"minimal_fixed_points", label_list(scan.minimal_fixed_points, poset)},
              {"deflation_set", label_list(scan.deflation_set, poset)},
              {"deflation_minimals", label_list(scan.deflation_minimals, poset)},
              {"deflation_minimals_are_fixed", scan.deflation_minimals_are_fixed}};
}

json theorem_check_to_json(const order::TheoremCheck& check, const order::FinitePoset& poset) {
  return json{{"hypotheses_ok", check.hypotheses_ok},
              {"hypothesis_failure", check.hypothesis_failure},
              {"fixed_points_nonempty", check.fixed_points_nonempty},
              {"fixed_point_below_start", check.fixed_point_below_start},
              {"minimal_fixed_point_below_start", check.minimal_fixed_point_below_start},
              {"chains_bounded_inside", check.chains_bounded_inside},
              {"conclusions_ok", check.conclusions_ok()},
              {"scan", fixpoint_scan_to_json(check.scan, poset)}};
}

approx::MonotoneMap monotone_map_from_json(const json& j) {
  require(j.is_object(), Errc::parse, "monotone map must be an object");
  if (j.contains("affine")) {
    const json& a = j.at("affine");
    require(a.contains("A") && a.contains("b"), Errc::parse,
            R"(affine map must be {"affine": {"A": [[...]], "b": [...]}})");
    std::vector<std::vector<double>> matrix;
    for (const auto& row : a.at("A")) matrix.push_back(number_array(row, "matrix entry"));
    return approx::MonotoneMap::affine(std::move(matrix), number_array(a.at("b"), "offset"));
  }
  if (j.contains("componentwise")) {
    const json& c = j.at("componentwise");
    require(c.contains("tables"), Errc::parse,
            R"(componentwise map must be {"componentwise": {"tables": [...]}})");
    std::vector<approx::PiecewiseTable> tables;
    for (const auto& t : c.at("tables")) {
      std::vector<std::pair<double, double>> pts;
      for (const auto& p : t) {
        require(p.is_array() && p.size() == 2, Errc::parse, "table point must be [x, y]");
        pts.emplace_back(finite_number(p[0], "table x"), finite_number(p[1], "table y"));
      }
      tables.emplace_back(std::move(pts));
    }
    return approx::MonotoneMap::componentwise(std::move(tables));
  }
  fail(Errc::parse, R"(monotone map must carry "affine" or "componentwise")");
}

json monotone_map_to_json(const approx::MonotoneMap& map) {
  if (map.is_affine())
    return json{{"affine", json{{"A", map.matrix()}, {"b", map.offset()}}}};
  json tables = json::array();
  for (const auto& t : map.tables()) {
    json pts = json::array();
    for (const auto& [x, y] : t.points()) pts.push_back(json::array({x, y}));
    tables.push_back(pts);
  }
  return json{{"componentwise", json{{"tables", tables}}}};
}

json trace_to_json(const order::IterationTrace& trace, std::size_t max_iterates) {
  json out{{"iterations", trace.residuals.size()},
           {"converged", trace.converged},
           {"order_violations", trace.order_violations},
           {"final_residual", trace.residuals.empty() ? 0.0 : trace.residuals.back()}};
  if (trace.iterates.size() <= max_iterates) {
    json iterates = json::array();
    for (const auto& x : trace.iterates) iterates.push_back(x.entries());
    out["iterates"] = iterates;
  } else {
    out["first_iterate"] = trace.iterates.front().entries();
    out["last_iterate"] = trace.iterates.back().entries();
  }
  return out;
}

json best_approx_to_json(const approx::BestApproxResult& r) {
  return json{{"x_star", vector_to_json(r.x_star)},
              {"f_at_x_star", vector_to_json(r.f_at_x_star)},
              {"achieved_distance", r.achieved_distance},
              {"cone_distance", r.cone_distance},
              {"certificate_gap", r.certificate_gap()},
              {"fixed_point_residual", r.fixed_point_residual},
              {"vi_min_inner", nan_safe(r.vi_min_inner)},
              {"complementarity_residual", nan_safe(r.complementarity_residual)},
              {"converged", r.converged},
              {"stalled", r.stalled},
              {"certified", r.certified},
              {"trace", trace_to_json(r.trace)}};
}

json parse_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  require(!j.is_discarded(), Errc::parse, "malformed JSON input");
  return j;
}

}  // namespace isotone::io
