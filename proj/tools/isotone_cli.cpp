// Command-line front end for the isotone shared library. All numerics go
// through the C API; this translation unit only parses arguments, reads the
// JSON input files, and assembles run reports.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "isotone.h"

using nlohmann::json;

namespace {

class CliError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[noreturn]] void fail(const std::string& message) { throw CliError(message); }

void check(iso_status status, const std::string& context) {
  if (status != ISO_OK)
    fail(context + ": " + iso_status_name(status) + " (" + iso_last_error() + ")");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json(const std::string& text, const std::string& context) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail("malformed JSON in " + context);
  return j;
}

struct VectorFile {
  std::vector<double> entries;
  json norm;  // "sup" | {"p": value}
};

VectorFile load_vector(const std::string& path) {
  json j = parse_json(read_file(path), path);
  if (j.is_array()) return {j.get<std::vector<double>>(), json{{"p", 2.0}}};
  if (!j.is_object() || !j.contains("entries"))
    fail(path + R"(: vector must be {"entries": [...], "norm": ...} or a bare array)");
  VectorFile v;
  v.entries = j.at("entries").get<std::vector<double>>();
  v.norm = j.contains("norm") ? j.at("norm") : json{{"p", 2.0}};
  return v;
}

using ConeHandle = std::unique_ptr<iso_cone, decltype(&iso_cone_free)>;
using ResultHandle = std::unique_ptr<iso_result, decltype(&iso_result_free)>;

ConeHandle own(iso_cone* c) { return ConeHandle(c, &iso_cone_free); }
ResultHandle own(iso_result* r) { return ResultHandle(r, &iso_result_free); }

// --cone accepts a JSON file path, or the keywords orthant-sup / orthant-lp
// (dimension taken from the point, exponent from --p).
ConeHandle make_cone(const std::string& spec, double p, std::size_t dim, json* echo) {
  iso_cone* cone = nullptr;
  if (spec == "orthant-sup") {
    check(iso_cone_new_orthant_sup(dim, &cone), "cone");
    *echo = json{{"type", "orthant"}, {"dim", dim}, {"norm", "sup"}};
  } else if (spec == "orthant-lp") {
    check(iso_cone_new_orthant_lp(dim, p, &cone), "cone");
    *echo = json{{"type", "orthant"}, {"dim", dim}, {"norm", {{"p", p}}}};
  } else {
    std::string text = read_file(spec);
    check(iso_cone_parse_json(text.c_str(), &cone), spec);
    *echo = parse_json(text, spec);
  }
  return own(cone);
}

struct Outcome {
  std::string command;
  json config;
  std::uint64_t seed = 0;
  json results;
  bool ok = true;
  std::string summary;
};

json result_payload(const ResultHandle& r) { return json::parse(iso_result_json(r.get())); }

int emit(const Outcome& outcome, const std::string& out_path, bool as_json, long long ms) {
  json report{{"command", outcome.command}, {"config_echo", outcome.config},
              {"seed", outcome.seed},       {"results", outcome.results},
              {"wall_time_ms", ms},         {"version", iso_version()}};
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) fail("cannot write " + out_path);
    out << report.dump(2) << "\n";
  }
  if (as_json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << outcome.summary << "\n";
  return outcome.ok ? 0 : 1;
}

std::string verdict_word(bool ok) { return ok ? "ok" : "FAILED"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"isotone: projections onto convex cones, order monotonicity checks, "
               "monotone fixed points and best approximations"};
  app.require_subcommand(1);

  std::string out_path;
  bool as_json = false;
  app.add_option("--out", out_path, "write the full run report JSON to this file");
  app.add_flag("--json", as_json, "print the full run report JSON to stdout");

  // project
  auto* project = app.add_subcommand("project", "project a point onto a cone");
  std::string project_cone, project_point, representative = "plus";
  double project_p = 2.0;
  int project_samples = 10000;
  std::uint64_t project_seed = 0;
  project->add_option("--cone", project_cone, "cone JSON file, orthant-sup, or orthant-lp")
      ->required();
  project->add_option("--point", project_point, "point JSON file")->required();
  project->add_option("--representative", representative, "plus|smallest|largest");
  project->add_option("--p", project_p, "orthant-lp exponent");
  project->add_option("--samples", project_samples, "VI self-check samples (circular)");
  project->add_option("--seed", project_seed, "VI sampling seed");

  // membership
  auto* membership = app.add_subcommand(
      "membership", "is a candidate among the nearest cone points of a point?");
  std::string membership_point, membership_candidate, membership_cone;
  membership->add_option("--point", membership_point, "point JSON file")->required();
  membership->add_option("--candidate", membership_candidate, "candidate JSON file")->required();
  membership->add_option("--cone", membership_cone,
                         "cone JSON file or keyword; defaults to the orthant of the point's norm");

  // counterexample
  auto* counterexample =
      app.add_subcommand("counterexample", "reproduce the fixed non-monotonicity witness");
  bool ratio_only = false;
  counterexample->add_flag("--ratio-only", ratio_only, "print only the axis ratio");

  // isotone-check
  auto* isotone_check = app.add_subcommand("isotone-check", "sample order monotonicity");
  std::string check_cone, check_direction = "down";
  int check_pairs = 1000;
  std::uint64_t check_seed = 42;
  isotone_check->add_option("--cone", check_cone, "cone JSON file")->required();
  isotone_check->add_option("--direction", check_direction, "down|up");
  isotone_check->add_option("--pairs", check_pairs, "ordered pairs to sample");
  isotone_check->add_option("--seed", check_seed, "sampling seed");

  // fixpoint
  auto* fixpoint = app.add_subcommand("fixpoint", "finite poset fixed-point scan / verification");
  std::string fp_poset, fp_map, fp_ystar, fp_vstar;
  fixpoint->add_option("--poset", fp_poset, "poset JSON file")->required();
  fixpoint->add_option("--map", fp_map, "set-valued map JSON file")->required();
  fixpoint->add_option("--ystar", fp_ystar, "start element label");
  fixpoint->add_option("--vstar", fp_vstar, "image element label below the start");

  // fixpoint-corpus
  auto* corpus = app.add_subcommand("fixpoint-corpus", "randomized finite-poset corpus");
  int corpus_instances = 10000;
  std::uint64_t corpus_seed = 1;
  corpus->add_option("--instances", corpus_instances, "number of generated instances");
  corpus->add_option("--seed", corpus_seed, "corpus seed");

  // bestapprox
  auto* bestapprox = app.add_subcommand("bestapprox", "monotone best-approximation solve");
  std::string ba_space = "lp", ba_map, ba_ystar = "auto", ba_direction = "down",
              ba_selection = "smallest";
  double ba_p = 2.0, ba_tol = 1e-10;
  int ba_dim = 0, ba_max_iter = 100000, ba_samples = 2000;
  std::uint64_t ba_seed = 0;
  bestapprox->add_option("--space", ba_space, "lp|sup");
  bestapprox->add_option("--p", ba_p, "lp exponent");
  bestapprox->add_option("--dim", ba_dim, "dimension")->required();
  bestapprox->add_option("--map", ba_map, "monotone map JSON file")->required();
  bestapprox->add_option("--ystar", ba_ystar, "\"auto\" or a vector JSON file");
  bestapprox->add_option("--direction", ba_direction, "down|up");
  bestapprox->add_option("--selection", ba_selection, "smallest|plus");
  bestapprox->add_option("--tol", ba_tol, "iteration tolerance");
  bestapprox->add_option("--max-iter", ba_max_iter, "iteration cap");
  bestapprox->add_option("--samples", ba_samples, "VI samples");
  bestapprox->add_option("--seed", ba_seed, "VI sampling seed");

  // vi-check
  auto* vi_check = app.add_subcommand("vi-check", "variational-inequality certificate");
  std::string vi_cone, vi_xstar, vi_fvalue;
  int vi_samples = 10000;
  std::uint64_t vi_seed = 3;
  vi_check->add_option("--cone", vi_cone, "cone JSON file")->required();
  vi_check->add_option("--xstar", vi_xstar, "candidate solution JSON file")->required();
  vi_check->add_option("--fvalue", vi_fvalue, "map value at the candidate, JSON file")
      ->required();
  vi_check->add_option("--samples", vi_samples, "cone samples");
  vi_check->add_option("--seed", vi_seed, "sampling seed");

  // verify-lemma71
  auto* lemma = app.add_subcommand(
      "verify-lemma71", "positive-part optimality via the duality pairing (lp orthant)");
  std::string lemma_point;
  double lemma_p = 2.0;
  int lemma_samples = 10000;
  std::uint64_t lemma_seed = 7;
  lemma->add_option("--p", lemma_p, "lp exponent, 1 < p < infinity")->required();
  lemma->add_option("--point", lemma_point, "point JSON file")->required();
  lemma->add_option("--samples", lemma_samples, "cone samples");
  lemma->add_option("--seed", lemma_seed, "sampling seed");

  for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  auto started = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    if (project->parsed()) {
      VectorFile point = load_vector(project_point);
      json cone_echo;
      if (project_cone == "orthant-sup" && point.norm.is_string()) {
        // keyword + sup-tagged point agree; nothing to reconcile
      }
      ConeHandle cone = make_cone(project_cone, project_p, point.entries.size(), &cone_echo);
      iso_result* raw = nullptr;
      check(iso_project_report(cone.get(), point.entries.data(), point.entries.size(),
                               project_samples, project_seed, &raw),
            "project");
      ResultHandle result = own(raw);
      json payload = result_payload(result);
      outcome = Outcome{"project",
                        json{{"cone", cone_echo},
                             {"point", point.entries},
                             {"representative", representative},
                             {"samples", project_samples}},
                        project_seed,
                        payload,
                        iso_result_ok(result.get()) != 0,
                        ""};
      json shown = payload.contains("representatives") &&
                           payload["representatives"].contains(representative)
                       ? payload["representatives"][representative]
                       : payload["projection"];
      outcome.summary = "projection (" + representative + "): " + shown.dump() +
                        "  distance: " + payload["distance"].dump();
    } else if (membership->parsed()) {
      VectorFile point = load_vector(membership_point);
      VectorFile candidate = load_vector(membership_candidate);
      std::string cone_spec = membership_cone;
      if (cone_spec.empty())
        cone_spec = point.norm.is_string() ? "orthant-sup" : "orthant-lp";
      double p = point.norm.is_object() ? point.norm.value("p", 2.0) : 2.0;
      json cone_echo;
      ConeHandle cone = make_cone(cone_spec, p, point.entries.size(), &cone_echo);
      int member = 0;
      check(iso_in_projection_set(cone.get(), point.entries.data(), candidate.entries.data(),
                                  point.entries.size(), &member),
            "membership");
      json results{{"member", member != 0}};
      iso_result* raw = nullptr;
      check(iso_project_report(cone.get(), point.entries.data(), point.entries.size(), 0, 0,
                               &raw),
            "membership");
      ResultHandle detail = own(raw);
      json payload = result_payload(detail);
      if (payload.contains("profile")) results["profile"] = payload["profile"];
      results["distance"] = payload["distance"];
      outcome = Outcome{"membership",
                        json{{"cone", cone_echo},
                             {"point", point.entries},
                             {"candidate", candidate.entries}},
                        0,
                        results,
                        true,
                        std::string("member: ") + (member ? "true" : "false")};
    } else if (counterexample->parsed()) {
      iso_result* raw = nullptr;
      check(iso_counterexample(&raw), "counterexample");
      ResultHandle result = own(raw);
      json payload = result_payload(result);
      bool ok = iso_result_ok(result.get()) != 0;
      outcome = Outcome{"counterexample", json::object(), 0, payload, ok, ""};
      if (ratio_only) {
        outcome.summary = payload["ratio"].dump();
      } else {
        outcome.summary =
            "inputs ordered: " + payload["order_holds_on_inputs"].dump() +
            ", projections ordered: " + payload["order_holds_on_outputs"].dump() +
            ", ratio " + payload["ratio"].dump() + " < threshold " +
            payload["threshold"].dump() + " -> " + (ok ? "reproduced" : "NOT reproduced");
      }
    } else if (isotone_check->parsed()) {
      std::string text = read_file(check_cone);
      iso_cone* raw_cone = nullptr;
      check(iso_cone_parse_json(text.c_str(), &raw_cone), check_cone);
      ConeHandle cone = own(raw_cone);
      iso_result* raw = nullptr;
      check(iso_isotone_check(cone.get(),
                              check_direction == "up" ? ISO_DIRECTION_UP : ISO_DIRECTION_DOWN,
                              check_pairs, check_seed, &raw),
            "isotone-check");
      ResultHandle result = own(raw);
      json payload = result_payload(result);
      outcome = Outcome{"isotone-check",
                        json{{"cone", parse_json(text, check_cone)},
                             {"direction", check_direction},
                             {"pairs", check_pairs}},
                        check_seed,
                        payload,
                        true,
                        "verdict: " + payload["verdict"].get<std::string>() + " (" +
                            std::to_string(payload["violations"].size()) + " violations over " +
                            payload["pairs_tested"].dump() + " pairs)"};
    } else if (fixpoint->parsed()) {
      std::string poset_text = read_file(fp_poset);
      std::string map_text = read_file(fp_map);
      if (fp_ystar.empty() != fp_vstar.empty())
        fail("--ystar and --vstar must be given together");
      iso_result* raw = nullptr;
      check(iso_fixpoint(poset_text.c_str(), map_text.c_str(),
                         fp_ystar.empty() ? nullptr : fp_ystar.c_str(),
                         fp_vstar.empty() ? nullptr : fp_vstar.c_str(), &raw),
            "fixpoint");
      ResultHandle result = own(raw);
      json payload = result_payload(result);
      bool ok = iso_result_ok(result.get()) != 0;
      std::string summary;
      if (payload.contains("theorem"))
        summary = "hypotheses " +
                  verdict_word(payload["theorem"]["hypotheses_ok"].get<bool>()) +
                  ", conclusions " +
                  verdict_word(payload["theorem"]["conclusions_ok"].get<bool>());
      else
        summary = "fixed points: " + payload["scan"]["fixed_points"].dump();
      outcome = Outcome{"fixpoint",
                        json{{"poset", parse_json(poset_text, fp_poset)},
                             {"map", parse_json(map_text, fp_map)},
                             {"ystar", fp_ystar},
                             {"vstar", fp_vstar}},
                        0,
                        payload,
                        ok,
                        summary};
    } else if (corpus->parsed()) {
      iso_result* raw = nullptr;
      check(iso_fixpoint_corpus(corpus_instances, corpus_seed, &raw), "fixpoint-corpus");
      ResultHandle result = own(raw);
      json payload = result_payload(result);
      bool ok = iso_result_ok(result.get()) != 0;
      outcome = Outcome{"fixpoint-corpus",
                        json{{"instances", corpus_instances}},
                        corpus_seed,
                        payload,
                        ok,
                        payload["conforming"].dump() + "/" + payload["instances"].dump() +
                            " instances conform"};
    } else if (bestapprox->parsed()) {
      json map = parse_json(read_file(ba_map), ba_map);
      json config{{"space", ba_space},     {"p", ba_p},
                  {"dim", ba_dim},         {"map", map},
                  {"direction", ba_direction}, {"selection", ba_selection},
                  {"tol", ba_tol},         {"max_iter", ba_max_iter},
                  {"vi_samples", ba_samples}, {"seed", ba_seed}};
      if (ba_ystar == "auto")
        config["y_star"] = "auto";
      else
        config["y_star"] = load_vector(ba_ystar).entries;
      iso_result* raw = nullptr;
      check(iso_best_approx(config.dump().c_str(), &raw), "bestapprox");
      ResultHandle result = own(raw);
      json payload = result_payload(result);
      bool ok = iso_result_ok(result.get()) != 0;
      outcome = Outcome{"bestapprox", config, ba_seed, payload, ok,
                        "x*: " + payload["x_star"]["entries"].dump() +
                            "  |f(x*)-x*|: " + payload["achieved_distance"].dump() +
                            "  dist(f(x*),K): " + payload["cone_distance"].dump() +
                            "  certified: " + payload["certified"].dump()};
    } else if (vi_check->parsed()) {
      std::string text = read_file(vi_cone);
      iso_cone* raw_cone = nullptr;
      check(iso_cone_parse_json(text.c_str(), &raw_cone), vi_cone);
      ConeHandle cone = own(raw_cone);
      VectorFile xstar = load_vector(vi_xstar);
      VectorFile fvalue = load_vector(vi_fvalue);
      iso_result* raw = nullptr;
      check(iso_vi_check(cone.get(), xstar.entries.data(), fvalue.entries.data(),
                         xstar.entries.size(), vi_samples, vi_seed, &raw),
            "vi-check");
      ResultHandle result = own(raw);
      json payload = result_payload(result);
      bool ok = iso_result_ok(result.get()) != 0;
      outcome = Outcome{"vi-check",
                        json{{"cone", parse_json(text, vi_cone)},
                             {"xstar", xstar.entries},
                             {"fvalue", fvalue.entries},
                             {"samples", vi_samples}},
                        vi_seed,
                        payload,
                        ok,
                        "vi_min_inner: " + payload["vi_min_inner"].dump() +
                            "  complementarity: " + payload["complementarity_residual"].dump() +
                            "  " + verdict_word(ok)};
    } else if (lemma->parsed()) {
      VectorFile point = load_vector(lemma_point);
      iso_result* raw = nullptr;
      check(iso_plus_part_optimality(lemma_p, point.entries.data(), point.entries.size(),
                                     lemma_samples, lemma_seed, &raw),
            "verify-lemma71");
      ResultHandle result = own(raw);
      json payload = result_payload(result);
      bool ok = iso_result_ok(result.get()) != 0;
      outcome = Outcome{"verify-lemma71",
                        json{{"p", lemma_p}, {"point", point.entries}, {"samples", lemma_samples}},
                        lemma_seed,
                        payload,
                        ok,
                        "pairing_with_plus: " + payload["pairing_with_plus"].dump() +
                            "  min_pairing_over_cone: " +
                            payload["min_pairing_over_cone"].dump() + "  " + verdict_word(ok)};
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - started)
                .count();
  try {
    return emit(outcome, out_path, as_json, ms);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
