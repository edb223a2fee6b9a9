// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit when any
// criterion fails. Thresholds are fixed here, not configurable.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "isotone/bestapprox.hpp"
#include "isotone/circular.hpp"
#include "isotone/cone.hpp"
#include "isotone/isotone_check.hpp"
#include "isotone/lp.hpp"
#include "isotone/poset.hpp"
#include "isotone/rng.hpp"
#include "isotone/supnorm.hpp"
#include "oracles.hpp"

using namespace isotone;

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;
const double kRt2 = std::sqrt(2.0);

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

RealVector l2(std::vector<double> e) { return RealVector(std::move(e), Norm::lp(2.0)); }

// ---- 1: counterexample reproduction ---------------------------------------

Outcome criterion1() {
  auto start = std::chrono::steady_clock::now();
  CircularCone cone{{1.0, 0.0, 0.0}, kQuarterPi};
  ConeDescriptor k{cone};

  RealVector u = l2({1.0, kRt2, 0.0});
  RealVector v = l2({0.0, 1.0 / kRt2, 1.0 / kRt2});
  bool ordered = leq(k, v, u);

  RealVector pu = circular::project(cone, u);
  RealVector pv = circular::project(cone, v);
  double e = (1.0 + kRt2) / 2.0;
  double proj_err = std::max({std::abs(pu[0] - e), std::abs(pu[1] - e), std::abs(pu[2]),
                              std::abs(pv[0] - 0.5), std::abs(pv[1] - 1.0 / (2.0 * kRt2)),
                              std::abs(pv[2] - 1.0 / (2.0 * kRt2))});

  auto report = circular::monotonicity_witness();
  double margin = kRt2 / 2.0 - report.ratio;
  double elapsed = seconds_since(start);

  bool pass = ordered && proj_err <= 1e-12 && report.reproduced() && margin >= 0.09 &&
              elapsed < 1.0;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "ratio %.6f, margin %.6f, projection error %.2e, %.3f s", report.ratio,
                margin, proj_err, elapsed);
  return {pass, buf};
}

// ---- 2: projection vs ray-grid oracle, plus variational identities --------

Outcome criterion2() {
  auto start = std::chrono::steady_clock::now();
  CircularCone cone{{1.0, 0.0, 0.0}, kQuarterPi};
  double max_dev = 0.0, max_orth = 0.0, min_inner = 0.0;
  for (int i = 0; i < 1000; ++i) {
    Rng rng(20260808, static_cast<std::uint64_t>(i));
    RealVector u(rng.uniform_vector(3, -5.0, 5.0), Norm::lp(2.0));
    RealVector w = circular::project(cone, u);
    RealVector ref = oracles::project_circular(cone, u);
    max_dev = std::max(max_dev, norm_l2(sub(w, ref)));
    auto vi = circular::verify_projection_vi(cone, u, w, 10000, static_cast<std::uint64_t>(i));
    max_orth = std::max(max_orth, vi.orthogonality_residual);
    min_inner = std::min(min_inner, vi.min_inner);
  }
  double elapsed = seconds_since(start);
  bool pass = max_dev <= 1e-4 && max_orth <= 1e-12 && min_inner >= -1e-9 && elapsed <= 30.0;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "max deviation %.2e, orthogonality %.2e, VI min %.2e, %.1f s", max_dev,
                max_orth, min_inner, elapsed);
  return {pass, buf};
}

// ---- 3: sup-norm projection-set exactness ----------------------------------

Outcome criterion3() {
  const std::vector<double> values{-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0};
  long long pairs = 0, mismatches = 0;
  double rep_err = 0.0;

  for (std::size_t dim = 1; dim <= 3; ++dim) {
    std::vector<std::size_t> xi(dim, 0);
    std::vector<double> xe(dim);
    while (true) {
      for (std::size_t i = 0; i < dim; ++i) xe[i] = values[xi[i]];
      RealVector x(xe, Norm::sup());
      double best = oracles::sup_grid_min_distance(xe, 0.25, 4.0);

      std::vector<int> zi(dim, 0);
      std::vector<double> ze(dim);
      while (true) {
        double d = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
          ze[i] = 0.25 * zi[i];
          d = std::max(d, std::abs(ze[i] - xe[i]));
        }
        bool oracle_member = d == best;
        bool lib_member = sup::in_projection_set(x, RealVector(ze, Norm::sup()));
        if (oracle_member != lib_member) ++mismatches;
        ++pairs;
        std::size_t k = 0;
        while (k < dim && ++zi[k] > 16) zi[k++] = 0;
        if (k == dim) break;
      }

      auto set = sup::projection_set(x);
      rep_err = std::max(rep_err, std::abs(norm(sub(set.plus, x)) - set.profile.max_violation));
      rep_err =
          std::max(rep_err, std::abs(norm(sub(set.smallest, x)) - set.profile.max_violation));
      rep_err =
          std::max(rep_err, std::abs(norm(sub(set.largest, x)) - set.profile.max_violation));

      std::size_t k = 0;
      while (k < dim && ++xi[k] == values.size()) xi[k++] = 0;
      if (k == dim) break;
    }
  }
  bool pass = pairs >= 100000 && mismatches == 0 && rep_err == 0.0;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%lld pairs, %lld mismatches, representative error %.1e",
                pairs, mismatches, rep_err);
  return {pass, buf};
}

// ---- 4: isotonicity verdicts ------------------------------------------------

Outcome criterion4() {
  bool pass = true;
  std::string detail;

  ConeDescriptor sup2 = ConeDescriptor::orthant_sup(2);
  auto down = check::check_downward(sup2, 1000, 42);
  pass = pass && down.holds_on_samples();

  auto up = check::check_upward(sup2, 1000, 42);
  bool witness_ok = !up.violations.empty() &&
                    up.violations.front().x.entries() == std::vector<double>{-2.0, 0.0} &&
                    up.violations.front().y.entries() == std::vector<double>{0.0, 0.0};
  pass = pass && !up.holds_on_samples() && witness_ok;
  detail += "sup down holds/" + std::string(witness_ok ? "up witness found" : "UP WITNESS MISSING");

  for (double p : {1.0, 1.5, 2.0, 3.0}) {
    for (int i = 0; i < 1000 && pass; ++i) {
      Rng rng(99, static_cast<std::uint64_t>(i));
      RealVector x(rng.uniform_vector(4, -5.0, 5.0), Norm::lp(p));
      RealVector y = add(x, RealVector(rng.uniform_vector(4, 0.0, 5.0), Norm::lp(p)));
      RealVector px = lp::project(x), py = lp::project(y);
      for (std::size_t c = 0; c < 4; ++c)
        if (!(px[c] <= py[c])) pass = false;
    }
    ConeDescriptor cone = ConeDescriptor::orthant_lp(4, p);
    pass = pass && check::check_downward(cone, 1000, 7).holds_on_samples() &&
           check::check_upward(cone, 1000, 7).holds_on_samples();
  }
  detail += ", lp increasing exact (p in {1, 1.5, 2, 3})";

  ConeDescriptor circ = ConeDescriptor::circular({1.0, 0.0, 0.0}, kQuarterPi);
  auto w = circular::monotonicity_witness();
  for (auto dir : {check::Direction::Down, check::Direction::Up}) {
    auto report = check::check(circ, dir, 1000, 11);
    bool found = false;
    for (const auto& viol : report.violations)
      if (viol.x.entries() == w.lower.entries() && viol.y.entries() == w.upper.entries())
        found = true;
    pass = pass && !report.holds_on_samples() && found;
  }
  detail += ", circular violated with the fixed witness";
  return {pass, detail};
}

// ---- 5: duality pairing checks on the lp orthant ----------------------------

Outcome criterion5() {
  bool pass = true;
  double worst_orth = 0.0, worst_sub = 0.0, worst_pairing = 0.0, worst_opt = 0.0;
  for (double p : {1.5, 2.0, 3.0}) {
    auto orth = lp::check_orthogonal(p, 6, 10000, 13);
    worst_orth = std::max(worst_orth, orth.max_abs_pairing);
    auto sub = lp::check_subdual(p, 6, 10000, 13);
    worst_sub = std::min(worst_sub, sub.min_pairing);

    for (int i = 0; i < 10; ++i) {
      Rng rng(500 + static_cast<int>(p * 10), static_cast<std::uint64_t>(i));
      std::size_t dim = 2 + rng.below(5);  // 2..6
      RealVector x(rng.uniform_vector(dim, -5.0, 5.0), Norm::lp(p));
      auto r = lp::verify_plus_part_optimal(x, 10000, static_cast<std::uint64_t>(i));
      worst_pairing = std::max(worst_pairing, std::abs(r.pairing_with_plus));
      worst_sub = std::min(worst_sub, r.min_pairing_over_cone);
      if (r.max_distance_excess > 1e-9) pass = false;
    }

    for (int i = 0; i < 50; ++i) {
      Rng rng(700 + static_cast<int>(p * 10), static_cast<std::uint64_t>(i));
      std::size_t dim = 2 + rng.below(5);
      std::vector<double> xe = rng.uniform_vector(dim, -5.0, 5.0);
      std::vector<double> ze = oracles::lp_coordinate_descent(xe, p);
      RealVector w = lp::project(RealVector(xe, Norm::lp(p)));
      for (std::size_t c = 0; c < dim; ++c)
        worst_opt = std::max(worst_opt, std::abs(w[c] - ze[c]));
    }
  }
  pass = pass && worst_orth <= 1e-12 && worst_sub >= -1e-12 && worst_pairing <= 1e-10 &&
         worst_opt <= 1e-6;
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "orthogonality %.1e, subdual min %.1e, plus pairing %.1e, minimizer gap %.1e",
                worst_orth, worst_sub, worst_pairing, worst_opt);
  return {pass, buf};
}

// ---- 6: finite fixed-point corpus -------------------------------------------

Outcome criterion6() {
  auto start = std::chrono::steady_clock::now();
  auto result = order::run_corpus(10000, 1);
  double elapsed = seconds_since(start);
  bool pass = result.instances == 10000 && result.all_conform() && elapsed <= 60.0;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%d/%d instances conform, %.1f s", result.conforming,
                result.instances, elapsed);
  return {pass, buf};
}

// ---- 7 and 8: best-approximation solves and certificate equivalence ---------

struct SolveBatch {
  std::vector<approx::AffineInstance> instances;
  std::vector<approx::BestApproxResult> results;
  bool all_converged = true;
};

SolveBatch run_batch() {
  SolveBatch batch;
  for (int i = 0; i < 200; ++i) {
    Rng dims(8191, static_cast<std::uint64_t>(i));
    std::size_t dim = 2 + dims.below(9);  // 2..10
    auto inst = approx::random_affine_instance(dim, 0.4, 0.8, Norm::lp(2.0), 424242,
                                               static_cast<std::uint64_t>(i));
    OrthantCone cone{dim, Norm::lp(2.0)};
    auto r = approx::solve_down(cone, inst.map, inst.y_star, 1e-10, 100000,
                                approx::Selection::SmallestRepresentative, 1e-8, 2000,
                                static_cast<std::uint64_t>(i));
    batch.all_converged = batch.all_converged && r.converged;
    batch.instances.push_back(std::move(inst));
    batch.results.push_back(std::move(r));
  }
  return batch;
}

Outcome criterion7(const SolveBatch& batch) {
  bool pass = batch.all_converged;
  double worst_gap = 0.0, worst_comp = 0.0, worst_path = 0.0;
  for (std::size_t i = 0; i < batch.results.size(); ++i) {
    const auto& inst = batch.instances[i];
    const auto& r = batch.results[i];
    std::size_t dim = inst.y_star.dim();
    worst_gap = std::max(worst_gap, r.certificate_gap());
    worst_comp = std::max(worst_comp, r.complementarity_residual);
    for (std::size_t c = 0; c < dim; ++c)
      if (!(r.x_star[c] <= inst.y_star[c])) pass = false;

    OrthantCone cone{dim, Norm::lp(2.0)};
    auto plus = approx::solve_down(cone, inst.map, inst.y_star, 1e-10, 100000,
                                   approx::Selection::PlusPart, 1e-8, 4, 0);
    if (!plus.converged) pass = false;
    for (std::size_t c = 0; c < dim; ++c)
      worst_path = std::max(worst_path, std::abs(r.x_star[c] - plus.x_star[c]));
  }
  pass = pass && worst_gap <= 1e-8 && worst_comp <= 1e-8 && worst_path <= 1e-9;
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "200 solves, certificate gap %.1e, complementarity %.1e, path split %.1e",
                worst_gap, worst_comp, worst_path);
  return {pass, buf};
}

Outcome criterion8(const SolveBatch& batch) {
  bool pass = true;
  int agree_pass = 0, agree_fail = 0;
  for (std::size_t i = 0; i < batch.results.size(); ++i) {
    const auto& inst = batch.instances[i];
    const auto& r = batch.results[i];
    if (!r.converged) continue;

    bool fixed_ok = r.fixed_point_residual <= 1e-8;
    bool approx_ok = r.certificate_gap() <= 1e-8;
    bool vi_ok = r.complementarity_residual <= 1e-8;
    if (fixed_ok && approx_ok && vi_ok)
      ++agree_pass;
    else
      pass = false;

    // Perturb the solution; all three certificates must fail together, and
    // the sampled inequality must expose the perturbed point as well.
    std::size_t dim = inst.y_star.dim();
    RealVector xt = add(r.x_star, constant_vector(dim, 1e-3, Norm::lp(2.0)));
    RealVector ft = inst.map(xt);
    double fixed_res = norm(sub(plus_part(ft), xt));
    double gap = std::abs(norm(sub(ft, xt)) - lp::distance_to_cone(ft));
    double comp = 0.0;
    for (std::size_t c = 0; c < dim; ++c)
      comp = std::max(comp, std::abs(std::min(xt[c], xt[c] - ft[c])));
    auto vi = approx::verify_vi(ConeDescriptor(OrthantCone{dim, Norm::lp(2.0)}), xt, ft, 2000,
                                static_cast<std::uint64_t>(i));
    bool all_fail =
        fixed_res > 1e-8 && gap > 1e-8 && comp > 1e-8 && vi.vi_min_inner < -1e-9;
    if (all_fail)
      ++agree_fail;
    else
      pass = false;
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "%d/200 converged agree on pass, %d/200 perturbed agree on fail", agree_pass,
                agree_fail);
  return {pass, buf};
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* name;
    Outcome outcome;
  };
  std::vector<Entry> entries;

  entries.push_back({1, "counterexample reproduction", criterion1()});
  entries.push_back({2, "circular projection oracle and variational identities", criterion2()});
  entries.push_back({3, "sup-norm projection-set exactness", criterion3()});
  entries.push_back({4, "isotonicity verdicts", criterion4()});
  entries.push_back({5, "duality pairing checks", criterion5()});
  entries.push_back({6, "finite fixed-point corpus", criterion6()});
  SolveBatch batch = run_batch();
  entries.push_back({7, "best-approximation certificates", criterion7(batch)});
  entries.push_back({8, "certificate equivalence under perturbation", criterion8(batch)});

  int failures = 0;
  for (const auto& e : entries) {
    bool ok = e.outcome.pass;
    failures += ok ? 0 : 1;
    std::printf("%s  %d  %s: %s\n", ok ? "PASS" : "FAIL", e.id, e.name,
                e.outcome.detail.c_str());
  }
  std::printf("%zu criteria, %d failed\n", entries.size(), failures);
  return failures == 0 ? 0 : 1;
}
