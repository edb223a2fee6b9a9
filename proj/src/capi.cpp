#include "isotone.h"

#include <cmath>
#include <cstring>
#include <string>

#include "isotone/bestapprox.hpp"
#include "isotone/circular.hpp"
#include "isotone/cone.hpp"
#include "isotone/errors.hpp"
#include "isotone/isotone_check.hpp"
#include "isotone/json_io.hpp"
#include "isotone/lp.hpp"
#include "isotone/poset.hpp"
#include "isotone/supnorm.hpp"

using isotone::ConeDescriptor;
using isotone::Errc;
using isotone::Error;
using isotone::Norm;
using isotone::RealVector;
using isotone::io::json;

struct iso_cone {
  ConeDescriptor cone;
};

struct iso_result {
  std::string text;
  bool ok;
};

namespace {

thread_local std::string g_last_error;

iso_status status_of(Errc code) {
  switch (code) {
    case Errc::invalid_argument:
      return ISO_ERROR_INVALID_ARGUMENT;
    case Errc::dimension_mismatch:
      return ISO_ERROR_DIMENSION_MISMATCH;
    case Errc::parse:
      return ISO_ERROR_PARSE;
    case Errc::unsupported:
      return ISO_ERROR_UNSUPPORTED;
    case Errc::no_convergence:
      return ISO_ERROR_NO_CONVERGENCE;
    case Errc::assertion_failed:
      return ISO_ERROR_ASSERTION;
    case Errc::internal:
      return ISO_ERROR_INTERNAL;
  }
  return ISO_ERROR_INTERNAL;
}

template <typename Fn>
iso_status guarded(Fn&& fn) {
  try {
    fn();
    return ISO_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ISO_ERROR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return ISO_ERROR_INTERNAL;
  }
}

void check_pointer(const void* p, const char* what) {
  isotone::require(p != nullptr, Errc::invalid_argument,
                   std::string(what) + " must not be null");
}

Norm space_kind(const ConeDescriptor& cone) {
  return cone.is_circular() ? Norm::lp(2.0) : cone.orthant_cone().norm_kind;
}

RealVector make_vector(const ConeDescriptor& cone, const double* x, size_t dim) {
  check_pointer(x, "vector pointer");
  isotone::require(dim == cone.dim(), Errc::dimension_mismatch,
                   "vector dimension does not match the cone");
  return RealVector(std::vector<double>(x, x + dim), space_kind(cone));
}

iso_result* make_result(json payload, bool ok) {
  auto* r = new iso_result{payload.dump(), ok};
  return r;
}

RealVector pick_representative(const ConeDescriptor& cone, const RealVector& x,
                               iso_representative rep) {
  if (cone.is_circular()) return isotone::circular::project(cone.circular_cone(), x);
  if (!cone.orthant_cone().norm_kind.is_sup()) return isotone::lp::project(x);
  switch (rep) {
    case ISO_REP_SMALLEST:
      return isotone::sup::smallest_projection(x);
    case ISO_REP_LARGEST:
      return isotone::sup::largest_projection(x);
    case ISO_REP_CANONICAL:
      break;
  }
  return isotone::plus_part(x);
}

}  // namespace

extern "C" {

const char* iso_version(void) { return "0.1.0"; }

const char* iso_status_name(iso_status status) {
  switch (status) {
    case ISO_OK:
      return "ok";
    case ISO_ERROR_INVALID_ARGUMENT:
      return "invalid_argument";
    case ISO_ERROR_DIMENSION_MISMATCH:
      return "dimension_mismatch";
    case ISO_ERROR_PARSE:
      return "parse_error";
    case ISO_ERROR_UNSUPPORTED:
      return "unsupported";
    case ISO_ERROR_NO_CONVERGENCE:
      return "no_convergence";
    case ISO_ERROR_ASSERTION:
      return "assertion_failed";
    case ISO_ERROR_INTERNAL:
      return "internal_error";
  }
  return "unknown";
}

const char* iso_last_error(void) { return g_last_error.c_str(); }

iso_status iso_cone_new_circular(const double* axis, size_t dim, double half_angle,
                                 iso_cone** out) {
  return guarded([&] {
    check_pointer(axis, "axis");
    check_pointer(out, "out");
    *out = new iso_cone{
        ConeDescriptor::circular(std::vector<double>(axis, axis + dim), half_angle)};
  });
}

iso_status iso_cone_new_orthant_sup(size_t dim, iso_cone** out) {
  return guarded([&] {
    check_pointer(out, "out");
    *out = new iso_cone{ConeDescriptor::orthant_sup(dim)};
  });
}

iso_status iso_cone_new_orthant_lp(size_t dim, double p, iso_cone** out) {
  return guarded([&] {
    check_pointer(out, "out");
    *out = new iso_cone{ConeDescriptor::orthant_lp(dim, p)};
  });
}

iso_status iso_cone_parse_json(const char* json_text, iso_cone** out) {
  return guarded([&] {
    check_pointer(json_text, "json_text");
    check_pointer(out, "out");
    *out = new iso_cone{isotone::io::cone_from_json(isotone::io::parse_json_text(json_text))};
  });
}

void iso_cone_free(iso_cone* cone) { delete cone; }

size_t iso_cone_dim(const iso_cone* cone) { return cone ? cone->cone.dim() : 0; }

iso_status iso_contains(const iso_cone* cone, const double* x, size_t dim, int* out) {
  return guarded([&] {
    check_pointer(cone, "cone");
    check_pointer(out, "out");
    *out = isotone::contains(cone->cone, make_vector(cone->cone, x, dim)) ? 1 : 0;
  });
}

iso_status iso_leq(const iso_cone* cone, const double* x, const double* y, size_t dim,
                   int* out) {
  return guarded([&] {
    check_pointer(cone, "cone");
    check_pointer(out, "out");
    *out = isotone::leq(cone->cone, make_vector(cone->cone, x, dim),
                        make_vector(cone->cone, y, dim))
               ? 1
               : 0;
  });
}

iso_status iso_lattice_join(const iso_cone* cone, const double* x, const double* y, size_t dim,
                            double* out) {
  return guarded([&] {
    check_pointer(cone, "cone");
    check_pointer(out, "out");
    RealVector j = isotone::lattice_join(cone->cone, make_vector(cone->cone, x, dim),
                                         make_vector(cone->cone, y, dim));
    std::memcpy(out, j.entries().data(), dim * sizeof(double));
  });
}

iso_status iso_project(const iso_cone* cone, const double* x, size_t dim,
                       iso_representative rep, double* out) {
  return guarded([&] {
    check_pointer(cone, "cone");
    check_pointer(out, "out");
    RealVector w = pick_representative(cone->cone, make_vector(cone->cone, x, dim), rep);
    std::memcpy(out, w.entries().data(), dim * sizeof(double));
  });
}

iso_status iso_distance_to_cone(const iso_cone* cone, const double* x, size_t dim,
                                double* out) {
  return guarded([&] {
    check_pointer(cone, "cone");
    check_pointer(out, "out");
    RealVector v = make_vector(cone->cone, x, dim);
    if (cone->cone.is_circular()) {
      RealVector w = isotone::circular::project(cone->cone.circular_cone(), v);
      *out = isotone::norm_l2(isotone::sub(v, w));
    } else if (cone->cone.orthant_cone().norm_kind.is_sup()) {
      *out = isotone::sup::distance_to_cone(v);
    } else {
      *out = isotone::lp::distance_to_cone(v);
    }
  });
}

iso_status iso_in_projection_set(const iso_cone* cone, const double* x, const double* z,
                                 size_t dim, int* out) {
  return guarded([&] {
    check_pointer(cone, "cone");
    check_pointer(out, "out");
    RealVector xv = make_vector(cone->cone, x, dim);
    RealVector zv = make_vector(cone->cone, z, dim);
    if (cone->cone.is_circular()) {
      // Single-valued: membership is agreement with the projection.
      RealVector w = isotone::circular::project(cone->cone.circular_cone(), xv);
      *out = isotone::norm_l2(isotone::sub(zv, w)) <= isotone::kOrderTol ? 1 : 0;
    } else if (cone->cone.orthant_cone().norm_kind.is_sup()) {
      *out = isotone::sup::in_projection_set(xv, zv) ? 1 : 0;
    } else {
      RealVector w = isotone::lp::project(xv);
      *out = isotone::norm(isotone::sub(zv, w)) <= isotone::kOrderTol ? 1 : 0;
    }
  });
}

iso_status iso_project_report(const iso_cone* cone, const double* x, size_t dim,
                              int vi_samples, uint64_t seed, iso_result** out) {
  return guarded([&] {
    check_pointer(cone, "cone");
    check_pointer(out, "out");
    RealVector v = make_vector(cone->cone, x, dim);
    json payload{{"cone", isotone::io::cone_to_json(cone->cone)},
                 {"point", isotone::io::vector_to_json(v)},
                 {"seed", seed}};
    bool ok = true;
    if (cone->cone.is_circular()) {
      const auto& c = cone->cone.circular_cone();
      RealVector w = isotone::circular::project(c, v);
      auto vi = isotone::circular::verify_projection_vi(c, v, w, vi_samples, seed);
      payload["region"] = isotone::circular::region_name(isotone::circular::classify(c, v));
      payload["projection"] = w.entries();
      payload["distance"] = isotone::norm_l2(isotone::sub(v, w));
      payload["vi_min_inner"] = vi.min_inner;
      payload["orthogonality_residual"] = vi.orthogonality_residual;
      payload["vi_samples"] = vi.samples;
      ok = vi.min_inner >= -1e-9;
    } else if (cone->cone.orthant_cone().norm_kind.is_sup()) {
      auto set = isotone::sup::projection_set(v);
      payload["profile"] = isotone::io::profile_to_json(set.profile);
      payload["projection"] = set.plus.entries();
      payload["representatives"] = json{{"plus", set.plus.entries()},
                                        {"smallest", set.smallest.entries()},
                                        {"largest", set.largest.entries()}};
      payload["distance"] = set.profile.max_violation;
      payload["singleton"] = set.singleton();
    } else {
      RealVector w = isotone::lp::project(v);
      payload["projection"] = w.entries();
      payload["distance"] = isotone::lp::distance_to_cone(v);
    }
    *out = make_result(std::move(payload), ok);
  });
}

iso_status iso_counterexample(iso_result** out) {
  return guarded([&] {
    check_pointer(out, "out");
    auto report = isotone::circular::monotonicity_witness();
    *out = make_result(isotone::io::counterexample_to_json(report), report.reproduced());
  });
}

iso_status iso_isotone_check(const iso_cone* cone, iso_direction direction, int pair_count,
                             uint64_t seed, iso_result** out) {
  return guarded([&] {
    check_pointer(cone, "cone");
    check_pointer(out, "out");
    auto dir = direction == ISO_DIRECTION_UP ? isotone::check::Direction::Up
                                             : isotone::check::Direction::Down;
    auto report = isotone::check::check(cone->cone, dir, pair_count, seed);
    // The verdict is the answer, not a failure; the document is always ok.
    *out = make_result(isotone::io::isotone_report_to_json(report), true);
  });
}

iso_status iso_fixpoint(const char* poset_json, const char* map_json,
                        const char* y_star_label, const char* v_star_label,
                        iso_result** out) {
  return guarded([&] {
    check_pointer(poset_json, "poset_json");
    check_pointer(map_json, "map_json");
    check_pointer(out, "out");
    auto poset = isotone::io::poset_from_json(isotone::io::parse_json_text(poset_json));
    auto map = isotone::io::setmap_from_json(isotone::io::parse_json_text(map_json), poset);

    json payload{{"elements", poset.labels()},
                 {"increasing_downward", isotone::order::is_increasing_downward(poset, map)}};
    bool ok = true;
    if (y_star_label && v_star_label) {
      auto check = isotone::order::verify_downward_fixpoint_theorem(
          poset, map, poset.index_of(y_star_label), poset.index_of(v_star_label));
      payload["theorem"] = isotone::io::theorem_check_to_json(check, poset);
      ok = check.hypotheses_ok && check.conclusions_ok();
    } else {
      isotone::require(!y_star_label == !v_star_label, Errc::invalid_argument,
                       "y_star and v_star must be given together");
      payload["scan"] =
          isotone::io::fixpoint_scan_to_json(isotone::order::finite_fixpoints(poset, map), poset);
    }
    *out = make_result(std::move(payload), ok);
  });
}

iso_status iso_fixpoint_corpus(int instance_count, uint64_t seed, iso_result** out) {
  return guarded([&] {
    check_pointer(out, "out");
    isotone::require(instance_count >= 1, Errc::invalid_argument,
                     "instance_count must be positive");
    auto result = isotone::order::run_corpus(instance_count, seed);
    json payload{{"instances", result.instances},
                 {"conforming", result.conforming},
                 {"failing_indices", result.failing_indices},
                 {"seed", seed}};
    *out = make_result(std::move(payload), result.all_conform());
  });
}

iso_status iso_best_approx(const char* config_json, iso_result** out) {
  return guarded([&] {
    check_pointer(config_json, "config_json");
    check_pointer(out, "out");
    json cfg = isotone::io::parse_json_text(config_json);
    isotone::require(cfg.is_object() && cfg.contains("map") && cfg.contains("dim"),
                     Errc::parse, "config must carry \"map\" and \"dim\"");

    std::size_t dim = cfg.at("dim").get<std::size_t>();
    std::string space = cfg.value("space", std::string("lp"));
    Norm kind = space == "sup" ? Norm::sup() : Norm::lp(cfg.value("p", 2.0));
    isotone::OrthantCone cone{dim, kind};
    auto f = isotone::io::monotone_map_from_json(cfg.at("map"));

    double tol = cfg.value("tol", 1e-10);
    int max_iter = cfg.value("max_iter", 100000);
    int vi_samples = cfg.value("vi_samples", 2000);
    uint64_t seed = cfg.value("seed", 0);
    std::string direction = cfg.value("direction", std::string("down"));
    std::string selection_name = cfg.value("selection", std::string("smallest"));
    auto selection = selection_name == "plus" ? isotone::approx::Selection::PlusPart
                                              : isotone::approx::Selection::SmallestRepresentative;

    RealVector y_star = constant_vector(dim, 0.0, kind);
    if (!cfg.contains("y_star") || cfg.at("y_star").is_string()) {
      std::string mode =
          cfg.contains("y_star") ? cfg.at("y_star").get<std::string>() : std::string("auto");
      isotone::require(mode == "auto", Errc::parse,
                       R"("y_star" must be an entries array or "auto")");
      isotone::require(f.is_affine(), Errc::unsupported,
                       "automatic y_star needs an affine map");
      double rho = isotone::approx::nonnegative_spectral_radius(f.matrix());
      isotone::require(rho < 1.0 - 1e-9, Errc::invalid_argument,
                       "automatic y_star needs spectral radius < 1");
      std::vector<std::vector<double>> system(dim, std::vector<double>(dim));
      std::vector<double> rhs(dim);
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j2 = 0; j2 < dim; ++j2)
          system[i][j2] = (i == j2 ? 1.0 : 0.0) - f.matrix()[i][j2];
        rhs[i] = std::abs(f.offset()[i]) + 1.0;
      }
      y_star = RealVector(isotone::approx::solve_linear(system, rhs), kind);
    } else {
      std::vector<double> ye = cfg.at("y_star").get<std::vector<double>>();
      y_star = RealVector(std::move(ye), kind);
    }

    isotone::approx::BestApproxResult result =
        direction == "up"
            ? isotone::approx::solve_up(cone, f, y_star, tol, max_iter, 1e-8, vi_samples, seed)
            : isotone::approx::solve_down(cone, f, y_star, tol, max_iter, selection, 1e-8,
                                          vi_samples, seed);

    json payload = isotone::io::best_approx_to_json(result);
    payload["y_star"] = y_star.entries();
    payload["direction"] = direction;
    payload["selection"] = selection_name;
    *out = make_result(std::move(payload), result.converged && result.certified);
  });
}

iso_status iso_vi_check(const iso_cone* cone, const double* x_star, const double* f_value,
                        size_t dim, int sample_count, uint64_t seed, iso_result** out) {
  return guarded([&] {
    check_pointer(cone, "cone");
    check_pointer(out, "out");
    RealVector xs = make_vector(cone->cone, x_star, dim);
    RealVector fv = make_vector(cone->cone, f_value, dim);
    auto report = isotone::approx::verify_vi(cone->cone, xs, fv, sample_count, seed);
    bool complementarity_ok = std::isnan(report.complementarity_residual) ||
                              report.complementarity_residual <= 1e-8;
    json payload{{"vi_min_inner", report.vi_min_inner},
                 {"complementarity_residual",
                  std::isnan(report.complementarity_residual)
                      ? json(nullptr)
                      : json(report.complementarity_residual)},
                 {"samples", report.samples},
                 {"seed", seed}};
    *out = make_result(std::move(payload), report.vi_min_inner >= -1e-9 && complementarity_ok);
  });
}

iso_status iso_plus_part_optimality(double p, const double* x, size_t dim, int sample_count,
                                    uint64_t seed, iso_result** out) {
  return guarded([&] {
    check_pointer(x, "x");
    check_pointer(out, "out");
    RealVector v(std::vector<double>(x, x + dim), Norm::lp(p));
    auto report = isotone::lp::verify_plus_part_optimal(v, sample_count, seed);
    json payload{{"p", p},
                 {"point", v.entries()},
                 {"pairing_with_plus", report.pairing_with_plus},
                 {"min_pairing_over_cone", report.min_pairing_over_cone},
                 {"max_distance_excess", report.max_distance_excess},
                 {"samples", report.samples},
                 {"seed", seed}};
    bool ok = std::abs(report.pairing_with_plus) <= 1e-10 &&
              report.min_pairing_over_cone >= -1e-12 && report.max_distance_excess <= 1e-9;
    *out = make_result(std::move(payload), ok);
  });
}

const char* iso_result_json(const iso_result* result) {
  return result ? result->text.c_str() : "";
}

int iso_result_ok(const iso_result* result) { return result && result->ok ? 1 : 0; }

void iso_result_free(iso_result* result) { delete result; }

}  // extern "C"
