#include "isotone/lp.hpp"

#include <algorithm>
#include <cmath>

#include "isotone/errors.hpp"
#include "isotone/rng.hpp"

namespace isotone::lp {

namespace {

double require_lp(const RealVector& x, const char* op) {
  require(!x.norm_kind().is_sup(), Errc::unsupported,
          std::string(op) + " requires an lp-normed vector");
  return x.norm_kind().exponent();
}

RealVector cone_sample(Rng& rng, std::size_t dim, const Norm& kind) {
  return RealVector(rng.uniform_vector(dim, 0.0, 5.0), kind);
}

}  // namespace

RealVector project(const RealVector& x) {
  require_lp(x, "project");
  return plus_part(x);
}

double distance_to_cone(const RealVector& x) {
  require_lp(x, "distance_to_cone");
  return norm(sub(plus_part(x), x));
}

DualityVector duality_map(const RealVector& x) {
  double p = require_lp(x, "duality_map");
  require(p > 1.0, Errc::unsupported,
          "duality map needs 1 < p < infinity (set-valued at p = 1)");
  double q = p / (p - 1.0);
  double nx = norm(x);
  std::vector<double> img(x.dim(), 0.0);
  if (nx > 0.0) {
    double factor = std::pow(nx, 2.0 - p);
    for (std::size_t i = 0; i < x.dim(); ++i) {
      if (x[i] == 0.0) continue;
      img[i] = factor * std::pow(std::abs(x[i]), p - 1.0) * (x[i] > 0.0 ? 1.0 : -1.0);
    }
  }
  DualityVector d{x, p, RealVector(std::move(img), Norm::lp(q))};
  // Defining identities, checked at construction: <x, j> = |x|^2, |j|_q = |x|_p.
  double scale = std::max(1.0, nx * nx);
  require(std::abs(dot(d.source, d.image) - nx * nx) <= 1e-10 * scale, Errc::internal,
          "duality map pairing identity violated");
  require(std::abs(norm(d.image) - nx) <= 1e-10 * std::max(1.0, nx), Errc::internal,
          "duality map norm identity violated");
  return d;
}

OrthogonalityReport check_orthogonal(double p, std::size_t dim, int sample_count,
                                     std::uint64_t seed) {
  require(dim >= 2, Errc::invalid_argument, "orthogonality check needs dimension >= 2");
  Norm kind = Norm::lp(p);
  OrthogonalityReport report{0, 0.0};
  for (int s = 0; s < sample_count; ++s) {
    Rng rng(seed, static_cast<std::uint64_t>(s));
    // Disjoint supports make the meet zero in the orthant order; every
    // coordinate is assigned to exactly one side.
    std::vector<double> xe(dim, 0.0), ye(dim, 0.0);
    bool has_x = false, has_y = false;
    for (std::size_t i = 0; i < dim; ++i) {
      double v = rng.uniform(0.1, 5.0);
      if (rng.chance(0.5)) {
        xe[i] = v;
        has_x = true;
      } else {
        ye[i] = v;
        has_y = true;
      }
    }
    if (!has_x) {
      xe[0] = ye[0];
      ye[0] = 0.0;
    }
    if (!has_y) {
      ye[dim - 1] = xe[dim - 1];
      xe[dim - 1] = 0.0;
    }
    RealVector x(xe, kind), y(ye, kind);
    double pairing = std::abs(dot(duality_map(x).image, y));
    report.max_abs_pairing = std::max(report.max_abs_pairing, pairing);
    ++report.samples;
  }
  return report;
}

SubdualReport check_subdual(double p, std::size_t dim, int sample_count, std::uint64_t seed) {
  Norm kind = Norm::lp(p);
  SubdualReport report{0, 0.0};
  bool first = true;
  for (int s = 0; s < sample_count; ++s) {
    Rng rng(seed, static_cast<std::uint64_t>(s));
    RealVector x = cone_sample(rng, dim, kind);
    RealVector z = cone_sample(rng, dim, kind);
    double pairing = dot(duality_map(x).image, z);
    report.min_pairing = first ? pairing : std::min(report.min_pairing, pairing);
    first = false;
    ++report.samples;
  }
  return report;
}

PlusPartOptimality verify_plus_part_optimal(const RealVector& x, int sample_count,
                                            std::uint64_t seed) {
  double p = require_lp(x, "verify_plus_part_optimal");
  require(p > 1.0, Errc::unsupported, "duality certificate needs 1 < p < infinity");
  RealVector plus = plus_part(x);
  RealVector minus = sub(plus, x);
  RealVector j = duality_map(minus).image;
  PlusPartOptimality out{};
  out.pairing_with_plus = dot(plus, j);
  double base = norm(sub(x, plus));
  bool first = true;
  for (int s = 0; s < sample_count; ++s) {
    Rng rng(seed, static_cast<std::uint64_t>(s));
    RealVector z = cone_sample(rng, x.dim(), x.norm_kind());
    double pairing = dot(z, j);
    out.min_pairing_over_cone = first ? pairing : std::min(out.min_pairing_over_cone, pairing);
    double excess = base - norm(sub(x, z));
    out.max_distance_excess = first ? excess : std::max(out.max_distance_excess, excess);
    first = false;
    ++out.samples;
  }
  if (first) {
    out.min_pairing_over_cone = 0.0;
    out.max_distance_excess = 0.0;
  }
  return out;
}

}  // namespace isotone::lp
