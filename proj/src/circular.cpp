#include "isotone/circular.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "isotone/errors.hpp"
#include "isotone/rng.hpp"

namespace isotone::circular {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

struct AxisSplit {
  double along;              // <u, axis>
  std::vector<double> perp;  // u - along * axis
  double perp_norm;
};

AxisSplit split(const CircularCone& cone, const RealVector& u) {
  require(cone.axis.size() == u.dim(), Errc::dimension_mismatch,
          "circular cone and point dimensions differ");
  AxisSplit s;
  s.along = 0.0;
  for (std::size_t i = 0; i < u.dim(); ++i) s.along += u[i] * cone.axis[i];
  s.perp.resize(u.dim());
  double sq = 0.0;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    s.perp[i] = u[i] - s.along * cone.axis[i];
    sq += s.perp[i] * s.perp[i];
  }
  s.perp_norm = std::sqrt(sq);
  return s;
}

RealVector ray_point(const CircularCone& cone, const std::vector<double>& perp_unit,
                     double theta, double t) {
  std::vector<double> e(cone.axis.size());
  double c = std::cos(theta), s = std::sin(theta);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = t * (c * cone.axis[i] + s * perp_unit[i]);
  return RealVector(std::move(e), Norm::lp(2.0));
}

// Nearest point for an arbitrary half angle. The nearest point lies in the
// plane spanned by the axis and u, at some angle theta in [0, half_angle]
// from the axis; for a fixed direction the radial optimum is the clamped
// inner product, so the search is one-dimensional. g(theta) =
// along*cos(theta) + perp*sin(theta) is unimodal, golden-section applies.
RealVector project_generic(const CircularCone& cone, const RealVector& u) {
  // Membership first: g is flat at an interior maximum, where a golden
  // search only localizes to sqrt(eps); outside the cone the maximum sits at
  // the endpoint theta = half_angle and the search is sharp.
  if (contains(ConeDescriptor(cone), u)) return with_norm(u, Norm::lp(2.0));
  AxisSplit s = split(cone, u);
  if (s.perp_norm < 1e-14) {
    // On the negative axis line; the apex is nearest.
    return constant_vector(u.dim(), 0.0, Norm::lp(2.0));
  }
  std::vector<double> e(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) e[i] = s.perp[i] / s.perp_norm;

  auto g = [&](double theta) {
    return s.along * std::cos(theta) + s.perp_norm * std::sin(theta);
  };
  double lo = 0.0, hi = cone.half_angle;
  const double inv_phi = 0.6180339887498949;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double g1 = g(x1), g2 = g(x2);
  for (int it = 0; it < 120 && hi - lo > 1e-15; ++it) {
    if (g1 < g2) {
      lo = x1;
      x1 = x2;
      g1 = g2;
      x2 = lo + inv_phi * (hi - lo);
      g2 = g(x2);
    } else {
      hi = x2;
      x2 = x1;
      g2 = g1;
      x1 = hi - inv_phi * (hi - lo);
      g1 = g(x1);
    }
  }
  double theta = 0.5 * (lo + hi);
  // Candidate polish: compare true distances at the search result and the
  // interval endpoints, preferring an endpoint on noise-level ties. Outside
  // the cone the maximizer sits exactly at half_angle, where comparisons of
  // g alone flatten into rounding noise.
  auto dist2_at = [&](double th) {
    double t = std::max(0.0, g(th));
    double da = s.along - t * std::cos(th);
    double dr = s.perp_norm - t * std::sin(th);
    return da * da + dr * dr;
  };
  for (double candidate : {0.0, cone.half_angle}) {
    if (dist2_at(candidate) <= dist2_at(theta) * (1.0 + 1e-12)) theta = candidate;
  }
  double t = std::max(0.0, g(theta));
  return ray_point(cone, e, theta, t);
}

}  // namespace

const char* region_name(Region r) {
  switch (r) {
    case Region::Inside:
      return "inside";
    case Region::InsideNegative:
      return "inside_negative";
    case Region::Outside:
      return "outside";
  }
  return "?";
}

Region classify(const CircularCone& cone, const RealVector& u) {
  ConeDescriptor k{cone};
  if (contains(k, u)) return Region::Inside;
  if (contains(k, scale(-1.0, u))) return Region::InsideNegative;
  return Region::Outside;
}

RealVector project(const CircularCone& cone, const RealVector& u) {
  if (std::abs(cone.half_angle - kQuarterPi) > 1e-12) return project_generic(cone, u);

  switch (classify(cone, u)) {
    case Region::Inside:
      return with_norm(u, Norm::lp(2.0));
    case Region::InsideNegative:
      // At half-angle pi/4 the negated cone is exactly the polar cone, the
      // set of points projecting to the apex.
      return constant_vector(u.dim(), 0.0, Norm::lp(2.0));
    case Region::Outside:
      break;
  }
  AxisSplit s = split(cone, u);
  // Outside both cones forces a perpendicular part; |along| < perp_norm.
  require(s.perp_norm >= 1e-14, Errc::internal, "degenerate outside point");
  double t = 0.5 * (s.along + s.perp_norm);
  std::vector<double> e(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i)
    e[i] = t * (cone.axis[i] + s.perp[i] / s.perp_norm);
  return RealVector(std::move(e), Norm::lp(2.0));
}

ViCheck verify_projection_vi(const CircularCone& cone, const RealVector& u, const RealVector& w,
                             int sample_count, std::uint64_t seed) {
  require(u.dim() == w.dim(), Errc::dimension_mismatch, "verify_projection_vi: dimensions");
  RealVector residual = sub(with_norm(w, Norm::lp(2.0)), with_norm(u, Norm::lp(2.0)));
  ViCheck out{};
  out.orthogonality_residual = std::abs(dot(w, residual));

  auto inner_at = [&](const RealVector& z) { return dot(sub(z, w), residual); };

  // Equality in the variational inequality occurs along the ray through w;
  // the deterministic points pin those cases down.
  RealVector axis(cone.axis, Norm::lp(2.0));
  out.min_inner = inner_at(constant_vector(u.dim(), 0.0, Norm::lp(2.0)));
  out.min_inner = std::min(out.min_inner, inner_at(axis));
  out.min_inner = std::min(out.min_inner, inner_at(w));
  out.min_inner = std::min(out.min_inner, inner_at(scale(2.0, w)));
  out.samples = 4;

  for (int i = 0; i < sample_count; ++i) {
    Rng rng(seed, static_cast<std::uint64_t>(i));
    // Boundary ray: every extreme ray of the cone has angle half_angle.
    std::vector<double> d;
    double nn = 0.0;
    do {
      d = rng.unit_vector(u.dim());
      double along = 0.0;
      for (std::size_t k = 0; k < d.size(); ++k) along += d[k] * cone.axis[k];
      nn = 0.0;
      for (std::size_t k = 0; k < d.size(); ++k) {
        d[k] -= along * cone.axis[k];
        nn += d[k] * d[k];
      }
    } while (nn < 1e-12);
    double inv = 1.0 / std::sqrt(nn);
    for (auto& e : d) e *= inv;
    double t = rng.log_uniform(1e-3, 1e3);
    out.min_inner = std::min(out.min_inner, inner_at(ray_point(cone, d, cone.half_angle, t)));
    ++out.samples;
  }
  return out;
}

CounterexampleReport monotonicity_witness() {
  std::vector<double> axis{1.0, 0.0, 0.0};
  return monotonicity_witness(CircularCone{axis, kQuarterPi});
}

CounterexampleReport monotonicity_witness(const CircularCone& cone) {
  require(std::abs(cone.half_angle - kQuarterPi) <= 1e-12, Errc::unsupported,
          "the monotonicity witness is specific to half-angle pi/4");
  std::size_t dim = cone.axis.size();
  require(dim >= 3, Errc::unsupported, "the monotonicity witness needs dimension >= 3");

  // Orthonormal completion of the axis; for axis e1 this yields e2, e3 and
  // reproduces the canonical coordinates exactly.
  std::vector<std::vector<double>> frame{cone.axis};
  for (std::size_t j = 0; j < dim && frame.size() < 3; ++j) {
    std::vector<double> cand(dim, 0.0);
    cand[j] = 1.0;
    for (const auto& f : frame) {
      double along = 0.0;
      for (std::size_t i = 0; i < dim; ++i) along += cand[i] * f[i];
      for (std::size_t i = 0; i < dim; ++i) cand[i] -= along * f[i];
    }
    double nn = 0.0;
    for (double e : cand) nn += e * e;
    if (nn < 1e-8) continue;
    double inv = 1.0 / std::sqrt(nn);
    for (auto& e : cand) e *= inv;
    frame.push_back(std::move(cand));
  }
  require(frame.size() == 3, Errc::internal, "failed to complete the axis frame");

  const double rt2 = std::sqrt(2.0);
  auto combine = [&](double ca, double c1, double c2) {
    std::vector<double> e(dim);
    for (std::size_t i = 0; i < dim; ++i)
      e[i] = ca * frame[0][i] + c1 * frame[1][i] + c2 * frame[2][i];
    return RealVector(std::move(e), Norm::lp(2.0));
  };

  CounterexampleReport r{
      combine(0.0, 1.0 / rt2, 1.0 / rt2),  // lower
      combine(1.0, rt2, 0.0),              // upper
      combine(0.0, 0.0, 0.0),
      combine(0.0, 0.0, 0.0),
      combine(0.0, 0.0, 0.0),
      0.0,
      std::cos(cone.half_angle),
      false,
      false,
  };
  r.proj_lower = project(cone, r.lower);
  r.proj_upper = project(cone, r.upper);
  r.difference = sub(r.proj_upper, r.proj_lower);
  double dn = norm_l2(r.difference);
  double along = 0.0;
  for (std::size_t i = 0; i < dim; ++i) along += r.difference[i] * cone.axis[i];
  r.ratio = dn > 0.0 ? along / dn : 0.0;
  ConeDescriptor k{cone};
  r.order_holds_on_inputs = leq(k, r.lower, r.upper);
  r.order_holds_on_outputs = leq(k, r.proj_lower, r.proj_upper);
  return r;
}

}  // namespace isotone::circular
