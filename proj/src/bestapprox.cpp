#include "isotone/bestapprox.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "isotone/errors.hpp"
#include "isotone/lp.hpp"
#include "isotone/rng.hpp"
#include "isotone/supnorm.hpp"

namespace isotone::approx {

PiecewiseTable::PiecewiseTable(std::vector<std::pair<double, double>> points)
    : points_(std::move(points)) {
  require(!points_.empty(), Errc::invalid_argument, "table needs at least one breakpoint");
  for (std::size_t i = 1; i < points_.size(); ++i) {
    require(points_[i].first > points_[i - 1].first, Errc::invalid_argument,
            "table breakpoints must be strictly increasing");
    require(points_[i].second >= points_[i - 1].second, Errc::invalid_argument,
            "table values must be nondecreasing");
  }
}

double PiecewiseTable::operator()(double t) const {
  if (t <= points_.front().first) return points_.front().second;
  if (t >= points_.back().first) return points_.back().second;
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (t <= points_[i].first) {
      const auto& [x0, y0] = points_[i - 1];
      const auto& [x1, y1] = points_[i];
      return y0 + (y1 - y0) * (t - x0) / (x1 - x0);
    }
  }
  return points_.back().second;
}

MonotoneMap MonotoneMap::affine(std::vector<std::vector<double>> a, std::vector<double> b) {
  std::size_t n = b.size();
  require(n >= 1 && a.size() == n, Errc::invalid_argument, "affine map: shape mismatch");
  for (const auto& row : a) {
    require(row.size() == n, Errc::invalid_argument, "affine map: matrix must be square");
    for (double e : row)
      require(std::isfinite(e) && e >= 0.0, Errc::invalid_argument,
              "affine map: matrix entries must be nonnegative");
  }
  MonotoneMap m;
  m.affine_ = true;
  m.a_ = std::move(a);
  m.b_ = std::move(b);

  // Nonnegative entries make the map order-increasing; spot-check on random
  // ordered pairs anyway, the property is load-bearing downstream.
  Rng rng(0xaff1e);
  for (int trial = 0; trial < 16; ++trial) {
    RealVector x(rng.uniform_vector(n, -5.0, 5.0), Norm::lp(2.0));
    RealVector y = add(x, RealVector(rng.uniform_vector(n, 0.0, 5.0), Norm::lp(2.0)));
    RealVector fx = m(x), fy = m(y);
    for (std::size_t i = 0; i < n; ++i)
      require(fx[i] <= fy[i], Errc::internal, "affine map failed the monotonicity spot-check");
  }
  return m;
}

MonotoneMap MonotoneMap::componentwise(std::vector<PiecewiseTable> tables) {
  require(!tables.empty(), Errc::invalid_argument, "componentwise map needs tables");
  MonotoneMap m;
  m.affine_ = false;
  m.tables_ = std::move(tables);
  return m;
}

RealVector MonotoneMap::operator()(const RealVector& x) const {
  require(x.dim() == dim(), Errc::dimension_mismatch, "monotone map: dimension mismatch");
  std::vector<double> out(x.dim());
  if (affine_) {
    for (std::size_t i = 0; i < x.dim(); ++i) {
      double s = b_[i];
      for (std::size_t j = 0; j < x.dim(); ++j) s += a_[i][j] * x[j];
      out[i] = s;
    }
  } else {
    for (std::size_t i = 0; i < x.dim(); ++i) out[i] = tables_[i](x[i]);
  }
  return RealVector(std::move(out), x.norm_kind());
}

std::size_t MonotoneMap::dim() const { return affine_ ? b_.size() : tables_.size(); }

const std::vector<std::vector<double>>& MonotoneMap::matrix() const {
  require(affine_, Errc::invalid_argument, "not an affine map");
  return a_;
}

const std::vector<double>& MonotoneMap::offset() const {
  require(affine_, Errc::invalid_argument, "not an affine map");
  return b_;
}

double BestApproxResult::certificate_gap() const {
  return std::abs(achieved_distance - cone_distance);
}

namespace {

RealVector projection_representative(const OrthantCone& cone, const RealVector& v,
                                     Selection selection) {
  if (selection == Selection::PlusPart) return plus_part(v);
  // Smallest member of the projection set: the sup formula when the set is
  // fat, the positive part when the projection is single-valued (lp).
  if (cone.norm_kind.is_sup()) return sup::smallest_projection(v);
  return plus_part(v);
}

double distance_to_orthant(const OrthantCone& cone, const RealVector& v) {
  return cone.norm_kind.is_sup() ? sup::distance_to_cone(v) : lp::distance_to_cone(v);
}

BestApproxResult finish(const OrthantCone& cone, const MonotoneMap& f,
                        const std::function<RealVector(const RealVector&)>& selection,
                        order::IterationTrace trace, double cert_tol, int vi_samples,
                        std::uint64_t vi_seed) {
  BestApproxResult r{trace.last(), f(trace.last()), 0.0, 0.0, 0.0,
                     std::numeric_limits<double>::quiet_NaN(),
                     std::numeric_limits<double>::quiet_NaN(),
                     {}, false, false, false};
  r.trace = std::move(trace);
  r.converged = r.trace.converged;
  r.achieved_distance = norm(sub(r.f_at_x_star, r.x_star));
  r.cone_distance = distance_to_orthant(cone, r.f_at_x_star);
  r.fixed_point_residual = norm(sub(selection(r.x_star), r.x_star));

  try {
    ViReport vi = verify_vi(ConeDescriptor(cone), r.x_star, r.f_at_x_star, vi_samples, vi_seed);
    r.vi_min_inner = vi.vi_min_inner;
    r.complementarity_residual = vi.complementarity_residual;
  } catch (const Error& e) {
    // Spaces without a single-valued duality pairing (p = 1, sup) keep the
    // distance identity as their only certificate; the VI fields stay NaN.
    if (e.code() != Errc::unsupported) throw;
  }

  if (r.converged) {
    r.certified = r.certificate_gap() <= cert_tol;
    // A point fixed bitwise by the selection but failing the distance
    // identity is a stall, not a certificate; only degenerate user-supplied
    // maps can produce one.
    if (r.fixed_point_residual == 0.0 && !r.certified) r.stalled = true;
  }
  return r;
}

}  // namespace

BestApproxResult solve_down(const OrthantCone& cone, const MonotoneMap& f,
                            const RealVector& y_star, double tol, int max_iter,
                            Selection selection, double cert_tol, int vi_samples,
                            std::uint64_t vi_seed) {
  ConeDescriptor k(cone);
  require(f.dim() == cone.dim && y_star.dim() == cone.dim, Errc::dimension_mismatch,
          "solve_down: dimension mismatch");
  require(contains(k, y_star), Errc::invalid_argument, "solve_down: y_star must lie in the cone");
  require(leq(k, f(y_star), y_star), Errc::invalid_argument,
          "solve_down: f(y_star) must lie below y_star");

  auto step = [&](const RealVector& x) {
    return projection_representative(cone, f(x), selection);
  };
  order::IterationTrace trace = order::iterate_downward(step, k, y_star, tol, max_iter);
  return finish(cone, f, step, std::move(trace), cert_tol, vi_samples, vi_seed);
}

BestApproxResult solve_up(const OrthantCone& cone, const MonotoneMap& f,
                          const RealVector& y_star, double tol, int max_iter, double cert_tol,
                          int vi_samples, std::uint64_t vi_seed) {
  ConeDescriptor k(cone);
  require(!cone.norm_kind.is_sup(), Errc::unsupported,
          "solve_up needs a single-valued projection (lp orthant)");
  require(f.dim() == cone.dim && y_star.dim() == cone.dim, Errc::dimension_mismatch,
          "solve_up: dimension mismatch");
  require(contains(k, y_star), Errc::invalid_argument, "solve_up: y_star must lie in the cone");
  require(leq(k, plus_part(f(y_star)), y_star), Errc::invalid_argument,
          "solve_up: the projected image of y_star must lie below y_star");

  auto step = [&](const RealVector& x) { return plus_part(f(x)); };
  order::IterationTrace trace = order::iterate_upward(step, k, y_star, tol, max_iter);
  return finish(cone, f, step, std::move(trace), cert_tol, vi_samples, vi_seed);
}

ViReport verify_vi(const ConeDescriptor& cone, const RealVector& x_star,
                   const RealVector& f_value, int sample_count, std::uint64_t seed) {
  require(x_star.dim() == f_value.dim() && x_star.dim() == cone.dim(), Errc::dimension_mismatch,
          "verify_vi: dimension mismatch");
  RealVector diff = sub(x_star, f_value);

  // Duality image of x* - f(x*): identity in the Hilbert pairings, the lp
  // duality map otherwise. The sup pairing is set-valued and unsupported.
  RealVector j = diff;
  bool l2_orthant = false;
  if (cone.is_circular()) {
    l2_orthant = false;
  } else {
    const Norm& kind = cone.orthant_cone().norm_kind;
    require(!kind.is_sup(), Errc::unsupported,
            "verify_vi: sup-norm duality pairing is set-valued; use the lp setting");
    if (kind.exponent() == 2.0) {
      l2_orthant = true;
    } else {
      j = lp::duality_map(with_norm(diff, kind)).image;
    }
  }

  ViReport out{};
  auto inner_at = [&](const RealVector& z) { return dot(sub(z, x_star), j); };

  double best = inner_at(zeros_like(x_star));
  best = std::min(best, inner_at(x_star));
  best = std::min(best, inner_at(scale(2.0, x_star)));
  out.samples = 3;
  if (!cone.is_circular()) {
    // The projected image is the equality case of the orthant inequality.
    best = std::min(best, inner_at(plus_part(f_value)));
    ++out.samples;
  }

  if (cone.is_circular()) {
    const CircularCone& c = cone.circular_cone();
    RealVector axis(c.axis, Norm::lp(2.0));
    best = std::min(best, inner_at(axis));
    ++out.samples;
    for (int i = 0; i < sample_count; ++i) {
      Rng rng(seed, static_cast<std::uint64_t>(i));
      std::vector<double> d;
      double nn = 0.0;
      do {
        d = rng.unit_vector(x_star.dim());
        double along = 0.0;
        for (std::size_t k2 = 0; k2 < d.size(); ++k2) along += d[k2] * c.axis[k2];
        nn = 0.0;
        for (std::size_t k2 = 0; k2 < d.size(); ++k2) {
          d[k2] -= along * c.axis[k2];
          nn += d[k2] * d[k2];
        }
      } while (nn < 1e-12);
      double inv = 1.0 / std::sqrt(nn);
      double t = rng.log_uniform(1e-3, 1e3);
      std::vector<double> ze(x_star.dim());
      double cc = std::cos(c.half_angle), ss = std::sin(c.half_angle);
      for (std::size_t k2 = 0; k2 < ze.size(); ++k2)
        ze[k2] = t * (cc * c.axis[k2] + ss * d[k2] * inv);
      best = std::min(best, inner_at(RealVector(std::move(ze), Norm::lp(2.0))));
      ++out.samples;
    }
  } else {
    for (int i = 0; i < sample_count; ++i) {
      Rng rng(seed, static_cast<std::uint64_t>(i));
      double radius = rng.log_uniform(1e-3, 1e2);
      std::vector<double> ze(x_star.dim());
      for (auto& e : ze) e = radius * rng.uniform01();
      best = std::min(best, inner_at(RealVector(std::move(ze), x_star.norm_kind())));
      ++out.samples;
    }
  }
  out.vi_min_inner = best;

  out.complementarity_residual = std::numeric_limits<double>::quiet_NaN();
  if (l2_orthant) {
    double worst = 0.0;
    for (std::size_t i = 0; i < x_star.dim(); ++i)
      worst = std::max(worst, std::abs(std::min(x_star[i], diff[i])));
    out.complementarity_residual = worst;
  }
  return out;
}

AffineInstance random_affine_instance(std::size_t dim, double radius_lo, double radius_hi,
                                      Norm space, std::uint64_t seed, std::uint64_t index) {
  require(dim >= 1, Errc::invalid_argument, "instance dimension must be >= 1");
  require(0.0 < radius_lo && radius_lo <= radius_hi && radius_hi < 1.0, Errc::invalid_argument,
          "spectral radius targets must lie in (0, 1)");
  Rng rng(seed, index);

  std::vector<std::vector<double>> a(dim, std::vector<double>(dim));
  for (auto& row : a)
    for (auto& e : row) e = rng.uniform01();
  double rho = nonnegative_spectral_radius(a);
  require(rho > 0.0, Errc::internal, "degenerate random matrix");
  double target = rng.uniform(radius_lo, radius_hi);
  double factor = target / rho;
  for (auto& row : a)
    for (auto& e : row) e *= factor;

  std::vector<double> b(dim);
  for (auto& e : b) e = rng.uniform(-5.0, 5.0);

  // y* = (I - A)^{-1}(|b| + 1): entrywise nonnegative by the Neumann series,
  // and (I - A) y* - b = |b| - b + 1 >= 1, so f(y*) sits strictly below y*.
  std::vector<std::vector<double>> system(dim, std::vector<double>(dim));
  std::vector<double> rhs(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) system[i][j] = (i == j ? 1.0 : 0.0) - a[i][j];
    rhs[i] = std::abs(b[i]) + 1.0;
  }
  std::vector<double> y = solve_linear(system, rhs);

  AffineInstance inst{MonotoneMap::affine(a, b), RealVector(y, space), a, b, target};
  return inst;
}

std::vector<double> solve_linear(std::vector<std::vector<double>> a, std::vector<double> b) {
  std::size_t n = b.size();
  require(a.size() == n, Errc::invalid_argument, "solve_linear: shape mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    require(std::abs(a[pivot][col]) > 1e-14, Errc::invalid_argument,
            "solve_linear: singular system");
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (std::size_t r = col + 1; r < n; ++r) {
      double m = a[r][col] / a[col][col];
      if (m == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= m * a[col][c];
      b[r] -= m * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return x;
}

double nonnegative_spectral_radius(const std::vector<std::vector<double>>& a, int iters) {
  std::size_t n = a.size();
  std::vector<double> v(n, 1.0), w(n);
  double radius = 0.0;
  for (int it = 0; it < iters; ++it) {
    double mx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += a[i][j] * v[j];
      w[i] = s;
      mx = std::max(mx, s);
    }
    if (mx == 0.0) return 0.0;
    radius = mx;
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / mx;
  }
  return radius;
}

}  // namespace isotone::approx
