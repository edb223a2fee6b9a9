#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace oracles {

using isotone::CircularCone;
using isotone::Norm;
using isotone::RealVector;

namespace {

constexpr double kInvPhi = 0.6180339887498949;

// min over t in [0, hi] of |u - t d|^2 expressed through planar coordinates:
// dist2(t) = (a - t cos(theta))^2 + (r - t sin(theta))^2.
double radial_golden(double a, double r, double theta, double hi, double* best_t) {
  auto dist2 = [&](double t) {
    double da = a - t * std::cos(theta);
    double dr = r - t * std::sin(theta);
    return da * da + dr * dr;
  };
  double lo = 0.0;
  double x1 = hi - kInvPhi * hi;
  double x2 = kInvPhi * hi;
  double f1 = dist2(x1), f2 = dist2(x2);
  for (int it = 0; it < 90 && hi - lo > 1e-14 * (1.0 + hi); ++it) {
    if (f1 > f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = dist2(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = dist2(x1);
    }
  }
  *best_t = 0.5 * (lo + hi);
  double d0 = dist2(0.0);
  double dm = dist2(*best_t);
  if (d0 <= dm) {
    *best_t = 0.0;
    return d0;
  }
  return dm;
}

struct Planar {
  double along;
  double perp;
  std::vector<double> perp_unit;  // empty when u is on the axis line
};

Planar split(const CircularCone& cone, const RealVector& u) {
  Planar s;
  s.along = 0.0;
  for (std::size_t i = 0; i < u.dim(); ++i) s.along += u[i] * cone.axis[i];
  std::vector<double> perp(u.dim());
  double sq = 0.0;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    perp[i] = u[i] - s.along * cone.axis[i];
    sq += perp[i] * perp[i];
  }
  s.perp = std::sqrt(sq);
  if (s.perp > 1e-14) {
    for (auto& e : perp) e /= s.perp;
    s.perp_unit = std::move(perp);
  }
  return s;
}

}  // namespace

RealVector project_circular(const CircularCone& cone, const RealVector& u, double theta_step) {
  Planar s = split(cone, u);
  double unorm = std::sqrt(s.along * s.along + s.perp * s.perp);
  double t_hi = 1.5 * unorm + 1.0;

  if (s.perp_unit.empty()) {
    // Axis line: scan rays anyway (any perpendicular direction is as good);
    // the optimum is t = max(0, along cos(theta)) along the axis plane.
    std::vector<double> e(u.dim(), 0.0);
    std::size_t j = cone.axis[0] * cone.axis[0] < 0.5 ? 0 : 1;
    e[j] = 1.0;
    double along = 0.0;
    for (std::size_t i = 0; i < u.dim(); ++i) along += e[i] * cone.axis[i];
    double nn = 0.0;
    for (std::size_t i = 0; i < u.dim(); ++i) {
      e[i] -= along * cone.axis[i];
      nn += e[i] * e[i];
    }
    for (auto& v : e) v /= std::sqrt(nn);
    s.perp_unit = std::move(e);
  }

  int steps = std::max(2, static_cast<int>(std::ceil(cone.half_angle / theta_step)));
  double best_theta = 0.0, best_t = 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= steps; ++k) {
    double theta = cone.half_angle * static_cast<double>(k) / steps;
    double t;
    double d = radial_golden(s.along, s.perp, theta, t_hi, &t);
    if (d < best) {
      best = d;
      best_theta = theta;
      best_t = t;
    }
  }

  // Refine the winning ray with a golden-section pass over the angle.
  double h = cone.half_angle / steps;
  double lo = std::max(0.0, best_theta - h);
  double hi = std::min(cone.half_angle, best_theta + h);
  auto at = [&](double theta, double* t_out) {
    return radial_golden(s.along, s.perp, theta, t_hi, t_out);
  };
  for (int it = 0; it < 80 && hi - lo > 1e-14; ++it) {
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double t1, t2;
    double f1 = at(x1, &t1), f2 = at(x2, &t2);
    if (f1 > f2)
      lo = x1;
    else
      hi = x2;
  }
  double theta = 0.5 * (lo + hi);
  double t;
  double d = at(theta, &t);
  if (d < best) {
    best_theta = theta;
    best_t = t;
  }

  std::vector<double> w(u.dim());
  double c = std::cos(best_theta), sn = std::sin(best_theta);
  for (std::size_t i = 0; i < u.dim(); ++i)
    w[i] = best_t * (c * cone.axis[i] + sn * s.perp_unit[i]);
  return RealVector(std::move(w), Norm::lp(2.0));
}

RealVector project_circular_full3d(const CircularCone& cone, const RealVector& u) {
  if (u.dim() != 3) throw std::invalid_argument("full3d oracle is for dimension 3");
  // Orthonormal completion of the axis.
  std::vector<std::vector<double>> frame;
  for (std::size_t j = 0; j < 3 && frame.size() < 2; ++j) {
    std::vector<double> cand(3, 0.0);
    cand[j] = 1.0;
    double along = 0.0;
    for (std::size_t i = 0; i < 3; ++i) along += cand[i] * cone.axis[i];
    for (std::size_t i = 0; i < 3; ++i) cand[i] -= along * cone.axis[i];
    for (const auto& f : frame) {
      double fa = 0.0;
      for (std::size_t i = 0; i < 3; ++i) fa += cand[i] * f[i];
      for (std::size_t i = 0; i < 3; ++i) cand[i] -= fa * f[i];
    }
    double nn = 0.0;
    for (double e : cand) nn += e * e;
    if (nn < 1e-8) continue;
    for (auto& e : cand) e /= std::sqrt(nn);
    frame.push_back(std::move(cand));
  }

  double unorm = isotone::norm_l2(u);
  double t_hi = 1.5 * unorm + 1.0;
  const int theta_steps = 400;
  const int psi_steps = 720;
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> best_w(3, 0.0);
  std::vector<double> d(3);
  for (int a = 0; a <= theta_steps; ++a) {
    double theta = cone.half_angle * static_cast<double>(a) / theta_steps;
    double ct = std::cos(theta), st = std::sin(theta);
    for (int b = 0; b < psi_steps; ++b) {
      double psi = 2.0 * std::numbers::pi * static_cast<double>(b) / psi_steps;
      double cp = std::cos(psi), sp = std::sin(psi);
      for (std::size_t i = 0; i < 3; ++i)
        d[i] = ct * cone.axis[i] + st * (cp * frame[0][i] + sp * frame[1][i]);
      // Radial optimum by a coarse golden pass.
      double inner = 0.0;
      for (std::size_t i = 0; i < 3; ++i) inner += u[i] * d[i];
      double t = std::clamp(inner, 0.0, t_hi);
      double dist2 = 0.0;
      for (std::size_t i = 0; i < 3; ++i) {
        double diff = u[i] - t * d[i];
        dist2 += diff * diff;
      }
      if (dist2 < best) {
        best = dist2;
        for (std::size_t i = 0; i < 3; ++i) best_w[i] = t * d[i];
      }
    }
  }
  return RealVector(std::move(best_w), Norm::lp(2.0));
}

double sup_grid_min_distance(const std::vector<double>& x, double step, double hi) {
  std::size_t dim = x.size();
  int cells = static_cast<int>(std::lround(hi / step));
  std::vector<int> idx(dim, 0);
  double best = std::numeric_limits<double>::infinity();
  while (true) {
    double d = 0.0;
    for (std::size_t i = 0; i < dim; ++i)
      d = std::max(d, std::abs(idx[i] * step - x[i]));
    best = std::min(best, d);
    std::size_t k = 0;
    while (k < dim && ++idx[k] > cells) idx[k++] = 0;
    if (k == dim) break;
  }
  return best;
}

std::vector<double> lp_coordinate_descent(const std::vector<double>& x, double p, int sweeps) {
  std::vector<double> z(x.size(), 0.0);
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      auto cost = [&](double v) { return std::pow(std::abs(x[i] - v), p); };
      double lo = 0.0, hi = std::max(2.0 * std::abs(x[i]), 1.0);
      for (int it = 0; it < 120 && hi - lo > 1e-15 * (1.0 + hi); ++it) {
        double a = hi - kInvPhi * (hi - lo);
        double b = lo + kInvPhi * (hi - lo);
        if (cost(a) > cost(b))
          lo = a;
        else
          hi = b;
      }
      z[i] = 0.5 * (lo + hi);
      if (cost(0.0) <= cost(z[i])) z[i] = 0.0;
    }
  }
  return z;
}

std::vector<double> fixed_point_of_affine(const std::vector<std::vector<double>>& a,
                                          const std::vector<double>& b) {
  std::size_t n = b.size();
  std::vector<std::vector<double>> m(n, std::vector<double>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = (i == j ? 1.0 : 0.0) - a[i][j];
    m[i][n] = b[i];
  }
  // Gauss-Jordan with row pivoting.
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    if (std::abs(m[pivot][col]) < 1e-14)
      throw std::invalid_argument("singular system in fixed_point_of_affine");
    std::swap(m[col], m[pivot]);
    double d = m[col][col];
    for (auto& e : m[col]) e /= d;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      double f = m[r][col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c <= n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = m[i][n];
  return out;
}

}  // namespace oracles
