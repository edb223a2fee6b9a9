#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "isotone/cone.hpp"
#include "isotone/fixpoint.hpp"

namespace isotone::approx {

/// Nondecreasing piecewise-linear scalar function given by breakpoints;
/// constant extension outside the table.
class PiecewiseTable {
 public:
  explicit PiecewiseTable(std::vector<std::pair<double, double>> points);
  double operator()(double t) const;
  const std::vector<std::pair<double, double>>& points() const { return points_; }

 private:
  std::vector<std::pair<double, double>> points_;
};

/// Order-increasing maps for the orthant order: affine with entrywise
/// nonnegative matrix, or componentwise nondecreasing tables. Monotonicity
/// of the affine family is additionally spot-checked on random ordered pairs
/// at load.
class MonotoneMap {
 public:
  static MonotoneMap affine(std::vector<std::vector<double>> a, std::vector<double> b);
  static MonotoneMap componentwise(std::vector<PiecewiseTable> tables);

  RealVector operator()(const RealVector& x) const;
  std::size_t dim() const;
  bool is_affine() const { return affine_; }
  const std::vector<std::vector<double>>& matrix() const;
  const std::vector<double>& offset() const;
  const std::vector<PiecewiseTable>& tables() const { return tables_; }

 private:
  MonotoneMap() = default;

  bool affine_ = false;
  std::vector<std::vector<double>> a_;
  std::vector<double> b_;
  std::vector<PiecewiseTable> tables_;
};

enum class Selection {
  SmallestRepresentative,  // smallest member of the projection set
  PlusPart,                // (f(x))^+ directly
};

struct BestApproxResult {
  RealVector x_star;
  RealVector f_at_x_star;
  double achieved_distance = 0.0;       // |f(x*) - x*|
  double cone_distance = 0.0;           // dist(f(x*), K)
  double fixed_point_residual = 0.0;    // |selection(x*) - x*|
  double vi_min_inner = 0.0;            // sampled variational-inequality minimum
  double complementarity_residual = 0.0;  // exact KKT form; NaN unless p == 2
  order::IterationTrace trace;
  bool converged = false;
  bool stalled = false;
  bool certified = false;  // converged and |achieved - cone| <= cert_tol

  double certificate_gap() const;
};

/// Descending best-approximation solver: iterates the smallest member of
/// P(f(x)) (or (f(x))^+) downward from y_star. Requires y_star in the cone
/// and f(y_star) <= y_star. The convergence certificate is the distance
/// identity |f(x*) - x*| = dist(f(x*), K).
BestApproxResult solve_down(const OrthantCone& cone, const MonotoneMap& f,
                            const RealVector& y_star, double tol = 1e-10, int max_iter = 100000,
                            Selection selection = Selection::SmallestRepresentative,
                            double cert_tol = 1e-8, int vi_samples = 2000,
                            std::uint64_t vi_seed = 0);

/// Ascending solver for single-valued (lp) projections: iterates (f(x))^+
/// upward from 0 below the ceiling y_star. Requires (f(y_star))^+ <= y_star.
BestApproxResult solve_up(const OrthantCone& cone, const MonotoneMap& f,
                          const RealVector& y_star, double tol = 1e-10, int max_iter = 100000,
                          double cert_tol = 1e-8, int vi_samples = 2000,
                          std::uint64_t vi_seed = 0);

struct ViReport {
  double vi_min_inner = 0.0;
  double complementarity_residual = 0.0;  // NaN unless l2 orthant
  int samples = 0;
};

/// Samples <z - x*, j(x* - f(x*))> over cone points; j is the identity in
/// the Hilbert cases (l2, circular) and the lp duality image otherwise. On
/// the l2 orthant also evaluates the exact complementarity reformulation
/// max_i |min(x*_i, (x* - f)_i)|.
ViReport verify_vi(const ConeDescriptor& cone, const RealVector& x_star,
                   const RealVector& f_value, int sample_count, std::uint64_t seed);

struct AffineInstance {
  MonotoneMap map;
  RealVector y_star;
  std::vector<std::vector<double>> a;
  std::vector<double> b;
  double spectral_radius = 0.0;
};

/// Random affine instance: entrywise nonnegative A scaled to the requested
/// spectral radius, b uniform, and y_star = (I - A)^{-1}(|b| + 1), which
/// puts f(y_star) strictly below y_star.
AffineInstance random_affine_instance(std::size_t dim, double radius_lo, double radius_hi,
                                      Norm space, std::uint64_t seed, std::uint64_t index);

/// Dense Gaussian elimination with partial pivoting (the instance sizes here
/// are tiny).
std::vector<double> solve_linear(std::vector<std::vector<double>> a, std::vector<double> b);

/// Perron-root estimate of an entrywise nonnegative matrix by power
/// iteration.
double nonnegative_spectral_radius(const std::vector<std::vector<double>>& a, int iters = 500);

}  // namespace isotone::approx
