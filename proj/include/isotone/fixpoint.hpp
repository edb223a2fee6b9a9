#pragma once

#include <functional>
#include <vector>

#include "isotone/cone.hpp"

namespace isotone::order {

struct IterationTrace {
  std::vector<RealVector> iterates;
  std::vector<double> residuals;  // |x_{k+1} - x_k| per step, in the space norm
  bool converged = false;
  int order_violations = 0;

  const RealVector& last() const { return iterates.back(); }
};

/// Monotone downward iteration x_{k+1} = selection(x_k) from x_0 = y_star.
/// Requires selection(y_star) <= y_star; aborts otherwise. Each step is
/// checked against the cone order and violations are counted (diagnostic,
/// the run continues). Converges when |selection(x) - x| <= tol, returning
/// that x, so the fixed-point residual of the result is itself <= tol.
IterationTrace iterate_downward(const std::function<RealVector(const RealVector&)>& selection,
                                const ConeDescriptor& cone, const RealVector& y_star,
                                double tol = 1e-10, int max_iter = 100000);

/// Upward companion used by the ascending solvers: starts at 0, requires
/// iterates to stay below the ceiling y_star; order and bound violations are
/// counted.
IterationTrace iterate_upward(const std::function<RealVector(const RealVector&)>& selection,
                              const ConeDescriptor& cone, const RealVector& y_star,
                              double tol = 1e-10, int max_iter = 100000);

}  // namespace isotone::order
