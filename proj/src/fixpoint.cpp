#include "isotone/fixpoint.hpp"

#include "isotone/errors.hpp"

namespace isotone::order {

namespace {

IterationTrace iterate(const std::function<RealVector(const RealVector&)>& selection,
                       const ConeDescriptor& cone, const RealVector& start,
                       const RealVector* ceiling, bool downward, double tol, int max_iter) {
  require(tol >= 0.0, Errc::invalid_argument, "tolerance must be nonnegative");
  require(max_iter >= 1, Errc::invalid_argument, "max_iter must be positive");

  IterationTrace trace;
  trace.iterates.push_back(start);

  RealVector current = start;
  for (int k = 0; k < max_iter; ++k) {
    RealVector next = selection(current);
    double residual = norm(sub(next, current));
    trace.residuals.push_back(residual);
    if (residual <= tol) {
      // Return the point whose selection step is already within tol, so the
      // result carries its own fixed-point residual.
      trace.converged = true;
      return trace;
    }
    bool ordered = downward ? leq(cone, next, current) : leq(cone, current, next);
    if (!ordered) ++trace.order_violations;
    if (ceiling && !leq(cone, next, *ceiling)) ++trace.order_violations;
    trace.iterates.push_back(next);
    current = next;
  }
  return trace;
}

}  // namespace

IterationTrace iterate_downward(const std::function<RealVector(const RealVector&)>& selection,
                                const ConeDescriptor& cone, const RealVector& y_star,
                                double tol, int max_iter) {
  require(leq(cone, selection(y_star), y_star), Errc::invalid_argument,
          "iterate_downward: selection(y_star) must lie below y_star");
  return iterate(selection, cone, y_star, nullptr, true, tol, max_iter);
}

IterationTrace iterate_upward(const std::function<RealVector(const RealVector&)>& selection,
                              const ConeDescriptor& cone, const RealVector& y_star,
                              double tol, int max_iter) {
  RealVector start = zeros_like(y_star);
  require(leq(cone, start, y_star), Errc::invalid_argument,
          "iterate_upward: the ceiling must dominate the origin");
  return iterate(selection, cone, start, &y_star, false, tol, max_iter);
}

}  // namespace isotone::order
