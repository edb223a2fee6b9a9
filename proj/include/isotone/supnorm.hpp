#pragma once

#include <cstddef>
#include <vector>

#include "isotone/vector.hpp"

namespace isotone::sup {

/// Index profile of x against the nonnegative cone of a sup-normed space:
/// the nonpositive coordinates, the worst violation magnitude (which equals
/// the distance to the cone), and the coordinates attaining it (pinned to
/// zero by every nearest point).
struct ProjectionProfile {
  std::vector<std::size_t> nonpositive;  // { i : x_i <= 0 }
  double max_violation = 0.0;            // max |x_i| over nonpositive, 0 if empty
  std::vector<std::size_t> binding;      // { i in nonpositive : |x_i| == max_violation }
};

ProjectionProfile profile(const RealVector& x);

/// Membership in the set of nearest nonnegative points: z >= 0, z_i = 0 on
/// the binding set, |z_i - x_i| <= max_violation everywhere.
bool in_projection_set(const RealVector& x, const RealVector& z);

/// Componentwise-least nearest point: max(x^+_i - max_violation, 0).
RealVector smallest_projection(const RealVector& x);

/// Componentwise-greatest nearest point: x_i + max_violation. It exists in
/// the finite-dimensional discretization (continuity of the infinite
/// setting is dropped here) and makes upward-monotonicity checks exact.
RealVector largest_projection(const RealVector& x);

/// Distance to the nonnegative cone, = max_violation = |x - x^+|_sup.
double distance_to_cone(const RealVector& x);

struct ProjectionSet {
  RealVector source;
  ProjectionProfile profile;
  RealVector plus;      // x^+
  RealVector smallest;
  RealVector largest;

  bool singleton() const;  // true exactly when the source is already nonnegative
};

ProjectionSet projection_set(const RealVector& x);

}  // namespace isotone::sup
