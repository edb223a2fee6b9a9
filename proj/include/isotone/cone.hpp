#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "isotone/vector.hpp"

namespace isotone {

/// Boundary slack for closed-cone membership. Closed-form projections land
/// exactly on the boundary; the slack absorbs the final rounding step.
inline constexpr double kOrderTol = 1e-12;

/// Ice-cream cone around a unit axis: {0} together with every vector whose
/// angle with the axis is at most half_angle.
struct CircularCone {
  std::vector<double> axis;  // unit in l2 within 1e-12
  double half_angle;         // in (0, pi/2); pi/4 admits a closed-form projection
};

/// Nonnegative orthant of an lp or sup normed space.
struct OrthantCone {
  std::size_t dim;
  Norm norm_kind;
};

class ConeDescriptor {
 public:
  explicit ConeDescriptor(CircularCone cone);
  explicit ConeDescriptor(OrthantCone cone);

  static ConeDescriptor circular(std::vector<double> axis, double half_angle);
  static ConeDescriptor orthant_sup(std::size_t dim);
  static ConeDescriptor orthant_lp(std::size_t dim, double p);

  std::size_t dim() const;
  bool is_circular() const { return std::holds_alternative<CircularCone>(cone_); }
  const CircularCone& circular_cone() const;
  const OrthantCone& orthant_cone() const;

 private:
  std::variant<CircularCone, OrthantCone> cone_;
};

/// Exact membership, with the zero vector always contained. The circular test
/// is <x, axis> >= cos(half_angle)*|x|_2 - tol; the orthant test is
/// entrywise x_i >= -tol.
bool contains(const ConeDescriptor& cone, const RealVector& x);

/// Cone-induced partial order: x <= y iff y - x lies in the cone.
bool leq(const ConeDescriptor& cone, const RealVector& x, const RealVector& y);

/// Componentwise maximum, the least upper bound in the orthant order.
/// Rejected for circular cones, whose order is not a lattice.
RealVector lattice_join(const ConeDescriptor& cone, const RealVector& x, const RealVector& y);

}  // namespace isotone
