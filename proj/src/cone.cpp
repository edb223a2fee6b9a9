#include "isotone/cone.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "isotone/errors.hpp"

namespace isotone {

namespace {

void validate(const CircularCone& cone) {
  require(cone.axis.size() >= 2, Errc::invalid_argument, "circular cone needs dimension >= 2");
  require(cone.half_angle > 0.0 && cone.half_angle < std::numbers::pi / 2.0,
          Errc::invalid_argument, "half_angle must lie in (0, pi/2)");
  double s = 0.0;
  for (double e : cone.axis) {
    require(std::isfinite(e), Errc::invalid_argument, "axis entries must be finite");
    s += e * e;
  }
  require(std::abs(std::sqrt(s) - 1.0) <= 1e-12, Errc::invalid_argument,
          "axis must be a unit vector");
}

void validate(const OrthantCone& cone) {
  require(cone.dim >= 1, Errc::invalid_argument, "orthant cone needs dimension >= 1");
}

}  // namespace

ConeDescriptor::ConeDescriptor(CircularCone cone) : cone_(std::move(cone)) {
  validate(std::get<CircularCone>(cone_));
}

ConeDescriptor::ConeDescriptor(OrthantCone cone) : cone_(std::move(cone)) {
  validate(std::get<OrthantCone>(cone_));
}

ConeDescriptor ConeDescriptor::circular(std::vector<double> axis, double half_angle) {
  return ConeDescriptor(CircularCone{std::move(axis), half_angle});
}

ConeDescriptor ConeDescriptor::orthant_sup(std::size_t dim) {
  return ConeDescriptor(OrthantCone{dim, Norm::sup()});
}

ConeDescriptor ConeDescriptor::orthant_lp(std::size_t dim, double p) {
  return ConeDescriptor(OrthantCone{dim, Norm::lp(p)});
}

std::size_t ConeDescriptor::dim() const {
  if (is_circular()) return std::get<CircularCone>(cone_).axis.size();
  return std::get<OrthantCone>(cone_).dim;
}

const CircularCone& ConeDescriptor::circular_cone() const {
  require(is_circular(), Errc::invalid_argument, "not a circular cone");
  return std::get<CircularCone>(cone_);
}

const OrthantCone& ConeDescriptor::orthant_cone() const {
  require(!is_circular(), Errc::invalid_argument, "not an orthant cone");
  return std::get<OrthantCone>(cone_);
}

bool contains(const ConeDescriptor& cone, const RealVector& x) {
  require(cone.dim() == x.dim(), Errc::dimension_mismatch, "contains: dimension mismatch");
  if (cone.is_circular()) {
    const auto& c = cone.circular_cone();
    double a = 0.0;
    double s = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) {
      a += x[i] * c.axis[i];
      s += x[i] * x[i];
    }
    // The zero vector belongs by the explicit {0} branch, never via the
    // angle ratio, which is undefined at 0.
    if (s == 0.0) return true;
    return a >= std::cos(c.half_angle) * std::sqrt(s) - kOrderTol;
  }
  for (std::size_t i = 0; i < x.dim(); ++i)
    if (x[i] < -kOrderTol) return false;
  return true;
}

bool leq(const ConeDescriptor& cone, const RealVector& x, const RealVector& y) {
  return contains(cone, sub(y, x));
}

RealVector lattice_join(const ConeDescriptor& cone, const RealVector& x, const RealVector& y) {
  require(!cone.is_circular(), Errc::unsupported,
          "lattice join is undefined for circular cones: their order is not a lattice");
  require(cone.dim() == x.dim() && x.dim() == y.dim(), Errc::dimension_mismatch,
          "lattice_join: dimension mismatch");
  std::vector<double> e(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) e[i] = std::max(x[i], y[i]);
  return RealVector(std::move(e), x.norm_kind());
}

}  // namespace isotone
