#include "isotone/supnorm.hpp"

#include <algorithm>
#include <cmath>

#include "isotone/cone.hpp"
#include "isotone/errors.hpp"

namespace isotone::sup {

namespace {

void require_sup(const RealVector& x, const char* op) {
  require(x.norm_kind().is_sup(), Errc::unsupported,
          std::string(op) + " requires a sup-normed vector");
}

}  // namespace

ProjectionProfile profile(const RealVector& x) {
  require_sup(x, "profile");
  ProjectionProfile p;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (x[i] <= 0.0) {
      p.nonpositive.push_back(i);
      p.max_violation = std::max(p.max_violation, -x[i]);
    }
  }
  for (std::size_t i : p.nonpositive)
    if (-x[i] == p.max_violation) p.binding.push_back(i);
  return p;
}

bool in_projection_set(const RealVector& x, const RealVector& z) {
  require_sup(x, "in_projection_set");
  require(x.dim() == z.dim(), Errc::dimension_mismatch, "in_projection_set: dimension mismatch");
  ProjectionProfile p = profile(x);
  for (std::size_t i = 0; i < z.dim(); ++i) {
    if (z[i] < -kOrderTol) return false;
    if (std::abs(z[i] - x[i]) > p.max_violation + kOrderTol) return false;
  }
  // Implied by the bound above, but part of the contract.
  for (std::size_t i : p.binding)
    if (std::abs(z[i]) > kOrderTol) return false;
  return true;
}

RealVector smallest_projection(const RealVector& x) {
  require_sup(x, "smallest_projection");
  ProjectionProfile p = profile(x);
  std::vector<double> e(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i)
    e[i] = std::max(std::max(x[i], 0.0) - p.max_violation, 0.0);
  return RealVector(std::move(e), x.norm_kind());
}

RealVector largest_projection(const RealVector& x) {
  require_sup(x, "largest_projection");
  ProjectionProfile p = profile(x);
  std::vector<double> e(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) e[i] = x[i] + p.max_violation;
  return RealVector(std::move(e), x.norm_kind());
}

double distance_to_cone(const RealVector& x) {
  require_sup(x, "distance_to_cone");
  return profile(x).max_violation;
}

bool ProjectionSet::singleton() const {
  return smallest.entries() == largest.entries();
}

ProjectionSet projection_set(const RealVector& x) {
  require_sup(x, "projection_set");
  return ProjectionSet{x, profile(x), plus_part(x), smallest_projection(x),
                       largest_projection(x)};
}

}  // namespace isotone::sup
