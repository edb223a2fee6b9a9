// Test-only oracles, independent of the library's projection formulas:
// direction enumeration with radial golden-section for the circular cone,
// grid search for the sup-norm projection set, per-coordinate descent for
// the lp projection, and a separate dense solve for linear fixed points.
#pragma once

#include <cstddef>
#include <vector>

#include "isotone/cone.hpp"

namespace oracles {

// Brute-force nearest cone point: dense angle grid over the plane spanned by
// axis and u (step <= 1e-3 rad), radial golden-section per ray, then local
// refinement of the best ray.
isotone::RealVector project_circular(const isotone::CircularCone& cone,
                                     const isotone::RealVector& u, double theta_step = 1e-3);

// Full-dimension cross-check of the planar reduction: coarse grid over both
// the axis angle and the perpendicular direction (dimension 3 only).
isotone::RealVector project_circular_full3d(const isotone::CircularCone& cone,
                                            const isotone::RealVector& u);

// Minimum sup-distance from x to the nonnegative grid {0, step, ..., hi}^dim.
double sup_grid_min_distance(const std::vector<double>& x, double step, double hi);

// Minimizes sum |x_i - z_i|^p over z >= 0 by cyclic per-coordinate
// golden-section searches; never consults the positive-part formula.
std::vector<double> lp_coordinate_descent(const std::vector<double>& x, double p,
                                          int sweeps = 40);

// Gauss-Jordan solve of (I - A) x = b, written apart from the library's
// elimination routine.
std::vector<double> fixed_point_of_affine(const std::vector<std::vector<double>>& a,
                                          const std::vector<double>& b);

}  // namespace oracles
