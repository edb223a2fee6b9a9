#pragma once

#include <cstdint>

#include "isotone/cone.hpp"

namespace isotone::circular {

enum class Region { Inside, InsideNegative, Outside };

const char* region_name(Region r);

/// Which of the three projection branches applies to u: inside the cone,
/// inside the negated cone, or strictly between them.
Region classify(const CircularCone& cone, const RealVector& u);

/// Metric projection onto the cone. For half_angle == pi/4 this is the closed
/// form built from the axis component a = <u, n> and the perpendicular part
/// b = u - a n with r = |b|:
///
///   u in K -> u,   u in -K -> 0,   otherwise ((a + r) / 2) (n + b / r)
///
/// and the result lands on the boundary, <w, n> = cos(pi/4) |w|. Other half
/// angles are handled by a planar golden-section search; no closed form is
/// claimed for them.
RealVector project(const CircularCone& cone, const RealVector& u);

struct ViCheck {
  double min_inner;               // min over sampled z in K of <z - w, w - u>
  double orthogonality_residual;  // |<w, w - u>|
  int samples;
};

/// Samples the variational characterization of w = P(u): <z - w, w - u> >= 0
/// over cone rays (boundary angle x log-uniform radius, plus 0, the axis, w
/// and 2w, which realize the equality cases).
ViCheck verify_projection_vi(const CircularCone& cone, const RealVector& u, const RealVector& w,
                             int sample_count, std::uint64_t seed);

struct CounterexampleReport {
  RealVector lower;        // the smaller input of the ordered pair
  RealVector upper;        // the larger input
  RealVector proj_lower;
  RealVector proj_upper;
  RealVector difference;   // proj_upper - proj_lower
  double ratio;            // <difference, axis> / |difference|_2
  double threshold;        // cos(half_angle) = sqrt(2)/2
  bool order_holds_on_inputs;
  bool order_holds_on_outputs;

  bool reproduced() const { return order_holds_on_inputs && !order_holds_on_outputs; }
};

/// The fixed R^3 witness: an ordered pair whose projections onto the pi/4
/// cone are no longer ordered, so the metric projection is not
/// order-increasing.
CounterexampleReport monotonicity_witness();

/// Same witness rotated into the coordinates of an arbitrary pi/4 cone with
/// dim >= 3 (zero-padded beyond the three active directions).
CounterexampleReport monotonicity_witness(const CircularCone& cone);

}  // namespace isotone::circular
