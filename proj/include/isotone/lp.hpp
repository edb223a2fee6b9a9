#pragma once

#include <cstdint>

#include "isotone/vector.hpp"

namespace isotone::lp {

/// Metric projection onto the nonnegative cone of an lp space, 1 <= p < inf.
/// Single-valued: the positive part x^+.
RealVector project(const RealVector& x);

/// |x - x^+|_p, the norm of the negative part.
double distance_to_cone(const RealVector& x);

/// Image of x under the normalized duality pairing: <x, j> = |x|_p^2 and
/// |j|_q = |x|_p with q = p/(p-1). Defined for 1 < p < inf via
/// j_i = |x|_p^(2-p) |x_i|^(p-1) sign(x_i); j(0) = 0. Both identities are
/// checked at construction.
struct DualityVector {
  RealVector source;
  double p;
  RealVector image;  // norm kind is the conjugate exponent q
};

DualityVector duality_map(const RealVector& x);

struct OrthogonalityReport {
  int samples;
  double max_abs_pairing;  // max |<j(x), y>| over disjoint-support pairs x, y >= 0
};

/// x and y with disjoint supports have meet zero in the orthant order; the
/// duality image of x must then annihilate y.
OrthogonalityReport check_orthogonal(double p, std::size_t dim, int sample_count,
                                     std::uint64_t seed);

struct SubdualReport {
  int samples;
  double min_pairing;  // min <j(x), z> over sampled x, z in the cone
};

/// The duality map carries the cone into its dual cone: <j(x), z> >= 0 for
/// x, z >= 0.
SubdualReport check_subdual(double p, std::size_t dim, int sample_count, std::uint64_t seed);

struct PlusPartOptimality {
  double pairing_with_plus;      // <x^+, j(x^-)>; zero since supports are disjoint
  double min_pairing_over_cone;  // min over sampled z >= 0 of <z, j(x^-)>
  double max_distance_excess;    // max over samples of |x - x^+| - |x - z|
  int samples;
};

/// Certifies x^+ as a nearest cone point through the duality pairing with
/// the negative part x^- = x^+ - x, and cross-checks distances on samples.
PlusPartOptimality verify_plus_part_optimal(const RealVector& x, int sample_count,
                                            std::uint64_t seed);

}  // namespace isotone::lp
