#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "isotone/cone.hpp"

namespace isotone::check {

enum class Direction { Down, Up };

struct Violation {
  RealVector x;       // ordered pair x <= y
  RealVector y;
  RealVector member;  // the projection-set member witnessing the failure
  std::string explanation;
};

struct Report {
  ConeDescriptor cone;
  Direction direction;
  int pairs_tested = 0;
  std::uint64_t seed = 0;
  std::vector<Violation> violations;

  bool holds_on_samples() const { return violations.empty(); }
};

/// Deterministic ordered pair: x random, y = x + k with k a sampled cone
/// element (zero with small probability), so x <= y by construction.
std::pair<RealVector, RealVector> sample_ordered_pair(const ConeDescriptor& cone,
                                                      std::uint64_t seed, std::uint64_t index);

/// Downward monotonicity of the projection: every member of P(y) dominates
/// some member of P(x). Set-valued projections reduce to comparing smallest
/// representatives; single-valued ones compare directly. Circular pi/4 runs
/// always include the fixed R^3 witness pair, so the known violation cannot
/// be missed by sampling.
Report check_downward(const ConeDescriptor& cone, int pair_count, std::uint64_t seed);

/// Upward monotonicity: every member of P(x) is dominated by some member of
/// P(y); set-valued projections reduce to comparing largest representatives.
/// Sup-orthant runs with dim >= 2 include the fixed witness pair whose
/// largest representatives are not ordered.
Report check_upward(const ConeDescriptor& cone, int pair_count, std::uint64_t seed);

Report check(const ConeDescriptor& cone, Direction direction, int pair_count,
             std::uint64_t seed);

}  // namespace isotone::check
