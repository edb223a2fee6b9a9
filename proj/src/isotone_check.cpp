#include "isotone/isotone_check.hpp"

#include <cmath>
#include <numbers>

#include "isotone/circular.hpp"
#include "isotone/errors.hpp"
#include "isotone/lp.hpp"
#include "isotone/rng.hpp"
#include "isotone/supnorm.hpp"

namespace isotone::check {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

RealVector sample_cone_element(const ConeDescriptor& cone, Rng& rng) {
  std::size_t dim = cone.dim();
  if (rng.chance(0.05)) {
    // Degenerate pair x = y now and then; the order is reflexive.
    Norm kind = cone.is_circular() ? Norm::lp(2.0) : cone.orthant_cone().norm_kind;
    return constant_vector(dim, 0.0, kind);
  }
  if (!cone.is_circular())
    return RealVector(rng.uniform_vector(dim, 0.0, 5.0), cone.orthant_cone().norm_kind);

  const CircularCone& c = cone.circular_cone();
  // Ray inside the cone: angle within the half-angle, scale bounded away
  // from zero so the built pair stays robustly ordered.
  std::vector<double> d;
  double nn = 0.0;
  do {
    d = rng.unit_vector(dim);
    double along = 0.0;
    for (std::size_t i = 0; i < dim; ++i) along += d[i] * c.axis[i];
    nn = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      d[i] -= along * c.axis[i];
      nn += d[i] * d[i];
    }
  } while (nn < 1e-12);
  double inv = 1.0 / std::sqrt(nn);
  double theta = rng.uniform(0.0, c.half_angle);
  double t = rng.uniform(0.05, 5.0);
  std::vector<double> e(dim);
  for (std::size_t i = 0; i < dim; ++i)
    e[i] = t * (std::cos(theta) * c.axis[i] + std::sin(theta) * d[i] * inv);
  return RealVector(std::move(e), Norm::lp(2.0));
}

Norm space_kind(const ConeDescriptor& cone) {
  return cone.is_circular() ? Norm::lp(2.0) : cone.orthant_cone().norm_kind;
}

// Extremal representative comparison realizing the set-valued definitions:
// downward reduces to smallest-vs-smallest, upward to largest-vs-largest;
// single-valued projections compare directly.
struct Comparison {
  RealVector rep_x;
  RealVector rep_y;
  bool ordered;
  const char* explanation;
};

Comparison compare(const ConeDescriptor& cone, Direction dir, const RealVector& x,
                   const RealVector& y) {
  if (cone.is_circular()) {
    const CircularCone& c = cone.circular_cone();
    RealVector px = circular::project(c, x);
    RealVector py = circular::project(c, y);
    bool ordered = leq(cone, px, py);
    return {px, py, ordered,
            "single-valued projection: P(x) must stay below P(y) for x below y"};
  }
  const OrthantCone& oc = cone.orthant_cone();
  if (oc.norm_kind.is_sup()) {
    if (dir == Direction::Down) {
      RealVector sx = sup::smallest_projection(x);
      RealVector sy = sup::smallest_projection(y);
      return {sx, sy, leq(cone, sx, sy),
              "smallest members must be ordered: every member of P(y) dominates "
              "smallest(y), which must dominate some member of P(x)"};
    }
    RealVector lx = sup::largest_projection(x);
    RealVector ly = sup::largest_projection(y);
    return {lx, ly, leq(cone, lx, ly),
            "largest members must be ordered: largest(x) needs a dominating member in P(y)"};
  }
  RealVector px = lp::project(with_norm(x, oc.norm_kind));
  RealVector py = lp::project(with_norm(y, oc.norm_kind));
  return {px, py, leq(cone, px, py),
          "single-valued projection: P(x) must stay below P(y) for x below y"};
}

void run_pair(Report& report, const ConeDescriptor& cone, Direction dir, const RealVector& x,
              const RealVector& y) {
  Comparison c = compare(cone, dir, x, y);
  if (c.ordered) return;
  // The member witnessing the failure: for downward it is the smaller
  // point's target in P(y) with nothing below it; for upward the member of
  // P(x) nothing dominates.
  RealVector member = dir == Direction::Down ? c.rep_y : c.rep_x;
  report.violations.push_back(Violation{x, y, member, c.explanation});
}

}  // namespace

std::pair<RealVector, RealVector> sample_ordered_pair(const ConeDescriptor& cone,
                                                      std::uint64_t seed, std::uint64_t index) {
  Rng rng(seed, index);
  RealVector x(rng.uniform_vector(cone.dim(), -5.0, 5.0), space_kind(cone));
  RealVector k = sample_cone_element(cone, rng);
  return {x, add(x, k)};
}

Report check(const ConeDescriptor& cone, Direction direction, int pair_count,
             std::uint64_t seed) {
  require(pair_count >= 0, Errc::invalid_argument, "pair_count must be nonnegative");
  Report report{cone, direction, 0, seed, {}};

  // Fixed witnesses first, so the known violations can never be missed.
  if (cone.is_circular()) {
    const CircularCone& c = cone.circular_cone();
    if (std::abs(c.half_angle - kQuarterPi) <= 1e-12 && cone.dim() >= 3) {
      circular::CounterexampleReport w = circular::monotonicity_witness(c);
      run_pair(report, cone, direction, w.lower, w.upper);
      ++report.pairs_tested;
    }
  } else if (cone.orthant_cone().norm_kind.is_sup() && cone.dim() >= 2 &&
             direction == Direction::Up) {
    // P(x) of (-2, 0, ...) contains (0, 2, ...), which no member of the
    // singleton P(0) dominates.
    std::vector<double> xe(cone.dim(), 0.0);
    xe[0] = -2.0;
    RealVector x(xe, Norm::sup());
    RealVector y = zeros_like(x);
    run_pair(report, cone, direction, x, y);
    ++report.pairs_tested;
  }

  for (int i = 0; i < pair_count; ++i) {
    auto [x, y] = sample_ordered_pair(cone, seed, static_cast<std::uint64_t>(i));
    run_pair(report, cone, direction, x, y);
    ++report.pairs_tested;
  }
  return report;
}

Report check_downward(const ConeDescriptor& cone, int pair_count, std::uint64_t seed) {
  return check(cone, Direction::Down, pair_count, seed);
}

Report check_upward(const ConeDescriptor& cone, int pair_count, std::uint64_t seed) {
  return check(cone, Direction::Up, pair_count, seed);
}

}  // namespace isotone::check
