#include <doctest.h>

#include <cmath>
#include <numbers>

#include "isotone/circular.hpp"
#include "isotone/isotone_check.hpp"
#include "isotone/lp.hpp"
#include "isotone/supnorm.hpp"

using namespace isotone;
using check::Direction;

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

}  // namespace

TEST_CASE("sampled pairs are ordered by construction") {
  for (const auto& cone :
       {ConeDescriptor::orthant_sup(4), ConeDescriptor::orthant_lp(4, 2.0),
        ConeDescriptor::circular({1.0, 0.0, 0.0, 0.0}, kQuarterPi)}) {
    for (int i = 0; i < 500; ++i) {
      auto [x, y] = check::sample_ordered_pair(cone, 99, static_cast<std::uint64_t>(i));
      CHECK(leq(cone, x, y));
    }
  }
}

TEST_CASE("sup orthant: downward holds, upward is violated") {
  ConeDescriptor cone = ConeDescriptor::orthant_sup(5);
  auto down = check::check_downward(cone, 1000, 42);
  CHECK(down.holds_on_samples());
  CHECK(down.pairs_tested == 1000);

  auto up = check::check_upward(cone, 1000, 42);
  CHECK_FALSE(up.holds_on_samples());
  // The fixed witness pair starts the run: x = (-2, 0, ...), y = 0.
  REQUIRE(!up.violations.empty());
  const auto& v = up.violations.front();
  CHECK(v.x[0] == -2.0);
  CHECK(v.y.entries() == std::vector<double>(5, 0.0));
  // Re-validate the stored violation from its own fields.
  CHECK(sup::in_projection_set(v.x, v.member));
  CHECK_FALSE(leq(cone, v.member, sup::largest_projection(v.y)));
}

TEST_CASE("lp orthant: increasing both ways") {
  for (double p : {1.0, 1.5, 2.0, 3.0}) {
    ConeDescriptor cone = ConeDescriptor::orthant_lp(5, p);
    CHECK(check::check_downward(cone, 1000, 7).holds_on_samples());
    CHECK(check::check_upward(cone, 1000, 7).holds_on_samples());
  }
}

TEST_CASE("circular cone: violated in both directions, witness always present") {
  ConeDescriptor cone = ConeDescriptor::circular({1.0, 0.0, 0.0}, kQuarterPi);
  for (auto dir : {Direction::Down, Direction::Up}) {
    auto report = check::check(cone, dir, 50, 5);
    CHECK_FALSE(report.holds_on_samples());
    REQUIRE(!report.violations.empty());
    const auto& v = report.violations.front();
    // The injected pair is the fixed witness.
    auto w = circular::monotonicity_witness();
    CHECK(v.x.entries() == w.lower.entries());
    CHECK(v.y.entries() == w.upper.entries());
    REQUIRE(leq(cone, v.x, v.y));
    CHECK_FALSE(leq(cone, circular::project(cone.circular_cone(), v.x),
                    circular::project(cone.circular_cone(), v.y)));
  }
}

TEST_CASE("reports are deterministic in (cone, pairs, seed)") {
  ConeDescriptor cone = ConeDescriptor::orthant_sup(3);
  auto a = check::check_upward(cone, 200, 13);
  auto b = check::check_upward(cone, 200, 13);
  REQUIRE(a.violations.size() == b.violations.size());
  for (std::size_t i = 0; i < a.violations.size(); ++i) {
    CHECK(a.violations[i].x.entries() == b.violations[i].x.entries());
    CHECK(a.violations[i].y.entries() == b.violations[i].y.entries());
    CHECK(a.violations[i].member.entries() == b.violations[i].member.entries());
  }
  CHECK(a.pairs_tested == b.pairs_tested);
}
