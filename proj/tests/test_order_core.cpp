#include <doctest.h>

#include <cmath>
#include <numbers>

#include "isotone/cone.hpp"
#include "isotone/errors.hpp"
#include "isotone/rng.hpp"

using namespace isotone;

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;
const double kRt2 = std::sqrt(2.0);

RealVector vec2(double a, double b, Norm kind) { return RealVector({a, b}, kind); }

}  // namespace

TEST_CASE("norms: lp and sup") {
  CHECK(norm(vec2(3.0, -4.0, Norm::lp(2.0))) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(norm(vec2(3.0, -4.0, Norm::sup())) == 4.0);
  RealVector x({1.0, 1.0 / kRt2, -1.0 / kRt2}, Norm::lp(2.0));
  CHECK(norm(x) == doctest::Approx(kRt2).epsilon(1e-15));
  CHECK(norm(vec2(-1.0, -2.0, Norm::lp(1.0))) == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("vector validation") {
  CHECK_THROWS_AS(RealVector({}, Norm::sup()), Error);
  CHECK_THROWS_AS(RealVector({1.0, std::nan("")}, Norm::sup()), Error);
  CHECK_THROWS_AS(Norm::lp(0.5), Error);
  CHECK(norm(RealVector({0.0, 0.0}, Norm::lp(3.0))) == 0.0);
}

TEST_CASE("circular cone membership") {
  ConeDescriptor k = ConeDescriptor::circular({1.0, 0.0, 0.0}, kQuarterPi);
  // Boundary ray: the ratio is exactly sqrt(2)/2.
  CHECK(contains(k, RealVector({1.0, 1.0, 0.0}, Norm::lp(2.0))));
  CHECK_FALSE(contains(k, RealVector({0.0, 1.0, 0.0}, Norm::lp(2.0))));
  CHECK(contains(k, RealVector({0.0, 0.0, 0.0}, Norm::lp(2.0))));
  CHECK(contains(k, RealVector({5.0, 0.0, 0.0}, Norm::lp(2.0))));
  CHECK_FALSE(contains(k, RealVector({-5.0, 0.0, 0.0}, Norm::lp(2.0))));
  CHECK_THROWS_AS(contains(k, vec2(1.0, 1.0, Norm::lp(2.0))), Error);
}

TEST_CASE("cone descriptor validation") {
  CHECK_THROWS_AS(ConeDescriptor::circular({1.0, 1.0, 0.0}, kQuarterPi), Error);  // not unit
  CHECK_THROWS_AS(ConeDescriptor::circular({1.0, 0.0, 0.0}, 2.0), Error);  // angle too wide
  CHECK_THROWS_AS(ConeDescriptor(OrthantCone{0, Norm::sup()}), Error);
}

TEST_CASE("orthant membership and order") {
  ConeDescriptor k = ConeDescriptor::orthant_sup(2);
  CHECK(contains(k, vec2(0.0, 1.0, Norm::sup())));
  CHECK_FALSE(contains(k, vec2(-0.1, 1.0, Norm::sup())));
  CHECK(leq(k, vec2(0.0, 1.0, Norm::sup()), vec2(1.0, 2.0, Norm::sup())));
  CHECK_FALSE(leq(k, vec2(1.0, 2.0, Norm::sup()), vec2(0.0, 1.0, Norm::sup())));
}

TEST_CASE("the ordered pair behind the counterexample") {
  ConeDescriptor k = ConeDescriptor::circular({1.0, 0.0, 0.0}, kQuarterPi);
  RealVector upper({1.0, kRt2, 0.0}, Norm::lp(2.0));
  RealVector lower({0.0, 1.0 / kRt2, 1.0 / kRt2}, Norm::lp(2.0));
  CHECK(leq(k, lower, upper));
  CHECK(leq(k, upper, upper));  // reflexive: 0 is in the cone
}

TEST_CASE("lattice join") {
  ConeDescriptor k = ConeDescriptor::orthant_sup(2);
  RealVector jn = lattice_join(k, vec2(1.0, -2.0, Norm::sup()), vec2(0.0, 3.0, Norm::sup()));
  CHECK(jn.entries() == std::vector<double>{1.0, 3.0});
  RealVector x = vec2(0.5, -0.25, Norm::sup());
  CHECK(lattice_join(k, x, x).entries() == x.entries());
  // x v 0 is the positive part.
  RealVector zero = zeros_like(x);
  CHECK(lattice_join(k, x, zero).entries() == plus_part(x).entries());

  ConeDescriptor circ = ConeDescriptor::circular({1.0, 0.0, 0.0}, kQuarterPi);
  RealVector a({1.0, 0.0, 0.0}, Norm::lp(2.0));
  CHECK_THROWS_AS(lattice_join(circ, a, a), Error);
}

TEST_CASE("partial order axioms on sampled triples") {
  auto run = [](const ConeDescriptor& k, Norm kind) {
    for (int i = 0; i < 1000; ++i) {
      Rng rng(2024, static_cast<std::uint64_t>(i));
      RealVector x(rng.uniform_vector(k.dim(), -5.0, 5.0), kind);
      CHECK(leq(k, x, x));  // reflexive
      // Build an exact chain x <= y <= z and check transitivity.
      RealVector y = add(x, RealVector(rng.uniform_vector(k.dim(), 0.0, 3.0), kind));
      RealVector z = add(y, RealVector(rng.uniform_vector(k.dim(), 0.0, 3.0), kind));
      if (!k.is_circular()) {
        REQUIRE(leq(k, x, y));
        REQUIRE(leq(k, y, z));
        CHECK(leq(k, x, z));
        // Antisymmetry: both directions force equality.
        if (leq(k, y, x)) CHECK(x.entries() == y.entries());
      }
    }
  };
  run(ConeDescriptor::orthant_sup(4), Norm::sup());
  run(ConeDescriptor::orthant_lp(4, 2.0), Norm::lp(2.0));

  // Circular chains built from interior cone elements.
  ConeDescriptor circ = ConeDescriptor::circular({0.0, 1.0, 0.0, 0.0}, kQuarterPi);
  for (int i = 0; i < 1000; ++i) {
    Rng rng(77, static_cast<std::uint64_t>(i));
    RealVector x(rng.uniform_vector(4, -5.0, 5.0), Norm::lp(2.0));
    auto element = [&] {
      std::vector<double> d = rng.unit_vector(4);
      d[1] = 0.0;  // drop the axis (e2) component
      double nn = 0.0;
      for (double e : d) nn += e * e;
      if (nn < 1e-12) return RealVector({0.0, 1.0, 0.0, 0.0}, Norm::lp(2.0));
      double theta = rng.uniform(0.0, kQuarterPi - 1e-6);
      double t = rng.uniform(0.1, 4.0);
      std::vector<double> e(4);
      for (std::size_t j = 0; j < 4; ++j) {
        double perp = d[j] / std::sqrt(nn);
        double axis = j == 1 ? 1.0 : 0.0;
        e[j] = t * (std::cos(theta) * axis + std::sin(theta) * perp);
      }
      return RealVector(std::move(e), Norm::lp(2.0));
    };
    RealVector y = add(x, element());
    RealVector z = add(y, element());
    REQUIRE(leq(circ, x, y));
    REQUIRE(leq(circ, y, z));
    CHECK(leq(circ, x, z));
    CHECK(leq(circ, x, x));
  }
}

TEST_CASE("norm monotonicity on the orthant order") {
  for (auto kind : {Norm::sup(), Norm::lp(1.0), Norm::lp(2.0), Norm::lp(3.0)}) {
    for (int i = 0; i < 1000; ++i) {
      Rng rng(5150, static_cast<std::uint64_t>(i));
      RealVector x(rng.uniform_vector(5, 0.0, 4.0), kind);
      RealVector y = add(x, RealVector(rng.uniform_vector(5, 0.0, 4.0), kind));
      CHECK(norm(x) <= norm(y));
    }
  }
}

TEST_CASE("join is the least upper bound") {
  ConeDescriptor k = ConeDescriptor::orthant_sup(4);
  for (int i = 0; i < 1000; ++i) {
    Rng rng(909, static_cast<std::uint64_t>(i));
    RealVector x(rng.uniform_vector(4, -5.0, 5.0), Norm::sup());
    RealVector y(rng.uniform_vector(4, -5.0, 5.0), Norm::sup());
    RealVector j = lattice_join(k, x, y);
    CHECK(leq(k, x, j));
    CHECK(leq(k, y, j));
    // Any upper bound of both dominates the join, exactly.
    RealVector z = add(j, RealVector(rng.uniform_vector(4, 0.0, 3.0), Norm::sup()));
    REQUIRE(leq(k, x, z));
    REQUIRE(leq(k, y, z));
    for (std::size_t c = 0; c < 4; ++c) CHECK(j[c] <= z[c]);
  }
}
