#include <doctest.h>

#include <random>

#include "dubrovnik/fixtures.hpp"
#include "dubrovnik/kauffman.hpp"
#include "support/oracles.hpp"

using namespace dubrovnik;
using namespace testsupport;

namespace {

FixtureSet corpus() { return FixtureSet::load(FIXTURE_DIR); }

std::vector<Diagram> pd_fixtures() {
  std::vector<Diagram> out;
  const FixtureSet set = corpus();
  for (const auto& f : set.fixtures())
    if (f.kind == FixtureKind::Pd) out.push_back(set.diagram(f.name));
  return out;
}

}  // namespace

TEST_CASE("bracket state sum of small diagrams") {
  const Laurent2Poly d = -(Laurent2Poly::x(2) + Laurent2Poly::x(-2));
  CHECK(bracket(Diagram::unlink(1)) == d);
  CHECK(bracket(Diagram::unlink(2)) == d * d);
  // Positive kink: -A^3 <O>.
  CHECK(bracket(parse_pd("X[1,1,2,2]")) == -Laurent2Poly::x(3) * d);
}

TEST_CASE("specialization maps delta to the loop value") {
  const Laurent2Poly d = -(Laurent2Poly::x(2) + Laurent2Poly::x(-2));
  const Laurent2Poly y = Laurent2Poly::x(1) - Laurent2Poly::x(-1);
  CHECK(bracket_specialization(delta(), 1) == d * y);
}

TEST_CASE("lambda agrees with the state-sum bracket on every fixture") {
  for (const Diagram& d : pd_fixtures()) {
    CAPTURE(format_pd(d));
    CHECK(agrees_with_bracket(lambda_regular(d), d));
  }
}

TEST_CASE("Jones polynomial of the Borromean rings via the bracket") {
  // <B> = d * V(t = A^-4) with V = -t^3 + 3t^2 - 2t + 4 - 2t^-1 + 3t^-2 - t^-3; writhe 0.
  const Laurent2Poly d = -(Laurent2Poly::x(2) + Laurent2Poly::x(-2));
  auto t = [](int n) { return Laurent2Poly::x(-4 * n); };
  const Laurent2Poly jones = -t(3) + Laurent2Poly::constant(3) * t(2) - Laurent2Poly::constant(2) * t(1) +
                             Laurent2Poly::constant(4) - Laurent2Poly::constant(2) * t(-1) +
                             Laurent2Poly::constant(3) * t(-2) - t(-3);
  CHECK(bracket(corpus().diagram("borromean")) == d * jones);
}

TEST_CASE("braid closures") {
  CHECK(validate(braid_closure(2, {1, 1})).component_count == 2);
  CHECK(validate(braid_closure(3, {1, -2, 1, -2, 1, -2})).component_count == 3);
  CHECK(writhe(braid_closure(2, {1, 1, 1})) == 3);
  CHECK(validate(braid_closure(3, {1})).component_count == 2);
}

TEST_CASE("faces of fixture diagrams satisfy Euler's formula") {
  for (const Diagram& d : pd_fixtures()) {
    CAPTURE(format_pd(d));
    CHECK(is_planar(d));
  }
  // Three crossings: two triangles and three bigons.
  CHECK(faces(corpus().diagram("trefoil")).size() == 5);
}

TEST_CASE("Reidemeister moves produce valid planar diagrams") {
  std::mt19937_64 rng(11);
  int changed = 0;
  for (const Diagram& d : pd_fixtures()) {
    if (d.crossing_count() == 0) continue;
    for (const auto& x : d.crossings()) {
      for (bool positive : {true, false}) {
        const Diagram k = r1_kink(d, x.arcs[0], positive);
        CHECK_NOTHROW(validate(k));
        CHECK(is_planar(k));
        CHECK(writhe(k) == writhe(d) + (positive ? 1 : -1));
      }
    }
    for (int i = 0; i < 10; ++i) {
      auto moved = random_r2(d, rng);
      REQUIRE(moved);
      CHECK_NOTHROW(validate(*moved));
      CHECK(is_planar(*moved));
      CHECK(writhe(*moved) == writhe(d));
      for (const Diagram& r3 : r3_moves(*moved)) {
        changed += canonical_key(r3) != canonical_key(*moved) ? 1 : 0;
        CHECK_NOTHROW(validate(r3));
        CHECK(is_planar(r3));
        CHECK(writhe(r3) == writhe(*moved));
      }
    }
  }
  CHECK(changed > 10);
}

TEST_CASE("a nonplanar code is detected") {
  // One crossing whose strands each close up through the opposite slot.
  const Diagram d(std::vector<Crossing>{{{1, 2, 1, 2}, true}}, 0);
  REQUIRE_NOTHROW(validate(d));
  CHECK_FALSE(is_planar(d));
}
