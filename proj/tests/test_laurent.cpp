#include <doctest.h>

#include <random>

#include "dubrovnik/errors.hpp"
#include "dubrovnik/fixtures.hpp"
#include "dubrovnik/kauffman.hpp"
#include "dubrovnik/laurent.hpp"
#include "support/oracles.hpp"

using namespace dubrovnik;
using testsupport::random_poly;

namespace {

const Laurent2Poly X = Laurent2Poly::x();
const Laurent2Poly Y = Laurent2Poly::y();
const Laurent2Poly ONE = Laurent2Poly::constant(1);

Laurent2Poly random_nonzero(std::mt19937_64& rng) {
  Laurent2Poly p;
  while (p.is_zero()) p = random_poly(rng);
  return p;
}

}  // namespace

TEST_CASE("mono") {
  CHECK(Laurent2Poly::mono(0, 3, 1).is_zero());
  CHECK(Laurent2Poly::mono(0, 3, 1).terms().empty());
  CHECK(Laurent2Poly::mono(1, 0, 0) == ONE);
  const Laurent2Poly p = Laurent2Poly::mono(-2, 4, 0);
  REQUIRE(p.size() == 1);
  CHECK(p.coefficient(4, 0) == -2);
}

TEST_CASE("ring operations") {
  CHECK(mul(X + ONE, X - ONE) == X * X - ONE);
  const Laurent2Poly p = parse_poly("3*y^2*x - x^-1 + 7");
  CHECK(add(p, neg(p)).is_zero());
  CHECK(add(p, neg(p)).terms().empty());
  CHECK(mul(delta(), Y) == X - Laurent2Poly::x(-1) + Y);
}

TEST_CASE("degrees") {
  CHECK(delta().max_deg_x() == 1);
  CHECK(delta().min_deg_x() == -1);
  CHECK(parse_poly("y*x^5 - 2*x^4 + x^-2").max_deg_x() == 5);
  CHECK(parse_poly("y*x^5 - 2*x^4 + x^-2").min_deg_x() == -2);
  CHECK_THROWS_AS((void)Laurent2Poly().max_deg_x(), DegreeError);
  CHECK_THROWS_AS((void)Laurent2Poly().min_deg_x(), DegreeError);
}

TEST_CASE("invert_x") {
  CHECK(invert_x(X * X + Y) == Laurent2Poly::x(-2) + Y);
  CHECK(invert_x(delta()) == parse_poly("x^-1*y^-1 - x*y^-1 + 1"));
  CHECK(invert_x(delta()) != delta());
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const Laurent2Poly p = random_poly(rng);
    CHECK(invert_x(invert_x(p)) == p);
  }
}

TEST_CASE("mirror_substitute") {
  CHECK(mirror_substitute(delta()) == delta());
  CHECK(mirror_substitute(X * Y) == -Laurent2Poly::mono(1, -1, 1));
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    const Laurent2Poly p = random_poly(rng);
    const Laurent2Poly q = random_poly(rng);
    CHECK(mirror_substitute(mirror_substitute(p)) == p);
    CHECK(mirror_substitute(p * q) == mirror_substitute(p) * mirror_substitute(q));
  }
}

TEST_CASE("div_exact") {
  CHECK(div_exact(delta() * delta(), delta()) == delta());
  const Laurent2Poly p = parse_poly("4*y^3*x^-2 - x + 11");
  CHECK(div_exact(p, ONE) == p);
  // x / y is the Laurent monomial x*y^-1, not a remainder case.
  CHECK(div_exact(X, Y) == Laurent2Poly::mono(1, 1, -1));
  CHECK_THROWS_AS((void)div_exact(Laurent2Poly::constant(3), Laurent2Poly::constant(2)), DivisionError);
  CHECK_THROWS_AS((void)div_exact(X + ONE, X - ONE), DivisionError);
  CHECK_THROWS((void)div_exact(X, Laurent2Poly()));
  CHECK(div_exact(Laurent2Poly(), delta()).is_zero());
}

TEST_CASE("parse and format") {
  const Laurent2Poly p = parse_poly("y*x^5 - 2*x^4");
  CHECK(p.size() == 2);
  CHECK(p.coefficient(5, 1) == 1);
  CHECK(p.coefficient(4, 0) == -2);
  CHECK(format_poly(p) == "y*x^5 - 2*x^4");
  CHECK(format_poly(Laurent2Poly()) == "0");
  CHECK(parse_poly("0").is_zero());
  CHECK(parse_poly("  x^-1 *y^2\t+ 3 ") == Laurent2Poly::mono(1, -1, 2) + Laurent2Poly::constant(3));
  CHECK(parse_poly("-y^-3") == -Laurent2Poly::y(-3));
  CHECK(parse_poly("2 x y") == Laurent2Poly::mono(2, 1, 1));
  CHECK(parse_poly("x - x") .is_zero());
  CHECK(format_poly(parse_poly("1 + x + y + x*y")) == "y*x + x + y + 1");
}

TEST_CASE("parse errors carry positions") {
  for (const char* bad : {"", "x^", "2**x", "y^-", "3x^1.5", "z", "x^(2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS((void)parse_poly(bad), ParseError);
  }
  try {
    (void)parse_poly("x + z");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 5);
  }
}

TEST_CASE("format round trip on the computed Borromean polynomial") {
  const Laurent2Poly kb = kauffman_unreduced(FixtureSet::load(FIXTURE_DIR).diagram("borromean"));
  CHECK(parse_poly(format_poly(kb)) == kb);
}

TEST_CASE("canonical term order") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const Laurent2Poly p = random_poly(rng, 8);
    for (std::size_t k = 1; k < p.size(); ++k) CHECK(canonical_before(p.terms()[k - 1].exp, p.terms()[k].exp));
    CHECK(parse_poly(format_poly(p)) == p);
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 150; ++i) {
    const Laurent2Poly a = random_poly(rng);
    const Laurent2Poly b = random_poly(rng);
    const Laurent2Poly c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + Laurent2Poly() == a);
    CHECK(a * ONE == a);
    CHECK((a * Laurent2Poly()).is_zero());
  }
}

TEST_CASE("degree, homomorphism and division laws") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 150; ++i) {
    const Laurent2Poly p = random_nonzero(rng);
    const Laurent2Poly q = random_nonzero(rng);
    CHECK((p * q).max_deg_x() == p.max_deg_x() + q.max_deg_x());
    CHECK(invert_x(p * q) == invert_x(p) * invert_x(q));
    CHECK(div_exact(p * q, q) == p);
  }
}

TEST_CASE("coefficients beyond 64 bits") {
  const Laurent2Poly big = Laurent2Poly::constant(Integer("123456789012345678901234567890")) * X;
  const Laurent2Poly sq = big * big;
  CHECK(sq.coefficient(2, 0) == Integer("15241578753238836750495351562536198787501905199875019052100"));
  CHECK(parse_poly(format_poly(sq)) == sq);
  CHECK(div_exact(sq, big) == big);
  const Laurent2Poly d20 = delta().pow(40);
  CHECK(div_exact(d20, delta().pow(39)) == delta());
}
