#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace dubrovnik {

using Integer = mpz_class;

// Exponent pair of a monomial x^x * y^y.
struct Exponent {
  int x = 0;
  int y = 0;

  friend bool operator==(const Exponent&, const Exponent&) = default;
  // Canonical term order: x-degree descending, then y-degree descending.
  friend bool canonical_before(const Exponent& a, const Exponent& b) {
    return a.x != b.x ? a.x > b.x : a.y > b.y;
  }
};

struct Term {
  Exponent exp;
  Integer coeff;

  friend bool operator==(const Term& a, const Term& b) {
    return a.exp == b.exp && a.coeff == b.coeff;
  }
};

// Laurent polynomial in commuting variables x, y over the integers.
//
// Terms are stored in canonical order with no zero coefficients, so two
// polynomials are equal exactly when their term vectors are equal. The zero
// polynomial has no terms.
class Laurent2Poly {
 public:
  Laurent2Poly() = default;

  static Laurent2Poly mono(const Integer& coeff, int dx, int dy);
  static Laurent2Poly constant(const Integer& c) { return mono(c, 0, 0); }
  static Laurent2Poly x(int power = 1) { return mono(1, power, 0); }
  static Laurent2Poly y(int power = 1) { return mono(1, 0, power); }

  // Builds from arbitrary terms; duplicates are combined and zeros dropped.
  static Laurent2Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Integer coefficient(int dx, int dy) const;
  // Coefficient of x^dx as a polynomial in y alone.
  Laurent2Poly x_coefficient(int dx) const;

  // Throw DegreeError on the zero polynomial.
  int max_deg_x() const;
  int min_deg_x() const;
  int max_deg_y() const;
  int min_deg_y() const;

  // Multiplies by x^dx * y^dy.
  Laurent2Poly shifted(int dx, int dy) const;
  Laurent2Poly pow(unsigned n) const;

  Laurent2Poly operator-() const;
  Laurent2Poly& operator+=(const Laurent2Poly& other);
  Laurent2Poly& operator-=(const Laurent2Poly& other);
  Laurent2Poly& operator*=(const Laurent2Poly& other);

  friend Laurent2Poly operator+(Laurent2Poly a, const Laurent2Poly& b) { return a += b; }
  friend Laurent2Poly operator-(Laurent2Poly a, const Laurent2Poly& b) { return a -= b; }
  friend Laurent2Poly operator*(const Laurent2Poly& a, const Laurent2Poly& b);
  friend bool operator==(const Laurent2Poly& a, const Laurent2Poly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  explicit Laurent2Poly(std::vector<Term> sorted) : terms_(std::move(sorted)) {}
  static Laurent2Poly combine(const Laurent2Poly& a, const Laurent2Poly& b, bool subtract);

  std::vector<Term> terms_;
};

inline Laurent2Poly add(const Laurent2Poly& p, const Laurent2Poly& q) { return p + q; }
inline Laurent2Poly mul(const Laurent2Poly& p, const Laurent2Poly& q) { return p * q; }
inline Laurent2Poly neg(const Laurent2Poly& p) { return -p; }

// x -> x^-1.
Laurent2Poly invert_x(const Laurent2Poly& p);
// (x, y) -> (x^-1, -y): the substitution a mirrored diagram induces on the
// Dubrovnik polynomial.
Laurent2Poly mirror_substitute(const Laurent2Poly& p);

// Returns r with q * r == p; throws DivisionError if no such r exists.
Laurent2Poly div_exact(const Laurent2Poly& p, const Laurent2Poly& q);

// Grammar: sum of terms `[sign] [int] [*] [y[^e]] [*] [x[^e]]`, factors in any
// order, whitespace insignificant, `^-n` for negative exponents.
Laurent2Poly parse_poly(std::string_view text);
// Canonical text: terms in canonical order, e.g. "y*x^5 - 2*x^4 + 2*y^-1".
std::string format_poly(const Laurent2Poly& p);

}  // namespace dubrovnik
