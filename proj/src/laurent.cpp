#include "dubrovnik/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <sstream>

#include "dubrovnik/errors.hpp"

namespace dubrovnik {

namespace {

bool term_before(const Term& a, const Term& b) { return canonical_before(a.exp, b.exp); }

}  // namespace

Laurent2Poly Laurent2Poly::mono(const Integer& coeff, int dx, int dy) {
  if (coeff == 0) return {};
  return Laurent2Poly(std::vector<Term>{Term{{dx, dy}, coeff}});
}

Laurent2Poly Laurent2Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_before);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return Laurent2Poly(std::move(out));
}

Integer Laurent2Poly::coefficient(int dx, int dy) const {
  const Term probe{{dx, dy}, 0};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), probe, term_before);
  if (it != terms_.end() && it->exp == probe.exp) return it->coeff;
  return 0;
}

Laurent2Poly Laurent2Poly::x_coefficient(int dx) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.exp.x == dx) out.push_back(Term{{0, t.exp.y}, t.coeff});
  return Laurent2Poly(std::move(out));
}

int Laurent2Poly::max_deg_x() const {
  if (is_zero()) throw DegreeError("x-degree of the zero polynomial is undefined");
  return terms_.front().exp.x;
}

int Laurent2Poly::min_deg_x() const {
  if (is_zero()) throw DegreeError("x-degree of the zero polynomial is undefined");
  return terms_.back().exp.x;
}

int Laurent2Poly::max_deg_y() const {
  if (is_zero()) throw DegreeError("y-degree of the zero polynomial is undefined");
  int best = INT_MIN;
  for (const auto& t : terms_) best = std::max(best, t.exp.y);
  return best;
}

int Laurent2Poly::min_deg_y() const {
  if (is_zero()) throw DegreeError("y-degree of the zero polynomial is undefined");
  int best = INT_MAX;
  for (const auto& t : terms_) best = std::min(best, t.exp.y);
  return best;
}

Laurent2Poly Laurent2Poly::shifted(int dx, int dy) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) {
    t.exp.x += dx;
    t.exp.y += dy;
  }
  return Laurent2Poly(std::move(out));
}

Laurent2Poly Laurent2Poly::pow(unsigned n) const {
  Laurent2Poly result = constant(1);
  Laurent2Poly base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

Laurent2Poly Laurent2Poly::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = -t.coeff;
  return Laurent2Poly(std::move(out));
}

Laurent2Poly Laurent2Poly::combine(const Laurent2Poly& a, const Laurent2Poly& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && term_before(*i, *j))) {
      out.push_back(*i++);
    } else if (i == a.terms_.end() || term_before(*j, *i)) {
      out.push_back(*j++);
      if (subtract) out.back().coeff = -out.back().coeff;
    } else {
      Integer c = subtract ? Integer(i->coeff - j->coeff) : Integer(i->coeff + j->coeff);
      if (c != 0) out.push_back(Term{i->exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return Laurent2Poly(std::move(out));
}

Laurent2Poly& Laurent2Poly::operator+=(const Laurent2Poly& other) {
  if (other.is_zero()) return *this;
  *this = combine(*this, other, false);
  return *this;
}

Laurent2Poly& Laurent2Poly::operator-=(const Laurent2Poly& other) {
  if (other.is_zero()) return *this;
  *this = combine(*this, other, true);
  return *this;
}

Laurent2Poly operator*(const Laurent2Poly& a, const Laurent2Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_)
      products.push_back(Term{{s.exp.x + t.exp.x, s.exp.y + t.exp.y}, s.coeff * t.coeff});
  return Laurent2Poly::from_terms(std::move(products));
}

Laurent2Poly& Laurent2Poly::operator*=(const Laurent2Poly& other) {
  *this = *this * other;
  return *this;
}

Laurent2Poly invert_x(const Laurent2Poly& p) {
  std::vector<Term> out = p.terms();
  for (auto& t : out) t.exp.x = -t.exp.x;
  return Laurent2Poly::from_terms(std::move(out));
}

Laurent2Poly mirror_substitute(const Laurent2Poly& p) {
  std::vector<Term> out = p.terms();
  for (auto& t : out) {
    t.exp.x = -t.exp.x;
    if (t.exp.y % 2 != 0) t.coeff = -t.coeff;
  }
  return Laurent2Poly::from_terms(std::move(out));
}

Laurent2Poly div_exact(const Laurent2Poly& p, const Laurent2Poly& q) {
  if (q.is_zero()) throw DivisionError("division by the zero polynomial");
  if (p.is_zero()) return {};

  // Any exact quotient has its x- and y-degrees confined to this box, so a
  // leading term outside it proves non-divisibility and bounds the loop.
  const int lo_x = p.min_deg_x() - q.min_deg_x();
  const int hi_x = p.max_deg_x() - q.max_deg_x();
  const int lo_y = p.min_deg_y() - q.min_deg_y();
  const int hi_y = p.max_deg_y() - q.max_deg_y();

  const Term& lead = q.terms().front();
  std::vector<Term> quotient;
  Laurent2Poly rem = p;
  while (!rem.is_zero()) {
    const Term& top = rem.terms().front();
    const int ex = top.exp.x - lead.exp.x;
    const int ey = top.exp.y - lead.exp.y;
    if (ex < lo_x || ex > hi_x || ey < lo_y || ey > hi_y || !mpz_divisible_p(top.coeff.get_mpz_t(), lead.coeff.get_mpz_t()))
      throw DivisionError("polynomial is not exactly divisible: remainder " + format_poly(rem));
    Integer c = top.coeff / lead.coeff;
    rem -= Laurent2Poly::mono(c, ex, ey) * q;
    quotient.push_back(Term{{ex, ey}, std::move(c)});
  }
  return Laurent2Poly::from_terms(std::move(quotient));
}

// --- text ------------------------------------------------------------------

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Laurent2Poly parse() {
    std::vector<Term> terms;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      bool had_sign = false;
      while (!at_end() && (peek() == '+' || peek() == '-')) {
        if (peek() == '-') sign = -sign;
        had_sign = true;
        advance();
        skip_space();
      }
      if (!first && !had_sign) fail("expected '+' or '-' between terms");
      terms.push_back(parse_term(sign));
      first = false;
      skip_space();
    }
    return Laurent2Poly::from_terms(std::move(terms));
  }

 private:
  Term parse_term(int sign) {
    Term term{{0, 0}, sign};
    bool any_factor = false;
    bool seen_x = false;
    bool seen_y = false;
    bool seen_int = false;
    while (true) {
      skip_space();
      if (at_end()) break;
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        if (seen_int) fail("repeated coefficient");
        term.coeff *= parse_integer();
        seen_int = true;
      } else if (c == 'x' || c == 'y') {
        bool& seen = c == 'x' ? seen_x : seen_y;
        if (seen) fail(std::string("repeated variable '") + c + "'");
        seen = true;
        advance();
        int e = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          advance();
          skip_space();
          e = parse_exponent();
        }
        (c == 'x' ? term.exp.x : term.exp.y) = e;
      } else {
        break;
      }
      any_factor = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        advance();
        skip_space();
        if (at_end() || !(std::isdigit(static_cast<unsigned char>(peek())) || peek() == 'x' || peek() == 'y'))
          fail("expected factor after '*'");
      }
    }
    if (!any_factor) fail("expected term");
    return term;
  }

  Integer parse_integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) advance();
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  int parse_exponent() {
    bool negative = false;
    bool paren = false;
    if (!at_end() && peek() == '(') {
      paren = true;
      advance();
    }
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      negative = peek() == '-';
      advance();
    }
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
    long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1000000) fail("exponent out of range");
      advance();
    }
    if (paren) {
      if (at_end() || peek() != ')') fail("expected ')'");
      advance();
    }
    return static_cast<int>(negative ? -value : value);
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(what, line, column);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void advance() { ++pos_; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void append_power(std::ostringstream& out, char var, int e) {
  out << var;
  if (e != 1) out << '^' << e;
}

}  // namespace

Laurent2Poly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

std::string format_poly(const Laurent2Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coeff < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const Integer mag = abs(t.coeff);
    const bool has_vars = t.exp.x != 0 || t.exp.y != 0;
    bool wrote = false;
    if (mag != 1 || !has_vars) {
      out << mag.get_str();
      wrote = true;
    }
    if (t.exp.y != 0) {
      if (wrote) out << '*';
      append_power(out, 'y', t.exp.y);
      wrote = true;
    }
    if (t.exp.x != 0) {
      if (wrote) out << '*';
      append_power(out, 'x', t.exp.x);
    }
  }
  return out.str();
}

}  // namespace dubrovnik
