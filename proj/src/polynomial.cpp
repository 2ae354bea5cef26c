#include "betti/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "betti/errors.hpp"

namespace betti {

Polynomial::Polynomial(const Monomial& m, const Rational& coefficient) : num_vars_(m.num_vars()) {
  add_term(m, coefficient);
}

Polynomial Polynomial::constant(int num_vars, const Rational& c) {
  return Polynomial(Monomial::unit(num_vars), c);
}

void Polynomial::check_vars(int n) const {
  if (n != num_vars_) {
    throw DomainError("variable-count", "polynomials live in different numbers of variables");
  }
}

int Polynomial::order() const {
  int best = kInfiniteOrder;
  for (const auto& [m, c] : terms_) best = std::min(best, m.degree());
  return best;
}

int Polynomial::degree() const {
  int best = -1;
  for (const auto& [m, c] : terms_) best = std::max(best, m.degree());
  return best;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  check_vars(m.num_vars());
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_vars(other.num_vars_);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_vars(other.num_vars_);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_vars(b.num_vars_);
  Polynomial out(a.num_vars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Polynomial operator*(const Polynomial& a, const Monomial& m) {
  a.check_vars(m.num_vars());
  Polynomial out(a.num_vars_);
  for (const auto& [ma, ca] : a.terms_) out.terms_.emplace_hint(out.terms_.end(), ma * m, ca);
  return out;
}

Polynomial truncate(const Polynomial& p, int bound) {
  Polynomial out(p.num_vars());
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() < bound) out.add_term(m, c);
  }
  return out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = sgn(c) < 0;
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const Rational magnitude = abs(c);
    if (m.is_unit()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += to_string(m);
    } else {
      out += magnitude.get_str() + '*' + to_string(m);
    }
  }
  return out;
}

namespace {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, int num_vars) : text_(text), num_vars_(num_vars) {}

  Polynomial parse() {
    Polynomial out(num_vars_);
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = next() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [coefficient, monomial] = term();
      out.add_term(monomial, coefficient * sign);
      skip_ws();
    }
    return out;
  }

 private:
  std::pair<Rational, Monomial> term() {
    Rational coefficient = 1;
    std::string monomial_text;
    bool first = true;
    while (true) {
      skip_ws();
      if (!first) {
        if (at_end() || peek() != '*') break;
        next();
        skip_ws();
      }
      first = false;
      if (at_end()) fail("dangling '*'");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coefficient *= number();
      } else {
        const std::size_t start = pos_;
        next();
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) next();
        skip_ws();
        if (!at_end() && peek() == '^') {
          next();
          skip_ws();
          while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) next();
        }
        if (!monomial_text.empty()) monomial_text += '*';
        monomial_text += std::string(text_.substr(start, pos_ - start));
      }
    }
    Monomial m = monomial_text.empty() ? Monomial::unit(num_vars_)
                                       : parse_monomial(monomial_text, num_vars_);
    return {coefficient, m};
  }

  Rational number() {
    std::string digits = run_of_digits();
    skip_ws();
    if (!at_end() && peek() == '/') {
      next();
      skip_ws();
      digits += '/' + run_of_digits();
    }
    Rational value(digits, 10);
    if (value.get_den() == 0) fail("zero denominator");
    value.canonicalize();
    return value;
  }

  std::string run_of_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) next();
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) next();
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char next() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("parse", what + " in polynomial '" + std::string(text_) + "'");
  }

  std::string_view text_;
  int num_vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, int num_vars) {
  return PolynomialParser(text, num_vars).parse();
}

}  // namespace betti
