#pragma once

#include <gmpxx.h>

#include <limits>
#include <map>
#include <string>
#include <string_view>

#include "betti/monomial.hpp"

namespace betti {

using Rational = mpq_class;

/// Order reported for the zero polynomial.
inline constexpr int kInfiniteOrder = std::numeric_limits<int>::max();

/// Sparse polynomial with exact rational coefficients. Terms are kept lowest
/// degree first (lex-greater first within a degree), so the first term is in
/// the initial form; no zero coefficient is ever stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, DegreeThenLex>;

  explicit Polynomial(int num_vars = 0) : num_vars_(num_vars) {}
  Polynomial(const Monomial& m, const Rational& coefficient = 1);

  static Polynomial constant(int num_vars, const Rational& c);

  int num_vars() const { return num_vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Minimum degree among the terms (n-adic valuation); kInfiniteOrder for 0.
  int order() const;
  /// Maximum degree among the terms; -1 for 0.
  int degree() const;

  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Monomial& m);

  bool operator==(const Polynomial& other) const {
    return num_vars_ == other.num_vars_ && terms_ == other.terms_;
  }

 private:
  void check_vars(int n) const;

  int num_vars_ = 0;
  Terms terms_;
};

/// Drops every term of degree >= bound.
Polynomial truncate(const Polynomial& p, int bound);

/// Signed sum of `coeff*monomial` terms, e.g. `x^4-3/2*x^2*y^2+y^6`.
std::string to_string(const Polynomial& p);
Polynomial parse_polynomial(std::string_view text, int num_vars);

}  // namespace betti
