#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace betti {

/// Exponent vector in n variables x_1 > x_2 > ... > x_n. Indices are 1-based
/// in the public API to match the usual x_1..x_n naming.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);

  static Monomial unit(int num_vars);
  static Monomial variable(int num_vars, int index);

  int num_vars() const { return static_cast<int>(exponents_.size()); }
  int degree() const { return degree_; }
  int exponent(int index) const { return exponents_.at(index - 1); }
  std::span<const int> exponents() const { return exponents_; }
  bool is_unit() const { return degree_ == 0; }

  /// Largest p with x_p dividing the monomial. Throws for the unit monomial.
  int max_index() const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; throws unless `divisor` divides *this.
  Monomial divided_by(const Monomial& divisor) const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<int> exponents_;
  int degree_ = 0;
};

/// Pure lexicographic comparison: leftmost differing exponent decides, larger
/// wins. Degree is not compared first.
std::strong_ordering lex_compare(const Monomial& a, const Monomial& b);

bool divides(const Monomial& a, const Monomial& b);

/// Strict weak order placing lex-greater monomials first.
struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return lex_compare(a, b) > 0; }
};

/// Ascending degree, then lex-greater first within a degree. This is both the
/// canonical generator order and the pivot order of truncated spans.
struct DegreeThenLex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return lex_compare(a, b) > 0;
  }
};

/// All monomials of degree t in n variables, lex-greatest first.
std::vector<Monomial> monomials_of_degree(int num_vars, int degree);

/// C(n-1+t, t): the number of monomials of degree t in n variables.
std::int64_t count_monomials(int num_vars, int degree);

std::int64_t binomial(std::int64_t n, std::int64_t k);

/// Text form `x1^2*x3`; with n <= 3 the names x, y, z are used. The unit
/// monomial prints as `1`.
std::string to_string(const Monomial& m);
Monomial parse_monomial(std::string_view text, int num_vars);

}  // namespace betti
