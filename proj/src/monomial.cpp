#include "betti/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "betti/errors.hpp"

namespace betti {

namespace {

void require_same_vars(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) {
    throw DomainError("variable-count", "monomials live in different numbers of variables");
  }
}

void enumerate(int index, int remaining, std::vector<int>& exps, std::vector<Monomial>& out) {
  const int n = static_cast<int>(exps.size());
  if (index == n - 1) {
    exps[index] = remaining;
    out.emplace_back(exps);
    exps[index] = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    exps[index] = e;
    enumerate(index + 1, remaining - e, exps, out);
  }
  exps[index] = 0;
}

}  // namespace

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  for (int e : exponents_) {
    if (e < 0) throw DomainError("negative-exponent", "monomial exponents must be non-negative");
  }
  degree_ = std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

Monomial Monomial::unit(int num_vars) { return Monomial(std::vector<int>(num_vars, 0)); }

Monomial Monomial::variable(int num_vars, int index) {
  if (index < 1 || index > num_vars) {
    throw DomainError("variable-index", "variable index out of range");
  }
  std::vector<int> exps(num_vars, 0);
  exps[index - 1] = 1;
  return Monomial(std::move(exps));
}

int Monomial::max_index() const {
  for (int p = num_vars(); p >= 1; --p) {
    if (exponents_[p - 1] > 0) return p;
  }
  throw DomainError("unit-monomial", "max index is undefined for the unit monomial");
}

Monomial Monomial::operator*(const Monomial& other) const {
  require_same_vars(*this, other);
  std::vector<int> exps(exponents_);
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] += other.exponents_[i];
  return Monomial(std::move(exps));
}

Monomial Monomial::divided_by(const Monomial& divisor) const {
  if (!divides(divisor, *this)) {
    throw DomainError("not-divisible", "monomial quotient is not exact");
  }
  std::vector<int> exps(exponents_);
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] -= divisor.exponents_[i];
  return Monomial(std::move(exps));
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  require_same_vars(a, b);
  auto ea = a.exponents();
  auto eb = b.exponents();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i] != eb[i]) return ea[i] <=> eb[i];
  }
  return std::strong_ordering::equal;
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_vars(a, b);
  auto ea = a.exponents();
  auto eb = b.exponents();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i] > eb[i]) return false;
  }
  return true;
}

std::vector<Monomial> monomials_of_degree(int num_vars, int degree) {
  std::vector<Monomial> out;
  if (num_vars <= 0 || degree < 0) return out;
  std::vector<int> exps(num_vars, 0);
  enumerate(0, degree, exps, out);
  return out;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t count_monomials(int num_vars, int degree) {
  if (num_vars <= 0 || degree < 0) return 0;
  return binomial(num_vars - 1 + degree, degree);
}

namespace {

std::string variable_name(int num_vars, int index) {
  if (num_vars <= 3) return std::string(1, "xyz"[index - 1]);
  return "x" + std::to_string(index);
}

}  // namespace

std::string to_string(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string out;
  for (int p = 1; p <= m.num_vars(); ++p) {
    const int e = m.exponent(p);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += variable_name(m.num_vars(), p);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

Monomial parse_monomial(std::string_view text, int num_vars) {
  std::vector<int> exps(num_vars, 0);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&]() -> int {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw DomainError("parse", "expected an integer in monomial '" + std::string(text) + "'");
    return std::stoi(std::string(text.substr(start, pos - start)));
  };
  auto fail = [&](const std::string& what) {
    throw DomainError("parse", what + " in monomial '" + std::string(text) + "'");
  };

  skip_ws();
  if (pos < text.size() && text[pos] == '1') {
    ++pos;
    skip_ws();
    if (pos != text.size()) fail("unexpected trailing input");
    return Monomial(std::move(exps));
  }
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == text.size()) {
      if (first) fail("empty monomial");
      break;
    }
    if (!first) {
      if (text[pos] != '*') fail("expected '*'");
      ++pos;
      skip_ws();
    }
    first = false;
    if (pos == text.size()) fail("dangling '*'");
    const char c = text[pos++];
    int index = 0;
    if (c == 'x' && pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      index = read_int();
    } else if (num_vars <= 3 && (c == 'x' || c == 'y' || c == 'z')) {
      index = c - 'x' + 1;
    } else {
      fail(std::string("unknown variable '") + c + "'");
    }
    if (index < 1 || index > num_vars) fail("variable index out of range");
    skip_ws();
    int e = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      e = read_int();
    }
    exps[index - 1] += e;
  }
  return Monomial(std::move(exps));
}

}  // namespace betti
