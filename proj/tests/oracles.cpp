#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "betti/monomial.hpp"

namespace oracle {

using namespace betti;

Polynomial permutation_determinant(const PolyMatrix& m) {
  const int n = m.rows();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial sum(m.num_vars());
  do {
    int inversions = 0;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) inversions += perm[a] > perm[b];
    }
    Polynomial term = Polynomial::constant(m.num_vars(), inversions % 2 ? -1 : 1);
    for (int r = 0; r < n; ++r) term = term * m.at(r, perm[r]);
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

MonomialIdeal brute_lex_ideal(const HilbertFunction& h, int num_vars) {
  std::vector<Monomial> all;
  const int top = h.tail() == Tail::Zero ? h.last_index() + 1 : h.last_index();
  for (int t = 0; t <= top; ++t) {
    std::vector<Monomial> degree_t = monomials_of_degree(num_vars, t);
    std::sort(degree_t.begin(), degree_t.end(), LexGreater{});
    const auto take = static_cast<std::size_t>(static_cast<long>(degree_t.size()) - h(t));
    all.insert(all.end(), degree_t.begin(), degree_t.begin() + take);
  }
  return MonomialIdeal(num_vars, all);
}

bool shadow_contained(int num_vars, int degree, std::int64_t a, std::int64_t b) {
  std::vector<Monomial> low = monomials_of_degree(num_vars, degree);
  std::vector<Monomial> high = monomials_of_degree(num_vars, degree + 1);
  std::set<Monomial, LexGreater> target(high.begin(), high.begin() + b);
  for (std::int64_t k = 0; k < a; ++k) {
    for (int i = 1; i <= num_vars; ++i) {
      if (!target.count(low[k] * Monomial::variable(num_vars, i))) return false;
    }
  }
  return true;
}

long count_standard_monomials(const MonomialIdeal& ideal, int degree) {
  long count = 0;
  for (const auto& m : monomials_of_degree(ideal.num_vars(), degree)) {
    bool inside = false;
    for (const auto& g : ideal.generators()) {
      bool divides_m = true;
      for (int p = 1; p <= m.num_vars(); ++p) divides_m = divides_m && g.exponent(p) <= m.exponent(p);
      inside = inside || divides_m;
    }
    count += !inside;
  }
  return count;
}

long euler_hilbert_value(const BettiTable& table, int num_vars, int degree) {
  long value = 0;
  for (int i = 0; i < table.length(); ++i) {
    for (const auto& [j, b] : table.row(i)) {
      const long dim = degree - j < 0 ? 0 : static_cast<long>(binomial(num_vars - 1 + degree - j, degree - j));
      value += (i % 2 ? -1 : 1) * b * dim;
    }
  }
  return value;
}

namespace {

bool admits(Mode mode, int j, int jp) {
  return mode == Mode::Zero ? j == jp : mode == Mode::Negative ? j < jp : j <= jp;
}

void explore(std::vector<BettiRow>& rows, Mode mode, std::set<Totals>& out) {
  Totals totals;
  for (const auto& row : rows) {
    long sum = 0;
    for (const auto& [j, b] : row) sum += b;
    totals.push_back(sum);
  }
  out.insert(totals);
  for (std::size_t i = 2; i < rows.size(); ++i) {
    for (auto& [j, b] : rows[i]) {
      if (b == 0) continue;
      for (auto& [jp, bp] : rows[i - 1]) {
        if (bp == 0 || !admits(mode, j, jp)) continue;
        --b;
        --bp;
        explore(rows, mode, out);
        ++b;
        ++bp;
      }
    }
  }
}

}  // namespace

std::set<Totals> naive_reachable_totals(const BettiTable& table, Mode mode) {
  std::vector<BettiRow> rows = table.rows();
  std::set<Totals> out;
  explore(rows, mode, out);
  return out;
}

HilbertFunction random_admissible_hf(std::mt19937& rng, int num_vars, int max_socle) {
  std::vector<long> values{1};
  std::vector<Monomial> segment;  // degree-t part of the lex ideal
  for (int t = 0; t < max_socle; ++t) {
    // Largest h(t+1): the ideal must contain the shadow of its degree-t part.
    std::set<Monomial, LexGreater> reached;
    for (const auto& m : segment) {
      for (int i = 1; i <= num_vars; ++i) reached.insert(m * Monomial::variable(num_vars, i));
    }
    const long dim = static_cast<long>(count_monomials(num_vars, t + 1));
    const long most = dim - static_cast<long>(reached.size());
    if (most == 0) break;
    std::uniform_int_distribution<long> pick(1, most);
    const long next = pick(rng);
    values.push_back(next);
    std::vector<Monomial> degree_next = monomials_of_degree(num_vars, t + 1);
    segment.assign(degree_next.begin(), degree_next.begin() + (dim - next));
  }
  return HilbertFunction(values, Tail::Zero);
}

MonomialIdeal random_lex_ideal(std::mt19937& rng, int num_vars, int low, int high) {
  std::vector<Monomial> generators;
  std::vector<Monomial> segment;
  for (int t = low; t <= high; ++t) {
    std::set<Monomial, LexGreater> reached;
    for (const auto& m : segment) {
      for (int i = 1; i <= num_vars; ++i) reached.insert(m * Monomial::variable(num_vars, i));
    }
    const long dim = static_cast<long>(count_monomials(num_vars, t));
    const long least = std::max<long>(static_cast<long>(reached.size()), t == low ? 1 : 0);
    std::uniform_int_distribution<long> pick(least, dim);
    const long size = pick(rng);
    std::vector<Monomial> degree_t = monomials_of_degree(num_vars, t);
    segment.assign(degree_t.begin(), degree_t.begin() + size);
    for (const auto& m : segment) {
      if (!reached.count(m)) generators.push_back(m);
    }
  }
  return MonomialIdeal(num_vars, generators);
}

BettiTable random_table(std::mt19937& rng, int length, long max_mass) {
  std::vector<BettiRow> rows(static_cast<std::size_t>(length));
  rows[0][0] = 1;
  long mass = 1;
  std::uniform_int_distribution<int> shift(0, 3);
  std::uniform_int_distribution<long> mult(1, 2);
  for (int i = 1; i < length && mass < max_mass; ++i) {
    std::uniform_int_distribution<int> cells(1, 3);
    const int count = cells(rng);
    for (int c = 0; c < count && mass < max_mass; ++c) {
      const long b = std::min(mult(rng), max_mass - mass);
      rows[i][i + 1 + shift(rng)] += b;
      mass += b;
    }
  }
  return BettiTable(TableKind::Quotient, std::move(rows));
}

}  // namespace oracle
