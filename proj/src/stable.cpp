#include "betti/stable.hpp"

#include <algorithm>

#include "betti/errors.hpp"

namespace betti {

namespace {

void require_resolvable(const MonomialIdeal& ideal) {
  if (ideal.truncated()) {
    throw DomainError("truncated-ideal",
                      "ideal is only known through a bounded degree; its resolution is undefined");
  }
  if (!is_stable(ideal)) throw DomainError("not-stable", "ideal is not stable");
}

void increasing_tuples(int first, int upper, int length, std::vector<int>& current,
                       std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == length) {
    out.push_back(current);
    return;
  }
  for (int j = first; j < upper; ++j) {
    current.push_back(j);
    increasing_tuples(j + 1, upper, length, current, out);
    current.pop_back();
  }
}

}  // namespace

bool is_stable(const MonomialIdeal& ideal) {
  const int n = ideal.num_vars();
  for (const auto& m : ideal.generators()) {
    const int top = m.max_index();
    const Monomial reduced = m.divided_by(Monomial::variable(n, top));
    for (int j = 1; j < top; ++j) {
      if (!ideal.contains(reduced * Monomial::variable(n, j))) return false;
    }
  }
  return true;
}

std::vector<EKBasisElement> ek_basis(const MonomialIdeal& ideal, int homological_degree) {
  require_resolvable(ideal);
  if (homological_degree < 1) throw DomainError("homological-degree", "need i >= 1");
  std::vector<EKBasisElement> out;
  for (const auto& m : ideal.generators()) {
    std::vector<std::vector<int>> tuples;
    std::vector<int> current;
    increasing_tuples(1, m.max_index(), homological_degree - 1, current, tuples);
    for (auto& t : tuples) out.push_back({m, std::move(t), homological_degree});
  }
  return out;
}

BettiTable ek_betti(const MonomialIdeal& ideal) {
  require_resolvable(ideal);
  int pd = 0;
  for (const auto& m : ideal.generators()) pd = std::max(pd, m.max_index());
  std::vector<BettiRow> rows(static_cast<std::size_t>(pd) + 1);
  rows[0][0] = 1;
  for (const auto& m : ideal.generators()) {
    const int top = m.max_index();
    for (int i = 1; i <= top; ++i) {
      rows[i][m.degree() + i - 1] += static_cast<long>(binomial(top - 1, i - 1));
    }
  }
  return BettiTable(TableKind::Quotient, std::move(rows));
}

DimensionData pd_and_depth(const MonomialIdeal& ideal) {
  require_resolvable(ideal);
  DimensionData out;
  for (const auto& m : ideal.generators()) {
    out.projective_dimension = std::max(out.projective_dimension, m.max_index());
  }
  out.depth = ideal.num_vars() - out.projective_dimension;
  return out;
}

std::optional<std::vector<int>> hibi_murai_shape(const MonomialIdeal& ideal) {
  const auto& gens = ideal.generators();
  const int n = ideal.num_vars();
  if (gens.empty() || static_cast<int>(gens.size()) > n) return std::nullopt;
  std::vector<int> s;
  s.push_back(gens[0].degree() - 1);
  if (s[0] < 1) return std::nullopt;
  for (std::size_t k = 1; k < gens.size(); ++k) {
    s.push_back(gens[k].degree() - gens[k - 1].degree());
  }
  for (std::size_t k = 0; k < gens.size(); ++k) {
    std::vector<int> expected(n, 0);
    for (std::size_t p = 0; p < k; ++p) expected[p] = s[p];
    expected[k] = s[k] + 1;
    if (gens[k] != Monomial(expected)) return std::nullopt;
  }
  return s;
}

ResolutionTail resolution_tail(const MonomialIdeal& ideal) {
  require_resolvable(ideal);
  if (!hibi_murai_shape(ideal)) {
    throw DomainError("shape", "ideal does not have the Hibi-Murai generator shape");
  }
  const auto& gens = ideal.generators();
  const int h = static_cast<int>(gens.size());
  const BettiTable table = ek_betti(ideal);

  ResolutionTail tail;
  tail.last_degree = h;
  tail.last = table.row(h);
  tail.penultimate = table.row(h - 1);

  BettiRow last{{h + gens[h - 1].degree() - 1, 1}};
  BettiRow penultimate;
  if (h == 1) {
    penultimate[0] = 1;
  } else {
    penultimate[h + gens[h - 1].degree() - 2] += h - 1;
    penultimate[h + gens[h - 2].degree() - 2] += 1;
  }
  if (last != tail.last || penultimate != tail.penultimate) {
    throw InvariantError("Eliahou-Kervaire tail disagrees with the closed form");
  }
  return tail;
}

}  // namespace betti
