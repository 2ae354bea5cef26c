#include "betti/local_artinian.hpp"

#include <algorithm>

#include "betti/errors.hpp"

namespace betti {

LocalIdealPresentation::LocalIdealPresentation(int num_vars, std::vector<Polynomial> generators)
    : num_vars_(num_vars) {
  for (auto& g : generators) {
    if (g.num_vars() != num_vars) {
      throw DomainError("variable-count", "generator has the wrong number of variables");
    }
    if (g.is_zero()) continue;
    if (g.order() < 1) {
      throw DomainError("unit-generator", "local generators must lie in the maximal ideal");
    }
    generators_.push_back(std::move(g));
  }
}

int LocalIdealPresentation::max_generator_degree() const {
  int d = 0;
  for (const auto& g : generators_) d = std::max(d, g.degree());
  return d;
}

TruncatedSpan::TruncatedSpan(int num_vars, int bound) : num_vars_(num_vars), bound_(bound) {
  if (bound < 1) throw DomainError("bound", "truncation bound must be at least 1");
  for (int t = 0; t < bound; ++t) {
    for (auto& m : monomials_of_degree(num_vars, t)) {
      index_.emplace(m, static_cast<int>(monomials_.size()));
      monomials_.push_back(std::move(m));
    }
  }
}

TruncatedSpan::SparseRow TruncatedSpan::to_row(const Polynomial& p) const {
  SparseRow row;
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() < bound_) row.emplace(index_.at(m), c);
  }
  return row;
}

Polynomial TruncatedSpan::to_polynomial(const SparseRow& row) const {
  Polynomial p(num_vars_);
  for (const auto& [col, c] : row) p.add_term(monomials_[col], c);
  return p;
}

void TruncatedSpan::reduce(SparseRow& row) const {
  // Pivot rows only have entries at or after their pivot, so a left-to-right
  // sweep clears every pivot column in one pass.
  for (auto it = row.begin(); it != row.end();) {
    auto pivot = rows_.find(it->first);
    if (pivot == rows_.end()) {
      ++it;
      continue;
    }
    const Rational factor = it->second;
    const int col = it->first;
    for (const auto& [c, v] : pivot->second) {
      auto [slot, inserted] = row.try_emplace(c, 0);
      slot->second -= factor * v;
      if (slot->second == 0 && c != col) row.erase(slot);
    }
    it = row.erase(row.find(col));
  }
}

bool TruncatedSpan::insert(const Polynomial& p) {
  SparseRow row = to_row(p);
  reduce(row);
  if (row.empty()) return false;
  const int pivot = row.begin()->first;
  const Rational lead = row.begin()->second;
  for (auto& [c, v] : row) v /= lead;
  // Keep the basis reduced: clear the new pivot column from existing rows.
  for (auto& [other_pivot, other] : rows_) {
    auto hit = other.find(pivot);
    if (hit == other.end()) continue;
    const Rational factor = hit->second;
    for (const auto& [c, v] : row) {
      auto [slot, inserted] = other.try_emplace(c, 0);
      slot->second -= factor * v;
      if (slot->second == 0) other.erase(slot);
    }
  }
  rows_.emplace(pivot, std::move(row));
  return true;
}

bool TruncatedSpan::contains(const Polynomial& p) const {
  if (p.num_vars() != num_vars_) throw DomainError("variable-count", "wrong number of variables");
  SparseRow row = to_row(p);
  reduce(row);
  return row.empty();
}

long TruncatedSpan::pivots_in_degree(int t) const {
  return std::count_if(rows_.begin(), rows_.end(),
                       [&](const auto& entry) { return monomials_[entry.first].degree() == t; });
}

std::vector<Polynomial> TruncatedSpan::basis() const {
  std::vector<Polynomial> out;
  for (const auto& [pivot, row] : rows_) out.push_back(to_polynomial(row));
  return out;
}

bool TruncatedSpan::closed_under_variables() const {
  for (const auto& b : basis()) {
    for (int i = 1; i <= num_vars_; ++i) {
      if (!contains(b * Monomial::variable(num_vars_, i))) return false;
    }
  }
  return true;
}

TruncatedSpan truncated_span(const LocalIdealPresentation& ideal, int bound) {
  const int n = ideal.num_vars();
  TruncatedSpan span(n, bound);
  std::vector<Polynomial> frontier;
  for (const auto& g : ideal.generators()) {
    const int order = g.order();
    for (int t = 0; t + order < bound; ++t) {
      for (const auto& m : monomials_of_degree(n, t)) {
        Polynomial product = truncate(g * m, bound);
        if (span.insert(product)) frontier.push_back(std::move(product));
      }
    }
  }
  // Saturate under multiplication by variables. The products above already
  // span I mod n^N, so this normally adds nothing.
  while (!frontier.empty()) {
    std::vector<Polynomial> next;
    for (const auto& b : frontier) {
      for (int i = 1; i <= n; ++i) {
        Polynomial product = truncate(b * Monomial::variable(n, i), bound);
        if (span.insert(product)) next.push_back(std::move(product));
      }
    }
    frontier = std::move(next);
  }
  return span;
}

namespace {

// h(t) for t < N, computed in one truncation.
std::vector<long> graded_codimensions(const TruncatedSpan& span) {
  std::vector<long> values;
  for (int t = 0; t < span.bound(); ++t) {
    values.push_back(static_cast<long>(count_monomials(span.num_vars(), t)) -
                     span.pivots_in_degree(t));
  }
  return values;
}

}  // namespace

HilbertFunction local_hf(const LocalIdealPresentation& ideal, const LocalOptions& options) {
  int bound = options.initial_bound > 0 ? options.initial_bound : ideal.max_generator_degree() + 4;
  bound = std::max(bound, 2);
  while (true) {
    const std::vector<long> values = graded_codimensions(truncated_span(ideal, bound));
    for (int t0 = 0; t0 < bound - 1; ++t0) {
      if (values[t0] != 0) continue;
      // h(t0) = 0 means n^{t0} lies in I, so every later value is 0 too.
      for (int t = t0; t < bound; ++t) {
        if (values[t] != 0) throw InvariantError("local Hilbert function rose after reaching zero");
      }
      return HilbertFunction({values.begin(), values.begin() + t0}, Tail::Zero);
    }
    if (bound >= options.ceiling) {
      throw DomainError("possibly-non-artinian",
                        "Hilbert function did not reach zero below truncation " +
                            std::to_string(bound));
    }
    bound = std::min(bound * 2, options.ceiling);
  }
}

int membership_bound(const LocalIdealPresentation& ideal, const LocalOptions& options) {
  return local_hf(ideal, options).socle_degree() + 2;
}

long mu(const LocalIdealPresentation& ideal, const LocalOptions& options) {
  const int n = ideal.num_vars();
  const int bound = membership_bound(ideal, options);
  const TruncatedSpan whole = truncated_span(ideal, bound);
  std::vector<Polynomial> shifted;
  for (const auto& g : ideal.generators()) {
    for (int i = 1; i <= n; ++i) shifted.push_back(g * Monomial::variable(n, i));
  }
  const TruncatedSpan maximal_times = truncated_span(LocalIdealPresentation(n, shifted), bound);
  return static_cast<long>(whole.dimension()) - static_cast<long>(maximal_times.dimension());
}

bool membership(const Polynomial& p, const LocalIdealPresentation& ideal, int bound,
                const LocalOptions& options) {
  const int required = membership_bound(ideal, options);
  if (bound < required) {
    throw DomainError("bound", "membership needs a truncation of at least " +
                                   std::to_string(required));
  }
  return truncated_span(ideal, bound).contains(p);
}

MonomialIdeal lex_of_local(const LocalIdealPresentation& ideal, const LocalOptions& options) {
  return lex_ideal(local_hf(ideal, options), ideal.num_vars());
}

VerificationReport verify_realization(const LocalIdealPresentation& ideal,
                                      const CodimTwoProfile& expected, std::size_t num_positions,
                                      const LocalOptions& options) {
  VerificationReport report;
  report.mu_expected = expected.d + 1 - static_cast<long>(num_positions);
  HilbertFunction h = local_hf(ideal, options);
  report.hf_ok = h == expected.h;
  if (!report.hf_ok) report.failures.push_back("local Hilbert function differs from the profile");
  report.lex_ok = report.hf_ok && lex_ideal(h, ideal.num_vars()) == expected.lex;
  if (!report.lex_ok) report.failures.push_back("lex ideal differs from the profile");
  report.mu = mu(ideal, options);
  report.mu_ok = report.mu == report.mu_expected;
  if (!report.mu_ok) {
    report.failures.push_back("mu = " + std::to_string(report.mu) + ", expected " +
                              std::to_string(report.mu_expected));
  }
  report.betti = {1, report.mu, report.mu - 1};
  return report;
}

}  // namespace betti
