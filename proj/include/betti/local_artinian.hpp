#pragma once

#include <map>
#include <string>
#include <vector>

#include "betti/codim2.hpp"
#include "betti/hilbert.hpp"
#include "betti/polynomial.hpp"

namespace betti {

/// Generators of an ideal of k[[x_1..x_n]] contained in the maximal ideal.
class LocalIdealPresentation {
 public:
  LocalIdealPresentation(int num_vars, std::vector<Polynomial> generators);

  int num_vars() const { return num_vars_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  int max_generator_degree() const;

 private:
  int num_vars_;
  std::vector<Polynomial> generators_;
};

/// (I + n^N) / n^N as a subspace of the polynomials of degree < N, kept in
/// reduced row echelon form. Pivots are ordered by ascending degree, then
/// lex-greater first, so a pivot is the initial monomial of its row.
class TruncatedSpan {
 public:
  TruncatedSpan(int num_vars, int bound);

  int bound() const { return bound_; }
  int num_vars() const { return num_vars_; }
  std::size_t dimension() const { return rows_.size(); }

  /// Adds truncate(p, N); returns true if the span grew.
  bool insert(const Polynomial& p);
  bool contains(const Polynomial& p) const;

  /// Number of pivots of degree t.
  long pivots_in_degree(int t) const;
  /// Canonical basis, pivot order.
  std::vector<Polynomial> basis() const;

  /// For every basis element b and variable x_i, truncate(x_i * b) is in the
  /// span.
  bool closed_under_variables() const;

 private:
  using SparseRow = std::map<int, Rational>;

  SparseRow to_row(const Polynomial& p) const;
  Polynomial to_polynomial(const SparseRow& row) const;
  void reduce(SparseRow& row) const;

  int num_vars_;
  int bound_;
  std::vector<Monomial> monomials_;
  std::map<Monomial, int, DegreeThenLex> index_;
  /// pivot column -> row with a 1 at the pivot and zeros in other pivot columns
  std::map<int, SparseRow> rows_;
};

TruncatedSpan truncated_span(const LocalIdealPresentation& ideal, int bound);

struct LocalOptions {
  /// Initial truncation; 0 means max generator degree + 4.
  int initial_bound = 0;
  int ceiling = 64;
};

/// Hilbert function of R/I, certified once some h(t0) = 0 with t0 < N-1.
/// Throws DomainError("possibly-non-artinian") if the ceiling is reached.
HilbertFunction local_hf(const LocalIdealPresentation& ideal, const LocalOptions& options = {});

/// Minimal number of generators: dim (I + n^N) / (nI + n^N) with N = s + 2.
long mu(const LocalIdealPresentation& ideal, const LocalOptions& options = {});

/// Smallest truncation for which membership tests are exact: socle degree + 2.
int membership_bound(const LocalIdealPresentation& ideal, const LocalOptions& options = {});

/// p in I, decided modulo n^N. Requires N >= s + 2 (DomainError otherwise).
bool membership(const Polynomial& p, const LocalIdealPresentation& ideal, int bound,
                const LocalOptions& options = {});

MonomialIdeal lex_of_local(const LocalIdealPresentation& ideal, const LocalOptions& options = {});

struct VerificationReport {
  bool hf_ok = false;
  bool lex_ok = false;
  bool mu_ok = false;
  long mu = 0;
  long mu_expected = 0;
  /// Total Betti numbers (1, mu, mu - 1) of R/I.
  std::vector<long> betti;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

VerificationReport verify_realization(const LocalIdealPresentation& ideal,
                                      const CodimTwoProfile& expected,
                                      std::size_t num_positions,
                                      const LocalOptions& options = {});

}  // namespace betti
