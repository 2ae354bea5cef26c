#pragma once

#include <compare>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "betti/betti_table.hpp"
#include "betti/hilbert.hpp"

namespace betti {

enum class Mode { Zero, Negative, Both };

/// Decrement beta_{i,j} and beta_{i-1,j'} with j <= j'.
struct Cancellation {
  int i = 0;
  int j = 0;
  int jp = 0;

  bool is_zero() const { return j == jp; }
  bool is_negative() const { return j < jp; }
  auto operator<=>(const Cancellation&) const = default;
};

bool mode_admits(Mode mode, int j, int jp);

/// U_i: entry (r, s) = col_shifts[s] - row_shifts[r], shifts ascending with
/// multiplicity. Rows come from homological degree i-1, columns from i.
struct DegreeMatrix {
  int step = 0;
  std::vector<int> row_shifts;
  std::vector<int> col_shifts;

  int entry(std::size_t r, std::size_t s) const { return col_shifts.at(s) - row_shifts.at(r); }
  bool non_negative() const;
  bool has_non_positive() const;
};

std::vector<DegreeMatrix> degree_matrices(const BettiTable& table);

struct SearchOptions {
  Mode mode = Mode::Both;
  /// Module tables may cancel against row 0 only when this is set; quotient
  /// tables never do.
  bool allow_row0 = false;
  /// Exhaustive search refuses tables with more total Betti mass than this.
  long size_guard = 120;
};

/// All cancellations currently available, ascending in (i, j, j').
std::vector<Cancellation> list_cancellations(const BettiTable& table, Mode mode,
                                             bool allow_row0 = false);

bool is_applicable(const BettiTable& table, const Cancellation& c, bool allow_row0 = false);

/// Throws DomainError("inapplicable-cancellation") if c is not available.
BettiTable apply(const BettiTable& table, const Cancellation& c, bool allow_row0 = false);

/// Replays the whole sequence or throws without partial effect.
BettiTable apply_sequence(const BettiTable& table, std::span<const Cancellation> sequence,
                          bool allow_row0 = false);

using Totals = std::vector<long>;

/// Every total sequence reachable by cancellations of the given mode.
std::set<Totals> reachable_totals(const BettiTable& table, const SearchOptions& options = {});

/// Minimum of beta_i over reachable totals. Computed as a maximum b-matching
/// of row i against rows i-1 and i+1, which is exact because cancellations
/// commute and only those touching row i change beta_i.
long min_row_total(const BettiTable& table, int row, const SearchOptions& options = {});

struct Reachability {
  bool reachable = false;
  /// Canonical (ascending) witness sequence when reachable.
  std::vector<Cancellation> witness;
};

/// Target totals are zero-padded to the table length.
Reachability is_reachable(const BettiTable& table, const Totals& target,
                          const SearchOptions& options = {});

/// Some zero or negative i-cancellation exists in ek_betti(L): i >= 2 and L
/// has generators m, m' with max(m) >= i-1, max(m') >= i, deg(m') < deg(m).
bool lex_cancellation_test(const MonomialIdeal& ideal, int homological_degree);

std::string cancellation_class(const Cancellation& c);

}  // namespace betti
