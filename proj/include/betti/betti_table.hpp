#pragma once

#include <map>
#include <string>
#include <vector>

namespace betti {

/// Which convention row 0 follows.
enum class TableKind {
  Quotient,  ///< resolution of P/I: row 0 is exactly {0: 1}
  Module,    ///< resolution of a module: row 0 is explicit input
};

/// shift j -> multiplicity beta_{i,j}; absent shifts are zero.
using BettiRow = std::map<int, long>;

/// Graded Betti numbers beta_{i,j} for homological degrees 0..length()-1.
/// The length is fixed at construction, so rows emptied by cancellations are
/// still reported (as zero totals).
class BettiTable {
 public:
  BettiTable(TableKind kind, std::vector<BettiRow> rows);

  TableKind kind() const { return kind_; }
  int length() const { return static_cast<int>(rows_.size()); }
  const std::vector<BettiRow>& rows() const { return rows_; }
  const BettiRow& row(int i) const;
  long at(int i, int j) const;

  long row_total(int i) const;
  std::vector<long> totals() const;
  long total_sum() const;

  /// Largest i with a nonempty row (-1 when all rows are empty).
  int top_row() const;

  /// beta_{i,j} -= 1. Throws DomainError if the entry is already zero.
  void decrement(int i, int j);
  void increment(int i, int j);

  /// Stable serialization used as a memo key.
  std::string canonical_key() const;

  bool operator==(const BettiTable&) const = default;

 private:
  TableKind kind_;
  std::vector<BettiRow> rows_;
};

}  // namespace betti
