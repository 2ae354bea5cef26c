#include "betti/betti_table.hpp"

#include <numeric>

#include "betti/errors.hpp"

namespace betti {

BettiTable::BettiTable(TableKind kind, std::vector<BettiRow> rows)
    : kind_(kind), rows_(std::move(rows)) {
  if (rows_.empty()) throw DomainError("empty-table", "a Betti table needs at least row 0");
  for (auto& row : rows_) {
    for (auto it = row.begin(); it != row.end();) {
      if (it->second < 0) throw DomainError("negative-betti", "Betti numbers must be non-negative");
      it = it->second == 0 ? row.erase(it) : std::next(it);
    }
  }
  if (kind_ == TableKind::Quotient && rows_[0] != BettiRow{{0, 1}}) {
    throw DomainError("quotient-row0", "row 0 of a quotient table must be {0: 1}");
  }
}

const BettiRow& BettiTable::row(int i) const {
  static const BettiRow empty;
  if (i < 0 || i >= length()) return empty;
  return rows_[i];
}

long BettiTable::at(int i, int j) const {
  const BettiRow& r = row(i);
  auto it = r.find(j);
  return it == r.end() ? 0 : it->second;
}

long BettiTable::row_total(int i) const {
  const BettiRow& r = row(i);
  return std::accumulate(r.begin(), r.end(), 0L,
                         [](long acc, const auto& entry) { return acc + entry.second; });
}

std::vector<long> BettiTable::totals() const {
  std::vector<long> out;
  for (int i = 0; i < length(); ++i) out.push_back(row_total(i));
  return out;
}

long BettiTable::total_sum() const {
  long sum = 0;
  for (int i = 0; i < length(); ++i) sum += row_total(i);
  return sum;
}

int BettiTable::top_row() const {
  for (int i = length() - 1; i >= 0; --i) {
    if (!rows_[i].empty()) return i;
  }
  return -1;
}

void BettiTable::decrement(int i, int j) {
  if (at(i, j) <= 0) {
    throw DomainError("inapplicable-cancellation",
                      "beta_{" + std::to_string(i) + "," + std::to_string(j) + "} is already zero");
  }
  auto it = rows_[i].find(j);
  if (--it->second == 0) rows_[i].erase(it);
}

void BettiTable::increment(int i, int j) {
  if (i < 0 || i >= length()) throw DomainError("row-range", "row index outside the table");
  ++rows_[i][j];
}

std::string BettiTable::canonical_key() const {
  std::string key;
  for (const auto& row : rows_) {
    for (const auto& [j, b] : row) key += std::to_string(j) + ':' + std::to_string(b) + ',';
    key += '|';
  }
  return key;
}

}  // namespace betti
