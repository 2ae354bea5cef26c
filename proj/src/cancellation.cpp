#include "betti/cancellation.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "betti/detail/bmatching.hpp"
#include "betti/errors.hpp"
#include "betti/stable.hpp"

namespace betti {

bool mode_admits(Mode mode, int j, int jp) {
  switch (mode) {
    case Mode::Zero: return j == jp;
    case Mode::Negative: return j < jp;
    case Mode::Both: return j <= jp;
  }
  return false;
}

std::string cancellation_class(const Cancellation& c) {
  return c.is_zero() ? "zero" : "negative";
}

bool DegreeMatrix::non_negative() const {
  // The smallest entry pairs the smallest column with the largest row shift.
  if (row_shifts.empty() || col_shifts.empty()) return true;
  return col_shifts.front() - row_shifts.back() >= 0;
}

bool DegreeMatrix::has_non_positive() const {
  if (row_shifts.empty() || col_shifts.empty()) return false;
  return col_shifts.front() - row_shifts.back() <= 0;
}

std::vector<DegreeMatrix> degree_matrices(const BettiTable& table) {
  auto expand = [](const BettiRow& row) {
    std::vector<int> shifts;
    for (const auto& [j, b] : row) shifts.insert(shifts.end(), static_cast<std::size_t>(b), j);
    return shifts;
  };
  std::vector<DegreeMatrix> out;
  for (int i = 1; i < table.length(); ++i) {
    if (table.row(i).empty() || table.row(i - 1).empty()) continue;
    out.push_back({i, expand(table.row(i - 1)), expand(table.row(i))});
  }
  return out;
}

namespace {

bool step_allowed(const BettiTable& table, int step, bool allow_row0) {
  if (step < 1 || step >= table.length()) return false;
  if (step >= 2) return true;
  return table.kind() == TableKind::Module && allow_row0;
}

void check_guard(const BettiTable& table, const SearchOptions& options) {
  if (table.total_sum() > options.size_guard) {
    throw SizeGuardError("table has total Betti mass " + std::to_string(table.total_sum()) +
                         ", above the search guard " + std::to_string(options.size_guard));
  }
}

}  // namespace

std::vector<Cancellation> list_cancellations(const BettiTable& table, Mode mode, bool allow_row0) {
  std::vector<Cancellation> out;
  for (int i = 1; i < table.length(); ++i) {
    if (!step_allowed(table, i, allow_row0)) continue;
    for (const auto& [j, b] : table.row(i)) {
      for (const auto& [jp, bp] : table.row(i - 1)) {
        if (mode_admits(mode, j, jp)) out.push_back({i, j, jp});
      }
    }
  }
  return out;
}

bool is_applicable(const BettiTable& table, const Cancellation& c, bool allow_row0) {
  return step_allowed(table, c.i, allow_row0) && c.j <= c.jp && table.at(c.i, c.j) > 0 &&
         table.at(c.i - 1, c.jp) > 0;
}

BettiTable apply(const BettiTable& table, const Cancellation& c, bool allow_row0) {
  if (!is_applicable(table, c, allow_row0)) {
    throw DomainError("inapplicable-cancellation",
                      "cancellation (" + std::to_string(c.i) + "," + std::to_string(c.j) + "," +
                          std::to_string(c.jp) + ") is not applicable");
  }
  BettiTable out(table);
  out.decrement(c.i, c.j);
  out.decrement(c.i - 1, c.jp);
  return out;
}

BettiTable apply_sequence(const BettiTable& table, std::span<const Cancellation> sequence,
                          bool allow_row0) {
  BettiTable current(table);
  for (const auto& c : sequence) current = apply(current, c, allow_row0);
  return current;
}

std::set<Totals> reachable_totals(const BettiTable& table, const SearchOptions& options) {
  check_guard(table, options);
  std::set<Totals> out;
  std::unordered_set<std::string> seen{table.canonical_key()};
  std::vector<BettiTable> stack{table};
  while (!stack.empty()) {
    BettiTable current = std::move(stack.back());
    stack.pop_back();
    out.insert(current.totals());
    for (const auto& c : list_cancellations(current, options.mode, options.allow_row0)) {
      BettiTable next = apply(current, c, options.allow_row0);
      if (seen.insert(next.canonical_key()).second) stack.push_back(std::move(next));
    }
  }
  return out;
}

long min_row_total(const BettiTable& table, int row, const SearchOptions& options) {
  if (row < 0 || row >= table.length()) return 0;
  const BettiRow& middle = table.row(row);

  std::vector<long> left_capacity;
  std::vector<int> left_shift;
  for (const auto& [j, b] : middle) {
    left_capacity.push_back(b);
    left_shift.push_back(j);
  }
  std::vector<long> right_capacity;
  std::vector<detail::BipartiteEdge> edges;

  // Partners one row below: row `row` plays the j role, row-1 the j' role.
  if (step_allowed(table, row, options.allow_row0)) {
    for (const auto& [jp, b] : table.row(row - 1)) {
      const int r = static_cast<int>(right_capacity.size());
      right_capacity.push_back(b);
      for (std::size_t l = 0; l < left_shift.size(); ++l) {
        if (mode_admits(options.mode, left_shift[l], jp)) edges.push_back({static_cast<int>(l), r});
      }
    }
  }
  // Partners one row above: row+1 plays the j role, row `row` the j' role.
  if (step_allowed(table, row + 1, options.allow_row0)) {
    for (const auto& [j, b] : table.row(row + 1)) {
      const int r = static_cast<int>(right_capacity.size());
      right_capacity.push_back(b);
      for (std::size_t l = 0; l < left_shift.size(); ++l) {
        if (mode_admits(options.mode, j, left_shift[l])) edges.push_back({static_cast<int>(l), r});
      }
    }
  }

  long matched = 0;
  if (!edges.empty()) {
    for (long f : detail::max_bmatching(left_capacity, right_capacity, edges)) matched += f;
  }
  return table.row_total(row) - matched;
}

Reachability is_reachable(const BettiTable& table, const Totals& target,
                          const SearchOptions& options) {
  check_guard(table, options);
  Totals goal(target);
  for (std::size_t k = static_cast<std::size_t>(table.length()); k < goal.size(); ++k) {
    if (goal[k] != 0) return {};
  }
  goal.resize(static_cast<std::size_t>(table.length()), 0);

  std::unordered_set<std::string> dead;
  std::vector<Cancellation> path;
  std::function<bool(const BettiTable&)> search = [&](const BettiTable& current) {
    const Totals totals = current.totals();
    if (totals == goal) return true;
    for (std::size_t k = 0; k < totals.size(); ++k) {
      if (totals[k] < goal[k]) return false;
    }
    for (const auto& c : list_cancellations(current, options.mode, options.allow_row0)) {
      BettiTable next = apply(current, c, options.allow_row0);
      if (!dead.insert(next.canonical_key()).second) continue;
      path.push_back(c);
      if (search(next)) return true;
      path.pop_back();
    }
    return false;
  };

  Reachability out;
  dead.insert(table.canonical_key());
  if (search(table)) {
    out.reachable = true;
    out.witness = path;
    std::sort(out.witness.begin(), out.witness.end());
  }
  return out;
}

bool lex_cancellation_test(const MonomialIdeal& ideal, int homological_degree) {
  if (!is_stable(ideal)) throw DomainError("not-stable", "ideal is not stable");
  const int i = homological_degree;
  if (i < 2) return false;  // row 0 of P/L is never cancelled
  for (const auto& m : ideal.generators()) {
    if (m.max_index() < i - 1) continue;
    for (const auto& mp : ideal.generators()) {
      if (mp.max_index() >= i && mp.degree() < m.degree()) return true;
    }
  }
  return false;
}

}  // namespace betti
