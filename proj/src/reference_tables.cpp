#include "betti/reference_tables.hpp"

namespace betti::reference {

BettiTable semigroup_ring_table() {
  return BettiTable(TableKind::Quotient, {{{0, 1}}, {{3, 5}}, {{4, 3}, {5, 2}, {6, 1}}, {{5, 1}, {8, 1}}});
}

BettiTable filtered_module_table() {
  return BettiTable(TableKind::Module,
                    {{{0, 3}}, {{2, 2}, {4, 1}, {6, 1}, {7, 1}}, {{3, 1}, {5, 2}, {7, 1}}, {{6, 1}}});
}

BettiTable stretched_algebra_table() {
  return BettiTable(TableKind::Quotient, {{{0, 1}},
                                          {{2, 14}, {5, 1}},
                                          {{3, 36}, {6, 4}},
                                          {{4, 39}, {7, 6}},
                                          {{5, 20}, {8, 4}},
                                          {{6, 4}, {9, 1}}});
}

}  // namespace betti::reference
