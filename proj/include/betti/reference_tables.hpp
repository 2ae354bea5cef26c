#pragma once

#include "betti/betti_table.hpp"

namespace betti::reference {

/// P/I* for the numerical semigroup ring k[[t^19, t^26, t^34, t^40]]:
/// 0 <- P <- P^5(-3) <- P^3(-4)+P^2(-5)+P(-6) <- P(-5)+P(-8).
BettiTable semigroup_ring_table();

/// gr_n(I) = P + P/(x^2 y^5) + P/(x^2, xy, xz^3, z^6) for
/// I = (x^2 y^5, xyz^6 - z^9, y^5 z^6), as a module table with row 0 = {0: 3}.
BettiTable filtered_module_table();

/// P/I* for the stretched Artinian algebras with Hilbert function (1,5,1,1,1).
BettiTable stretched_algebra_table();

}  // namespace betti::reference
