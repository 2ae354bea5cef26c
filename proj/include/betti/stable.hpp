#pragma once

#include <optional>
#include <vector>

#include "betti/betti_table.hpp"
#include "betti/hilbert.hpp"

namespace betti {

/// Basis element e_(m; j_1..j_{i-1}) of the Eliahou-Kervaire resolution in
/// homological degree i, with 1 <= j_1 < ... < j_{i-1} < max(m).
struct EKBasisElement {
  Monomial generator;
  std::vector<int> indices;
  int homological_degree = 1;

  int shift() const { return generator.degree() + homological_degree - 1; }
  bool operator==(const EKBasisElement&) const = default;
};

/// x_j * m / x_max(m) stays in L for every generator m and j < max(m).
bool is_stable(const MonomialIdeal& ideal);

/// All basis elements in homological degree i >= 1: generators in canonical
/// order, index tuples in lexicographic order.
std::vector<EKBasisElement> ek_basis(const MonomialIdeal& ideal, int homological_degree);

/// Graded Betti table of P/L: beta_{i,j} = sum over generators of degree
/// j-i+1 of C(max(m)-1, i-1).
BettiTable ek_betti(const MonomialIdeal& ideal);

struct DimensionData {
  int projective_dimension = 0;
  int depth = 0;
};

/// pd(P/L) = max over generators of max(m); depth by Auslander-Buchsbaum.
DimensionData pd_and_depth(const MonomialIdeal& ideal);

/// (s_1, ..., s_h) when generator k is x_1^{s_1}...x_{k-1}^{s_{k-1}} x_k^{s_k+1}
/// with s_1 = deg(m_1)-1 >= 1 and s_k = deg(m_k)-deg(m_{k-1}).
std::optional<std::vector<int>> hibi_murai_shape(const MonomialIdeal& ideal);

/// The two highest rows of the resolution of an ideal in Hibi-Murai shape.
struct ResolutionTail {
  int last_degree = 0;
  BettiRow last;
  BettiRow penultimate;
};

/// Rows h and h-1 of ek_betti (h = number of generators), checked against
/// the closed form P(-h-deg m_h+1) <- P^{h-1}(-h-deg m_h+2) + P(-h-deg m_{h-1}+2).
/// For h = 1 the penultimate row is row 0. Throws DomainError when the shape
/// precondition fails, InvariantError if the two computations disagree.
ResolutionTail resolution_tail(const MonomialIdeal& ideal);

}  // namespace betti
