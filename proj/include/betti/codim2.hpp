#pragma once

#include <compare>
#include <span>
#include <vector>

#include "betti/betti_table.hpp"
#include "betti/hilbert.hpp"
#include "betti/poly_matrix.hpp"

namespace betti {

/// Data of an Artinian quotient of k[[x,y]] with Hilbert function
/// (1, 2, ..., d, h_d, ..., h_s) and lex ideal (x^d, x^{d-1}y^{k_1}, ..., y^{k_d}).
struct CodimTwoProfile {
  int d = 0;
  int socle = 0;
  HilbertFunction h{{1}, Tail::Zero};
  /// e[j] = |h(j) - h(j-1)| for j = 1..s+1; e[0] is unused and 0.
  std::vector<long> e;
  /// k[0] = 0 < k[1] < ... < k[d].
  std::vector<int> k;
  MonomialIdeal lex{2, {}};

  long e_at(int j) const;
  /// Degree of x^{d-i} y^{k_i}.
  int generator_degree(int i) const { return d - i + k.at(i); }
};

/// 1-based (row, col) in the (d+1) x d Hilbert-Burch matrix.
struct MatrixPosition {
  int row = 0;
  int col = 0;
  auto operator<=>(const MatrixPosition&) const = default;
};

struct AdmissiblePosition {
  MatrixPosition position;
  /// Degree-matrix value a_{2,col} - a_{1,row}; never positive.
  int value = 0;
  bool is_zero() const { return value == 0; }
};

/// Throws DomainError("codim2-shape") unless h has the codimension-two shape.
CodimTwoProfile profile_from_hf(const HilbertFunction& h);

/// Betti table of P/L built from the profile's e-vector: F_1 has shifts
/// d (e_d + 1 times) and d+j (e_{d+j} times), F_2 has shifts d+j+1.
BettiTable resolution_from_profile(const CodimTwoProfile& profile);

/// Column i carries y^{k_i - k_{i-1}} in row i and -x in row i+1.
PolyMatrix hb_matrix(const CodimTwoProfile& profile);

/// Degree-matrix value of a matrix position.
int position_value(const CodimTwoProfile& profile, const MatrixPosition& position);

/// Positions whose degree-matrix value is <= 0, in (row, col) order.
std::vector<AdmissiblePosition> admissible_positions(const CodimTwoProfile& profile);

/// All sets of admissible positions with pairwise distinct rows and columns,
/// i.e. every cancellation pattern the Hilbert-Burch matrix can carry.
std::vector<std::vector<MatrixPosition>> admissible_position_sets(const CodimTwoProfile& profile);

/// A largest set of admissible positions with distinct rows and columns.
std::vector<MatrixPosition> maximum_position_set(const CodimTwoProfile& profile);

struct Realization {
  PolyMatrix matrix;
  /// Signed maximal minors; minor i deletes row i.
  std::vector<Polynomial> generators;
};

/// M' = hb_matrix + 1 at each position. Generator i is (-1)^{d+i+1} times the
/// minor deleting row i, so the unperturbed generators are the monic monomials
/// of L. Positions must be admissible with distinct rows and columns.
Realization realize(const CodimTwoProfile& profile, std::span<const MatrixPosition> positions);

/// Every codimension-two Artinian Hilbert function (1, 2, ..., d, h_d, ..., h_s)
/// with 1 <= s <= max_socle, ordered by socle degree and then by values.
std::vector<HilbertFunction> codim2_hilbert_functions(int max_socle);

/// e_j <= 1 for every j > 0.
bool gorenstein_admissible_codim2(const HilbertFunction& h);

}  // namespace betti
