#pragma once

#include <vector>

#include "betti/polynomial.hpp"

namespace betti {

/// Dense rows x cols matrix of polynomials sharing one variable count.
/// Indices are 0-based; the JSON and CLI layers translate to 1-based.
class PolyMatrix {
 public:
  PolyMatrix(int rows, int cols, int num_vars);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int num_vars() const { return num_vars_; }

  const Polynomial& at(int r, int c) const { return entries_.at(index(r, c)); }
  void set(int r, int c, Polynomial p);

  PolyMatrix without_row(int r) const;
  PolyMatrix with_rows_swapped(int a, int b) const;

  bool operator==(const PolyMatrix&) const = default;

 private:
  std::size_t index(int r, int c) const;

  int rows_;
  int cols_;
  int num_vars_;
  std::vector<Polynomial> entries_;
};

/// Cofactor expansion along rows, memoizing minors by their column set.
/// Throws DomainError for non-square input.
Polynomial determinant(const PolyMatrix& m);

}  // namespace betti
