#include "betti/poly_matrix.hpp"

#include <bit>
#include <optional>

#include "betti/errors.hpp"

namespace betti {

PolyMatrix::PolyMatrix(int rows, int cols, int num_vars)
    : rows_(rows), cols_(cols), num_vars_(num_vars) {
  if (rows <= 0 || cols <= 0) throw DomainError("shape", "matrix dimensions must be positive");
  entries_.assign(static_cast<std::size_t>(rows) * cols, Polynomial(num_vars));
}

std::size_t PolyMatrix::index(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
  return static_cast<std::size_t>(r) * cols_ + c;
}

void PolyMatrix::set(int r, int c, Polynomial p) {
  if (p.num_vars() != num_vars_) {
    throw DomainError("variable-count", "matrix entry has the wrong number of variables");
  }
  entries_[index(r, c)] = std::move(p);
}

PolyMatrix PolyMatrix::without_row(int r) const {
  if (rows_ < 2) throw DomainError("shape", "cannot delete the only row");
  PolyMatrix out(rows_ - 1, cols_, num_vars_);
  for (int i = 0, k = 0; i < rows_; ++i) {
    if (i == r) continue;
    for (int c = 0; c < cols_; ++c) out.set(k, c, at(i, c));
    ++k;
  }
  return out;
}

PolyMatrix PolyMatrix::with_rows_swapped(int a, int b) const {
  PolyMatrix out(*this);
  for (int c = 0; c < cols_; ++c) {
    out.set(a, c, at(b, c));
    out.set(b, c, at(a, c));
  }
  return out;
}

namespace {

class CofactorExpansion {
 public:
  explicit CofactorExpansion(const PolyMatrix& m)
      : m_(m), memo_(std::size_t{1} << m.cols()) {}

  // Determinant of the rows popcount(used).. with the columns outside `used`.
  const Polynomial& minor(std::uint32_t used) {
    auto& slot = memo_[used];
    if (slot) return *slot;
    const int n = m_.cols();
    const int row = std::popcount(used);
    Polynomial sum(m_.num_vars());
    if (row == n) {
      sum = Polynomial::constant(m_.num_vars(), 1);
    } else {
      int free_before = 0;
      for (int c = 0; c < n; ++c) {
        if (used & (1u << c)) continue;
        const Polynomial& entry = m_.at(row, c);
        if (!entry.is_zero()) {
          const Polynomial& rest = minor(used | (1u << c));
          if (!rest.is_zero()) {
            Polynomial term = entry * rest;
            if (free_before % 2 == 1) term = -term;
            sum += term;
          }
        }
        ++free_before;
      }
    }
    slot = std::move(sum);
    return *slot;
  }

 private:
  const PolyMatrix& m_;
  std::vector<std::optional<Polynomial>> memo_;
};

}  // namespace

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("non-square", "determinant of a non-square matrix");
  if (m.cols() > 24) throw DomainError("shape", "matrix too large for cofactor expansion");
  return CofactorExpansion(m).minor(0);
}

}  // namespace betti
