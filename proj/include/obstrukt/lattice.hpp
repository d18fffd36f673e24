#pragma once

#include <optional>
#include <vector>

#include "obstrukt/error.hpp"

namespace obk {

using Int = long long;

// Dense integer matrix, row-major. Sizes here are desk-scale (a few hundred
// rows); all arithmetic is overflow-checked and throws InternalError on
// overflow rather than wrapping.
struct IntMat {
  int rows = 0, cols = 0;
  std::vector<Int> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  Int at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  static IntMat identity(int n);
  std::vector<Int> mul_vec(const std::vector<Int>& v) const;
};

Int checked_mul(Int x, Int y);
Int checked_add(Int x, Int y);

// Column Hermite form: applies unimodular column operations to A, tracking
// them in U, so that A_original * U = H with H in column echelon form.
// pivots[k] = (row, col) of the k-th pivot; columns past the last pivot are 0.
struct ColEchelon {
  IntMat h;
  IntMat u;
  std::vector<std::pair<int, int>> pivots;
};

ColEchelon column_echelon(IntMat a);

// Basis of { x : A x = 0 } as columns (each a vector of length A.cols).
std::vector<std::vector<Int>> kernel_basis(const IntMat& a);

// Solve A x = b over the integers using a precomputed echelon form.
std::optional<std::vector<Int>> solve_linear(const ColEchelon& ech, const std::vector<Int>& b);

// Smith normal form p * a * q = s with s diagonal, diagonal entries
// non-negative and each dividing the next; p, q unimodular, pinv = p^-1.
struct SmithForm {
  IntMat s;
  IntMat p, pinv, q;
  std::vector<Int> diagonal() const;
};

SmithForm smith_form(IntMat a);

// Invariant factors (> 1 entries of the SNF diagonal) of Z^rows / colspan(a).
// The matrix must present a finite group (full row rank).
std::vector<Int> invariant_factors(const IntMat& presentation);

}  // namespace obk
