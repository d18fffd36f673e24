#include "obstrukt/lattice.hpp"

#include <algorithm>
#include <cstdlib>

namespace obk {

Int checked_mul(Int x, Int y) {
  Int r;
  if (__builtin_mul_overflow(x, y, &r)) fail(ErrorKind::InternalError, "integer overflow in lattice arithmetic");
  return r;
}

Int checked_add(Int x, Int y) {
  Int r;
  if (__builtin_add_overflow(x, y, &r)) fail(ErrorKind::InternalError, "integer overflow in lattice arithmetic");
  return r;
}

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<Int> IntMat::mul_vec(const std::vector<Int>& v) const {
  std::vector<Int> out(rows, 0);
  for (int r = 0; r < rows; ++r) {
    Int acc = 0;
    for (int c = 0; c < cols; ++c)
      if (at(r, c) != 0 && v[c] != 0) acc = checked_add(acc, checked_mul(at(r, c), v[c]));
    out[r] = acc;
  }
  return out;
}

namespace {

void col_swap(IntMat& m, int i, int j) {
  for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

void col_negate(IntMat& m, int i) {
  for (int r = 0; r < m.rows; ++r) m.at(r, i) = -m.at(r, i);
}

// col j += f * col i
void col_addmul(IntMat& m, int j, int i, Int f) {
  if (f == 0) return;
  for (int r = 0; r < m.rows; ++r)
    if (m.at(r, i) != 0) m.at(r, j) = checked_add(m.at(r, j), checked_mul(f, m.at(r, i)));
}

void row_swap(IntMat& m, int i, int j) {
  for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void row_negate(IntMat& m, int i) {
  for (int c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
}

// row j += f * row i
void row_addmul(IntMat& m, int j, int i, Int f) {
  if (f == 0) return;
  for (int c = 0; c < m.cols; ++c)
    if (m.at(i, c) != 0) m.at(j, c) = checked_add(m.at(j, c), checked_mul(f, m.at(i, c)));
}

}  // namespace

ColEchelon column_echelon(IntMat a) {
  ColEchelon out;
  out.u = IntMat::identity(a.cols);
  int lead = 0;
  for (int r = 0; r < a.rows && lead < a.cols; ++r) {
    // Euclid over the entries of row r in columns >= lead
    while (true) {
      int piv = -1;
      Int best = 0;
      for (int c = lead; c < a.cols; ++c) {
        Int v = std::llabs(a.at(r, c));
        if (v != 0 && (piv < 0 || v < best)) {
          piv = c;
          best = v;
        }
      }
      if (piv < 0) break;  // row is zero from lead on
      if (piv != lead) {
        col_swap(a, lead, piv);
        col_swap(out.u, lead, piv);
      }
      if (a.at(r, lead) < 0) {
        col_negate(a, lead);
        col_negate(out.u, lead);
      }
      bool reduced = true;
      for (int c = lead + 1; c < a.cols; ++c) {
        Int q = a.at(r, c) / a.at(r, lead);
        if (q != 0) {
          col_addmul(a, c, lead, -q);
          col_addmul(out.u, c, lead, -q);
        }
        if (a.at(r, c) != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (a.at(r, lead) != 0) {
      // reduce earlier columns against this pivot to tame growth
      for (int c = 0; c < lead; ++c) {
        Int q = a.at(r, c) / a.at(r, lead);
        if (q != 0) {
          col_addmul(a, c, lead, -q);
          col_addmul(out.u, c, lead, -q);
        }
      }
      out.pivots.emplace_back(r, lead);
      ++lead;
    }
  }
  out.h = std::move(a);
  return out;
}

std::vector<std::vector<Int>> kernel_basis(const IntMat& a) {
  ColEchelon ech = column_echelon(a);
  int rank = static_cast<int>(ech.pivots.size());
  std::vector<std::vector<Int>> out;
  for (int c = rank; c < ech.u.cols; ++c) {
    std::vector<Int> v(ech.u.rows);
    for (int r = 0; r < ech.u.rows; ++r) v[r] = ech.u.at(r, c);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<std::vector<Int>> solve_linear(const ColEchelon& ech, const std::vector<Int>& b) {
  if (static_cast<int>(b.size()) != ech.h.rows)
    fail(ErrorKind::InternalError, "solve_linear: size mismatch");
  std::vector<Int> resid = b;
  std::vector<Int> y(ech.h.cols, 0);
  for (auto [pr, pc] : ech.pivots) {
    Int v = resid[pr];
    Int d = ech.h.at(pr, pc);
    if (v % d != 0) return std::nullopt;
    Int coef = v / d;
    y[pc] = coef;
    if (coef != 0)
      for (int r = 0; r < ech.h.rows; ++r)
        resid[r] = checked_add(resid[r], -checked_mul(coef, ech.h.at(r, pc)));
  }
  for (Int v : resid)
    if (v != 0) return std::nullopt;
  // x = U y
  std::vector<Int> x(ech.u.rows, 0);
  for (int c = 0; c < ech.u.cols; ++c)
    if (y[c] != 0)
      for (int r = 0; r < ech.u.rows; ++r)
        x[r] = checked_add(x[r], checked_mul(ech.u.at(r, c), y[c]));
  return x;
}

SmithForm smith_form(IntMat a) {
  SmithForm out;
  out.p = IntMat::identity(a.rows);
  out.pinv = IntMat::identity(a.rows);
  out.q = IntMat::identity(a.cols);
  int n = std::min(a.rows, a.cols);

  auto do_row_swap = [&](int i, int j) {
    row_swap(a, i, j);
    row_swap(out.p, i, j);
    col_swap(out.pinv, i, j);
  };
  auto do_row_addmul = [&](int j, int i, Int f) {
    row_addmul(a, j, i, f);
    row_addmul(out.p, j, i, f);
    col_addmul(out.pinv, i, j, -f);
  };
  auto do_row_negate = [&](int i) {
    row_negate(a, i);
    row_negate(out.p, i);
    col_negate(out.pinv, i);
  };
  auto do_col_swap = [&](int i, int j) {
    col_swap(a, i, j);
    col_swap(out.q, i, j);
  };
  auto do_col_addmul = [&](int j, int i, Int f) {
    col_addmul(a, j, i, f);
    col_addmul(out.q, j, i, f);
  };

  for (int t = 0; t < n; ++t) {
    // find the smallest nonzero entry in the trailing block
    while (true) {
      int pr = -1, pc = -1;
      Int best = 0;
      for (int r = t; r < a.rows; ++r)
        for (int c = t; c < a.cols; ++c) {
          Int v = std::llabs(a.at(r, c));
          if (v != 0 && (pr < 0 || v < best)) {
            pr = r;
            pc = c;
            best = v;
          }
        }
      if (pr < 0) {
        pr = pc = -1;
        break;
      }
      if (pr != t) do_row_swap(t, pr);
      if (pc != t) do_col_swap(t, pc);
      if (a.at(t, t) < 0) do_row_negate(t);
      bool clean = true;
      for (int r = t + 1; r < a.rows; ++r) {
        Int q = a.at(r, t) / a.at(t, t);
        if (q != 0) do_row_addmul(r, t, -q);
        if (a.at(r, t) != 0) clean = false;
      }
      for (int c = t + 1; c < a.cols; ++c) {
        Int q = a.at(t, c) / a.at(t, t);
        if (q != 0) do_col_addmul(c, t, -q);
        if (a.at(t, c) != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility sweep: pivot must divide the remaining block
      bool divides = true;
      for (int r = t + 1; r < a.rows && divides; ++r)
        for (int c = t + 1; c < a.cols && divides; ++c)
          if (a.at(r, c) % a.at(t, t) != 0) {
            do_row_addmul(t, r, 1);  // fold the bad row in and loop again
            divides = false;
          }
      if (divides) break;
    }
    if (a.at(t, t) == 0) break;  // rest of the block is zero
  }
  out.s = std::move(a);
  return out;
}

std::vector<Int> SmithForm::diagonal() const {
  std::vector<Int> d;
  int n = std::min(s.rows, s.cols);
  for (int i = 0; i < n; ++i) d.push_back(s.at(i, i));
  return d;
}

std::vector<Int> invariant_factors(const IntMat& presentation) {
  SmithForm sf = smith_form(presentation);
  if (presentation.cols < presentation.rows)
    fail(ErrorKind::InternalError, "presentation does not have full row rank");
  std::vector<Int> out;
  for (int i = 0; i < presentation.rows; ++i) {
    Int d = sf.s.at(i, i);
    if (d == 0) fail(ErrorKind::InternalError, "presentation is not finite");
    if (d > 1) out.push_back(d);
  }
  return out;
}

}  // namespace obk
