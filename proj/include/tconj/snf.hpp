// Smith normal form with unimodular transforms, and cokernel structure.

#ifndef TCONJ_SNF_HPP
#define TCONJ_SNF_HPP

#include <cstdlib>
#include <vector>

#include "tconj/intmat.hpp"

namespace tconj {

// U * A * V = D with U, V unimodular and D diagonal, entries nonnegative,
// each dividing the next, zeros last.
struct SmithDecomposition {
  IntMatrix U, D, V;

  std::vector<Int> diagonal() const {
    int n = std::min(D.rows, D.cols);
    std::vector<Int> d(n);
    for (int i = 0; i < n; ++i) d[i] = D.at(i, i);
    return d;
  }
};

namespace detail {

// Truncated quotient; used so remainders keep absolute value below the
// pivot during elimination.
inline Int tdiv(const Int& a, const Int& b) { return a / b; }

}  // namespace detail

inline SmithDecomposition smith_normal_form(const IntMatrix& A) {
  SmithDecomposition s;
  s.D = A;
  s.U = IntMatrix::identity(A.rows);
  s.V = IntMatrix::identity(A.cols);
  IntMatrix& D = s.D;
  IntMatrix& U = s.U;
  IntMatrix& V = s.V;

  auto swap_rows = [&](int i, int j) {
    if (i == j) return;
    for (int c = 0; c < D.cols; ++c) std::swap(D.at(i, c), D.at(j, c));
    for (int c = 0; c < U.cols; ++c) std::swap(U.at(i, c), U.at(j, c));
  };
  auto swap_cols = [&](int i, int j) {
    if (i == j) return;
    for (int r = 0; r < D.rows; ++r) std::swap(D.at(r, i), D.at(r, j));
    for (int r = 0; r < V.rows; ++r) std::swap(V.at(r, i), V.at(r, j));
  };
  auto add_row = [&](int dst, int src, const Int& f) {  // row dst += f * row src
    for (int c = 0; c < D.cols; ++c) D.at(dst, c) += f * D.at(src, c);
    for (int c = 0; c < U.cols; ++c) U.at(dst, c) += f * U.at(src, c);
  };
  auto add_col = [&](int dst, int src, const Int& f) {
    for (int r = 0; r < D.rows; ++r) D.at(r, dst) += f * D.at(r, src);
    for (int r = 0; r < V.rows; ++r) V.at(r, dst) += f * V.at(r, src);
  };

  int steps = std::min(A.rows, A.cols);
  for (int t = 0; t < steps; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing submatrix becomes the pivot
      int pr = -1, pc = -1;
      for (int r = t; r < D.rows; ++r)
        for (int c = t; c < D.cols; ++c) {
          if (D.at(r, c) == 0) continue;
          if (pr < 0 || abs(D.at(r, c)) < abs(D.at(pr, pc))) {
            pr = r;
            pc = c;
          }
        }
      if (pr < 0) return s;  // trailing submatrix is zero
      swap_rows(t, pr);
      swap_cols(t, pc);

      bool residue = false;
      for (int r = t + 1; r < D.rows; ++r) {
        if (D.at(r, t) == 0) continue;
        add_row(r, t, -detail::tdiv(D.at(r, t), D.at(t, t)));
        if (D.at(r, t) != 0) residue = true;
      }
      for (int c = t + 1; c < D.cols; ++c) {
        if (D.at(t, c) == 0) continue;
        add_col(c, t, -detail::tdiv(D.at(t, c), D.at(t, t)));
        if (D.at(t, c) != 0) residue = true;
      }
      if (residue) continue;  // a smaller pivot is now available

      // pivot is alone in its row and column; enforce divisibility of the
      // rest of the submatrix by folding a violating row into row t
      int vr = -1;
      for (int r = t + 1; r < D.rows && vr < 0; ++r)
        for (int c = t + 1; c < D.cols; ++c)
          if (D.at(r, c) % D.at(t, t) != 0) {
            vr = r;
            break;
          }
      if (vr >= 0) {
        add_row(t, vr, 1);
        continue;
      }
      break;
    }
    if (D.at(t, t) < 0) {
      for (int c = 0; c < D.cols; ++c) D.at(t, c) = -D.at(t, c);
      for (int c = 0; c < U.cols; ++c) U.at(t, c) = -U.at(t, c);
    }
  }
  return s;
}

// Structure of Z^rows / (column space of A): free part and invariant
// factors of the torsion part in divisibility order.
struct Cokernel {
  int free_rank = 0;
  std::vector<Int> torsion;  // each >= 2, each dividing the next

  Int order() const {  // throws when infinite
    if (free_rank > 0) throw Error("cokernel is infinite");
    Int n = 1;
    for (const Int& d : torsion) n *= d;
    return n;
  }
};

inline Cokernel cokernel(const IntMatrix& A) {
  SmithDecomposition s = smith_normal_form(A);
  Cokernel c;
  int nonzero = 0;
  for (const Int& d : s.diagonal()) {
    if (d == 0) continue;
    ++nonzero;
    if (d >= 2) c.torsion.push_back(d);
  }
  c.free_rank = A.rows - nonzero;
  return c;
}

}  // namespace tconj

#endif  // TCONJ_SNF_HPP
