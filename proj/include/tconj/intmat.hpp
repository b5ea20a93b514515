// Dense matrices over the integers, exact arithmetic throughout.

#ifndef TCONJ_INTMAT_HPP
#define TCONJ_INTMAT_HPP

#include <string>
#include <vector>

#include "tconj/common.hpp"

namespace tconj {

struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * cols + j];
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

inline IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw Error("matrix shape mismatch in product");
  IntMatrix z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Int& v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) z.at(i, j) += v * y.at(k, j);
    }
  return z;
}

inline std::vector<Int> mat_apply(const IntMatrix& m,
                                  const std::vector<Int>& v) {
  if (m.cols != static_cast<int>(v.size()))
    throw Error("matrix shape mismatch in application");
  std::vector<Int> out(m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out[i] += m.at(i, j) * v[j];
  return out;
}

// Fraction-free Gaussian elimination; every division is exact.
inline Int determinant(const IntMatrix& m) {
  if (m.rows != m.cols) throw Error("determinant of a non-square matrix");
  int n = m.rows;
  if (n == 0) return 1;
  IntMatrix w = m;
  Int sign = 1, prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        w.at(i, j) =
            (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
    prev = w.at(k, k);
  }
  return sign * w.at(n - 1, n - 1);
}

inline std::string mat_to_string(const IntMatrix& m) {
  std::string out;
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) {
      if (j) out += ' ';
      out += m.at(i, j).str();
    }
    out += '\n';
  }
  return out;
}

}  // namespace tconj

#endif  // TCONJ_INTMAT_HPP
