// Finitely generated abelian groups Z^r + Z/d_1 + ... + Z/d_k, their
// endomorphisms as integer matrices, twisted class counts through the
// cokernel of (phi - id), and the effective separation witness/quotient
// dichotomy.

#ifndef TCONJ_ABELIAN_HPP
#define TCONJ_ABELIAN_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "tconj/automorphism.hpp"
#include "tconj/finite_group.hpp"
#include "tconj/snf.hpp"

namespace tconj {

// Coordinates are (free part, then torsion part); torsion coordinate j is
// taken mod d_j. Invariant factors satisfy 2 <= d_1 | d_2 | ... | d_k.
struct FgAbelianGroup {
  int rank = 0;
  std::vector<Int> torsion;

  int dim() const { return rank + static_cast<int>(torsion.size()); }
};

inline FgAbelianGroup make_abelian(int rank, std::vector<Int> torsion) {
  if (rank < 0) throw Error("negative free rank");
  for (std::size_t j = 0; j < torsion.size(); ++j) {
    if (torsion[j] < 2)
      throw Error("invariant factor " + torsion[j].str() +
                  " is below 2; drop trivial factors");
    if (j > 0 && torsion[j] % torsion[j - 1] != 0)
      throw Error("invariant factors must form a divisibility chain");
  }
  return FgAbelianGroup{rank, std::move(torsion)};
}

// dim x k matrix whose columns generate the relation lattice: column j is
// d_j times the (rank+j)-th basis vector.
inline IntMatrix relation_matrix(const FgAbelianGroup& G) {
  int k = static_cast<int>(G.torsion.size());
  IntMatrix R(G.dim(), k);
  for (int j = 0; j < k; ++j) R.at(G.rank + j, j) = G.torsion[j];
  return R;
}

inline std::vector<Int> abelian_normalize(const FgAbelianGroup& G,
                                          std::vector<Int> v) {
  if (static_cast<int>(v.size()) != G.dim())
    throw Error("coordinate vector has the wrong length");
  for (std::size_t j = 0; j < G.torsion.size(); ++j) {
    Int& c = v[G.rank + j];
    c %= G.torsion[j];
    if (c < 0) c += G.torsion[j];
  }
  return v;
}

struct AbelianEndo {
  IntMatrix m;  // dim x dim, well defined on the torsion quotient
};

// A matrix yields an endomorphism iff it maps the relation lattice into
// itself: free rows of torsion columns vanish, and d_i | d_j * m[i][j] on
// the torsion block.
inline AbelianEndo abelian_endo(const FgAbelianGroup& G, IntMatrix M) {
  if (M.rows != G.dim() || M.cols != G.dim())
    throw Error("endomorphism matrix must be " + std::to_string(G.dim()) +
                " x " + std::to_string(G.dim()));
  int k = static_cast<int>(G.torsion.size());
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < G.rank; ++i)
      if (M.at(i, G.rank + j) != 0)
        throw Error("entry (" + std::to_string(i) + ", " +
                    std::to_string(G.rank + j) +
                    ") sends a torsion generator into the free part");
    for (int i = 0; i < k; ++i)
      if ((G.torsion[j] * M.at(G.rank + i, G.rank + j)) % G.torsion[i] != 0)
        throw Error("entry (" + std::to_string(G.rank + i) + ", " +
                    std::to_string(G.rank + j) +
                    ") is not well defined modulo the invariant factors");
  }
  return AbelianEndo{std::move(M)};
}

inline std::vector<Int> endo_apply(const FgAbelianGroup& G,
                                   const AbelianEndo& phi,
                                   const std::vector<Int>& x) {
  return abelian_normalize(G, mat_apply(phi.m, x));
}

// Surjectivity amounts to a trivial cokernel of [M | relations]; a
// finitely generated abelian group is a Noetherian Z-module, so a
// surjective endomorphism is automatically injective.
inline bool is_abelian_automorphism(const FgAbelianGroup& G,
                                    const AbelianEndo& phi) {
  IntMatrix R = relation_matrix(G);
  IntMatrix B(G.dim(), G.dim() + R.cols);
  for (int i = 0; i < G.dim(); ++i) {
    for (int j = 0; j < G.dim(); ++j) B.at(i, j) = phi.m.at(i, j);
    for (int j = 0; j < R.cols; ++j) B.at(i, G.dim() + j) = R.at(i, j);
  }
  Cokernel c = cokernel(B);
  return c.free_rank == 0 && c.torsion.empty();
}

inline AbelianEndo require_abelian_automorphism(const FgAbelianGroup& G,
                                                IntMatrix M) {
  AbelianEndo phi = abelian_endo(G, std::move(M));
  if (!is_abelian_automorphism(G, phi))
    throw NotBijective("the matrix is not surjective on the group");
  return phi;
}

// [M - I | relations]; its cokernel is the quotient by the image of
// phi - id, whose cosets are exactly the twisted classes.
inline IntMatrix twisted_defect_matrix(const FgAbelianGroup& G,
                                       const AbelianEndo& phi) {
  IntMatrix R = relation_matrix(G);
  IntMatrix B(G.dim(), G.dim() + R.cols);
  for (int i = 0; i < G.dim(); ++i) {
    for (int j = 0; j < G.dim(); ++j) B.at(i, j) = phi.m.at(i, j);
    B.at(i, i) -= 1;
    for (int j = 0; j < R.cols; ++j) B.at(i, G.dim() + j) = R.at(i, j);
  }
  return B;
}

inline ReidemeisterCount reidemeister_number_abelian(const FgAbelianGroup& G,
                                                     const AbelianEndo& phi) {
  Cokernel c = cokernel(twisted_defect_matrix(G, phi));
  if (c.free_rank > 0) return ReidemeisterCount::infinite();
  return ReidemeisterCount::finite(c.order());
}

// Outcome of the separation question for x, y in an abelian group: either
// a twisting witness g with y = g + x - phi(g), or a finite quotient
// K = prod Z/moduli[i] on which the images of x and y differ. The quotient
// map is w -> reduction * w (mod the moduli componentwise); it kills the
// image of phi - id, so the induced twist on K is the identity and classes
// in K are single elements.
struct AbelianSeparation {
  bool conjugate = false;
  std::vector<Int> witness;  // defined when conjugate

  std::vector<Int> moduli;   // invariant factors of the defect quotient, >= 2
  IntMatrix reduction;       // rows reduce a coordinate vector into K
  std::vector<Int> x_image, y_image;  // differ in some coordinate
};

inline AbelianSeparation separate_abelian(const FgAbelianGroup& G,
                                          const AbelianEndo& phi,
                                          const std::vector<Int>& x,
                                          const std::vector<Int>& y) {
  IntMatrix B = twisted_defect_matrix(G, phi);
  SmithDecomposition s = smith_normal_form(B);
  std::vector<Int> diag = s.diagonal();
  for (int i = 0; i < B.rows; ++i)
    if (i >= static_cast<int>(diag.size()) || diag[i] == 0)
      throw InfiniteReidemeister();

  std::vector<Int> xs = abelian_normalize(G, x);
  std::vector<Int> ys = abelian_normalize(G, y);
  std::vector<Int> b(G.dim());
  for (int i = 0; i < G.dim(); ++i) b[i] = xs[i] - ys[i];
  std::vector<Int> c = mat_apply(s.U, b);

  bool solvable = true;
  for (int i = 0; i < B.rows; ++i)
    if (c[i] % diag[i] != 0) solvable = false;

  AbelianSeparation out;
  if (solvable) {
    // back-substitute through V; only the first dim coordinates matter,
    // the rest absorb relation multiples
    std::vector<Int> u(B.cols);
    for (int i = 0; i < B.rows; ++i) u[i] = c[i] / diag[i];
    std::vector<Int> w = mat_apply(s.V, u);
    std::vector<Int> g(w.begin(), w.begin() + G.dim());
    out.conjugate = true;
    out.witness = abelian_normalize(G, g);
    // y must equal g + x - phi(g); a failure would be a solver bug
    std::vector<Int> img = endo_apply(G, phi, out.witness);
    std::vector<Int> back(G.dim());
    for (int i = 0; i < G.dim(); ++i) back[i] = out.witness[i] + xs[i] - img[i];
    if (abelian_normalize(G, back) != ys)
      throw Error("separation witness fails to twist x to y "
                  "(this indicates a bug)");
    return out;
  }

  // assemble the finite quotient from the rows of U at nontrivial factors
  for (int i = 0; i < B.rows; ++i)
    if (diag[i] >= 2) out.moduli.push_back(diag[i]);
  out.reduction = IntMatrix(static_cast<int>(out.moduli.size()), G.dim());
  int row = 0;
  for (int i = 0; i < B.rows; ++i) {
    if (diag[i] < 2) continue;
    for (int j = 0; j < G.dim(); ++j) out.reduction.at(row, j) = s.U.at(i, j);
    ++row;
  }
  auto reduce = [&](const std::vector<Int>& v) {
    std::vector<Int> r = mat_apply(out.reduction, v);
    for (std::size_t i = 0; i < r.size(); ++i) {
      r[i] %= out.moduli[i];
      if (r[i] < 0) r[i] += out.moduli[i];
    }
    return r;
  };
  out.x_image = reduce(xs);
  out.y_image = reduce(ys);
  if (out.x_image == out.y_image)
    throw Error("separation quotient fails to distinguish x and y "
                "(this indicates a bug)");
  return out;
}

// Materialises a finite abelian group (rank 0) as a Cayley table, with
// mixed-radix element indexing, last torsion coordinate fastest.
inline FiniteGroup abelian_to_finite(const FgAbelianGroup& G,
                                     const Limits& limits = {}) {
  if (G.rank != 0) throw Error("the group is infinite");
  long long order = 1;
  for (const Int& d : G.torsion) {
    order *= static_cast<long long>(d);
    if (order > limits.max_table_order)
      throw Error("torsion order exceeds the table validation cap");
  }
  int n = static_cast<int>(order);
  int k = static_cast<int>(G.torsion.size());
  auto coords = [&](int idx) {
    std::vector<Int> v(k);
    for (int j = k - 1; j >= 0; --j) {
      long long d = static_cast<long long>(G.torsion[j]);
      v[j] = idx % d;
      idx = static_cast<int>(idx / d);
    }
    return v;
  };
  auto index_of = [&](const std::vector<Int>& v) {
    long long idx = 0;
    for (int j = 0; j < k; ++j)
      idx = idx * static_cast<long long>(G.torsion[j]) +
            static_cast<long long>(v[j]);
    return static_cast<int>(idx);
  };
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    std::vector<Int> a = coords(i);
    std::string lab;
    for (int j = 0; j < k; ++j) {
      if (j) lab += ',';
      lab += a[j].str();
    }
    labels[i] = lab.empty() ? "0" : lab;
    for (int j2 = 0; j2 < n; ++j2) {
      std::vector<Int> b2 = coords(j2), sum(k);
      for (int j = 0; j < k; ++j) sum[j] = (a[j] + b2[j]) % G.torsion[j];
      table[static_cast<std::size_t>(i) * n + j2] = index_of(sum);
    }
  }
  return build_cayley(n, table, limits, std::move(labels));
}

// The matrix automorphism as a permutation of the finite element set.
inline Automorphism abelian_automorphism_to_finite(const FgAbelianGroup& G,
                                                   const FiniteGroup& F,
                                                   const AbelianEndo& phi) {
  int k = static_cast<int>(G.torsion.size());
  auto coords = [&](int idx) {
    std::vector<Int> v(k);
    for (int j = k - 1; j >= 0; --j) {
      long long d = static_cast<long long>(G.torsion[j]);
      v[j] = idx % d;
      idx = static_cast<int>(idx / d);
    }
    return v;
  };
  auto index_of = [&](const std::vector<Int>& v) {
    long long idx = 0;
    for (int j = 0; j < k; ++j)
      idx = idx * static_cast<long long>(G.torsion[j]) +
            static_cast<long long>(v[j]);
    return static_cast<int>(idx);
  };
  std::vector<int> img(F.order);
  for (int i = 0; i < F.order; ++i)
    img[i] = index_of(endo_apply(G, phi, coords(i)));
  return check_automorphism(F, img);
}

}  // namespace tconj

#endif  // TCONJ_ABELIAN_HPP
