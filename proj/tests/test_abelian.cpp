// Finitely generated abelian groups: endomorphism validation, twisted class
// counts against determinants and against the finite materialisation, and
// the witness/quotient separation dichotomy.

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "tconj/abelian.hpp"
#include "tconj/twisted.hpp"

using namespace tconj;

namespace {

// cofactor expansion, independent of the Smith machinery
Int det_oracle(const IntMatrix& A) {
  int n = A.rows;
  if (n == 1) return A.at(0, 0);
  Int d = 0, sign = 1;
  for (int j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c)
        if (c != j) minor.at(r - 1, cc++) = A.at(r, c);
    }
    d += sign * A.at(0, j) * det_oracle(minor);
    sign = -sign;
  }
  return d;
}

IntMatrix square(int n, const std::vector<long long>& e) {
  IntMatrix M(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M.at(i, j) = Int(e[i * n + j]);
  return M;
}

std::vector<Int> twist(const FgAbelianGroup& G, const AbelianEndo& phi,
                       const std::vector<Int>& g, const std::vector<Int>& x) {
  std::vector<Int> img = endo_apply(G, phi, g);
  std::vector<Int> out(G.dim());
  for (int i = 0; i < G.dim(); ++i) out[i] = g[i] + x[i] - img[i];
  return abelian_normalize(G, out);
}

}  // namespace

TEST_CASE("group construction validates invariant factors") {
  REQUIRE_NOTHROW(make_abelian(2, {}));
  REQUIRE_NOTHROW(make_abelian(0, {Int(2), Int(4), Int(12)}));
  REQUIRE_THROWS_AS(make_abelian(-1, {}), Error);
  REQUIRE_THROWS_AS(make_abelian(0, {Int(1)}), Error);
  REQUIRE_THROWS_AS(make_abelian(0, {Int(0)}), Error);
  REQUIRE_THROWS_AS(make_abelian(0, {Int(2), Int(3)}), Error);
  REQUIRE(make_abelian(1, {Int(2)}).dim() == 2);
}

TEST_CASE("endomorphism matrices must respect the relations") {
  FgAbelianGroup G = make_abelian(0, {Int(2), Int(4)});
  REQUIRE_THROWS_AS(abelian_endo(G, IntMatrix(1, 1)), Error);
  // entry (1, 0) odd: 2 * m is not divisible by 4
  REQUIRE_THROWS_AS(abelian_endo(G, square(2, {1, 0, 1, 1})), Error);
  REQUIRE_NOTHROW(abelian_endo(G, square(2, {1, 0, 2, 1})));
  // a torsion generator may not map into the free part
  FgAbelianGroup H = make_abelian(1, {Int(2)});
  REQUIRE_THROWS_AS(abelian_endo(H, square(2, {1, 1, 0, 1})), Error);
  // the free part may map into torsion
  REQUIRE_NOTHROW(abelian_endo(H, square(2, {1, 0, 1, 1})));
}

TEST_CASE("automorphism test is surjectivity") {
  FgAbelianGroup Z = make_abelian(1, {});
  REQUIRE_THROWS_AS(require_abelian_automorphism(Z, square(1, {2})),
                    NotBijective);
  REQUIRE_NOTHROW(require_abelian_automorphism(Z, square(1, {-1})));
  FgAbelianGroup Z4 = make_abelian(0, {Int(4)});
  REQUIRE_THROWS_AS(require_abelian_automorphism(Z4, square(1, {2})),
                    NotBijective);
  REQUIRE_NOTHROW(require_abelian_automorphism(Z4, square(1, {3})));
  FgAbelianGroup Z2 = make_abelian(2, {});
  REQUIRE_NOTHROW(require_abelian_automorphism(Z2, square(2, {2, 1, 1, 1})));
  REQUIRE_THROWS_AS(require_abelian_automorphism(Z2, square(2, {2, 0, 0, 1})),
                    NotBijective);
}

TEST_CASE("twisted class counts on free groups") {
  FgAbelianGroup Z = make_abelian(1, {});
  AbelianEndo neg = require_abelian_automorphism(Z, square(1, {-1}));
  REQUIRE(reidemeister_number_abelian(Z, neg).value() == 2);
  REQUIRE(!reidemeister_number_abelian(
               Z, require_abelian_automorphism(Z, square(1, {1})))
               .is_finite());
  FgAbelianGroup Z2 = make_abelian(2, {});
  AbelianEndo fib = require_abelian_automorphism(Z2, square(2, {2, 1, 1, 1}));
  REQUIRE(reidemeister_number_abelian(Z2, fib).value() == 1);
}

TEST_CASE("count equals the determinant of the defect") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int n = 1; n <= 3; ++n)
    for (int trial = 0; trial < 150; ++trial) {
      FgAbelianGroup G = make_abelian(n, {});
      IntMatrix M(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M.at(i, j) = Int(entry(rng));
      IntMatrix D = M;
      for (int i = 0; i < n; ++i) D.at(i, i) -= 1;
      Int d = det_oracle(D);
      ReidemeisterCount r =
          reidemeister_number_abelian(G, abelian_endo(G, M));
      if (d == 0) {
        REQUIRE(!r.is_finite());
      } else {
        REQUIRE(r.is_finite());
        REQUIRE(r.value() == (d < 0 ? -d : d));
      }
    }
}

TEST_CASE("count agrees with the finite materialisation") {
  FgAbelianGroup Z8 = make_abelian(0, {Int(8)});
  FiniteGroup F8 = abelian_to_finite(Z8);
  std::vector<long long> expect{8, 2, 4, 2};
  int at = 0;
  for (long long u : {1, 3, 5, 7}) {
    AbelianEndo phi = require_abelian_automorphism(Z8, square(1, {u}));
    ReidemeisterCount r = reidemeister_number_abelian(Z8, phi);
    REQUIRE(r.value() == Int(expect[at++]));
    Automorphism pf = abelian_automorphism_to_finite(Z8, F8, phi);
    REQUIRE(Int(twisted_partition(F8, pf).count()) == r.value());
  }
  FgAbelianGroup G = make_abelian(0, {Int(2), Int(4)});
  FiniteGroup F = abelian_to_finite(G);
  for (const auto& e : {std::vector<long long>{1, 0, 0, 1},
                        std::vector<long long>{1, 0, 2, 1},
                        std::vector<long long>{1, 0, 0, 3},
                        std::vector<long long>{1, 2, 2, 3}}) {
    AbelianEndo phi = require_abelian_automorphism(G, square(2, e));
    Automorphism pf = abelian_automorphism_to_finite(G, F, phi);
    REQUIRE(reidemeister_number_abelian(G, phi).value() ==
            Int(twisted_partition(F, pf).count()));
  }
}

TEST_CASE("separation finds the forced witness") {
  FgAbelianGroup Z = make_abelian(1, {});
  AbelianEndo neg = require_abelian_automorphism(Z, square(1, {-1}));
  AbelianSeparation s = separate_abelian(Z, neg, {Int(1)}, {Int(3)});
  REQUIRE(s.conjugate);
  REQUIRE(s.witness == std::vector<Int>{Int(1)});
  REQUIRE(twist(Z, neg, s.witness, {Int(1)}) == std::vector<Int>{Int(3)});
  AbelianSeparation same = separate_abelian(Z, neg, {Int(5)}, {Int(5)});
  REQUIRE(same.conjugate);
  REQUIRE(same.witness == std::vector<Int>{Int(0)});
}

TEST_CASE("separation builds a distinguishing quotient") {
  FgAbelianGroup Z = make_abelian(1, {});
  AbelianEndo neg = require_abelian_automorphism(Z, square(1, {-1}));
  AbelianSeparation s = separate_abelian(Z, neg, {Int(1)}, {Int(2)});
  REQUIRE(!s.conjugate);
  REQUIRE(s.moduli == std::vector<Int>{Int(2)});
  REQUIRE(s.x_image != s.y_image);
  REQUIRE(s.x_image == std::vector<Int>{Int(1)});
  REQUIRE(s.y_image == std::vector<Int>{Int(0)});
}

TEST_CASE("separation refuses an infinite class set") {
  FgAbelianGroup Z = make_abelian(1, {});
  AbelianEndo id = require_abelian_automorphism(Z, square(1, {1}));
  REQUIRE_THROWS_AS(separate_abelian(Z, id, {Int(0)}, {Int(1)}),
                    InfiniteReidemeister);
  REQUIRE_THROWS_AS(separate_abelian(Z, id, {Int(0)}, {Int(0)}),
                    InfiniteReidemeister);
}

TEST_CASE("parity decides conjugacy under negation") {
  FgAbelianGroup Z = make_abelian(1, {});
  AbelianEndo neg = require_abelian_automorphism(Z, square(1, {-1}));
  for (long long x = -3; x <= 3; ++x)
    for (long long y = -3; y <= 3; ++y) {
      AbelianSeparation s = separate_abelian(Z, neg, {Int(x)}, {Int(y)});
      REQUIRE(s.conjugate == ((x - y) % 2 == 0));
      if (s.conjugate)
        REQUIRE(twist(Z, neg, s.witness, {Int(x)}) ==
                std::vector<Int>{Int(y)});
    }
}

TEST_CASE("quotient kills the defect image") {
  // the reduction must factor through the coinvariants: adding
  // (phi - id)(w) to a vector cannot change its image
  FgAbelianGroup G = make_abelian(1, {Int(2), Int(6)});
  AbelianEndo phi = require_abelian_automorphism(
      G, square(3, {-1, 0, 0, 1, 1, 0, 0, 0, 5}));
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> pick(-6, 6);
  int separated = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Int> x{Int(pick(rng)), Int(pick(rng)), Int(pick(rng))};
    std::vector<Int> y{Int(pick(rng)), Int(pick(rng)), Int(pick(rng))};
    AbelianSeparation s = separate_abelian(G, phi, x, y);
    if (s.conjugate) {
      REQUIRE(twist(G, phi, s.witness, abelian_normalize(G, x)) ==
              abelian_normalize(G, y));
      continue;
    }
    ++separated;
    auto reduce = [&](const std::vector<Int>& v) {
      std::vector<Int> r = mat_apply(s.reduction, v);
      for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] %= s.moduli[i];
        if (r[i] < 0) r[i] += s.moduli[i];
      }
      return r;
    };
    REQUIRE(reduce(abelian_normalize(G, x)) == s.x_image);
    REQUIRE(reduce(abelian_normalize(G, y)) == s.y_image);
    for (int probe = 0; probe < 10; ++probe) {
      std::vector<Int> v{Int(pick(rng)), Int(pick(rng)), Int(pick(rng))};
      std::vector<Int> w{Int(pick(rng)), Int(pick(rng)), Int(pick(rng))};
      std::vector<Int> img = endo_apply(G, phi, w);
      std::vector<Int> shifted(3);
      for (int i = 0; i < 3; ++i) shifted[i] = v[i] + img[i] - w[i];
      REQUIRE(reduce(abelian_normalize(G, v)) ==
              reduce(abelian_normalize(G, shifted)));
    }
  }
  REQUIRE(separated > 0);
}

TEST_CASE("finite materialisation layout") {
  FgAbelianGroup G = make_abelian(0, {Int(2), Int(4)});
  FiniteGroup F = abelian_to_finite(G);
  REQUIRE(F.order == 8);
  REQUIRE(F.labels[0] == "0,0");
  REQUIRE(F.labels[1] == "0,1");   // last coordinate fastest
  REQUIRE(F.labels[4] == "1,0");
  REQUIRE(F.mul(1, 3) == 0);       // (0,1) + (0,3) = (0,0)
  REQUIRE(F.mul(4, 4) == 0);
  REQUIRE(F.identity == 0);
  REQUIRE_THROWS_AS(abelian_to_finite(make_abelian(1, {})), Error);
  FiniteGroup one = abelian_to_finite(make_abelian(0, {}));
  REQUIRE(one.order == 1);
  Limits tight;
  tight.max_table_order = 4;
  REQUIRE_THROWS_AS(abelian_to_finite(G, tight), Error);
}

TEST_CASE("matrix automorphism as a permutation") {
  FgAbelianGroup Z8 = make_abelian(0, {Int(8)});
  FiniteGroup F = abelian_to_finite(Z8);
  AbelianEndo tri = require_abelian_automorphism(Z8, square(1, {3}));
  Automorphism pf = abelian_automorphism_to_finite(Z8, F, tri);
  for (int i = 0; i < 8; ++i) REQUIRE(pf(i) == (3 * i) % 8);
}
