// Permutation primitives: composition convention, cycle notation, closure.

#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "tconj/perm.hpp"

using namespace tconj;

namespace {

Perm random_perm(std::mt19937& rng, int degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// order by brute force: repeated composition until identity
long long order_oracle(const Perm& p) {
  Perm acc = p;
  long long n = 1;
  while (!perm_is_identity(acc)) {
    acc = perm_mul(acc, p);
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("composition applies the right factor first") {
  // p = (0 1), q = (0 1 2): (p*q)(0) = p(q(0)) = p(1) = 0
  Perm p{1, 0, 2}, q{1, 2, 0};
  Perm pq = perm_mul(p, q);
  REQUIRE(pq == Perm{0, 2, 1});
  Perm qp = perm_mul(q, p);
  REQUIRE(qp == Perm{2, 1, 0});
}

TEST_CASE("inverse and identity") {
  std::mt19937 rng(7001);
  for (int trial = 0; trial < 50; ++trial) {
    Perm p = random_perm(rng, 1 + trial % 9);
    REQUIRE(perm_is_identity(perm_mul(p, perm_inverse(p))));
    REQUIRE(perm_is_identity(perm_mul(perm_inverse(p), p)));
  }
  REQUIRE(perm_is_identity(perm_identity(5)));
}

TEST_CASE("order is the cycle lcm") {
  REQUIRE(perm_order(Perm{1, 2, 0, 4, 3}) == 6);  // 3-cycle and 2-cycle
  REQUIRE(perm_order(perm_identity(4)) == 1);
  std::mt19937 rng(7002);
  for (int trial = 0; trial < 40; ++trial) {
    Perm p = random_perm(rng, 2 + trial % 8);
    REQUIRE(perm_order(p) == order_oracle(p));
  }
}

TEST_CASE("associativity on random triples") {
  std::mt19937 rng(7003);
  for (int trial = 0; trial < 30; ++trial) {
    Perm a = random_perm(rng, 6), b = random_perm(rng, 6),
         c = random_perm(rng, 6);
    REQUIRE(perm_mul(perm_mul(a, b), c) == perm_mul(a, perm_mul(b, c)));
  }
}

TEST_CASE("cycle notation round trip") {
  REQUIRE(perm_to_cycles(perm_identity(3)) == "()");
  REQUIRE(perm_to_cycles(Perm{1, 0, 3, 2}) == "(0 1)(2 3)");
  REQUIRE(perm_to_cycles(Perm{1, 2, 0}) == "(0 1 2)");
  std::mt19937 rng(7004);
  for (int trial = 0; trial < 40; ++trial) {
    int d = 1 + trial % 10;
    Perm p = random_perm(rng, d);
    REQUIRE(perm_from_cycles(perm_to_cycles(p), d, 1, 0) == p);
  }
}

TEST_CASE("cycle parsing accepts multiple cycles and whitespace") {
  REQUIRE(perm_from_cycles("(0 1)(2 3)", 4, 1, 0) == Perm{1, 0, 3, 2});
  REQUIRE(perm_from_cycles("  (0 2 1) ", 3, 1, 0) == Perm{2, 0, 1});
  REQUIRE(perm_from_cycles("()", 3, 1, 0) == perm_identity(3));
}

TEST_CASE("cycle parsing rejects malformed input with positions") {
  REQUIRE_THROWS_AS(perm_from_cycles("(0 1", 3, 1, 0), SyntaxError);
  REQUIRE_THROWS_AS(perm_from_cycles("(0 5)", 3, 1, 0), SyntaxError);
  REQUIRE_THROWS_AS(perm_from_cycles("(0 0)", 3, 1, 0), SyntaxError);
  REQUIRE_THROWS_AS(perm_from_cycles("0 1)", 3, 1, 0), SyntaxError);
  try {
    perm_from_cycles("(0 9)", 3, 4, 10);
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    REQUIRE(e.line == 4);
    REQUIRE(e.col > 10);  // column offset is honoured
  }
}

TEST_CASE("validate rejects non-permutations") {
  REQUIRE_THROWS_AS(validate_perm(Perm{0, 0}), NotAPermutation);
  REQUIRE_THROWS_AS(validate_perm(Perm{1, 2}), NotAPermutation);
  REQUIRE_THROWS_AS(validate_perm(Perm{-1, 0}), NotAPermutation);
}

TEST_CASE("closure of the symmetric group generators") {
  PermGroup S3 = perm_closure({{1, 0, 2}, {1, 2, 0}});
  REQUIRE(S3.elements.size() == 6);
  REQUIRE(perm_is_identity(S3.elements[0]));
  PermGroup C12 = perm_closure({{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 0}});
  REQUIRE(C12.elements.size() == 12);
}

TEST_CASE("closure honours the element budget") {
  Limits lim;
  lim.max_closure = 5;
  REQUIRE_THROWS_AS(perm_closure({{1, 0, 2}, {1, 2, 0}}, lim),
                    ClosureBudgetExceeded);
}
