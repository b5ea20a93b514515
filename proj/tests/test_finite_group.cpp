// Finite group tables: validation, subgroups, classes, quotients and
// automorphism enumeration.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "tconj/automorphism.hpp"
#include "tconj/finite_group.hpp"

using namespace tconj;

namespace {

FiniteGroup s3() { return group_from_perms({{1, 0, 2}, {1, 2, 0}}); }
FiniteGroup d4() { return group_from_perms({{1, 2, 3, 0}, {0, 3, 2, 1}}); }
FiniteGroup q8() {
  return group_from_perms({{1, 2, 3, 0, 5, 6, 7, 4},
                           {4, 7, 6, 5, 2, 1, 0, 3}});
}
FiniteGroup a4() {
  return group_from_perms({{1, 2, 0, 3}, {1, 0, 3, 2}});
}

long long element_order_oracle(const FiniteGroup& G, int g) {
  int acc = g;
  long long n = 1;
  while (acc != G.identity) {
    acc = G.mul(acc, g);
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("cayley validation") {
  // Z/2
  FiniteGroup z2 = build_cayley(2, {0, 1, 1, 0});
  REQUIRE(z2.identity == 0);
  REQUIRE(z2.inv(1) == 1);

  // broken closure entry
  REQUIRE_THROWS_AS(build_cayley(2, {0, 1, 1, 2}), Error);
  // associative monoid with an absorbing element: no inverse for 2
  REQUIRE_THROWS_AS(build_cayley(3, {0, 1, 2, 1, 0, 2, 2, 2, 2}), NoInverse);
  // (2*2)*1 = 1 but 2*(2*1) = 0
  REQUIRE_THROWS_AS(build_cayley(3, {0, 1, 2, 1, 0, 2, 2, 2, 0}),
                    NotAssociative);
  // left-only identity
  REQUIRE_THROWS_AS(build_cayley(2, {0, 1, 0, 1}), Error);
}

TEST_CASE("table order cap") {
  Limits lim;
  lim.max_table_order = 5;
  REQUIRE_THROWS_AS(group_from_perms({{1, 0, 2}, {1, 2, 0}}, lim), Error);
}

TEST_CASE("cyclic groups") {
  FiniteGroup z6 = cyclic_group(6);
  REQUIRE(z6.order == 6);
  REQUIRE(z6.identity == 0);
  REQUIRE(z6.mul(4, 5) == 3);
  REQUIRE(z6.inv(2) == 4);
  REQUIRE(element_order(z6, 1) == 6);
  REQUIRE(element_order(z6, 3) == 2);
  for (int g = 0; g < 6; ++g)
    REQUIRE(element_order(z6, g) == element_order_oracle(z6, g));
}

TEST_CASE("group from permutations keeps the discovery order") {
  FiniteGroup G = s3();
  REQUIRE(G.order == 6);
  REQUIRE(G.identity == 0);
  REQUIRE(G.label(0) == "()");
  REQUIRE(G.label(1) == "(0 1)");
  REQUIRE(G.label(2) == "(0 1 2)");
  // powers behave
  REQUIRE(G.power(2, 3) == 0);
  REQUIRE(G.power(2, -1) == G.inv(2));
}

TEST_CASE("conjugation helper") {
  FiniteGroup G = s3();
  for (int g = 0; g < G.order; ++g)
    for (int x = 0; x < G.order; ++x)
      REQUIRE(G.conj(g, x) == G.mul(G.mul(g, x), G.inv(g)));
}

TEST_CASE("greedy generators regenerate the group") {
  for (const FiniteGroup& G : {s3(), d4(), q8(), cyclic_group(12)}) {
    std::vector<int> gens = greedy_generators(G);
    REQUIRE(subgroup_closure(G, gens).size() ==
            static_cast<std::size_t>(G.order));
  }
}

TEST_CASE("subgroup closure and membership") {
  FiniteGroup G = s3();
  std::vector<int> A3 = subgroup_closure(G, {2});  // the 3-cycle
  REQUIRE(A3.size() == 3);
  REQUIRE(is_subgroup(G, A3));
  REQUIRE_FALSE(is_subgroup(G, {0, 1, 2}));
  REQUIRE(is_normal_subgroup(G, A3));
  std::vector<int> H = subgroup_closure(G, {1});  // a transposition
  REQUIRE(H.size() == 2);
  REQUIRE_FALSE(is_normal_subgroup(G, H));
}

TEST_CASE("conjugacy classes of the symmetric group") {
  FiniteGroup G = s3();
  ConjClasses c = conjugacy_classes(G);
  REQUIRE(c.classes.size() == 3);
  std::multiset<std::size_t> sizes;
  for (const auto& cls : c.classes) sizes.insert(cls.size());
  REQUIRE(sizes == std::multiset<std::size_t>{1, 2, 3});
  // first class is the identity's
  REQUIRE(c.classes[0] == std::vector<int>{0});
  for (int x = 0; x < G.order; ++x)
    for (int g = 0; g < G.order; ++g)
      REQUIRE(c.class_of[x] == c.class_of[G.conj(g, x)]);
}

TEST_CASE("right transversal partitions the group") {
  FiniteGroup G = d4();
  std::vector<int> H = subgroup_closure(G, {1});
  std::vector<int> reps = right_transversal(G, H);
  REQUIRE(reps.size() * H.size() == static_cast<std::size_t>(G.order));
  std::set<int> covered;
  for (int r : reps)
    for (int h : H) covered.insert(G.mul(h, r));
  REQUIRE(covered.size() == static_cast<std::size_t>(G.order));
  REQUIRE(reps[0] == G.identity);
}

TEST_CASE("regular representation is multiplicative") {
  FiniteGroup G = s3();
  for (int a = 0; a < G.order; ++a)
    for (int b = 0; b < G.order; ++b)
      REQUIRE(regular_perm(G, G.mul(a, b)) ==
              perm_mul(regular_perm(G, a), regular_perm(G, b)));
}

TEST_CASE("quotient by a normal subgroup") {
  FiniteGroup G = s3();
  std::vector<int> A3 = subgroup_closure(G, {2});
  QuotientGroup q = quotient_by_normal(G, A3);
  REQUIRE(q.Q.order == 2);
  for (int a = 0; a < G.order; ++a)
    for (int b = 0; b < G.order; ++b)
      REQUIRE(q.map[G.mul(a, b)] == q.Q.mul(q.map[a], q.map[b]));
  REQUIRE_THROWS_AS(quotient_by_normal(G, subgroup_closure(G, {1})), Error);
}

TEST_CASE("automorphism checking") {
  FiniteGroup G = s3();
  Automorphism inner = inner_automorphism(G, 1);
  for (int x = 0; x < G.order; ++x)
    for (int y = 0; y < G.order; ++y)
      REQUIRE(inner(G.mul(x, y)) == G.mul(inner(x), inner(y)));
  REQUIRE(inner.inverse(inner(3)) == 3);

  std::vector<int> not_mult{0, 2, 1, 3, 4, 5};
  REQUIRE_THROWS_AS(check_automorphism(G, not_mult), NotMultiplicative);
  std::vector<int> not_bij{0, 1, 1, 3, 4, 5};
  REQUIRE_THROWS_AS(check_automorphism(G, not_bij), NotBijective);
}

TEST_CASE("automorphism composition and order") {
  FiniteGroup G = d4();
  Automorphism f = inner_automorphism(G, 1);
  Automorphism g = inner_automorphism(G, 2);
  Automorphism fg = compose(f, g);
  for (int x = 0; x < G.order; ++x) REQUIRE(fg(x) == f(g(x)));
  REQUIRE(automorphism_order(identity_automorphism(G)) == 1);
  Automorphism p = automorphism_power(f, -1);
  for (int x = 0; x < G.order; ++x) REQUIRE(p(x) == f.inverse(x));
}

TEST_CASE("automorphism counts match the literature") {
  REQUIRE(enumerate_automorphisms(cyclic_group(1)).size() == 1);
  REQUIRE(enumerate_automorphisms(cyclic_group(3)).size() == 2);
  REQUIRE(enumerate_automorphisms(cyclic_group(12)).size() == 4);
  REQUIRE(enumerate_automorphisms(s3()).size() == 6);
  REQUIRE(enumerate_automorphisms(d4()).size() == 8);
  REQUIRE(enumerate_automorphisms(q8()).size() == 24);
  REQUIRE(enumerate_automorphisms(a4()).size() == 24);
}

TEST_CASE("symmetric group automorphisms are all inner") {
  FiniteGroup G = s3();
  std::vector<Automorphism> all = enumerate_automorphisms(G);
  std::set<std::vector<int>> inner;
  for (int g = 0; g < G.order; ++g)
    inner.insert(inner_automorphism(G, g).img);
  REQUIRE(inner.size() == all.size());
  for (const Automorphism& f : all) REQUIRE(inner.count(f.img) == 1);
}

TEST_CASE("enumeration cap") {
  Limits lim;
  lim.max_aut_enum_order = 5;
  REQUIRE_THROWS_AS(enumerate_automorphisms(cyclic_group(6), lim), Error);
}
