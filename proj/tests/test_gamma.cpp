// The mapping torus of a finite group automorphism: group operations,
// coset-preserving conjugacy, the coset-t bridge to twisted classes, the
// finite torus quotient and phi-carrying quotient constructions.

#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "tconj/gamma.hpp"

using namespace tconj;

namespace {

FiniteGroup s3() { return group_from_perms({{1, 0, 2}, {1, 2, 0}}); }

}  // namespace

TEST_CASE("torus multiplication satisfies the defining relation") {
  FiniteGroup G = s3();
  for (const Automorphism& phi : enumerate_automorphisms(G)) {
    GammaGroup Gamma(G, phi);
    GammaElement t{G.identity, 1};
    for (int g = 0; g < G.order; ++g) {
      // t g t^-1 = phi(g)
      GammaElement lhs = Gamma.mul(Gamma.mul(t, {g, 0}), Gamma.inv(t));
      REQUIRE(lhs == GammaElement{phi(g), 0});
      // t^-1 g t = phi^-1(g)
      GammaElement rhs = Gamma.mul(Gamma.mul(Gamma.inv(t), {g, 0}), t);
      REQUIRE(rhs == GammaElement{phi.inverse(g), 0});
    }
    for (int g = 0; g < G.order; ++g)
      for (long long n : {-2LL, 0LL, 3LL}) {
        GammaElement a{g, n};
        REQUIRE(Gamma.mul(a, Gamma.inv(a)) == Gamma.identity());
        REQUIRE(Gamma.mul(Gamma.inv(a), a) == Gamma.identity());
      }
    // associativity on a sample
    for (int g = 0; g < G.order; g += 2)
      for (int h = 0; h < G.order; h += 3)
        for (int k = 0; k < G.order; ++k) {
          GammaElement a{g, 1}, b{h, -1}, c{k, 2};
          REQUIRE(Gamma.mul(Gamma.mul(a, b), c) ==
                  Gamma.mul(a, Gamma.mul(b, c)));
        }
  }
}

TEST_CASE("phi powers repeat with the automorphism order") {
  FiniteGroup G = s3();
  Automorphism phi = inner_automorphism(G, 1);
  GammaGroup Gamma(G, phi);
  REQUIRE(Gamma.phi_order() == 2);
  for (int x = 0; x < G.order; ++x) {
    REQUIRE(Gamma.phi_power(0)(x) == x);
    REQUIRE(Gamma.phi_power(1)(x) == phi(x));
    REQUIRE(Gamma.phi_power(2)(x) == x);
    REQUIRE(Gamma.phi_power(-1)(x) == phi(x));
    REQUIRE(Gamma.phi_power(-3)(x) == phi(x));
    REQUIRE(Gamma.phi_power(7)(x) == phi(x));
  }
}

TEST_CASE("conjugacy cannot leave a coset") {
  FiniteGroup G = s3();
  for (const Automorphism& phi : enumerate_automorphisms(G)) {
    GammaGroup Gamma(G, phi);
    TwistedClassPartition part = twisted_partition(G, phi);
    ConjClasses ord = conjugacy_classes(G);
    for (int g = 0; g < G.order; ++g) {
      // at exponent 1 the class projects onto the twisted class
      CosetClass at1 = conjugacy_class_stays_in_coset(Gamma, {g, 1});
      REQUIRE(at1.t_exp == 1);
      REQUIRE(at1.first_components == part.classes[part.class_of[g]]);
      // at exponent 0 it is the union of ordinary classes of the phi orbit
      CosetClass at0 = conjugacy_class_stays_in_coset(Gamma, {g, 0});
      REQUIRE(at0.t_exp == 0);
      std::set<int> want;
      int im = g;
      for (long long m = 0; m < Gamma.phi_order(); ++m) {
        const std::vector<int>& cls = ord.classes[ord.class_of[im]];
        want.insert(cls.begin(), cls.end());
        im = phi(im);
      }
      REQUIRE(at0.first_components ==
              std::vector<int>(want.begin(), want.end()));
    }
  }
}

TEST_CASE("coset conjugators match twisted classes pair by pair") {
  FiniteGroup G = s3();
  Automorphism phi = inner_automorphism(G, 1);
  GammaGroup Gamma(G, phi);
  TwistedClassPartition part = twisted_partition(G, phi);
  for (int x = 0; x < G.order; ++x)
    for (int y = 0; y < G.order; ++y) {
      auto found = conjugate_in_coset_t(Gamma, x, y);
      REQUIRE(found.has_value() == (part.class_of[x] == part.class_of[y]));
      if (found) {
        auto [h, m] = *found;
        REQUIRE(Gamma.conj({h, m}, {x, 1}) == GammaElement{y, 1});
      }
    }
}

TEST_CASE("coset bridge validated across all automorphisms") {
  for (const FiniteGroup& G :
       {s3(), cyclic_group(6), group_from_perms({{1, 2, 3, 0}, {0, 3, 2, 1}})})
    for (const Automorphism& phi : enumerate_automorphisms(G))
      REQUIRE(lemma22_bijection_check(G, phi) ==
              twisted_partition(G, phi).count());
}

TEST_CASE("finite torus layout and multiplication") {
  FiniteGroup G = s3();
  Automorphism phi = inner_automorphism(G, 1);
  FiniteTorus torus = finite_mapping_torus(G, phi);
  REQUIRE(torus.k == 2);
  REQUIRE(torus.base_order == 6);
  REQUIRE(torus.K.order == 12);
  GammaGroup Gamma(G, phi);
  for (int g = 0; g < 6; ++g)
    for (long long m = 0; m < 2; ++m) {
      int idx = torus.index(g, m);
      REQUIRE(torus.first_component(idx) == g);
      REQUIRE(torus.t_exponent(idx) == m);
      REQUIRE(torus.index(g, m + 2) == idx);
      REQUIRE(torus.index(g, m - 2) == idx);
      for (int h = 0; h < 6; ++h)
        for (long long n = 0; n < 2; ++n) {
          GammaElement prod = Gamma.mul({g, m}, {h, n});
          REQUIRE(torus.K.mul(idx, torus.index(h, n)) ==
                  torus.index(prod.g, prod.n));
        }
    }
  REQUIRE(torus.K.label(torus.index(0, 1)) == G.label(0) + "|t^1");
  // conjugates of (x, 1) project onto the twisted class of x
  TwistedClassPartition part = twisted_partition(G, phi);
  for (int x = 0; x < 6; ++x) {
    std::set<int> firsts;
    int xi = torus.index(x, 1);
    for (int z = 0; z < torus.K.order; ++z)
      firsts.insert(torus.first_component(torus.K.conj(z, xi)));
    REQUIRE(std::vector<int>(firsts.begin(), firsts.end()) ==
            part.classes[part.class_of[x]]);
  }
  Limits tight;
  tight.max_table_order = 10;
  REQUIRE_THROWS_AS(finite_mapping_torus(G, phi, tight), Error);
}

TEST_CASE("phi quotient validation") {
  FiniteGroup c4 = cyclic_group(4);
  FiniteGroup c2 = cyclic_group(2);
  Automorphism id4 = identity_automorphism(c4);
  Automorphism id2 = identity_automorphism(c2);
  std::vector<int> parity{0, 1, 0, 1};
  PhiQuotient q = make_phi_quotient(c4, id4, c2, parity, id2);
  REQUIRE(q.map == parity);
  REQUIRE(q.target.order == 2);

  REQUIRE_THROWS_AS(make_phi_quotient(c4, id4, c2, {0, 1}, id2), Error);
  REQUIRE_THROWS_AS(make_phi_quotient(c4, id4, c2, {0, 1, 0, 7}, id2), Error);
  REQUIRE_THROWS_AS(make_phi_quotient(c4, id4, c2, {0, 0, 1, 0}, id2),
                    NotMultiplicative);
  REQUIRE_THROWS_AS(make_phi_quotient(c4, id4, c2, {0, 0, 0, 0}, id2), Error);
  // negation upstairs with the identity downstairs breaks the square
  Automorphism neg = check_automorphism(c4, {0, 3, 2, 1});
  REQUIRE_THROWS_AS(
      make_phi_quotient(c4, neg, c4, {0, 1, 2, 3}, identity_automorphism(c4)),
      SquareDoesNotCommute);
}

TEST_CASE("restricting a torus homomorphism") {
  FiniteGroup G = s3();
  Automorphism phi = inner_automorphism(G, 1);
  FiniteGroup c2 = cyclic_group(2);
  std::vector<int> parity{0, 1, 0, 1, 1, 0};
  PhiQuotient q = restrict_quotient(G, phi, c2, parity, 0);
  REQUIRE(q.target.order == 2);
  REQUIRE(q.map == parity);
  REQUIRE(q.phi_K(0) == 0);
  REQUIRE(q.phi_K(1) == 1);

  // the identity of K cannot realise a noncentral phi
  std::vector<int> self{0, 1, 2, 3, 4, 5};
  REQUIRE_THROWS_AS(restrict_quotient(G, phi, G, self, G.identity), Error);
  // conjugation by (0 1) inside S3 itself does realise it
  PhiQuotient full = restrict_quotient(G, phi, G, self, 1);
  REQUIRE(full.target.order == 6);
  for (int x = 0; x < 6; ++x) REQUIRE(full.phi_K(x) == phi(x));
  // image lands in a proper subgroup and is reindexed
  std::vector<int> into{0, 1, 0, 1, 1, 0};
  PhiQuotient sub = restrict_quotient(G, phi, G, into, 1);
  REQUIRE(sub.target.order == 2);
  REQUIRE(sub.target.label(1) == G.label(1));
  REQUIRE_THROWS_AS(restrict_quotient(G, phi, c2, {0, 1, 1, 1, 1, 0}, 0),
                    NotMultiplicative);
  REQUIRE_THROWS_AS(restrict_quotient(G, phi, c2, parity, 9), Error);
}

TEST_CASE("combining quotients takes the reachable diagonal") {
  FiniteGroup c6 = cyclic_group(6);
  Automorphism id6 = identity_automorphism(c6);
  std::vector<int> m2(6), m3(6);
  for (int i = 0; i < 6; ++i) {
    m2[i] = i % 2;
    m3[i] = i % 3;
  }
  PhiQuotient q2 = make_phi_quotient(c6, id6, cyclic_group(2), m2,
                                     identity_automorphism(cyclic_group(2)));
  PhiQuotient q3 = make_phi_quotient(c6, id6, cyclic_group(3), m3,
                                     identity_automorphism(cyclic_group(3)));
  PhiQuotient both = combine_quotients(c6, id6, {q2, q3});
  REQUIRE(both.target.order == 6);  // the two residues determine the element
  std::set<int> images(both.map.begin(), both.map.end());
  REQUIRE(images.size() == 6);
  PhiQuotient twice = combine_quotients(c6, id6, {q2, q2});
  REQUIRE(twice.target.order == 2);
  REQUIRE_THROWS_AS(combine_quotients(c6, id6, {}), Error);
}
