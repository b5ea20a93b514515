// Twisted conjugacy for finite groups: the orbit of x under
// y = g * x * phi(g)^-1, the class partition, Reidemeister numbers, the
// fixed-class count comparison, decomposition over an invariant subgroup
// and the translation bijection between twisted classes.

#ifndef TCONJ_TWISTED_HPP
#define TCONJ_TWISTED_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "tconj/automorphism.hpp"
#include "tconj/finite_group.hpp"

namespace tconj {

struct TwistedOrbit {
  int base = 0;              // the element the orbit was grown from
  std::vector<int> members;  // sorted ascending
  // witness[y] twists base to y: y = witness[y] * base * phi(witness[y])^-1.
  // -1 outside the orbit.
  std::vector<int> witness;
};

inline TwistedOrbit twisted_class_of(const FiniteGroup& G,
                                     const Automorphism& phi, int x) {
  if (x < 0 || x >= G.order)
    throw Error("element " + std::to_string(x) + " is out of range");
  TwistedOrbit orbit;
  orbit.base = x;
  orbit.witness.assign(G.order, -1);
  for (int g = 0; g < G.order; ++g) {
    int y = G.mul(G.mul(g, x), G.inv(phi(g)));
    if (orbit.witness[y] < 0) {
      orbit.witness[y] = g;
      orbit.members.push_back(y);
    }
  }
  std::sort(orbit.members.begin(), orbit.members.end());
  return orbit;
}

struct TwistedClassPartition {
  // Each class sorted ascending; classes ordered by least element, which is
  // also the representative and the witness base point.
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;
  std::vector<int> witness;  // witness[y] twists representative(class_of[y]) to y

  int representative(int c) const { return classes[c].front(); }
  std::size_t count() const { return classes.size(); }
};

inline TwistedClassPartition twisted_partition(const FiniteGroup& G,
                                               const Automorphism& phi) {
  TwistedClassPartition part;
  part.class_of.assign(G.order, -1);
  part.witness.assign(G.order, -1);
  for (int x = 0; x < G.order; ++x) {
    if (part.class_of[x] >= 0) continue;
    TwistedOrbit orbit = twisted_class_of(G, phi, x);
    int c = static_cast<int>(part.classes.size());
    for (int y : orbit.members) {
      part.class_of[y] = c;
      part.witness[y] = orbit.witness[y];
    }
    part.classes.push_back(std::move(orbit.members));
  }
  return part;
}

inline ReidemeisterCount reidemeister_number_finite(const FiniteGroup& G,
                                                    const Automorphism& phi) {
  return ReidemeisterCount::finite(
      Int(twisted_partition(G, phi).count()));
}

// An ordinary conjugacy class is phi-fixed when phi maps it onto itself.
// phi permutes classes, so it suffices to locate the image of one member.
inline Int count_phi_fixed_ordinary_classes(const FiniteGroup& G,
                                            const Automorphism& phi) {
  ConjClasses cc = conjugacy_classes(G);
  Int fixed = 0;
  for (std::size_t c = 0; c < cc.classes.size(); ++c)
    if (cc.class_of[phi(cc.classes[c].front())] == static_cast<int>(c))
      ++fixed;
  return fixed;
}

struct BurnsideCheck {
  Int reidemeister;
  Int fixed_classes;
  bool ok = false;
};

inline BurnsideCheck verify_burnside_finite(const FiniteGroup& G,
                                            const Automorphism& phi) {
  BurnsideCheck result;
  result.reidemeister = reidemeister_number_finite(G, phi).value();
  result.fixed_classes = count_phi_fixed_ordinary_classes(G, phi);
  result.ok = result.reidemeister == result.fixed_classes;
  return result;
}

// Smallest subgroup containing the seeds that is closed under conjugation
// and under phi in both directions. Quotients by such subgroups inherit
// the twisting automorphism.
inline std::vector<int> phi_normal_closure(const FiniteGroup& G,
                                           const Automorphism& phi,
                                           const std::vector<int>& seeds) {
  std::vector<char> have(G.order, 0);
  have[G.identity] = 1;
  std::vector<int> members{G.identity};
  std::vector<int> frontier{G.identity};
  auto absorb = [&](int x) {
    if (!have[x]) {
      have[x] = 1;
      members.push_back(x);
      frontier.push_back(x);
    }
  };
  for (int s : seeds) {
    if (s < 0 || s >= G.order)
      throw Error("seed " + std::to_string(s) + " is out of range");
    absorb(s);
  }
  while (!frontier.empty()) {
    int a = frontier.back();
    frontier.pop_back();
    absorb(G.inv(a));
    absorb(phi(a));
    absorb(phi.inverse(a));
    for (std::size_t i = 0; i < members.size(); ++i) {
      absorb(G.mul(a, members[i]));
      absorb(G.mul(members[i], a));
    }
    for (int g = 0; g < G.order; ++g) absorb(G.conj(g, a));
  }
  std::sort(members.begin(), members.end());
  return members;
}

// x -> g * phi(x) * g^-1, the twist of phi by an inner automorphism.
inline Automorphism translated_automorphism(const FiniteGroup& G,
                                            const Automorphism& phi, int g) {
  Automorphism psi;
  psi.img.resize(G.order);
  psi.inv_img.resize(G.order);
  int gi = G.inv(g);
  for (int x = 0; x < G.order; ++x) {
    psi.img[x] = G.conj(g, phi(x));
    psi.inv_img[x] = phi.inverse(G.conj(gi, x));
  }
  return psi;
}

// One piece of a twisted class split along a subgroup: the set
// { h * translator * phi(h)^-1 : h in H }, which is the twisted class of
// the identity in H under the translated automorphism, pushed back to G.
struct DecompositionPiece {
  int translator;            // x_i * g * phi(x_i)^-1 for coset rep x_i
  std::vector<int> members;  // sorted ascending
};

// Splits the twisted class of g into pieces indexed by a right transversal
// of H. Requires phi(H) = H and each translator to normalise H. Distinct
// pieces can coincide; the union over all pieces is validated against the
// directly computed class and a mismatch throws, since it would mean a bug.
inline std::vector<DecompositionPiece> decompose_over_subgroup(
    const FiniteGroup& G, const Automorphism& phi, int g,
    const std::vector<int>& H, const std::vector<int>& coset_reps) {
  if (!is_subgroup(G, H)) throw NotInvariantSubgroup("not a subgroup");
  std::vector<char> in_H(G.order, 0);
  for (int h : H) in_H[h] = 1;
  for (int h : H)
    if (!in_H[phi(h)])
      throw NotInvariantSubgroup("phi moves " + std::to_string(h) +
                                 " outside the subgroup");

  // right cosets H * x_i must partition G
  std::vector<char> covered(G.order, 0);
  for (int rep : coset_reps) {
    if (rep < 0 || rep >= G.order)
      throw NotATransversal("representative " + std::to_string(rep) +
                            " is out of range");
    for (int h : H) {
      int y = G.mul(h, rep);
      if (covered[y])
        throw NotATransversal("element " + std::to_string(y) +
                              " is covered twice");
      covered[y] = 1;
    }
  }
  for (int x = 0; x < G.order; ++x)
    if (!covered[x])
      throw NotATransversal("element " + std::to_string(x) + " is uncovered");

  std::vector<DecompositionPiece> pieces;
  std::vector<char> in_union(G.order, 0);
  for (int rep : coset_reps) {
    DecompositionPiece piece;
    piece.translator = G.mul(G.mul(rep, g), G.inv(phi(rep)));
    for (int h : H)
      if (!in_H[G.conj(piece.translator, h)])
        throw NotInvariantSubgroup(
            "translator " + std::to_string(piece.translator) +
            " does not normalise the subgroup");
    std::vector<char> seen(G.order, 0);
    for (int h : H) {
      int y = G.mul(G.mul(h, piece.translator), G.inv(phi(h)));
      if (!seen[y]) {
        seen[y] = 1;
        in_union[y] = 1;
        piece.members.push_back(y);
      }
    }
    std::sort(piece.members.begin(), piece.members.end());
    pieces.push_back(std::move(piece));
  }

  TwistedOrbit whole = twisted_class_of(G, phi, g);
  for (int x = 0; x < G.order; ++x)
    if (in_union[x] != (whole.witness[x] >= 0))
      throw Error("subgroup decomposition does not cover the twisted class "
                  "(this indicates a bug)");
  return pieces;
}

// Right translation by g carries classes of the g-translated automorphism
// onto classes of phi: image_class[c] is the phi-class containing
// { x * g : x in from.classes[c] }. The map is validated to be well defined
// and a bijection; failure throws, since the identity
// (h x phi(h)^-1 translated) = h (x g) phi(h)^-1 makes it automatic.
struct TranslationBijection {
  TwistedClassPartition from;  // classes of x -> g phi(x) g^-1
  TwistedClassPartition to;    // classes of phi
  std::vector<int> image_class;
};

inline TranslationBijection twisted_class_permutation_under_translation(
    const FiniteGroup& G, const Automorphism& phi, int g) {
  TranslationBijection out;
  out.from = twisted_partition(G, translated_automorphism(G, phi, g));
  out.to = twisted_partition(G, phi);
  out.image_class.assign(out.from.count(), -1);
  for (std::size_t c = 0; c < out.from.count(); ++c) {
    for (int x : out.from.classes[c]) {
      int target = out.to.class_of[G.mul(x, g)];
      if (out.image_class[c] < 0) out.image_class[c] = target;
      if (out.image_class[c] != target)
        throw Error("translation splits a twisted class "
                    "(this indicates a bug)");
    }
  }
  std::vector<char> hit(out.to.count(), 0);
  for (int c : out.image_class) {
    if (hit[c])
      throw Error("translation merges twisted classes "
                  "(this indicates a bug)");
    hit[c] = 1;
  }
  if (out.from.count() != out.to.count())
    throw Error("translation changes the class count "
                "(this indicates a bug)");
  return out;
}

}  // namespace tconj

#endif  // TCONJ_TWISTED_HPP
