// Automorphisms of a finite group: validation, inner automorphisms and
// exhaustive enumeration for small orders.

#ifndef TCONJ_AUTOMORPHISM_HPP
#define TCONJ_AUTOMORPHISM_HPP

#include <algorithm>
#include <vector>

#include "tconj/finite_group.hpp"

namespace tconj {

struct Automorphism {
  std::vector<int> img;      // img[x] = phi(x)
  std::vector<int> inv_img;  // inv_img[phi(x)] = x

  int operator()(int x) const { return img[x]; }
  int inverse(int x) const { return inv_img[x]; }

  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.img == b.img;
  }
  friend bool operator<(const Automorphism& a, const Automorphism& b) {
    return a.img < b.img;
  }
};

// Validates bijectivity and multiplicativity over all pairs, and fixes the
// identity as a consequence. Throws NotBijective or NotMultiplicative.
inline Automorphism check_automorphism(const FiniteGroup& G,
                                       const std::vector<int>& images) {
  if (static_cast<int>(images.size()) != G.order)
    throw NotBijective("image list has " + std::to_string(images.size()) +
                       " entries for a group of order " +
                       std::to_string(G.order));
  Automorphism phi;
  phi.img = images;
  phi.inv_img.assign(G.order, -1);
  for (int x = 0; x < G.order; ++x) {
    int v = images[x];
    if (v < 0 || v >= G.order)
      throw NotBijective("image " + std::to_string(v) + " is out of range");
    if (phi.inv_img[v] >= 0)
      throw NotBijective("elements " + std::to_string(phi.inv_img[v]) +
                         " and " + std::to_string(x) + " share the image " +
                         std::to_string(v));
    phi.inv_img[v] = x;
  }
  for (int x = 0; x < G.order; ++x)
    for (int y = 0; y < G.order; ++y)
      if (phi.img[G.mul(x, y)] != G.mul(phi.img[x], phi.img[y]))
        throw NotMultiplicative(x, y);
  return phi;
}

inline Automorphism identity_automorphism(const FiniteGroup& G) {
  Automorphism phi;
  phi.img.resize(G.order);
  phi.inv_img.resize(G.order);
  for (int x = 0; x < G.order; ++x) phi.img[x] = phi.inv_img[x] = x;
  return phi;
}

inline Automorphism inner_automorphism(const FiniteGroup& G, int g) {
  if (g < 0 || g >= G.order)
    throw Error("conjugator " + std::to_string(g) + " is out of range");
  Automorphism phi;
  phi.img.resize(G.order);
  phi.inv_img.resize(G.order);
  int gi = G.inv(g);
  for (int x = 0; x < G.order; ++x) {
    phi.img[x] = G.conj(g, x);
    phi.inv_img[x] = G.conj(gi, x);
  }
  return phi;
}

// (a * b)(x) = a(b(x))
inline Automorphism compose(const Automorphism& a, const Automorphism& b) {
  Automorphism c;
  c.img.resize(a.img.size());
  c.inv_img.resize(a.img.size());
  for (std::size_t x = 0; x < a.img.size(); ++x) {
    c.img[x] = a.img[b.img[x]];
    c.inv_img[x] = b.inv_img[a.inv_img[x]];
  }
  return c;
}

inline bool is_identity(const Automorphism& a) {
  for (std::size_t x = 0; x < a.img.size(); ++x)
    if (a.img[x] != static_cast<int>(x)) return false;
  return true;
}

inline long long automorphism_order(const Automorphism& phi) {
  Automorphism p = phi;
  long long k = 1;
  while (!is_identity(p)) {
    p = compose(p, phi);
    ++k;
  }
  return k;
}

// phi^e for any integer e (negative exponents use the inverse).
inline Automorphism automorphism_power(const Automorphism& phi, long long e) {
  Automorphism base = phi;
  if (e < 0) {
    std::swap(base.img, base.inv_img);
    e = -e;
  }
  Automorphism acc;
  acc.img.resize(phi.img.size());
  acc.inv_img.resize(phi.img.size());
  for (std::size_t x = 0; x < phi.img.size(); ++x)
    acc.img[x] = acc.inv_img[x] = static_cast<int>(x);
  for (; e > 0; --e) acc = compose(acc, base);
  return acc;
}

// All automorphisms, sorted by image vector. Capped because the search is
// exhaustive over generator images: candidates for each generator are the
// elements of equal order, every complete assignment is expanded to a full
// map along the closure and then validated in full.
inline std::vector<Automorphism> enumerate_automorphisms(
    const FiniteGroup& G, const Limits& limits = {}) {
  if (G.order > limits.max_aut_enum_order)
    throw BudgetExceeded("automorphism enumeration is capped at order " +
                         std::to_string(limits.max_aut_enum_order));
  std::vector<int> gens = greedy_generators(G);
  if (gens.empty()) {
    // trivial group
    return {identity_automorphism(G)};
  }

  // Express each element as parent * generator by breadth-first closure, so
  // a generator assignment extends to at most one homomorphism.
  std::vector<int> parent(G.order, -1), via(G.order, -1);
  std::vector<int> bfs{G.identity};
  std::vector<char> seen(G.order, 0);
  seen[G.identity] = 1;
  for (std::size_t at = 0; at < bfs.size(); ++at) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      int next = G.mul(bfs[at], gens[gi]);
      if (!seen[next]) {
        seen[next] = 1;
        parent[next] = bfs[at];
        via[next] = static_cast<int>(gi);
        bfs.push_back(next);
      }
    }
  }

  std::vector<std::vector<int>> candidates(gens.size());
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    long long ord = element_order(G, gens[gi]);
    for (int x = 0; x < G.order; ++x)
      if (element_order(G, x) == ord) candidates[gi].push_back(x);
  }

  std::vector<Automorphism> out;
  std::vector<int> choice(gens.size(), 0);
  std::vector<int> assigned(gens.size());
  for (;;) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi)
      assigned[gi] = candidates[gi][choice[gi]];
    // expand along the closure order; bfs[k]'s image only needs parents
    std::vector<int> img(G.order, -1);
    img[G.identity] = G.identity;
    for (int x : bfs)
      if (x != G.identity) img[x] = G.mul(img[parent[x]], assigned[via[x]]);
    bool ok = true;
    std::vector<char> hit(G.order, 0);
    for (int x = 0; x < G.order && ok; ++x) {
      if (hit[img[x]]) ok = false;
      hit[img[x]] = 1;
    }
    for (int x = 0; x < G.order && ok; ++x)
      for (int y = 0; y < G.order && ok; ++y)
        if (img[G.mul(x, y)] != G.mul(img[x], img[y])) ok = false;
    if (ok) out.push_back(check_automorphism(G, img));
    // odometer over candidate choices, last generator fastest
    std::size_t k = gens.size();
    while (k > 0) {
      --k;
      if (++choice[k] < static_cast<int>(candidates[k].size())) break;
      choice[k] = 0;
      if (k == 0) {
        std::sort(out.begin(), out.end());
        return out;
      }
    }
  }
}

}  // namespace tconj

#endif  // TCONJ_AUTOMORPHISM_HPP
