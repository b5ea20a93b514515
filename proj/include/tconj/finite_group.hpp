// Finite groups as validated Cayley tables, with the constructions the
// rest of the library leans on: closure of permutation generators,
// conjugacy classes, subgroup tests, transversals and the regular
// permutation representation.

#ifndef TCONJ_FINITE_GROUP_HPP
#define TCONJ_FINITE_GROUP_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "tconj/perm.hpp"

namespace tconj {

// Elements are 0..order-1. The table is stored flat, row-major:
// table[x * order + y] = x * y.
struct FiniteGroup {
  int order = 0;
  std::vector<int> table;
  int identity = 0;
  std::vector<int> inverse;
  std::vector<std::string> labels;  // optional, for display only

  int mul(int x, int y) const { return table[x * order + y]; }
  int inv(int x) const { return inverse[x]; }
  int conj(int g, int x) const {  // g x g^-1
    return mul(mul(g, x), inverse[g]);
  }
  int power(int x, long long e) const {
    int acc = identity;
    int base = e >= 0 ? x : inverse[x];
    long long n = e >= 0 ? e : -e;
    for (; n > 0; --n) acc = mul(acc, base);
    return acc;
  }
  std::string label(int x) const {
    return labels.empty() ? std::to_string(x) : labels[x];
  }
};

// Validates a multiplication table: closure (in-range entries),
// associativity, a two-sided identity and two-sided inverses.
// Full associativity is cubic, hence the order cap.
inline FiniteGroup build_cayley(int order, const std::vector<int>& table,
                                const Limits& limits = {},
                                std::vector<std::string> labels = {}) {
  if (order <= 0) throw Error("group order must be positive");
  if (order > limits.max_table_order)
    throw Error("order " + std::to_string(order) +
                " exceeds the table validation cap of " +
                std::to_string(limits.max_table_order));
  if (static_cast<int>(table.size()) != order * order)
    throw Error("table has " + std::to_string(table.size()) +
                " entries, expected " + std::to_string(order * order));
  for (int v : table)
    if (v < 0 || v >= order)
      throw Error("table entry " + std::to_string(v) + " is out of range");

  FiniteGroup G;
  G.order = order;
  G.table = table;
  G.labels = std::move(labels);
  if (!G.labels.empty() && static_cast<int>(G.labels.size()) != order)
    throw Error("label count does not match the order");

  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y)
      for (int z = 0; z < order; ++z)
        if (G.mul(G.mul(x, y), z) != G.mul(x, G.mul(y, z)))
          throw NotAssociative(x, y, z);

  int e = -1;
  for (int c = 0; c < order; ++c) {
    bool ok = true;
    for (int x = 0; x < order && ok; ++x)
      ok = G.mul(c, x) == x && G.mul(x, c) == x;
    if (ok) {
      e = c;
      break;
    }
  }
  if (e < 0) throw NoIdentity();
  G.identity = e;

  G.inverse.assign(order, -1);
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y)
      if (G.mul(x, y) == e && G.mul(y, x) == e) {
        G.inverse[x] = y;
        break;
      }
    if (G.inverse[x] < 0) throw NoInverse(x);
  }
  return G;
}

// The group generated by permutations, as a Cayley table over the closure's
// discovery order. Labels are the cycle forms.
inline FiniteGroup group_from_perms(const std::vector<Perm>& gens,
                                    const Limits& limits = {}) {
  PermGroup P = perm_closure(gens, limits);
  int n = static_cast<int>(P.elements.size());
  if (n > limits.max_table_order)
    throw Error("closure order " + std::to_string(n) +
                " exceeds the table validation cap of " +
                std::to_string(limits.max_table_order));
  std::map<Perm, int> index;
  for (int i = 0; i < n; ++i) index[P.elements[i]] = i;
  std::vector<int> table(n * n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = perm_to_cycles(P.elements[i]);
    for (int j = 0; j < n; ++j)
      table[i * n + j] = index.at(perm_mul(P.elements[i], P.elements[j]));
  }
  return build_cayley(n, table, limits, std::move(labels));
}

inline FiniteGroup cyclic_group(int n, const Limits& limits = {}) {
  if (n <= 0) throw Error("cyclic group order must be positive");
  std::vector<int> table(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i * n + j] = (i + j) % n;
  return build_cayley(n, table, limits);
}

inline long long element_order(const FiniteGroup& G, int x) {
  long long k = 1;
  int p = x;
  while (p != G.identity) {
    p = G.mul(p, x);
    ++k;
  }
  return k;
}

// Left-to-right greedy generating set: scan 0..n-1, keep an element iff it
// enlarges the subgroup generated so far.
inline std::vector<int> greedy_generators(const FiniteGroup& G) {
  std::vector<char> have(G.order, 0);
  have[G.identity] = 1;
  int count = 1;
  std::vector<int> gens;
  std::vector<int> members{G.identity};
  for (int x = 0; x < G.order && count < G.order; ++x) {
    if (have[x]) continue;
    gens.push_back(x);
    // close members under multiplication by everything already present
    std::vector<int> frontier{x};
    have[x] = 1;
    members.push_back(x);
    ++count;
    while (!frontier.empty()) {
      int a = frontier.back();
      frontier.pop_back();
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (int p : {G.mul(a, members[i]), G.mul(members[i], a)}) {
          if (!have[p]) {
            have[p] = 1;
            members.push_back(p);
            frontier.push_back(p);
            ++count;
          }
        }
      }
    }
  }
  return gens;
}

// Members of the subgroup generated by `gens`, sorted ascending.
inline std::vector<int> subgroup_closure(const FiniteGroup& G,
                                         const std::vector<int>& gens) {
  std::vector<char> have(G.order, 0);
  have[G.identity] = 1;
  std::vector<int> members{G.identity};
  std::vector<int> frontier{G.identity};
  while (!frontier.empty()) {
    int a = frontier.back();
    frontier.pop_back();
    for (int g : gens) {
      for (int p : {G.mul(a, g), G.mul(g, a)}) {
        if (!have[p]) {
          have[p] = 1;
          members.push_back(p);
          frontier.push_back(p);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

// Checks that `H` (a sorted element list) is closed and contains the
// identity and inverses.
inline bool is_subgroup(const FiniteGroup& G, const std::vector<int>& H) {
  std::vector<char> in(G.order, 0);
  for (int h : H) {
    if (h < 0 || h >= G.order) return false;
    in[h] = 1;
  }
  if (!in[G.identity]) return false;
  for (int a : H)
    for (int b : H)
      if (!in[G.mul(a, b)]) return false;
  for (int a : H)
    if (!in[G.inv(a)]) return false;
  return true;
}

// Ordinary conjugacy classes. Each class is sorted ascending; classes are
// ordered by their least element.
struct ConjClasses {
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;
};

inline ConjClasses conjugacy_classes(const FiniteGroup& G) {
  ConjClasses out;
  out.class_of.assign(G.order, -1);
  for (int x = 0; x < G.order; ++x) {
    if (out.class_of[x] >= 0) continue;
    int c = static_cast<int>(out.classes.size());
    std::vector<int> cls;
    for (int g = 0; g < G.order; ++g) {
      int y = G.conj(g, x);
      if (out.class_of[y] < 0) {
        out.class_of[y] = c;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.classes.push_back(std::move(cls));
  }
  return out;
}

// Representatives x_i with G the disjoint union of the cosets H * x_i.
// The representative of each coset is its least element, so reps[0] is the
// identity's coset rep and the list is ascending.
inline std::vector<int> right_transversal(const FiniteGroup& G,
                                          const std::vector<int>& H) {
  if (!is_subgroup(G, H)) throw NotInvariantSubgroup("not a subgroup");
  std::vector<char> covered(G.order, 0);
  std::vector<int> reps;
  for (int x = 0; x < G.order; ++x) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (int h : H) covered[G.mul(h, x)] = 1;
  }
  return reps;
}

// Left-regular action: x acts by y -> x * y. Multiplicative for the
// composition convention (p * q)(v) = p(q(v)).
inline Perm regular_perm(const FiniteGroup& G, int x) {
  Perm p(G.order);
  for (int y = 0; y < G.order; ++y) p[y] = G.mul(x, y);
  return p;
}

inline bool is_normal_subgroup(const FiniteGroup& G,
                               const std::vector<int>& N) {
  if (!is_subgroup(G, N)) return false;
  std::vector<char> in(G.order, 0);
  for (int n : N) in[n] = 1;
  for (int g = 0; g < G.order; ++g)
    for (int n : N)
      if (!in[G.conj(g, n)]) return false;
  return true;
}

// G / N for normal N. Cosets are indexed in order of their least element,
// so the image of the identity coset is 0 exactly when N contains 0.
struct QuotientGroup {
  FiniteGroup Q;
  std::vector<int> map;        // element -> coset index
  std::vector<int> coset_rep;  // least element of each coset
};

inline QuotientGroup quotient_by_normal(const FiniteGroup& G,
                                        const std::vector<int>& N,
                                        const Limits& limits = {}) {
  if (!is_normal_subgroup(G, N))
    throw NotInvariantSubgroup("quotient requires a normal subgroup");
  QuotientGroup out;
  out.map.assign(G.order, -1);
  for (int x = 0; x < G.order; ++x) {
    if (out.map[x] >= 0) continue;
    int c = static_cast<int>(out.coset_rep.size());
    out.coset_rep.push_back(x);
    for (int n : N) out.map[G.mul(x, n)] = c;
  }
  int m = static_cast<int>(out.coset_rep.size());
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      table[static_cast<std::size_t>(a) * m + b] =
          out.map[G.mul(out.coset_rep[a], out.coset_rep[b])];
  out.Q = build_cayley(m, table, limits);
  return out;
}

}  // namespace tconj

#endif  // TCONJ_FINITE_GROUP_HPP
