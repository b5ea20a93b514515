// Permutations on {0, ..., n-1} and closure of a generating set.

#ifndef TCONJ_PERM_HPP
#define TCONJ_PERM_HPP

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

#include "tconj/common.hpp"

namespace tconj {

// p[i] is the image of point i.
using Perm = std::vector<int>;

inline void validate_perm(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    int v = p[i];
    if (v < 0 || v >= static_cast<int>(p.size()))
      throw NotAPermutation("image " + std::to_string(v) + " of point " +
                            std::to_string(i) + " is out of range");
    if (seen[v])
      throw NotAPermutation("point " + std::to_string(v) +
                            " is hit twice");
    seen[v] = 1;
  }
}

inline Perm perm_identity(int degree) {
  Perm p(degree);
  for (int i = 0; i < degree; ++i) p[i] = i;
  return p;
}

// Composition acts right-to-left: (p * q)(x) = p(q(x)).
inline Perm perm_mul(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

inline Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

inline bool perm_is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

inline long long perm_order(const Perm& p) {
  // lcm of cycle lengths
  long long ord = 1;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

// Disjoint cycle form; fixed points are omitted and the identity prints
// as "()".
inline std::string perm_to_cycles(const Perm& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      if (!first) out += ' ';
      out += std::to_string(j);
      first = false;
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

// Parses disjoint cycle notation such as "(0 1 2)(3 4)". "()" and "id"
// denote the identity. Points beyond `degree` are rejected.
inline Perm perm_from_cycles(const std::string& text, int degree, int line = 0,
                             int col_base = 0) {
  Perm p = perm_identity(degree);
  std::size_t i = 0;
  auto fail = [&](const std::string& what) -> SyntaxError {
    return SyntaxError(line, col_base + static_cast<int>(i) + 1, what);
  };
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (text.compare(i, 2, "id") == 0 && i + 2 >= text.size()) return p;
  std::vector<char> used(degree, 0);
  bool any = false;
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != '(') throw fail("expected '('");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size()) throw fail("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw fail("expected a point or ')'");
      int v = 0;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      if (v >= degree)
        throw fail("point " + std::to_string(v) + " is not below the degree " +
                   std::to_string(degree));
      if (used[v]) throw fail("point " + std::to_string(v) + " repeats");
      used[v] = 1;
      cycle.push_back(v);
    }
    any = true;
    for (std::size_t k = 0; k < cycle.size(); ++k)
      p[cycle[k]] = cycle[(k + 1) % cycle.size()];
  }
  if (!any && text.find("()") == std::string::npos &&
      text.find("id") == std::string::npos)
    throw fail("expected a cycle, \"()\" or \"id\"");
  return p;
}

struct PermGroup {
  int degree = 0;
  std::vector<Perm> gens;
  // All elements in discovery order; the identity is elements[0].
  std::vector<Perm> elements;
};

// Breadth-first closure under right multiplication by the generators.
// Discovery order is deterministic: identity first, then by distance and
// generator index.
inline PermGroup perm_closure(const std::vector<Perm>& gens,
                              const Limits& limits = {}) {
  if (gens.empty()) throw Error("closure needs at least one generator");
  int degree = static_cast<int>(gens[0].size());
  for (const Perm& g : gens) {
    if (static_cast<int>(g.size()) != degree)
      throw NotAPermutation("generators act on different degrees");
    validate_perm(g);
  }
  PermGroup G;
  G.degree = degree;
  G.gens = gens;
  std::map<Perm, int> index;
  std::queue<int> todo;
  Perm e = perm_identity(degree);
  index[e] = 0;
  G.elements.push_back(e);
  todo.push(0);
  while (!todo.empty()) {
    int at = todo.front();
    todo.pop();
    for (const Perm& g : gens) {
      Perm next = perm_mul(G.elements[at], g);
      if (index.emplace(next, static_cast<int>(G.elements.size())).second) {
        if (G.elements.size() >= limits.max_closure)
          throw ClosureBudgetExceeded(limits.max_closure);
        G.elements.push_back(std::move(next));
        todo.push(static_cast<int>(G.elements.size()) - 1);
      }
    }
  }
  return G;
}

}  // namespace tconj

#endif  // TCONJ_PERM_HPP
