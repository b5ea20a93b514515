// The mapping torus of a finite group automorphism: elements g t^n with
// t g t^-1 = phi(g). Conjugacy never leaves a coset G t^n, and twisted
// conjugacy in G is ordinary conjugacy in the coset G t. Also the quotient
// data used by separation arguments: finite quotients that carry phi.

#ifndef TCONJ_GAMMA_HPP
#define TCONJ_GAMMA_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tconj/twisted.hpp"

namespace tconj {

struct GammaElement {
  int g = 0;
  long long n = 0;

  friend bool operator==(const GammaElement& a, const GammaElement& b) {
    return a.g == b.g && a.n == b.n;
  }
};

// Multiplication uses powers of phi, which repeat with period k = |phi|;
// the power table is built once.
class GammaGroup {
 public:
  GammaGroup(FiniteGroup base, Automorphism phi)
      : base_(std::move(base)), phi_(std::move(phi)) {
    if (static_cast<int>(phi_.img.size()) != base_.order)
      throw Error("automorphism size does not match the group");
    k_ = automorphism_order(phi_);
    pows_.reserve(static_cast<std::size_t>(k_));
    pows_.push_back(identity_automorphism(base_));
    for (long long i = 1; i < k_; ++i)
      pows_.push_back(compose(phi_, pows_.back()));
  }

  const FiniteGroup& base() const { return base_; }
  const Automorphism& phi() const { return phi_; }
  long long phi_order() const { return k_; }

  const Automorphism& phi_power(long long m) const {
    long long r = m % k_;
    if (r < 0) r += k_;
    return pows_[static_cast<std::size_t>(r)];
  }

  // (g t^m)(h t^n) = g phi^m(h) t^{m+n}
  GammaElement mul(const GammaElement& a, const GammaElement& b) const {
    return {base_.mul(a.g, phi_power(a.n)(b.g)), a.n + b.n};
  }

  GammaElement inv(const GammaElement& a) const {
    return {phi_power(-a.n)(base_.inv(a.g)), -a.n};
  }

  GammaElement conj(const GammaElement& h, const GammaElement& x) const {
    return mul(mul(h, x), inv(h));
  }

  GammaElement identity() const { return {base_.identity, 0}; }

 private:
  FiniteGroup base_;
  Automorphism phi_;
  long long k_ = 1;
  std::vector<Automorphism> pows_;
};

// First components of the conjugacy class of x, together with its coset
// exponent. The conjugating element's own t-exponent only matters mod the
// order of phi, so the sweep over G x {0..k-1} is exhaustive.
struct CosetClass {
  long long t_exp = 0;
  std::vector<int> first_components;  // sorted
};

inline CosetClass conjugacy_class_stays_in_coset(const GammaGroup& Gamma,
                                                 const GammaElement& x) {
  const FiniteGroup& G = Gamma.base();
  CosetClass out;
  out.t_exp = x.n;
  std::vector<char> seen(G.order, 0);
  for (int h = 0; h < G.order; ++h)
    for (long long m = 0; m < Gamma.phi_order(); ++m) {
      GammaElement y = Gamma.conj({h, m}, x);
      if (y.n != x.n)
        throw Error("conjugation changed the t-exponent "
                    "(this indicates a bug)");
      if (!seen[y.g]) {
        seen[y.g] = 1;
        out.first_components.push_back(y.g);
      }
    }
  std::sort(out.first_components.begin(), out.first_components.end());
  return out;
}

// Searches for a conjugator carrying x t onto y t inside the coset G t.
// Returns the pair (h, m) with (h t^m)(x t)(h t^m)^-1 = y t when found.
inline std::optional<std::pair<int, long long>> conjugate_in_coset_t(
    const GammaGroup& Gamma, int x, int y) {
  const FiniteGroup& G = Gamma.base();
  for (int h = 0; h < G.order; ++h)
    for (long long m = 0; m < Gamma.phi_order(); ++m) {
      GammaElement z = Gamma.conj({h, m}, {x, 1});
      if (z.g == y && z.n == 1) return std::make_pair(h, m);
    }
  return std::nullopt;
}

// Exhaustive check that twisted conjugacy in G agrees with conjugacy in
// the coset G t, pairwise, and that the class counts match. Throws on any
// mismatch; returns the common class count.
inline std::size_t lemma22_bijection_check(const FiniteGroup& G,
                                           const Automorphism& phi) {
  GammaGroup Gamma(G, phi);
  TwistedClassPartition part = twisted_partition(G, phi);
  for (int x = 0; x < G.order; ++x)
    for (int y = 0; y < G.order; ++y) {
      bool twisted = part.class_of[x] == part.class_of[y];
      bool coset = conjugate_in_coset_t(Gamma, x, y).has_value();
      if (twisted != coset)
        throw Error("twisted conjugacy and coset conjugacy disagree on (" +
                    std::to_string(x) + ", " + std::to_string(y) +
                    ") (this indicates a bug)");
    }
  std::vector<char> seen(G.order, 0);
  std::size_t coset_classes = 0;
  for (int x = 0; x < G.order; ++x) {
    if (seen[x]) continue;
    ++coset_classes;
    for (int c : conjugacy_class_stays_in_coset(Gamma, {x, 1}).first_components)
      seen[c] = 1;
  }
  if (coset_classes != part.count())
    throw Error("class counts of the coset and of twisted conjugacy differ "
                "(this indicates a bug)");
  return part.count();
}

// The finite quotient Gamma / <t^k> = G x| Z/k for k = |phi|, with
// element (g, m) at index m * |G| + g. Conjugates of (x, 1) here have
// exactly the twisted-conjugates of x as first components, so the torus
// quotient already separates whatever can be separated at exponent 1.
struct FiniteTorus {
  FiniteGroup K;
  int base_order = 0;
  long long k = 1;

  int index(int g, long long m) const {
    long long r = m % k;
    if (r < 0) r += k;
    return static_cast<int>(r) * base_order + g;
  }
  int first_component(int idx) const { return idx % base_order; }
  long long t_exponent(int idx) const { return idx / base_order; }
};

inline FiniteTorus finite_mapping_torus(const FiniteGroup& G,
                                        const Automorphism& phi,
                                        const Limits& limits = {}) {
  GammaGroup Gamma(G, phi);
  long long k = Gamma.phi_order();
  long long order = static_cast<long long>(G.order) * k;
  if (order > limits.max_table_order)
    throw Error("mapping torus order " + std::to_string(order) +
                " exceeds the table validation cap");
  int n = G.order;
  int N = static_cast<int>(order);
  std::vector<int> table(static_cast<std::size_t>(N) * N);
  std::vector<std::string> labels(N);
  for (int a = 0; a < N; ++a) {
    int ga = a % n;
    long long ma = a / n;
    labels[a] = G.label(ga) + "|t^" + std::to_string(ma);
    for (int b = 0; b < N; ++b) {
      int gb = b % n;
      long long mb = b / n;
      GammaElement prod = Gamma.mul({ga, ma}, {gb, mb});
      table[static_cast<std::size_t>(a) * N + b] =
          static_cast<int>(((prod.n % k + k) % k)) * n + prod.g;
    }
  }
  FiniteTorus torus;
  torus.K = build_cayley(N, table, limits, std::move(labels));
  torus.base_order = n;
  torus.k = k;
  return torus;
}

// A surjection F onto a finite group that transports phi: the square
// F(phi(x)) = phi_K(F(x)) holds everywhere. This is the shape of evidence
// used to tell twisted classes apart in a quotient.
struct PhiQuotient {
  FiniteGroup target;
  std::vector<int> map;  // index by source element
  Automorphism phi_K;
};

inline PhiQuotient make_phi_quotient(const FiniteGroup& G,
                                     const Automorphism& phi,
                                     FiniteGroup target, std::vector<int> map,
                                     const Automorphism& phi_K) {
  if (static_cast<int>(map.size()) != G.order)
    throw Error("quotient map has the wrong source size");
  for (int v : map)
    if (v < 0 || v >= target.order)
      throw Error("quotient map image out of range");
  for (int x = 0; x < G.order; ++x)
    for (int y = 0; y < G.order; ++y)
      if (map[G.mul(x, y)] != target.mul(map[x], map[y]))
        throw NotMultiplicative(x, y);
  std::vector<char> hit(target.order, 0);
  for (int v : map) hit[v] = 1;
  for (int v = 0; v < target.order; ++v)
    if (!hit[v])
      throw Error("quotient map is not surjective; element " +
                  std::to_string(v) + " is missed");
  if (static_cast<int>(phi_K.img.size()) != target.order)
    throw Error("quotient automorphism size mismatch");
  for (int x = 0; x < G.order; ++x)
    if (map[phi(x)] != phi_K(map[x]))
      throw SquareDoesNotCommute("at element " + std::to_string(x));
  return PhiQuotient{std::move(target), std::move(map), phi_K};
}

// Restriction to the base group of a homomorphism of the whole torus into
// a finite group K: g_images gives F on G and t_image gives F(t). The
// result maps G onto the image subgroup, and conjugation by F(t) becomes
// the transported automorphism. The commuting square is forced by the
// torus relation, so a violation throws.
inline PhiQuotient restrict_quotient(const FiniteGroup& G,
                                     const Automorphism& phi,
                                     const FiniteGroup& K,
                                     const std::vector<int>& g_images,
                                     int t_image, const Limits& limits = {}) {
  if (static_cast<int>(g_images.size()) != G.order)
    throw Error("need one image per base group element");
  for (int v : g_images)
    if (v < 0 || v >= K.order) throw Error("image out of range");
  if (t_image < 0 || t_image >= K.order) throw Error("t image out of range");
  for (int x = 0; x < G.order; ++x)
    for (int y = 0; y < G.order; ++y)
      if (g_images[G.mul(x, y)] != K.mul(g_images[x], g_images[y]))
        throw NotMultiplicative(x, y);
  for (int x = 0; x < G.order; ++x)
    if (K.conj(t_image, g_images[x]) != g_images[phi(x)])
      throw Error("t image does not conjugate the base images like phi at " +
                  std::to_string(x));

  // image subgroup, reindexed in ascending K order
  std::vector<int> members;
  {
    std::vector<char> seen(K.order, 0);
    for (int v : g_images)
      if (!seen[v]) {
        seen[v] = 1;
        members.push_back(v);
      }
    std::sort(members.begin(), members.end());
  }
  std::vector<int> sub_index(K.order, -1);
  for (std::size_t i = 0; i < members.size(); ++i)
    sub_index[members[i]] = static_cast<int>(i);
  int m = static_cast<int>(members.size());
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = K.label(members[i]);
    for (int j = 0; j < m; ++j) {
      int prod = K.mul(members[i], members[j]);
      if (sub_index[prod] < 0)
        throw Error("image of the base group is not closed "
                    "(this indicates a bug)");
      table[static_cast<std::size_t>(i) * m + j] = sub_index[prod];
    }
  }
  FiniteGroup target = build_cayley(m, table, limits, std::move(labels));
  std::vector<int> map(G.order);
  for (int x = 0; x < G.order; ++x) map[x] = sub_index[g_images[x]];
  std::vector<int> phi_img(m);
  for (int i = 0; i < m; ++i) {
    int conj = K.conj(t_image, members[i]);
    if (sub_index[conj] < 0)
      throw SquareDoesNotCommute("conjugation by the t image leaves the "
                                 "base image subgroup");
    phi_img[i] = sub_index[conj];
  }
  Automorphism phi_K = check_automorphism(target, phi_img);
  return make_phi_quotient(G, phi, std::move(target), std::move(map), phi_K);
}

// Diagonal of finitely many quotients of the same source: the target is
// the set of reachable image tuples, which is the image of the diagonal
// homomorphism, and phi acts coordinatewise. The ambient product is never
// materialised. Separates a pair whenever some input does.
inline PhiQuotient combine_quotients(const FiniteGroup& G,
                                     const Automorphism& phi,
                                     const std::vector<PhiQuotient>& parts,
                                     const Limits& limits = {}) {
  if (parts.empty()) throw Error("nothing to combine");
  std::size_t w = parts.size();
  std::vector<std::vector<int>> tuples(G.order, std::vector<int>(w));
  for (int x = 0; x < G.order; ++x)
    for (std::size_t j = 0; j < w; ++j) tuples[x][j] = parts[j].map[x];
  std::vector<std::vector<int>> distinct = tuples;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());
  auto index_of = [&](const std::vector<int>& t) {
    auto it = std::lower_bound(distinct.begin(), distinct.end(), t);
    if (it == distinct.end() || *it != t)
      throw Error("tuple image is not closed (this indicates a bug)");
    return static_cast<int>(it - distinct.begin());
  };
  int m = static_cast<int>(distinct.size());
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    std::string lab;
    for (std::size_t j = 0; j < w; ++j) {
      if (j) lab += '|';
      lab += parts[j].target.label(distinct[i][j]);
    }
    labels[i] = lab;
    for (int j2 = 0; j2 < m; ++j2) {
      std::vector<int> prod(w);
      for (std::size_t j = 0; j < w; ++j)
        prod[j] = parts[j].target.mul(distinct[i][j], distinct[j2][j]);
      table[static_cast<std::size_t>(i) * m + j2] = index_of(prod);
    }
  }
  FiniteGroup target = build_cayley(m, table, limits, std::move(labels));
  std::vector<int> map(G.order);
  for (int x = 0; x < G.order; ++x) map[x] = index_of(tuples[x]);
  std::vector<int> phi_img(m);
  for (int i = 0; i < m; ++i) {
    std::vector<int> img(w);
    for (std::size_t j = 0; j < w; ++j)
      img[j] = parts[j].phi_K(distinct[i][j]);
    phi_img[i] = index_of(img);
  }
  Automorphism phi_K = check_automorphism(target, phi_img);
  return make_phi_quotient(G, phi, std::move(target), std::move(map), phi_K);
}

}  // namespace tconj

#endif  // TCONJ_GAMMA_HPP
