// Finite presentations and polycyclic presentations, collection to normal
// form, presentation-level automorphisms, the mapping torus presentation
// and breadth-first enumeration of group elements.
//
// Polycyclic conventions: generators are ordered g_0 < g_1 < ...; x^y means
// y^-1 x y; a power relation g_i^{r_i} = w_i and conjugation relations
// g_j^{g_i} = w (i < j) may only use generators of index above i on their
// right-hand side. Inverse conjugation relations g_j^{g_i^-1} are required
// exactly when g_i has infinite order and the forward relation is
// nontrivial; for finite-order g_i exponents collect into [0, r_i) and the
// inverse rule can never fire.

#ifndef TCONJ_PRESENTATION_HPP
#define TCONJ_PRESENTATION_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tconj/word.hpp"

namespace tconj {

enum class PresKind { Fp, Pc };

enum class Truth { Yes, No, Unknown };

struct Presentation {
  PresKind kind = PresKind::Fp;
  std::vector<std::string> gen_names;
  std::map<std::string, int> gen_index;

  // fp data
  std::vector<Word> relators;

  // pc data; orders[i] == 0 means infinite order
  std::vector<long long> orders;
  std::vector<Word> power_rhs;
  std::map<std::pair<int, int>, Word> conj;      // g_j^{g_i}, key (i, j), i < j
  std::map<std::pair<int, int>, Word> conj_inv;  // g_j^{g_i^-1}

  int ngens() const { return static_cast<int>(gen_names.size()); }
};

// Exponent vector of a collected word, entry i for generator i.
using ExpVec = std::vector<long long>;

inline Word exps_to_word(const ExpVec& e) {
  Word w;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0) w.push_back({static_cast<int>(i), e[i]});
  return w;
}

namespace detail {

inline long long floor_div(long long a, long long b) {
  long long q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

inline void check_word_gens(const Presentation& P, const Word& w,
                            int above = -1) {
  for (const Syllable& s : w) {
    if (s.gen < 0 || s.gen >= P.ngens())
      throw Error("word uses an unknown generator index");
    if (s.gen <= above)
      throw BadGeneratorIndexOrder(
          0, "right-hand side uses generator " + P.gen_names[s.gen] +
                 " which is not above " + P.gen_names[above]);
  }
}

}  // namespace detail

inline Presentation make_fp_presentation(std::vector<std::string> names,
                                         std::vector<Word> relators) {
  Presentation P;
  P.kind = PresKind::Fp;
  P.gen_names = std::move(names);
  for (int i = 0; i < P.ngens(); ++i) {
    if (!P.gen_index.emplace(P.gen_names[i], i).second)
      throw Error("duplicate generator name \"" + P.gen_names[i] + "\"");
  }
  for (Word& r : relators) {
    detail::check_word_gens(P, r);
    P.relators.push_back(free_reduce(r));
  }
  return P;
}

// The defining relators as plain words: powers g_i^{r_i} w_i^-1, forward
// conjugations g_i^-1 g_j g_i w^-1 (commutators where no rule is given)
// and any explicit inverse conjugations.
inline std::vector<Word> defining_relators(const Presentation& P) {
  if (P.kind == PresKind::Fp) return P.relators;
  std::vector<Word> rels;
  for (int i = 0; i < P.ngens(); ++i) {
    if (P.orders[i] == 0) continue;
    Word r{{i, P.orders[i]}};
    Word rhs = word_inverse(P.power_rhs[i]);
    r.insert(r.end(), rhs.begin(), rhs.end());
    rels.push_back(free_reduce(r));
  }
  for (int i = 0; i < P.ngens(); ++i)
    for (int j = i + 1; j < P.ngens(); ++j) {
      auto it = P.conj.find({i, j});
      Word rhs = it != P.conj.end() ? it->second : Word{{j, 1}};
      Word r{{i, -1}, {j, 1}, {i, 1}};
      Word ri = word_inverse(rhs);
      r.insert(r.end(), ri.begin(), ri.end());
      rels.push_back(free_reduce(r));
      auto iv = P.conj_inv.find({i, j});
      if (iv != P.conj_inv.end()) {
        Word r2{{i, 1}, {j, 1}, {i, -1}};
        Word ri2 = word_inverse(iv->second);
        r2.insert(r2.end(), ri2.begin(), ri2.end());
        rels.push_back(free_reduce(r2));
      }
    }
  return rels;
}

namespace detail {

// g^{b^e} for a single syllable g = (gen, exp), conjugating one letter of
// b at a time. Callers guarantee gen > b and, for finite-order b, e >= 0.
inline Word conjugate_syllable(const Presentation& P, Syllable g, int b,
                               long long e, long long& steps,
                               const Limits& limits) {
  Word w{{g.gen, g.exp}};
  int sign = e >= 0 ? 1 : -1;
  long long n = e >= 0 ? e : -e;
  for (long long k = 0; k < n; ++k) {
    Word next;
    for (const Syllable& s : w) {
      if (++steps > limits.max_collect_steps)
        throw CollectionBudgetExceeded(limits.max_collect_steps);
      const Word* base = nullptr;
      Word unit{{s.gen, 1}};
      if (sign > 0) {
        auto it = P.conj.find({b, s.gen});
        base = it != P.conj.end() ? &it->second : &unit;
      } else {
        auto it = P.conj_inv.find({b, s.gen});
        if (it != P.conj_inv.end()) {
          base = &it->second;
        } else {
          auto fw = P.conj.find({b, s.gen});
          if (fw != P.conj.end() && fw->second != unit)
            throw MissingInverseConjugation(
                P.gen_names[s.gen] + " by " + P.gen_names[b] + "^-1");
          base = &unit;
        }
      }
      if (base->size() > 1) {
        // expanding a multi-syllable rule costs one step per repetition
        steps += s.exp >= 0 ? s.exp : -s.exp;
        if (steps > limits.max_collect_steps)
          throw CollectionBudgetExceeded(limits.max_collect_steps);
      }
      Word piece = word_power(*base, s.exp);
      for (const Syllable& t : piece) {
        if (!next.empty() && next.back().gen == t.gen) {
          next.back().exp += t.exp;
          if (next.back().exp == 0) next.pop_back();
        } else if (t.exp != 0) {
          next.push_back(t);
        }
      }
    }
    w = std::move(next);
  }
  return w;
}

}  // namespace detail

// Collection from the left. Repeatedly normalises exponents of
// finite-order generators and moves lower-indexed generators leftwards
// with the conjugation rules, until the word is an ordered product
// g_0^{e_0} g_1^{e_1} ... with each finite-order exponent in range. On a
// consistent presentation the result is a normal form for the element.
inline ExpVec collect(const Presentation& P, const Word& input,
                      const Limits& limits = {}) {
  if (P.kind != PresKind::Pc)
    throw Error("collection requires a polycyclic presentation");
  std::vector<Syllable> cur;
  for (const Syllable& s : input) {
    if (s.gen < 0 || s.gen >= P.ngens())
      throw Error("word uses an unknown generator index");
    if (s.exp != 0) cur.push_back(s);
  }
  long long steps = 0;
  auto charge = [&](long long amount) {
    steps += amount;
    if (steps > limits.max_collect_steps)
      throw CollectionBudgetExceeded(limits.max_collect_steps);
  };

  std::size_t p = 0;
  while (p < cur.size()) {
    if (cur[p].exp == 0) {
      cur.erase(cur.begin() + static_cast<long>(p));
      if (p) --p;
      continue;
    }
    long long r = P.orders[cur[p].gen];
    if (r > 0 && (cur[p].exp < 0 || cur[p].exp >= r)) {
      long long q = detail::floor_div(cur[p].exp, r);
      long long rem = cur[p].exp - q * r;
      charge(q >= 0 ? q + 1 : -q + 1);
      Word tail = word_power(P.power_rhs[cur[p].gen], q);
      if (rem == 0)
        cur.erase(cur.begin() + static_cast<long>(p));
      else
        cur[p].exp = rem;
      cur.insert(cur.begin() + static_cast<long>(p + (rem ? 1 : 0)),
                 tail.begin(), tail.end());
      if (p) --p;
      continue;
    }
    if (p + 1 < cur.size()) {
      if (cur[p + 1].exp == 0) {
        cur.erase(cur.begin() + static_cast<long>(p + 1));
        continue;
      }
      if (cur[p + 1].gen == cur[p].gen) {
        charge(1);
        cur[p].exp += cur[p + 1].exp;
        cur.erase(cur.begin() + static_cast<long>(p + 1));
        if (p) --p;
        continue;
      }
      if (cur[p].gen > cur[p + 1].gen) {
        long long r2 = P.orders[cur[p + 1].gen];
        if (r2 > 0 && (cur[p + 1].exp < 0 || cur[p + 1].exp >= r2)) {
          ++p;  // normalise the conjugator's exponent first
          continue;
        }
        Syllable a = cur[p], b = cur[p + 1];
        Word tail = detail::conjugate_syllable(P, a, b.gen, b.exp, steps, limits);
        charge(1);
        cur[p] = b;
        cur.erase(cur.begin() + static_cast<long>(p + 1));
        cur.insert(cur.begin() + static_cast<long>(p + 1), tail.begin(),
                   tail.end());
        if (p) --p;
        continue;
      }
    }
    ++p;
  }

  ExpVec e(P.ngens(), 0);
  int last = -1;
  for (const Syllable& s : cur) {
    if (s.gen <= last)
      throw Error("collection failed to order the word (this indicates a bug)");
    last = s.gen;
    e[s.gen] = s.exp;
  }
  return e;
}

inline bool pc_equal(const Presentation& P, const Word& u, const Word& v,
                     const Limits& limits = {}) {
  return collect(P, u, limits) == collect(P, v, limits);
}

// Equality of the represented elements. Complete for pc presentations.
// For fp presentations only free reduction is available: a reduction to
// the empty word certifies equality, anything else is No for a free group
// and Unknown otherwise.
inline Truth words_equal(const Presentation& P, const Word& u, const Word& v,
                         const Limits& limits = {}) {
  if (P.kind == PresKind::Pc)
    return pc_equal(P, u, v, limits) ? Truth::Yes : Truth::No;
  Word w = free_reduce(word_concat(u, word_inverse(v)));
  if (w.empty()) return Truth::Yes;
  return P.relators.empty() ? Truth::No : Truth::Unknown;
}

inline Word normal_form(const Presentation& P, const Word& w,
                        const Limits& limits = {}) {
  if (P.kind == PresKind::Pc) return exps_to_word(collect(P, w, limits));
  return free_reduce(w);
}

// Consistency of a pc presentation is checked on all short letter words:
// collection must be a homomorphism on every split and idempotent. An
// inconsistent rule set would give distinct normal forms for equal
// elements and fail here.
inline void check_pc_consistency(const Presentation& P, const Limits& limits) {
  int n = P.ngens();
  std::vector<Syllable> letters;
  for (int i = 0; i < n; ++i) {
    letters.push_back({i, 1});
    letters.push_back({i, -1});
  }
  int bound = limits.consistency_word_length;
  std::vector<Word> layer{Word{}};
  for (int len = 1; len <= bound; ++len) {
    std::vector<Word> next_layer;
    for (const Word& w : layer)
      for (const Syllable& s : letters) {
        Word ext = w;
        ext.push_back(s);
        next_layer.push_back(ext);
      }
    for (const Word& w : next_layer) {
      ExpVec full = collect(P, w, limits);
      if (collect(P, exps_to_word(full), limits) != full)
        throw Error("inconsistent pc presentation: collection is not "
                    "idempotent on " + word_to_string(w, P.gen_names));
      for (std::size_t cut = 1; cut < w.size(); ++cut) {
        Word left(w.begin(), w.begin() + static_cast<long>(cut));
        Word right(w.begin() + static_cast<long>(cut), w.end());
        Word glued = word_concat(exps_to_word(collect(P, left, limits)),
                                 exps_to_word(collect(P, right, limits)));
        if (collect(P, glued, limits) != full)
          throw Error("inconsistent pc presentation: splitting " +
                      word_to_string(w, P.gen_names) +
                      " changes its normal form");
      }
    }
    layer = std::move(next_layer);
  }
}

inline Presentation make_pc_presentation(
    std::vector<std::string> names, std::vector<long long> orders,
    std::vector<Word> power_rhs, std::map<std::pair<int, int>, Word> conj,
    std::map<std::pair<int, int>, Word> conj_inv, const Limits& limits = {}) {
  Presentation P;
  P.kind = PresKind::Pc;
  P.gen_names = std::move(names);
  for (int i = 0; i < P.ngens(); ++i)
    if (!P.gen_index.emplace(P.gen_names[i], i).second)
      throw Error("duplicate generator name \"" + P.gen_names[i] + "\"");
  if (orders.size() != P.gen_names.size())
    throw Error("need one order per generator");
  P.orders = std::move(orders);
  power_rhs.resize(P.gen_names.size());
  for (int i = 0; i < P.ngens(); ++i) {
    if (P.orders[i] < 0) throw Error("negative generator order");
    if (P.orders[i] == 0 && !power_rhs[i].empty())
      throw Error("generator " + P.gen_names[i] +
                  " has infinite order but a power relation");
    detail::check_word_gens(P, power_rhs[i], i);
  }
  P.power_rhs = std::move(power_rhs);
  for (const auto& [key, rhs] : conj) {
    auto [i, j] = key;
    if (i < 0 || j >= P.ngens() || i >= j)
      throw Error("conjugation key must satisfy i < j");
    detail::check_word_gens(P, rhs, i);
  }
  for (const auto& [key, rhs] : conj_inv) {
    auto [i, j] = key;
    if (i < 0 || j >= P.ngens() || i >= j)
      throw Error("conjugation key must satisfy i < j");
    if (P.orders[i] != 0)
      throw Error("inverse conjugation by finite-order generator " +
                  P.gen_names[i] + " is redundant; remove it");
    detail::check_word_gens(P, rhs, i);
  }
  P.conj = std::move(conj);
  P.conj_inv = std::move(conj_inv);
  for (const auto& [key, rhs] : P.conj) {
    auto [i, j] = key;
    Word unit{{j, 1}};
    if (P.orders[i] == 0 && rhs != unit && !P.conj_inv.count(key))
      throw MissingInverseConjugation(P.gen_names[j] + " by " +
                                      P.gen_names[i] + "^-1");
  }
  check_pc_consistency(P, limits);
  return P;
}

struct PresAutomorphism {
  std::vector<Word> images;      // images[i] represents phi(g_i)
  std::vector<Word> inv_images;  // inv_images[i] represents phi^-1(g_i)
};

// phi(w) as a word, by substitution.
inline Word substitute(const std::vector<Word>& images, const Word& w) {
  Word out;
  for (const Syllable& s : w) {
    Word piece = word_power(images[s.gen], s.exp);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return free_reduce(out);
}

inline Word apply_automorphism(const Presentation& P,
                               const PresAutomorphism& phi, const Word& w,
                               const Limits& limits = {}) {
  return normal_form(P, substitute(phi.images, w), limits);
}

inline Word apply_inverse_automorphism(const Presentation& P,
                                       const PresAutomorphism& phi,
                                       const Word& w,
                                       const Limits& limits = {}) {
  return normal_form(P, substitute(phi.inv_images, w), limits);
}

// Validates that the image words define mutually inverse automorphisms:
// every defining relator must map to the identity under both substitution
// maps, and the composites must fix every generator. Throws
// EqualityUndecidable when an fp presentation with relators leaves a check
// undecided by free reduction.
inline PresAutomorphism make_pres_automorphism(const Presentation& P,
                                               std::vector<Word> images,
                                               std::vector<Word> inv_images,
                                               const Limits& limits = {}) {
  if (static_cast<int>(images.size()) != P.ngens() ||
      static_cast<int>(inv_images.size()) != P.ngens())
    throw Error("need exactly one image word per generator");
  for (const Word& w : images) detail::check_word_gens(P, w);
  for (const Word& w : inv_images) detail::check_word_gens(P, w);
  PresAutomorphism phi{std::move(images), std::move(inv_images)};

  auto must_be_trivial = [&](const Word& w, const std::string& what) {
    if (P.kind == PresKind::Pc) {
      ExpVec e = collect(P, w, limits);
      if (e != ExpVec(P.ngens(), 0))
        throw Error("automorphism check failed: " + what +
                    " does not collect to the identity");
    } else {
      if (!free_reduce(w).empty()) {
        if (P.relators.empty())
          throw Error("automorphism check failed: " + what +
                      " is not the identity in the free group");
        throw EqualityUndecidable(what +
                                  " does not reduce freely; cannot verify an "
                                  "automorphism of this presented group");
      }
    }
  };

  for (const Word& rel : defining_relators(P)) {
    must_be_trivial(substitute(phi.images, rel),
                    "the image of a defining relator");
    must_be_trivial(substitute(phi.inv_images, rel),
                    "the inverse image of a defining relator");
  }
  for (int i = 0; i < P.ngens(); ++i) {
    Word unit{{i, 1}};
    must_be_trivial(
        word_concat(substitute(phi.images, phi.inv_images[i]),
                    word_inverse(unit)),
        "phi(phi^-1(" + P.gen_names[i] + ")) " + P.gen_names[i] + "^-1");
    must_be_trivial(
        word_concat(substitute(phi.inv_images, phi.images[i]),
                    word_inverse(unit)),
        "phi^-1(phi(" + P.gen_names[i] + ")) " + P.gen_names[i] + "^-1");
  }
  return phi;
}

inline PresAutomorphism identity_pres_automorphism(const Presentation& P) {
  PresAutomorphism phi;
  for (int i = 0; i < P.ngens(); ++i) {
    phi.images.push_back({{i, 1}});
    phi.inv_images.push_back({{i, 1}});
  }
  return phi;
}

namespace detail {

inline Word shift_word(const Word& w, int offset) {
  Word out = w;
  for (Syllable& s : out) s.gen += offset;
  return out;
}

}  // namespace detail

// The mapping torus of phi: a fresh generator t is prepended and
// t g t^-1 = phi(g) is imposed on top of the input presentation. For a pc
// input the result is again pc, with t of infinite order, g^t = phi^-1(g)
// and g^{t^-1} = phi(g); collection through t realises the automorphism.
// Generator 0 of the result is always t.
inline Presentation mapping_torus_presentation(const Presentation& P,
                                               const PresAutomorphism& phi,
                                               const Limits& limits = {}) {
  std::string t_name = "t";
  for (int k = 0; P.gen_index.count(t_name); ++k)
    t_name = "t" + std::to_string(k);
  std::vector<std::string> names{t_name};
  names.insert(names.end(), P.gen_names.begin(), P.gen_names.end());

  if (P.kind == PresKind::Fp) {
    std::vector<Word> rels;
    for (const Word& r : P.relators) rels.push_back(detail::shift_word(r, 1));
    for (int j = 0; j < P.ngens(); ++j) {
      Word r{{0, 1}, {j + 1, 1}, {0, -1}};
      Word img = word_inverse(detail::shift_word(phi.images[j], 1));
      r.insert(r.end(), img.begin(), img.end());
      rels.push_back(free_reduce(r));
    }
    return make_fp_presentation(std::move(names), std::move(rels));
  }

  std::vector<long long> orders{0};
  orders.insert(orders.end(), P.orders.begin(), P.orders.end());
  std::vector<Word> powers{Word{}};
  for (const Word& w : P.power_rhs) powers.push_back(detail::shift_word(w, 1));
  std::map<std::pair<int, int>, Word> conj, conj_inv;
  for (const auto& [key, rhs] : P.conj)
    conj[{key.first + 1, key.second + 1}] = detail::shift_word(rhs, 1);
  for (const auto& [key, rhs] : P.conj_inv)
    conj_inv[{key.first + 1, key.second + 1}] = detail::shift_word(rhs, 1);
  for (int j = 0; j < P.ngens(); ++j) {
    conj[{0, j + 1}] = detail::shift_word(phi.inv_images[j], 1);
    conj_inv[{0, j + 1}] = detail::shift_word(phi.images[j], 1);
  }
  return make_pc_presentation(std::move(names), std::move(orders),
                              std::move(powers), std::move(conj),
                              std::move(conj_inv), limits);
}

// Breadth-first stream of the distinct elements reachable within the given
// radius, as normal-form words: the identity first, then by distance, ties
// by generator index with the positive letter before the inverse. Each
// element appears once, at its geodesic layer.
class BallEnumerator {
 public:
  BallEnumerator(const Presentation& P, long long radius = -1,
                 Limits limits = {})
      : pres_(&P), radius_(radius), limits_(limits) {
    discovered_.push_back(Word{});
    depth_.push_back(0);
    seen_.insert(Word{});
  }

  std::optional<Word> next() {
    while (emit_ >= discovered_.size()) {
      if (extend_ >= discovered_.size()) return std::nullopt;
      std::size_t at = extend_++;
      if (radius_ >= 0 && depth_[at] >= radius_) continue;
      for (int g = 0; g < pres_->ngens(); ++g)
        for (long long sgn : {1LL, -1LL}) {
          Word w = discovered_[at];
          w.push_back({g, sgn});
          Word nf = normal_form(*pres_, w, limits_);
          if (seen_.insert(nf).second) {
            discovered_.push_back(std::move(nf));
            depth_.push_back(depth_[at] + 1);
          }
        }
    }
    return discovered_[emit_++];
  }

 private:
  const Presentation* pres_;
  long long radius_;
  Limits limits_;
  std::vector<Word> discovered_;
  std::vector<long long> depth_;
  std::set<Word> seen_;
  std::size_t emit_ = 0, extend_ = 0;
};

// All elements within the radius, in enumeration order.
inline std::vector<Word> ball_enumerate(const Presentation& P,
                                        long long radius,
                                        const Limits& limits = {}) {
  BallEnumerator ball(P, radius, limits);
  std::vector<Word> out;
  while (auto w = ball.next()) out.push_back(*w);
  return out;
}

}  // namespace tconj

#endif  // TCONJ_PRESENTATION_HPP
