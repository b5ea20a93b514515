// The twisted conjugacy decision procedure: a conjugator search and a
// finite-quotient search run side by side, each step indexed, with
// resumable state and certificates that can be replayed independently.
//
// Soundness: a conjugator witness g satisfies y = g x phi(g)^-1 by direct
// evaluation; a separating quotient is a homomorphism of the mapping torus
// into a symmetric group under which the images of x t and y t are not
// conjugate, and conjugate elements stay conjugate under homomorphisms.
// Interleaving: step i of the conjugator search sits at position 2i - 1,
// step j of the quotient search at position 2j; when both searches
// succeed, the certificate from the earlier position wins, so sequential
// and parallel runs agree.

#ifndef TCONJ_DECIDE_HPP
#define TCONJ_DECIDE_HPP

#include <algorithm>
#include <atomic>
#include <optional>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "tconj/gamma.hpp"
#include "tconj/presentation.hpp"

namespace tconj {

struct FiniteQuery {
  FiniteGroup G;
  Automorphism phi;
  int x = 0, y = 0;
};

struct PresQuery {
  Presentation P;
  PresAutomorphism phi;
  Word x, y;
};

using DecisionQuery = std::variant<FiniteQuery, PresQuery>;

struct ConjugatorWitness {
  long long step = 0;          // conjugator-search step that found it
  std::optional<int> element;  // finite queries
  std::optional<Word> word;    // presented queries
};

struct SeparatingQuotient {
  long long step = 0;  // quotient-search step that found it
  int degree = 0;
  std::vector<std::string> gen_names;
  std::vector<Perm> images;  // parallel to gen_names
};

using Certificate = std::variant<ConjugatorWitness, SeparatingQuotient>;

// Progress markers; a later run may resume after the recorded number of
// steps of each search and will replay the same candidate streams.
struct QuotientSearchState {
  long long a_done = 0;  // conjugator-search candidates consumed
  long long b_done = 0;  // quotient-search candidates consumed
};

inline Perm eval_word_perm(const Word& w, const std::vector<Perm>& images,
                           int degree) {
  Perm acc = perm_identity(degree);
  for (const Syllable& s : w) {
    Perm p = images[s.gen];
    long long reps = s.exp;
    if (reps < 0) {
      p = perm_inverse(p);
      reps = -reps;
    }
    for (long long i = 0; i < reps; ++i) acc = perm_mul(acc, p);
  }
  return acc;
}

namespace detail {

// x t as a word of the mapping torus presentation (t is generator 0).
inline Word coset_word(const Word& x) {
  Word w = shift_word(x, 1);
  w.push_back({0, 1});
  return w;
}

}  // namespace detail

// Conjugator search: candidates g in a fixed stream, testing
// y = g x phi(g)^-1. Finite queries sweep the identity first and then all
// elements in index order; presented queries walk the breadth-first ball.
class ConjugatorSearch {
 public:
  ConjugatorSearch(const DecisionQuery& q, const Limits& limits = {})
      : q_(&q), limits_(limits) {
    if (const PresQuery* pq = std::get_if<PresQuery>(&q)) {
      ball_.emplace(pq->P, -1, limits);
      xw_ = normal_form(pq->P, pq->x, limits);
      yw_ = normal_form(pq->P, pq->y, limits);
    }
  }

  struct Result {
    bool exhausted = false;
    std::optional<Certificate> found;
  };

  Result step() {
    if (const FiniteQuery* fq = std::get_if<FiniteQuery>(q_)) {
      int g = next_finite_candidate(*fq);
      if (g < 0) return {true, std::nullopt};
      ++done_;
      const FiniteGroup& G = fq->G;
      if (G.mul(G.mul(g, fq->x), G.inv(fq->phi(g))) == fq->y) {
        ConjugatorWitness w;
        w.step = done_;
        w.element = g;
        return {false, Certificate(w)};
      }
      return {};
    }
    const PresQuery& pq = std::get<PresQuery>(*q_);
    std::optional<Word> g = ball_->next();
    if (!g) return {true, std::nullopt};
    ++done_;
    Word u = word_concat(word_concat(*g, xw_),
                         substitute(pq.phi.images, word_inverse(*g)));
    if (words_equal(pq.P, u, yw_, limits_) == Truth::Yes) {
      ConjugatorWitness w;
      w.step = done_;
      w.word = *g;
      return {false, Certificate(w)};
    }
    return {};
  }

  // Consumes candidates without testing them; used to resume. The skipped
  // indices stay claimed so step numbering matches an uninterrupted run.
  void skip(long long n) {
    for (long long i = 0; i < n; ++i) {
      if (const FiniteQuery* fq = std::get_if<FiniteQuery>(q_)) {
        next_finite_candidate(*fq);
      } else {
        ball_->next();
      }
    }
    done_ += n;
  }

  long long done() const { return done_; }

 private:
  int next_finite_candidate(const FiniteQuery& fq) {
    while (cursor_ <= fq.G.order) {
      int at = cursor_++;
      if (at == 0) return fq.G.identity;
      int g = at - 1;
      if (g == fq.G.identity) continue;  // already emitted first
      return g;
    }
    return -1;
  }

  const DecisionQuery* q_;
  Limits limits_;
  long long done_ = 0;
  int cursor_ = 0;
  std::optional<BallEnumerator> ball_;
  Word xw_, yw_;
};

// Quotient search: candidate homomorphisms of the mapping torus into
// finite groups, testing whether the images of x t and y t are conjugate.
//
// Finite queries have one candidate, the regular representation of the
// quotient by <t^k>: conjugates of (x, 1) there carry exactly the twisted
// conjugates of x in their first component, so this candidate separates
// if and only if the elements are not twisted conjugate.
//
// Presented queries enumerate generator-image tuples into symmetric groups
// of ascending degree, permutations in lexicographic order, last generator
// advancing fastest; tuples that fail a defining relator still count as
// steps.
class QuotientSearch {
 public:
  QuotientSearch(const DecisionQuery& q, int degree_cap = 6,
                 const Limits& limits = {})
      : q_(&q), cap_(degree_cap), limits_(limits) {
    if (const PresQuery* pq = std::get_if<PresQuery>(&q)) {
      gamma_ = mapping_torus_presentation(pq->P, pq->phi, limits);
      relators_ = defining_relators(*gamma_);
      xt_ = detail::coset_word(normal_form(pq->P, pq->x, limits));
      yt_ = detail::coset_word(normal_form(pq->P, pq->y, limits));
      load_degree(1);
    }
  }

  struct Result {
    bool exhausted = false;
    std::optional<Certificate> found;
  };

  Result step() {
    if (const FiniteQuery* fq = std::get_if<FiniteQuery>(q_))
      return finite_step(*fq);
    return pres_step();
  }

  void skip(long long n) {
    for (long long i = 0; i < n; ++i) {
      if (std::holds_alternative<FiniteQuery>(*q_)) {
        finite_spent_ = true;
      } else if (!exhausted_) {
        advance();
      }
    }
    done_ += n;
  }

  long long done() const { return done_; }
  int degree_cap() const { return cap_; }

 private:
  Result finite_step(const FiniteQuery& fq) {
    if (finite_spent_) return {true, std::nullopt};
    finite_spent_ = true;
    ++done_;
    FiniteTorus torus = finite_mapping_torus(fq.G, fq.phi, limits_);
    const FiniteGroup& K = torus.K;
    int xt = torus.index(fq.x, 1), yt = torus.index(fq.y, 1);
    for (int u = 0; u < K.order; ++u)
      if (K.conj(u, xt) == yt) return {};  // conjugate; candidate useless
    SeparatingQuotient cert;
    cert.step = done_;
    cert.degree = K.order;
    cert.gen_names.push_back("t");
    cert.images.push_back(
        regular_perm(K, torus.index(fq.G.identity, 1)));
    for (int g = 0; g < fq.G.order; ++g) {
      cert.gen_names.push_back("g" + std::to_string(g));
      cert.images.push_back(regular_perm(K, torus.index(g, 0)));
    }
    return {false, Certificate(cert)};
  }

  Result pres_step() {
    if (exhausted_) return {true, std::nullopt};
    ++done_;
    std::vector<Perm> tuple;
    tuple.reserve(idx_.size());
    for (std::size_t i : idx_) tuple.push_back(perms_[i]);
    Result res;
    if (is_hom(tuple)) {
      Perm fx = eval_word_perm(xt_, tuple, degree_);
      Perm fy = eval_word_perm(yt_, tuple, degree_);
      bool conjugate = false;
      PermGroup image = perm_closure(tuple, image_limits());
      for (const Perm& p : image.elements)
        if (perm_mul(perm_mul(p, fx), perm_inverse(p)) == fy) {
          conjugate = true;
          break;
        }
      if (!conjugate) {
        SeparatingQuotient cert;
        cert.step = done_;
        cert.degree = degree_;
        cert.gen_names = gamma_->gen_names;
        cert.images = tuple;
        res.found = Certificate(cert);
      }
    }
    advance();
    return res;
  }

  bool is_hom(const std::vector<Perm>& tuple) const {
    for (const Word& r : relators_)
      if (!perm_is_identity(eval_word_perm(r, tuple, degree_))) return false;
    return true;
  }

  Limits image_limits() const {
    Limits l = limits_;
    l.max_closure = limits_.max_image_order;
    return l;
  }

  void load_degree(int d) {
    degree_ = d;
    perms_.clear();
    Perm p = perm_identity(d);
    do {
      perms_.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    idx_.assign(gamma_->ngens(), 0);
  }

  void advance() {
    std::size_t k = idx_.size();
    while (k > 0) {
      --k;
      if (++idx_[k] < perms_.size()) return;
      idx_[k] = 0;
    }
    if (degree_ + 1 > cap_) {
      exhausted_ = true;
      return;
    }
    load_degree(degree_ + 1);
  }

  const DecisionQuery* q_;
  int cap_;
  Limits limits_;
  long long done_ = 0;
  bool finite_spent_ = false;
  std::optional<Presentation> gamma_;
  std::vector<Word> relators_;
  Word xt_, yt_;
  int degree_ = 1;
  std::vector<Perm> perms_;
  std::vector<std::size_t> idx_;
  bool exhausted_ = false;
};

inline ConjugatorSearch::Result procedure_a_step(ConjugatorSearch& s) {
  return s.step();
}
inline QuotientSearch::Result procedure_b_step(QuotientSearch& s) {
  return s.step();
}

struct DecideOptions {
  long long a_budget = 100000;  // steps to run in this invocation
  long long b_budget = 100000;
  int degree_cap = 6;
  bool parallel = false;
  QuotientSearchState resume;
  Limits limits;
};

struct DecideOutcome {
  std::optional<Certificate> certificate;
  QuotientSearchState state;     // cumulative, for resumption
  bool a_exhausted = false;      // candidate stream ran dry
  bool b_exhausted = false;
};

namespace detail {

// The winner among two found certificates, by interleaving position.
inline bool a_wins(long long a_step, long long b_step) {
  return 2 * a_step - 1 < 2 * b_step;
}

}  // namespace detail

inline DecideOutcome decide(const DecisionQuery& q,
                            const DecideOptions& opts = {}) {
  ConjugatorSearch A(q, opts.limits);
  QuotientSearch B(q, opts.degree_cap, opts.limits);
  A.skip(opts.resume.a_done);
  B.skip(opts.resume.b_done);

  DecideOutcome out;
  if (!opts.parallel) {
    long long a_run = 0, b_run = 0;
    bool a_stop = false, b_stop = false;
    while (!(a_stop || a_run >= opts.a_budget) ||
           !(b_stop || b_run >= opts.b_budget)) {
      if (!a_stop && a_run < opts.a_budget) {
        ConjugatorSearch::Result r = A.step();
        if (r.exhausted) {
          a_stop = true;
          out.a_exhausted = true;
        } else {
          ++a_run;
          if (r.found) {
            out.certificate = r.found;
            break;
          }
        }
      }
      if (!b_stop && b_run < opts.b_budget) {
        QuotientSearch::Result r = B.step();
        if (r.exhausted) {
          b_stop = true;
          out.b_exhausted = true;
        } else {
          ++b_run;
          if (r.found) {
            out.certificate = r.found;
            break;
          }
        }
      }
    }
    out.state = {A.done(), B.done()};
    return out;
  }

  // Parallel mode: both searches run on their own thread; the position
  // rule picks the same certificate a sequential run would.
  std::atomic<long long> a_found{-1}, b_found{-1};
  std::optional<Certificate> a_cert, b_cert;
  bool a_exh = false, b_exh = false;
  std::thread ta([&] {
    for (long long i = 0; i < opts.a_budget; ++i) {
      long long bf = b_found.load();
      if (bf >= 0 && !detail::a_wins(A.done() + 1, bf)) return;
      ConjugatorSearch::Result r = A.step();
      if (r.exhausted) {
        a_exh = true;
        return;
      }
      if (r.found) {
        a_cert = r.found;
        a_found.store(std::get<ConjugatorWitness>(*r.found).step);
        return;
      }
    }
  });
  std::thread tb([&] {
    for (long long j = 0; j < opts.b_budget; ++j) {
      long long af = a_found.load();
      if (af >= 0 && detail::a_wins(af, B.done() + 1)) return;
      QuotientSearch::Result r = B.step();
      if (r.exhausted) {
        b_exh = true;
        return;
      }
      if (r.found) {
        b_cert = r.found;
        b_found.store(std::get<SeparatingQuotient>(*r.found).step);
        return;
      }
    }
  });
  ta.join();
  tb.join();
  out.a_exhausted = a_exh;
  out.b_exhausted = b_exh;
  if (a_cert && (!b_cert || detail::a_wins(a_found.load(), b_found.load())))
    out.certificate = a_cert;
  else if (b_cert)
    out.certificate = b_cert;
  out.state = {A.done(), B.done()};
  return out;
}

struct VerifyResult {
  bool ok = false;
  std::string reason;
};

// Replays a certificate against the query it claims to answer, using only
// direct evaluation: no search is repeated.
inline VerifyResult verify_certificate(const DecisionQuery& q,
                                       const Certificate& cert,
                                       const Limits& limits = {}) {
  if (const ConjugatorWitness* w = std::get_if<ConjugatorWitness>(&cert)) {
    if (const FiniteQuery* fq = std::get_if<FiniteQuery>(&q)) {
      if (!w->element) return {false, "witness lacks a group element"};
      int g = *w->element;
      if (g < 0 || g >= fq->G.order)
        return {false, "witness element out of range"};
      const FiniteGroup& G = fq->G;
      if (G.mul(G.mul(g, fq->x), G.inv(fq->phi(g))) == fq->y)
        return {true, ""};
      return {false, "witness fails to twist x to y"};
    }
    const PresQuery& pq = std::get<PresQuery>(q);
    if (!w->word) return {false, "witness lacks a word"};
    Word u = word_concat(word_concat(*w->word, pq.x),
                         substitute(pq.phi.images, word_inverse(*w->word)));
    switch (words_equal(pq.P, u, pq.y, limits)) {
      case Truth::Yes:
        return {true, ""};
      case Truth::No:
        return {false, "witness fails to twist x to y"};
      case Truth::Unknown:
        return {false, "witness cannot be verified by free reduction"};
    }
    return {false, "unreachable"};
  }

  const SeparatingQuotient& sq = std::get<SeparatingQuotient>(cert);
  if (sq.degree < 1) return {false, "degree must be positive"};
  for (const Perm& p : sq.images) {
    if (static_cast<int>(p.size()) != sq.degree)
      return {false, "image degree mismatch"};
    try {
      validate_perm(p);
    } catch (const NotAPermutation& e) {
      return {false, e.what()};
    }
  }

  if (const FiniteQuery* fq = std::get_if<FiniteQuery>(&q)) {
    const FiniteGroup& G = fq->G;
    if (static_cast<int>(sq.images.size()) != G.order + 1)
      return {false, "expected images for t and every group element"};
    const Perm& ft = sq.images[0];
    auto fg = [&](int g) -> const Perm& { return sq.images[g + 1]; };
    for (int a = 0; a < G.order; ++a)
      for (int b = 0; b < G.order; ++b)
        if (perm_mul(fg(a), fg(b)) != fg(G.mul(a, b)))
          return {false, "images are not multiplicative"};
    for (int a = 0; a < G.order; ++a)
      if (perm_mul(perm_mul(ft, fg(a)), perm_inverse(ft)) != fg(fq->phi(a)))
        return {false, "t image does not realise phi"};
    Perm fx = perm_mul(fg(fq->x), ft), fy = perm_mul(fg(fq->y), ft);
    Limits l = limits;
    l.max_closure = limits.max_image_order;
    PermGroup image = perm_closure(sq.images, l);
    for (const Perm& p : image.elements)
      if (perm_mul(perm_mul(p, fx), perm_inverse(p)) == fy)
        return {false, "images of x t and y t are conjugate"};
    return {true, ""};
  }

  const PresQuery& pq = std::get<PresQuery>(q);
  Presentation gamma = mapping_torus_presentation(pq.P, pq.phi, limits);
  if (static_cast<int>(sq.images.size()) != gamma.ngens())
    return {false, "expected one image per mapping torus generator"};
  for (const Word& r : defining_relators(gamma))
    if (!perm_is_identity(eval_word_perm(r, sq.images, sq.degree)))
      return {false, "images break a defining relator"};
  Perm fx = eval_word_perm(detail::coset_word(pq.x), sq.images, sq.degree);
  Perm fy = eval_word_perm(detail::coset_word(pq.y), sq.images, sq.degree);
  Limits l = limits;
  l.max_closure = limits.max_image_order;
  PermGroup image = perm_closure(sq.images, l);
  for (const Perm& p : image.elements)
    if (perm_mul(perm_mul(p, fx), perm_inverse(p)) == fy)
      return {false, "images of x t and y t are conjugate"};
  return {true, ""};
}

// One finite quotient that separates every pair of distinct twisted
// classes at once: pairwise separators are drawn from quotients by
// phi-invariant normal closures (largest first, so coarsest quotient
// wins) and combined diagonally. The identity subgroup is always a
// fallback, so the search cannot fail.
struct SeparatedPartition {
  TwistedClassPartition partition;
  PhiQuotient combined;
};

inline SeparatedPartition separate_reidemeister_partition(
    const FiniteGroup& G, const Automorphism& phi, const Limits& limits = {}) {
  SeparatedPartition out{twisted_partition(G, phi), {}};

  // candidate invariant subgroups, deduplicated, largest first
  std::vector<std::vector<int>> candidates;
  for (int g = 0; g < G.order; ++g) {
    std::vector<int> N = phi_normal_closure(G, phi, {g});
    if (std::find(candidates.begin(), candidates.end(), N) ==
        candidates.end())
      candidates.push_back(N);
  }
  std::vector<int> trivial{G.identity};
  if (std::find(candidates.begin(), candidates.end(), trivial) ==
      candidates.end())
    candidates.push_back(trivial);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const auto& a, const auto& b) {
                     return a.size() > b.size();
                   });

  std::vector<PhiQuotient> quotients;
  std::vector<std::vector<int>> used;  // the N behind each entry
  auto quotient_for = [&](const std::vector<int>& N) {
    QuotientGroup qg = quotient_by_normal(G, N, limits);
    std::vector<int> img(qg.Q.order);
    for (int c = 0; c < qg.Q.order; ++c)
      img[c] = qg.map[phi(qg.coset_rep[c])];
    Automorphism phi_Q = check_automorphism(qg.Q, img);
    return make_phi_quotient(G, phi, qg.Q, qg.map, phi_Q);
  };

  std::size_t k = out.partition.count();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      int x = out.partition.representative(static_cast<int>(i));
      int y = out.partition.representative(static_cast<int>(j));
      for (const std::vector<int>& N : candidates) {
        PhiQuotient q = quotient_for(N);
        TwistedClassPartition part = twisted_partition(q.target, q.phi_K);
        if (part.class_of[q.map[x]] != part.class_of[q.map[y]]) {
          if (std::find(used.begin(), used.end(), N) == used.end()) {
            used.push_back(N);
            quotients.push_back(std::move(q));
          }
          break;
        }
      }
    }

  if (quotients.empty()) {
    // a single class needs no separation; the trivial quotient will do
    FiniteGroup one = cyclic_group(1, limits);
    std::vector<int> map(G.order, 0);
    out.combined = make_phi_quotient(G, phi, one, map,
                                     identity_automorphism(one));
    return out;
  }
  out.combined = combine_quotients(G, phi, quotients, limits);

  // the diagonal must now tell all representatives apart
  TwistedClassPartition check =
      twisted_partition(out.combined.target, out.combined.phi_K);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      int x = out.partition.representative(static_cast<int>(i));
      int y = out.partition.representative(static_cast<int>(j));
      if (check.class_of[out.combined.map[x]] ==
          check.class_of[out.combined.map[y]])
        throw Error("combined quotient fails to separate two classes "
                    "(this indicates a bug)");
    }
  return out;
}

}  // namespace tconj

#endif  // TCONJ_DECIDE_HPP
