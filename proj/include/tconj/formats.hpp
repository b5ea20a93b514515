// Text formats: group description files, automorphism files, certificates
// and integer matrices. Line oriented; '#' starts a comment; blank lines
// are ignored. Errors carry line and column positions.

#ifndef TCONJ_FORMATS_HPP
#define TCONJ_FORMATS_HPP

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tconj/abelian.hpp"
#include "tconj/decide.hpp"
#include "tconj/presentation.hpp"

namespace tconj {

namespace detail {

struct SourceLine {
  int number = 0;  // 1-based position in the file
  std::string text;
};

inline std::vector<SourceLine> significant_lines(const std::string& text) {
  std::vector<SourceLine> out;
  std::istringstream in(text);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    std::string kept = line.substr(0, line.find('#'));
    bool blank = true;
    for (char c : kept)
      if (c != ' ' && c != '\t' && c != '\r') blank = false;
    if (!blank) {
      while (!kept.empty() && (kept.back() == '\r' || kept.back() == ' ' ||
                               kept.back() == '\t'))
        kept.pop_back();
      out.push_back({n, kept});
    }
  }
  return out;
}

inline std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

inline long long parse_ll(const std::string& s, int line) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw SyntaxError(line, 1, "expected an integer, got \"" + s + "\"");
  }
}

// Splits a line into top-level word tokens: whitespace separates tokens
// only at parenthesis depth zero, so "(a b^-1) b" is two tokens.
inline std::vector<std::pair<std::string, int>> word_tokens(
    const std::string& line, int line_no) {
  std::vector<std::pair<std::string, int>> out;
  std::string cur;
  int depth = 0, start_col = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    char c = i < line.size() ? line[i] : ' ';
    if ((c == ' ' || c == '\t') && depth == 0) {
      if (!cur.empty()) {
        out.emplace_back(cur, start_col);
        cur.clear();
      }
      continue;
    }
    if (cur.empty()) start_col = static_cast<int>(i);
    if (c == '(') ++depth;
    if (c == ')') {
      --depth;
      if (depth < 0)
        throw SyntaxError(line_no, static_cast<int>(i) + 1, "unmatched ')'");
    }
    cur += c;
  }
  if (depth != 0) throw SyntaxError(line_no, 1, "missing ')'");
  return out;
}

}  // namespace detail

enum class GroupKind { Cayley, Perm, Abelian, Fp, Pc };

// A parsed group file. Cayley and perm kinds materialise a FiniteGroup;
// perm additionally keeps the generators; abelian and presentation kinds
// keep their own structures.
struct GroupFile {
  GroupKind kind = GroupKind::Cayley;
  std::optional<FiniteGroup> finite;
  std::optional<PermGroup> perm;
  std::optional<FgAbelianGroup> abelian;
  std::optional<Presentation> pres;

  bool is_finite() const { return finite.has_value(); }
};

inline GroupFile parse_group_text(const std::string& text,
                                  const Limits& limits = {}) {
  auto lines = detail::significant_lines(text);
  if (lines.empty()) throw SyntaxError(1, 1, "empty group file");
  auto head = detail::tokens(lines[0].text);
  if (head.size() != 2 || head[0] != "kind")
    throw SyntaxError(lines[0].number, 1,
                      "expected \"kind cayley|perm|abelian|fp|pc\"");

  GroupFile out;
  std::size_t at = 1;
  auto need_line = [&](const std::string& what) -> const detail::SourceLine& {
    if (at >= lines.size())
      throw SyntaxError(lines.back().number, 1,
                        "unexpected end of file, expected " + what);
    return lines[at];
  };

  if (head[1] == "cayley") {
    out.kind = GroupKind::Cayley;
    auto ord = detail::tokens(need_line("\"order N\"").text);
    if (ord.size() != 2 || ord[0] != "order")
      throw SyntaxError(lines[at].number, 1, "expected \"order N\"");
    int n = static_cast<int>(detail::parse_ll(ord[1], lines[at].number));
    if (n <= 0) throw SyntaxError(lines[at].number, 1, "order must be positive");
    ++at;
    std::vector<int> table;
    table.reserve(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r) {
      auto row = detail::tokens(need_line("a table row").text);
      if (static_cast<int>(row.size()) != n)
        throw SyntaxError(lines[at].number, 1,
                          "table row has " + std::to_string(row.size()) +
                              " entries, expected " + std::to_string(n));
      for (const std::string& s : row)
        table.push_back(
            static_cast<int>(detail::parse_ll(s, lines[at].number)));
      ++at;
    }
    out.finite = build_cayley(n, table, limits);
  } else if (head[1] == "perm") {
    out.kind = GroupKind::Perm;
    auto deg = detail::tokens(need_line("\"degree N\"").text);
    if (deg.size() != 2 || deg[0] != "degree")
      throw SyntaxError(lines[at].number, 1, "expected \"degree N\"");
    int degree = static_cast<int>(detail::parse_ll(deg[1], lines[at].number));
    if (degree <= 0)
      throw SyntaxError(lines[at].number, 1, "degree must be positive");
    ++at;
    std::vector<Perm> gens;
    while (at < lines.size()) {
      const auto& ln = lines[at];
      if (ln.text.compare(0, 4, "gen ") != 0 && ln.text != "gen")
        throw SyntaxError(ln.number, 1, "expected \"gen <cycles>\"");
      std::string rest = ln.text.size() > 4 ? ln.text.substr(4) : "";
      gens.push_back(perm_from_cycles(rest, degree, ln.number, 4));
      ++at;
    }
    if (gens.empty())
      throw SyntaxError(lines.back().number, 1, "perm group needs generators");
    out.perm = perm_closure(gens, limits);
    out.finite = group_from_perms(gens, limits);
  } else if (head[1] == "abelian") {
    out.kind = GroupKind::Abelian;
    auto rk = detail::tokens(need_line("\"rank r\"").text);
    if (rk.size() != 2 || rk[0] != "rank")
      throw SyntaxError(lines[at].number, 1, "expected \"rank r\"");
    int rank = static_cast<int>(detail::parse_ll(rk[1], lines[at].number));
    ++at;
    std::vector<Int> torsion;
    if (at < lines.size()) {
      auto tor = detail::tokens(lines[at].text);
      if (!tor.empty() && tor[0] == "torsion") {
        for (std::size_t i = 1; i < tor.size(); ++i)
          torsion.push_back(Int(detail::parse_ll(tor[i], lines[at].number)));
        ++at;
      }
    }
    if (at < lines.size())
      throw SyntaxError(lines[at].number, 1, "unexpected trailing line");
    try {
      out.abelian = make_abelian(rank, std::move(torsion));
    } catch (const Error& e) {
      throw SyntaxError(lines[at - 1].number, 1, e.what());
    }
  } else if (head[1] == "fp") {
    out.kind = GroupKind::Fp;
    auto gn = detail::tokens(need_line("\"gens ...\"").text);
    if (gn.empty() || gn[0] != "gens")
      throw SyntaxError(lines[at].number, 1, "expected \"gens a b ...\"");
    std::vector<std::string> names(gn.begin() + 1, gn.end());
    if (names.empty())
      throw SyntaxError(lines[at].number, 1, "need at least one generator");
    ++at;
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < names.size(); ++i)
      index[names[i]] = static_cast<int>(i);
    std::vector<Word> relators;
    while (at < lines.size()) {
      const auto& ln = lines[at];
      auto tk = detail::tokens(ln.text);
      if (tk.empty() || tk[0] != "rel")
        throw SyntaxError(ln.number, 1, "expected \"rel <word>\"");
      relators.push_back(
          parse_word(ln.text.substr(ln.text.find("rel") + 3), index,
                     ln.number, static_cast<int>(ln.text.find("rel")) + 3));
      ++at;
    }
    out.pres = make_fp_presentation(std::move(names), std::move(relators));
  } else if (head[1] == "pc") {
    out.kind = GroupKind::Pc;
    std::vector<std::string> names;
    std::vector<long long> orders;
    std::map<std::string, int> index;
    while (at < lines.size()) {
      auto tk = detail::tokens(lines[at].text);
      if (tk.empty() || tk[0] != "gen") break;
      if (tk.size() != 4 || tk[2] != "order")
        throw SyntaxError(lines[at].number, 1,
                          "expected \"gen <name> order <r|inf>\"");
      if (index.count(tk[1]))
        throw SyntaxError(lines[at].number, 1,
                          "duplicate generator \"" + tk[1] + "\"");
      index[tk[1]] = static_cast<int>(names.size());
      names.push_back(tk[1]);
      if (tk[3] == "inf") {
        orders.push_back(0);
      } else {
        long long r = detail::parse_ll(tk[3], lines[at].number);
        if (r <= 0)
          throw SyntaxError(lines[at].number, 1,
                            "order must be positive or \"inf\"");
        orders.push_back(r);
      }
      ++at;
    }
    if (names.empty())
      throw SyntaxError(lines[0].number, 1, "pc group needs generators");
    std::vector<Word> powers(names.size());
    std::map<std::pair<int, int>, Word> conj, conj_inv;
    for (; at < lines.size(); ++at) {
      const auto& ln = lines[at];
      std::size_t eq = ln.text.find('=');
      if (eq == std::string::npos)
        throw SyntaxError(ln.number, 1, "expected \"... = <word>\"");
      std::string lhs = ln.text.substr(0, eq);
      auto tk = detail::tokens(lhs);
      Word rhs = parse_word(ln.text.substr(eq + 1), index, ln.number,
                            static_cast<int>(eq) + 1);
      auto gen_of = [&](const std::string& name) {
        auto it = index.find(name);
        if (it == index.end())
          throw SyntaxError(ln.number, 1,
                            "unknown generator \"" + name + "\"");
        return it->second;
      };
      if (!tk.empty() && tk[0] == "pow") {
        if (tk.size() != 2)
          throw SyntaxError(ln.number, 1, "expected \"pow <name> = <word>\"");
        int i = gen_of(tk[1]);
        if (orders[i] == 0)
          throw SyntaxError(ln.number, 1,
                            "power relation for infinite-order generator \"" +
                                tk[1] + "\"");
        powers[i] = rhs;
      } else if (!tk.empty() && tk[0] == "conj") {
        // conj <g_j> ^ <g_i> = w   or   conj <g_j> ^ <g_i>^-1 = w
        if (tk.size() != 4 || tk[2] != "^")
          throw SyntaxError(ln.number, 1,
                            "expected \"conj <g> ^ <h> = <word>\" or "
                            "\"conj <g> ^ <h>^-1 = <word>\"");
        int j = gen_of(tk[1]);
        bool inverse = false;
        std::string conjugator = tk[3];
        if (conjugator.size() > 3 &&
            conjugator.compare(conjugator.size() - 3, 3, "^-1") == 0) {
          inverse = true;
          conjugator = conjugator.substr(0, conjugator.size() - 3);
        }
        int i = gen_of(conjugator);
        if (i >= j)
          throw BadGeneratorIndexOrder(
              ln.number, "conjugation of " + names[j] + " by " + names[i] +
                             " requires the conjugator to come first");
        for (const Syllable& s : rhs)
          if (s.gen <= i)
            throw BadGeneratorIndexOrder(
                ln.number,
                "right-hand side may only use generators above " + names[i]);
        (inverse ? conj_inv : conj)[{i, j}] = rhs;
      } else {
        throw SyntaxError(ln.number, 1,
                          "expected a pow or conj relation");
      }
    }
    out.pres =
        make_pc_presentation(std::move(names), std::move(orders),
                             std::move(powers), std::move(conj),
                             std::move(conj_inv), limits);
  } else {
    throw SyntaxError(lines[0].number, 6,
                      "unknown group kind \"" + head[1] + "\"");
  }
  return out;
}

// An automorphism file before binding to a group: kept symbolic so the
// same parser serves every group kind.
struct AutFile {
  enum class Kind { Perm, Images, Matrix } kind = Kind::Perm;
  std::vector<int> perm_images;
  std::vector<std::pair<std::string, int>> image_words;  // text + line
  std::vector<std::pair<std::string, int>> inv_words;
  IntMatrix matrix;
};

inline AutFile parse_aut_text(const std::string& text) {
  auto lines = detail::significant_lines(text);
  if (lines.empty()) throw SyntaxError(1, 1, "empty automorphism file");
  auto head = detail::tokens(lines[0].text);
  AutFile out;
  if (head.size() >= 2 && head[0] == "aut" && head[1] == "perm") {
    out.kind = AutFile::Kind::Perm;
    for (std::size_t i = 2; i < head.size(); ++i)
      out.perm_images.push_back(
          static_cast<int>(detail::parse_ll(head[i], lines[0].number)));
    if (lines.size() > 1)
      throw SyntaxError(lines[1].number, 1, "unexpected trailing line");
    if (out.perm_images.empty())
      throw SyntaxError(lines[0].number, 1, "aut perm needs image entries");
    return out;
  }
  if (head.size() >= 2 && head[0] == "aut" && head[1] == "images") {
    out.kind = AutFile::Kind::Images;
    std::size_t start = lines[0].text.find("images") + 6;
    for (auto& [tok, col] :
         detail::word_tokens(lines[0].text.substr(start), lines[0].number))
      out.image_words.emplace_back(tok, lines[0].number);
    for (std::size_t li = 1; li < lines.size(); ++li) {
      auto tk = detail::tokens(lines[li].text);
      if (tk.size() >= 2 && tk[0] == "inv" && tk[1] == "images") {
        std::size_t s2 = lines[li].text.find("images") + 6;
        for (auto& [tok, col] : detail::word_tokens(
                 lines[li].text.substr(s2), lines[li].number))
          out.inv_words.emplace_back(tok, lines[li].number);
      } else {
        throw SyntaxError(lines[li].number, 1,
                          "expected \"inv images <word> ...\"");
      }
    }
    return out;
  }
  if (head.size() == 2 && head[0] == "aut" && head[1] == "matrix") {
    out.kind = AutFile::Kind::Matrix;
    std::vector<std::vector<Int>> rows;
    for (std::size_t li = 1; li < lines.size(); ++li) {
      std::vector<Int> row;
      for (const std::string& t : detail::tokens(lines[li].text))
        row.push_back(Int(detail::parse_ll(t, lines[li].number)));
      if (!rows.empty() && rows[0].size() != row.size())
        throw SyntaxError(lines[li].number, 1, "ragged matrix row");
      rows.push_back(std::move(row));
    }
    if (rows.empty())
      throw SyntaxError(lines[0].number, 1, "aut matrix needs rows");
    out.matrix = IntMatrix(static_cast<int>(rows.size()),
                           static_cast<int>(rows[0].size()));
    for (int i = 0; i < out.matrix.rows; ++i)
      for (int j = 0; j < out.matrix.cols; ++j)
        out.matrix.at(i, j) = rows[i][j];
    return out;
  }
  throw SyntaxError(lines[0].number, 1,
                    "expected \"aut perm ...\", \"aut images ...\" or "
                    "\"aut matrix\"");
}

inline Automorphism bind_aut_finite(const GroupFile& g, const AutFile& a) {
  if (!g.finite) throw Error("group is not finite");
  if (a.kind != AutFile::Kind::Perm)
    throw Error("a finite group takes \"aut perm\" with one image per "
                "element index");
  return check_automorphism(*g.finite, a.perm_images);
}

inline AbelianEndo bind_aut_abelian(const GroupFile& g, const AutFile& a) {
  if (!g.abelian) throw Error("group is not abelian-presented");
  if (a.kind != AutFile::Kind::Matrix)
    throw Error("an abelian group takes \"aut matrix\"");
  return require_abelian_automorphism(*g.abelian, a.matrix);
}

inline PresAutomorphism bind_aut_pres(const GroupFile& g, const AutFile& a,
                                      const Limits& limits = {}) {
  if (!g.pres) throw Error("group is not a presentation");
  if (a.kind != AutFile::Kind::Images)
    throw Error("a presented group takes \"aut images\" with one word per "
                "generator, plus \"inv images\"");
  const Presentation& P = *g.pres;
  auto parse_all = [&](const std::vector<std::pair<std::string, int>>& raw) {
    std::vector<Word> out;
    for (auto& [text, line] : raw)
      out.push_back(parse_word(text, P.gen_index, line));
    return out;
  };
  std::vector<Word> images = parse_all(a.image_words);
  std::vector<Word> invs = parse_all(a.inv_words);
  if (static_cast<int>(images.size()) != P.ngens())
    throw Error("need exactly " + std::to_string(P.ngens()) +
                " image words, got " + std::to_string(images.size()));
  if (invs.empty())
    throw Error("presented automorphisms need an \"inv images\" line");
  if (static_cast<int>(invs.size()) != P.ngens())
    throw Error("need exactly " + std::to_string(P.ngens()) +
                " inverse image words, got " + std::to_string(invs.size()));
  return make_pres_automorphism(P, std::move(images), std::move(invs), limits);
}

// ---- certificates ----

inline std::string perm_images_string(const Perm& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p[i]);
  }
  return out;
}

// `witness <word>` / `quotient degree=<n>` with one `image <gen> = ...`
// line per generator; both carry the step index that found them.
inline std::string serialize_certificate(const Certificate& cert,
                                         const DecisionQuery& q) {
  std::string out;
  if (const ConjugatorWitness* w = std::get_if<ConjugatorWitness>(&cert)) {
    if (std::holds_alternative<FiniteQuery>(q)) {
      out += "witness g" + std::to_string(*w->element) + "\n";
    } else {
      const PresQuery& pq = std::get<PresQuery>(q);
      out += "witness " + word_to_string(*w->word, pq.P.gen_names) + "\n";
    }
    out += "step " + std::to_string(w->step) + "\n";
    return out;
  }
  const SeparatingQuotient& sq = std::get<SeparatingQuotient>(cert);
  out += "quotient degree=" + std::to_string(sq.degree) + "\n";
  out += "step " + std::to_string(sq.step) + "\n";
  for (std::size_t i = 0; i < sq.images.size(); ++i)
    out += "image " + sq.gen_names[i] + " = " +
           perm_images_string(sq.images[i]) + "\n";
  return out;
}

inline Certificate parse_certificate(const std::string& text,
                                     const DecisionQuery& q) {
  auto lines = detail::significant_lines(text);
  if (lines.empty()) throw SyntaxError(1, 1, "empty certificate");
  auto head = detail::tokens(lines[0].text);
  if (head.size() >= 2 && head[0] == "witness") {
    ConjugatorWitness w;
    std::string word_text = lines[0].text.substr(lines[0].text.find("witness") + 7);
    if (lines.size() >= 2) {
      auto st = detail::tokens(lines[1].text);
      if (st.size() == 2 && st[0] == "step")
        w.step = detail::parse_ll(st[1], lines[1].number);
      else
        throw SyntaxError(lines[1].number, 1, "expected \"step <n>\"");
    }
    if (const FiniteQuery* fq = std::get_if<FiniteQuery>(&q)) {
      auto tk = detail::tokens(word_text);
      if (tk.size() != 1 || tk[0].size() < 2 || tk[0][0] != 'g')
        throw SyntaxError(lines[0].number, 1,
                          "finite witnesses are written g<index>");
      w.element = static_cast<int>(
          detail::parse_ll(tk[0].substr(1), lines[0].number));
      if (*w.element < 0 || *w.element >= fq->G.order)
        throw SyntaxError(lines[0].number, 1, "witness index out of range");
    } else {
      const PresQuery& pq = std::get<PresQuery>(q);
      w.word = parse_word(word_text, pq.P.gen_index, lines[0].number);
    }
    return Certificate(w);
  }
  if (!head.empty() && head[0] == "quotient") {
    if (head.size() != 2 || head[1].compare(0, 7, "degree=") != 0)
      throw SyntaxError(lines[0].number, 1, "expected \"quotient degree=<n>\"");
    SeparatingQuotient sq;
    sq.degree = static_cast<int>(
        detail::parse_ll(head[1].substr(7), lines[0].number));
    std::size_t li = 1;
    if (li < lines.size()) {
      auto st = detail::tokens(lines[li].text);
      if (st.size() == 2 && st[0] == "step") {
        sq.step = detail::parse_ll(st[1], lines[li].number);
        ++li;
      }
    }
    for (; li < lines.size(); ++li) {
      auto tk = detail::tokens(lines[li].text);
      if (tk.size() < 3 || tk[0] != "image" || tk[2] != "=")
        throw SyntaxError(lines[li].number, 1,
                          "expected \"image <gen> = <images>\"");
      Perm p;
      for (std::size_t i = 3; i < tk.size(); ++i)
        p.push_back(
            static_cast<int>(detail::parse_ll(tk[i], lines[li].number)));
      if (static_cast<int>(p.size()) != sq.degree)
        throw SyntaxError(lines[li].number, 1,
                          "permutation has the wrong degree");
      validate_perm(p);
      sq.gen_names.push_back(tk[1]);
      sq.images.push_back(std::move(p));
    }
    return Certificate(sq);
  }
  throw SyntaxError(lines[0].number, 1,
                    "expected \"witness ...\" or \"quotient degree=...\"");
}

// Renders a presentation in the group-file syntax, so the output of a
// construction can be fed back in as input.
inline std::string presentation_to_text(const Presentation& P) {
  std::string out;
  if (P.kind == PresKind::Fp) {
    out += "kind fp\ngens";
    for (const std::string& n : P.gen_names) out += " " + n;
    out += "\n";
    for (const Word& r : P.relators)
      out += "rel " + word_to_string(r, P.gen_names) + "\n";
    return out;
  }
  out += "kind pc\n";
  for (int i = 0; i < P.ngens(); ++i)
    out += "gen " + P.gen_names[i] + " order " +
           (P.orders[i] > 0 ? std::to_string(P.orders[i])
                            : std::string("inf")) +
           "\n";
  for (int i = 0; i < P.ngens(); ++i)
    if (P.orders[i] > 0 && !P.power_rhs[i].empty())
      out += "pow " + P.gen_names[i] + " = " +
             word_to_string(P.power_rhs[i], P.gen_names) + "\n";
  for (const auto& [key, rhs] : P.conj)
    out += "conj " + P.gen_names[key.second] + " ^ " + P.gen_names[key.first] +
           " = " + word_to_string(rhs, P.gen_names) + "\n";
  for (const auto& [key, rhs] : P.conj_inv)
    out += "conj " + P.gen_names[key.second] + " ^ " + P.gen_names[key.first] +
           "^-1 = " + word_to_string(rhs, P.gen_names) + "\n";
  return out;
}

// ---- plain matrices ----

inline IntMatrix parse_matrix_text(const std::string& text) {
  auto lines = detail::significant_lines(text);
  if (lines.empty()) throw SyntaxError(1, 1, "empty matrix file");
  std::vector<std::vector<Int>> rows;
  for (const auto& ln : lines) {
    std::vector<Int> row;
    for (const std::string& t : detail::tokens(ln.text))
      row.push_back(Int(detail::parse_ll(t, ln.number)));
    if (!rows.empty() && row.size() != rows[0].size())
      throw SyntaxError(ln.number, 1, "ragged matrix row");
    rows.push_back(std::move(row));
  }
  IntMatrix m(static_cast<int>(rows.size()),
              static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline GroupFile load_group_file(const std::string& path,
                                 const Limits& limits = {}) {
  return parse_group_text(read_file(path), limits);
}

inline AutFile load_aut_file(const std::string& path) {
  return parse_aut_text(read_file(path));
}

}  // namespace tconj

#endif  // TCONJ_FORMATS_HPP
