// Words in group generators as syllable lists, with parsing and the free
// operations. A syllable is a generator index with a nonzero exponent.

#ifndef TCONJ_WORD_HPP
#define TCONJ_WORD_HPP

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "tconj/common.hpp"

namespace tconj {

struct Syllable {
  int gen = 0;
  long long exp = 0;

  friend bool operator==(const Syllable& a, const Syllable& b) {
    return a.gen == b.gen && a.exp == b.exp;
  }
  friend bool operator<(const Syllable& a, const Syllable& b) {
    return a.gen != b.gen ? a.gen < b.gen : a.exp < b.exp;
  }
};

using Word = std::vector<Syllable>;

// Merges adjacent syllables on the same generator and drops zero
// exponents. For honest free groups this is the normal form.
inline Word free_reduce(const Word& w) {
  Word out;
  for (const Syllable& s : w) {
    if (s.exp == 0) continue;
    if (!out.empty() && out.back().gen == s.gen) {
      out.back().exp += s.exp;
      if (out.back().exp == 0) out.pop_back();
      continue;
    }
    out.push_back(s);
  }
  // cancellations can expose new adjacent pairs
  if (out.size() < w.size()) {
    bool again = false;
    for (std::size_t i = 0; i + 1 < out.size(); ++i)
      if (out[i].gen == out[i + 1].gen) again = true;
    if (again) return free_reduce(out);
  }
  return out;
}

inline Word word_inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back({it->gen, -it->exp});
  return out;
}

inline Word word_concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

inline Word word_power(const Word& w, long long e) {
  if (w.size() == 1) {
    // one syllable commutes with itself, so fold the exponent
    if (w[0].exp != 0 && e != 0) return {{w[0].gen, w[0].exp * e}};
    return {};
  }
  Word base = e >= 0 ? w : word_inverse(w);
  long long n = e >= 0 ? e : -e;
  Word out;
  for (long long i = 0; i < n; ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

inline std::string word_to_string(const Word& w,
                                  const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  for (const Syllable& s : w) {
    if (!out.empty()) out += ' ';
    out += names[s.gen];
    if (s.exp != 1) out += "^" + std::to_string(s.exp);
  }
  return out;
}

namespace detail {

struct WordParser {
  const std::string& text;
  const std::map<std::string, int>& gen_index;
  int line;
  int col_base;
  std::size_t i = 0;

  SyntaxError fail(const std::string& what) const {
    return SyntaxError(line, col_base + static_cast<int>(i) + 1, what);
  }
  void skip_ws() {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  }
  bool name_char(char c) const {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
  }
  long long parse_int() {
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
      neg = text[i] == '-';
      ++i;
    }
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw fail("expected an exponent");
    long long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      v = v * 10 + (text[i++] - '0');
    return neg ? -v : v;
  }

  // word := (name | '(' word ')') ('^' int)? ...
  Word parse(bool inside_parens) {
    Word out;
    for (;;) {
      skip_ws();
      if (i >= text.size()) {
        if (inside_parens) throw fail("missing ')'");
        return out;
      }
      if (text[i] == ')') {
        if (!inside_parens) throw fail("unmatched ')'");
        return out;
      }
      Word atom;
      if (text[i] == '(') {
        ++i;
        atom = parse(true);
        ++i;  // consume ')'
      } else if (name_char(text[i])) {
        std::size_t start = i;
        while (i < text.size() && name_char(text[i])) ++i;
        std::string name = text.substr(start, i - start);
        if (name == "1") {
          // the empty word
        } else {
          auto it = gen_index.find(name);
          if (it == gen_index.end()) {
            i = start;
            throw fail("unknown generator \"" + name + "\"");
          }
          atom.push_back({it->second, 1});
        }
      } else {
        throw fail(std::string("unexpected character '") + text[i] + "'");
      }
      long long e = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        e = parse_int();
      }
      Word piece = e == 1 ? atom : word_power(atom, e);
      out.insert(out.end(), piece.begin(), piece.end());
    }
  }
};

}  // namespace detail

// Accepts juxtaposed names with optional integer exponents and
// parenthesised subwords, e.g. "a b^-1 (a b)^2". "1" is the empty word.
inline Word parse_word(const std::string& text,
                       const std::map<std::string, int>& gen_index,
                       int line = 0, int col_base = 0) {
  detail::WordParser p{text, gen_index, line, col_base};
  Word w = p.parse(false);
  return free_reduce(w);
}

}  // namespace tconj

#endif  // TCONJ_WORD_HPP
