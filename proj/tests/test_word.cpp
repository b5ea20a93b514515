// Syllable words: reduction, inversion, powers, printing and parsing.

#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "tconj/word.hpp"

using namespace tconj;

namespace {

const std::vector<std::string> kNames{"a", "b", "c"};
const std::map<std::string, int> kIndex{{"a", 0}, {"b", 1}, {"c", 2}};

Word parse(const std::string& s) { return parse_word(s, kIndex, 1); }

std::string rt(const std::string& s) {
  return word_to_string(parse(s), kNames);
}

}  // namespace

TEST_CASE("free reduction cancels recursively") {
  REQUIRE(free_reduce(parse("a b b^-1 a^-1")).empty());
  REQUIRE(free_reduce(parse("a a^-1")).empty());
  REQUIRE(word_to_string(free_reduce(parse("a a b b^-1 a")), kNames) ==
          "a^3");
  REQUIRE(word_to_string(free_reduce(parse("b a^2 a^-1 a^-1 b^-1 c")),
                         kNames) == "c");
  // already reduced words are untouched
  Word w = parse("a b a^-1");
  REQUIRE(free_reduce(w) == w);
}

TEST_CASE("inverse reverses and negates") {
  REQUIRE(word_to_string(word_inverse(parse("a b^2")), kNames) ==
          "b^-2 a^-1");
  REQUIRE(free_reduce(word_concat(parse("a b c"),
                                  word_inverse(parse("a b c"))))
              .empty());
}

TEST_CASE("powers") {
  REQUIRE(word_to_string(word_power(parse("a^2"), 3), kNames) == "a^6");
  REQUIRE(word_to_string(word_power(parse("a^2"), -2), kNames) == "a^-4");
  REQUIRE(word_power(parse("a b"), 0).empty());
  REQUIRE(word_to_string(free_reduce(word_power(parse("a b"), 2)), kNames) ==
          "a b a b");
  // (ab)^-1 = b^-1 a^-1
  REQUIRE(word_to_string(free_reduce(word_power(parse("a b"), -1)), kNames) ==
          "b^-1 a^-1");
}

TEST_CASE("printing") {
  REQUIRE(word_to_string(Word{}, kNames) == "1");
  REQUIRE(word_to_string(Word{{0, 1}, {1, -3}}, kNames) == "a b^-3");
}

TEST_CASE("parsing round trips") {
  REQUIRE(rt("a") == "a");
  REQUIRE(rt("a^-1") == "a^-1");
  REQUIRE(rt("a^2 b^-3 c") == "a^2 b^-3 c");
  REQUIRE(rt("1") == "1");
  REQUIRE(parse("1").empty());
  REQUIRE(parse("  a   b ") == parse("a b"));
}

TEST_CASE("parenthesised subwords") {
  REQUIRE(rt("(a b)^2") == "a b a b");
  REQUIRE(rt("(a b)^-1") == "b^-1 a^-1");
  REQUIRE(rt("((a b)^2 c)^-1") == "c^-1 b^-1 a^-1 b^-1 a^-1");
  REQUIRE(rt("a (b c) a") == "a b c a");
}

TEST_CASE("adjacent equal generators merge on parse") {
  REQUIRE(rt("a a") == "a^2");
  REQUIRE(rt("a a^-1") == "1");
}

TEST_CASE("parse errors carry positions") {
  auto col_of = [](const std::string& text) {
    try {
      parse_word(text, kIndex, 3);
    } catch (const SyntaxError& e) {
      REQUIRE(e.line == 3);
      return e.col;
    }
    FAIL("expected a syntax error");
    return -1;
  };
  REQUIRE(col_of("a ^") > 0);
  REQUIRE(col_of("d") == 1);
  REQUIRE(col_of("a d") == 3);
  REQUIRE(col_of("(a b") > 0);
  REQUIRE(col_of("a)") > 0);
  REQUIRE(col_of("a^x") > 0);
  REQUIRE(col_of("^2") == 1);
}

TEST_CASE("syllable ordering is by generator then exponent") {
  REQUIRE(Syllable{0, 5} < Syllable{1, -5});
  REQUIRE(Syllable{1, -2} < Syllable{1, 3});
  REQUIRE_FALSE(Syllable{1, 3} < Syllable{1, 3});
}
