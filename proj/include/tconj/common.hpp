// Shared configuration, error types and the Reidemeister count value type.

#ifndef TCONJ_COMMON_HPP
#define TCONJ_COMMON_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tconj {

// Exact integer used for all linear algebra and class counts.
using Int = boost::multiprecision::cpp_int;

// Enumeration budgets. All exhaustive procedures take a Limits value so
// callers can raise or lower the caps; the defaults fit desk-scale inputs.
struct Limits {
  int max_table_order = 256;           // full Cayley-table validation bound
  int max_aut_enum_order = 24;         // automorphism enumeration bound
  std::size_t max_closure = 1000000;   // permutation closure element cap
  std::size_t max_image_order = 100000;  // certificate image sweep cap
  long long max_collect_steps = 1000000;  // collection rewrite cap
  int consistency_word_length = 3;     // pc consistency check word bound
  std::size_t max_torsion_enum = 100000;  // torsion subgroup sweep cap
};

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class NotAssociative : public Error {
 public:
  int x, y, z;
  NotAssociative(int x_, int y_, int z_)
      : Error("multiplication is not associative at (" + std::to_string(x_) +
              ", " + std::to_string(y_) + ", " + std::to_string(z_) + ")"),
        x(x_), y(y_), z(z_) {}
};

class NoIdentity : public Error {
 public:
  NoIdentity() : Error("no two-sided identity element") {}
};

class NoInverse : public Error {
 public:
  int element;
  explicit NoInverse(int e)
      : Error("element " + std::to_string(e) + " has no two-sided inverse"),
        element(e) {}
};

class NotAPermutation : public Error {
 public:
  explicit NotAPermutation(const std::string& what)
      : Error("not a permutation: " + what) {}
};

class ClosureBudgetExceeded : public Error {
 public:
  std::size_t budget;
  explicit ClosureBudgetExceeded(std::size_t b)
      : Error("closure exceeded the element budget of " + std::to_string(b)),
        budget(b) {}
};

class NotMultiplicative : public Error {
 public:
  int x, y;
  NotMultiplicative(int x_, int y_)
      : Error("map is not multiplicative at (" + std::to_string(x_) + ", " +
              std::to_string(y_) + ")"),
        x(x_), y(y_) {}
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what)
      : Error("budget exceeded: " + what) {}
};

class NotInvariantSubgroup : public Error {
 public:
  explicit NotInvariantSubgroup(const std::string& what)
      : Error("subgroup is not invariant: " + what) {}
};

class NotATransversal : public Error {
 public:
  explicit NotATransversal(const std::string& what)
      : Error("coset representatives do not form a transversal: " + what) {}
};

class SyntaxError : public Error {
 public:
  int line, col;
  SyntaxError(int line_, int col_, const std::string& what)
      : Error("syntax error at line " + std::to_string(line_) + ", column " +
              std::to_string(col_) + ": " + what),
        line(line_), col(col_) {}
};

class BadGeneratorIndexOrder : public Error {
 public:
  int line;
  BadGeneratorIndexOrder(int line_, const std::string& what)
      : Error("line " + std::to_string(line_) +
              ": relation violates the generator ordering: " + what),
        line(line_) {}
};

class MissingInverseConjugation : public Error {
 public:
  explicit MissingInverseConjugation(const std::string& what)
      : Error("missing inverse conjugation relation: " + what) {}
};

class CollectionBudgetExceeded : public Error {
 public:
  explicit CollectionBudgetExceeded(long long cap)
      : Error("collection exceeded the rewrite budget of " +
              std::to_string(cap)) {}
};

class EqualityUndecidable : public Error {
 public:
  explicit EqualityUndecidable(const std::string& what)
      : Error("equality is undecidable here: " + what) {}
};

class InfiniteReidemeister : public Error {
 public:
  InfiniteReidemeister()
      : Error("the Reidemeister number is infinite; separation search is not "
              "guaranteed to terminate") {}
};

class DegreeCapReached : public Error {
 public:
  int cap;
  explicit DegreeCapReached(int c)
      : Error("quotient search exhausted all targets up to degree " +
              std::to_string(c)),
        cap(c) {}
};

class SquareDoesNotCommute : public Error {
 public:
  explicit SquareDoesNotCommute(const std::string& what)
      : Error("restriction square does not commute (this indicates a bug): " +
              what) {}
};

class NotBijective : public Error {
 public:
  explicit NotBijective(const std::string& what)
      : Error("map is not bijective: " + what) {}
};

// Number of twisted conjugacy classes. Infinity is a distinct state, never
// a sentinel value.
class ReidemeisterCount {
 public:
  static ReidemeisterCount finite(Int n) {
    ReidemeisterCount r;
    r.value_ = std::move(n);
    return r;
  }
  static ReidemeisterCount infinite() { return ReidemeisterCount(); }

  bool is_finite() const { return value_.has_value(); }
  const Int& value() const {
    if (!value_) throw Error("Reidemeister count is infinite");
    return *value_;
  }
  std::string str() const {
    return value_ ? value_->str() : std::string("infinite");
  }

  friend bool operator==(const ReidemeisterCount& a,
                         const ReidemeisterCount& b) {
    return a.value_ == b.value_;
  }

 private:
  std::optional<Int> value_;
};

}  // namespace tconj

#endif  // TCONJ_COMMON_HPP
