#pragma once

// Group words over variables x1..xn, their textual grammar, and evaluation
// over any group carrier.
//
// Grammar (whitespace is insignificant):
//
//   word     := factor ( ['*'] factor )*          juxtaposition or '*' is product
//   factor   := atom ( '^' suffix )*              left associative, binds tighter
//   suffix   := integer | atom                    x^n is a power, x^y a conjugate
//   integer  := ['-'|'+'] ( digits | 'p' )        "^-1" is the inverse
//   atom     := 'x' digits | '(' word ')'
//             | '[' word ',' word ']'             commutator
//             | '[' word ',' '_' digits word ']'  n-fold Engel bracket
//
// The literal 'p' in an exponent stands for the prime passed to parse().
//
// Iteration substitutes the previous iterate into x1:
//   w^(0) = w,  w^(j+1) = w(w^(j), x2, ..., xn).

#include "qcwreath/exactnum.hpp"

#include <concepts>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qcwreath {

class Word {
 public:
  enum class Kind { variable, product, inverse, power, commutator, conjugate };

  static Word variable(unsigned index) {
    if (index == 0) throw config_error("variable index must be at least 1");
    return Word(Node{Kind::variable, index, 0, {}, index});
  }

  /// A single factor is returned unchanged; an empty product is rejected.
  static Word product(std::vector<Word> factors) {
    if (factors.empty()) throw config_error("empty product");
    if (factors.size() == 1) return std::move(factors.front());
    return Word(Node{Kind::product, 0, 0, std::move(factors), 0});
  }

  static Word inverse(Word w) { return Word(Node{Kind::inverse, 0, 0, {std::move(w)}, 0}); }

  /// Exponent -1 yields an inverse node, so both spell "^-1".
  static Word power(Word w, std::int64_t exponent) {
    if (exponent == -1) return inverse(std::move(w));
    return Word(Node{Kind::power, 0, exponent, {std::move(w)}, 0});
  }

  static Word commutator(Word a, Word b) {
    return Word(Node{Kind::commutator, 0, 0, {std::move(a), std::move(b)}, 0});
  }

  /// a^b = b^-1 a b.
  static Word conjugate(Word a, Word b) {
    return Word(Node{Kind::conjugate, 0, 0, {std::move(a), std::move(b)}, 0});
  }

  /// [a,_n b]; n = 0 gives a.
  static Word engel(Word a, const Word& b, unsigned n) {
    for (unsigned r = 0; r < n; ++r) a = commutator(std::move(a), b);
    return a;
  }

  Kind kind() const noexcept { return node_->kind; }
  unsigned index() const noexcept { return node_->index; }
  std::int64_t exponent() const noexcept { return node_->exponent; }
  /// Operands: product factors, the inner word, or the bracket/conjugate pair.
  const std::vector<Word>& children() const noexcept { return node_->children; }
  /// Largest variable index that occurs.
  unsigned arity() const noexcept { return node_->arity; }

  /// Stable identity of the shared node, used to memoize over DAG-shaped iterates.
  const void* id() const noexcept { return node_.get(); }

  friend bool operator==(const Word& a, const Word& b) {
    if (a.node_ == b.node_) return true;
    const Node& x = *a.node_;
    const Node& y = *b.node_;
    return x.kind == y.kind && x.index == y.index && x.exponent == y.exponent &&
           x.children == y.children;
  }

 private:
  struct Node {
    Kind kind;
    unsigned index;
    std::int64_t exponent;
    std::vector<Word> children;
    unsigned arity;
  };

  explicit Word(Node node) {
    for (const auto& c : node.children) node.arity = std::max(node.arity, c.arity());
    node_ = std::make_shared<const Node>(std::move(node));
  }

  std::shared_ptr<const Node> node_;
};

namespace detail {

inline void print_word(const Word& w, std::string& out);

// Left operand of '^': products need parentheses, chains are left associative.
inline void print_operand(const Word& w, std::string& out) {
  if (w.kind() == Word::Kind::product) {
    out += '(';
    print_word(w, out);
    out += ')';
  } else {
    print_word(w, out);
  }
}

// Right operand of a conjugation must be an atom.
inline void print_atom(const Word& w, std::string& out) {
  if (w.kind() == Word::Kind::variable || w.kind() == Word::Kind::commutator) {
    print_word(w, out);
  } else {
    out += '(';
    print_word(w, out);
    out += ')';
  }
}

inline void print_word(const Word& w, std::string& out) {
  switch (w.kind()) {
    case Word::Kind::variable:
      out += 'x';
      out += std::to_string(w.index());
      break;
    case Word::Kind::product:
      for (std::size_t i = 0; i < w.children().size(); ++i) {
        if (i > 0) out += '*';
        print_operand(w.children()[i], out);
      }
      break;
    case Word::Kind::inverse:
      print_operand(w.children()[0], out);
      out += "^-1";
      break;
    case Word::Kind::power:
      print_operand(w.children()[0], out);
      out += '^';
      out += std::to_string(w.exponent());
      break;
    case Word::Kind::commutator:
      out += '[';
      print_word(w.children()[0], out);
      out += ',';
      print_word(w.children()[1], out);
      out += ']';
      break;
    case Word::Kind::conjugate:
      print_operand(w.children()[0], out);
      out += '^';
      print_atom(w.children()[1], out);
      break;
  }
}

class WordParser {
 public:
  WordParser(std::string_view text, std::optional<Prime> prime) : text_(text), prime_(prime) {}

  Word parse() {
    Word w = parse_word();
    skip();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw parse_error(what, pos_); }

  void skip() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool starts_atom() { return peek('x') || peek('[') || peek('('); }

  std::uint64_t digits() {
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      const auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
        pos_ = start;
        fail("integer too large");
      }
      value = value * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) fail("expected digits");
    return value;
  }

  Word parse_word() {
    std::vector<Word> factors;
    factors.push_back(parse_factor());
    for (;;) {
      if (peek('*')) {
        ++pos_;
        factors.push_back(parse_factor());
      } else if (starts_atom()) {
        factors.push_back(parse_factor());
      } else {
        break;
      }
    }
    return Word::product(std::move(factors));
  }

  Word parse_factor() {
    Word w = parse_atom();
    while (peek('^')) {
      ++pos_;
      skip();
      if (starts_atom()) {
        w = Word::conjugate(std::move(w), parse_atom());
      } else {
        w = Word::power(std::move(w), parse_exponent());
      }
    }
    return w;
  }

  std::int64_t parse_exponent() {
    skip();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    std::uint64_t magnitude;
    if (pos_ < text_.size() && text_[pos_] == 'p') {
      if (!prime_) fail("exponent 'p' needs a prime");
      magnitude = prime_->value();
      ++pos_;
    } else if (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      magnitude = digits();
    } else {
      fail("expected exponent");
    }
    if (magnitude > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      pos_ = start;
      fail("exponent out of range");
    }
    const auto value = static_cast<std::int64_t>(magnitude);
    return negative ? -value : value;
  }

  Word parse_atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == 'x') {
      ++pos_;
      const std::size_t at = pos_;
      const std::uint64_t index = digits();
      if (index == 0 || index > std::numeric_limits<unsigned>::max()) {
        pos_ = at;
        fail("variable index must be at least 1");
      }
      return Word::variable(static_cast<unsigned>(index));
    }
    if (c == '(') {
      ++pos_;
      Word w = parse_word();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word a = parse_word();
      expect(',');
      unsigned n = 1;
      if (peek('_')) {
        ++pos_;
        skip();
        const std::size_t at = pos_;
        const std::uint64_t count = digits();
        if (count == 0 || count > 1'000'000) {
          pos_ = at;
          fail("Engel length must be between 1 and 1000000");
        }
        n = static_cast<unsigned>(count);
      }
      Word b = parse_word();
      expect(']');
      return Word::engel(std::move(a), b, n);
    }
    fail("expected 'x<n>', '[' or '('");
  }

  std::string_view text_;
  std::optional<Prime> prime_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Word parse_word(std::string_view text, std::optional<Prime> prime = std::nullopt) {
  return detail::WordParser(text, prime).parse();
}

inline std::string to_string(const Word& w) {
  std::string out;
  detail::print_word(w, out);
  return out;
}

/// Replaces every occurrence of x1 in w by replacement.
inline Word substitute_first(const Word& w, const Word& replacement) {
  switch (w.kind()) {
    case Word::Kind::variable:
      return w.index() == 1 ? replacement : w;
    case Word::Kind::product: {
      std::vector<Word> factors;
      factors.reserve(w.children().size());
      for (const auto& f : w.children()) factors.push_back(substitute_first(f, replacement));
      return Word::product(std::move(factors));
    }
    case Word::Kind::inverse:
      return Word::inverse(substitute_first(w.children()[0], replacement));
    case Word::Kind::power:
      return Word::power(substitute_first(w.children()[0], replacement), w.exponent());
    case Word::Kind::commutator:
      return Word::commutator(substitute_first(w.children()[0], replacement),
                              substitute_first(w.children()[1], replacement));
    case Word::Kind::conjugate:
      return Word::conjugate(substitute_first(w.children()[0], replacement),
                             substitute_first(w.children()[1], replacement));
  }
  return w;
}

inline Word iterate(const Word& w, unsigned j) {
  Word result = w;
  for (unsigned r = 0; r < j; ++r) result = substitute_first(w, result);
  return result;
}

/// A group given by its operations. element_type must be copyable.
template <class C>
concept GroupCarrier = requires(const C& c, const typename C::element_type& a) {
  { c.identity() } -> std::convertible_to<typename C::element_type>;
  { c.multiply(a, a) } -> std::convertible_to<typename C::element_type>;
  { c.inverse(a) } -> std::convertible_to<typename C::element_type>;
  { c.equal(a, a) } -> std::convertible_to<bool>;
};

template <GroupCarrier C>
typename C::element_type group_power(const C& carrier, const typename C::element_type& a,
                                     std::int64_t n) {
  if constexpr (requires { carrier.power(a, n); }) {
    return carrier.power(a, n);
  } else {
    using E = typename C::element_type;
    E base = n < 0 ? carrier.inverse(a) : a;
    // Magnitude as unsigned so INT64_MIN is safe.
    std::uint64_t k = n < 0 ? 0 - static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
    E result = carrier.identity();
    while (k > 0) {
      if (k & 1) result = carrier.multiply(result, base);
      k >>= 1;
      if (k > 0) base = carrier.multiply(base, base);
    }
    return result;
  }
}

template <GroupCarrier C>
typename C::element_type group_commutator(const C& carrier, const typename C::element_type& a,
                                          const typename C::element_type& b) {
  return carrier.multiply(carrier.multiply(carrier.inverse(a), carrier.inverse(b)),
                          carrier.multiply(a, b));
}

/// [a,_n b] = [[a,_{n-1} b], b], with [a,_0 b] = a.
template <GroupCarrier C>
typename C::element_type engel(const C& carrier, typename C::element_type a,
                               const typename C::element_type& b, unsigned n) {
  for (unsigned r = 0; r < n; ++r) a = group_commutator(carrier, a, b);
  return a;
}

namespace detail {

template <GroupCarrier C>
class Evaluator {
 public:
  using E = typename C::element_type;

  Evaluator(const C& carrier, std::span<const E> assignment)
      : carrier_(carrier), assignment_(assignment) {}

  E eval(const Word& w) {
    if (w.kind() == Word::Kind::variable) return assignment_[w.index() - 1];
    if (auto it = memo_.find(w.id()); it != memo_.end()) return it->second;
    E value = compute(w);
    memo_.emplace(w.id(), value);
    return value;
  }

 private:
  E compute(const Word& w) {
    const auto& ch = w.children();
    switch (w.kind()) {
      case Word::Kind::product: {
        E acc = eval(ch[0]);
        for (std::size_t i = 1; i < ch.size(); ++i) acc = carrier_.multiply(acc, eval(ch[i]));
        return acc;
      }
      case Word::Kind::inverse:
        return carrier_.inverse(eval(ch[0]));
      case Word::Kind::power:
        return group_power(carrier_, eval(ch[0]), w.exponent());
      case Word::Kind::commutator:
        return group_commutator(carrier_, eval(ch[0]), eval(ch[1]));
      case Word::Kind::conjugate: {
        const E b = eval(ch[1]);
        return carrier_.multiply(carrier_.multiply(carrier_.inverse(b), eval(ch[0])), b);
      }
      case Word::Kind::variable:
        break;
    }
    return assignment_[w.index() - 1];
  }

  const C& carrier_;
  std::span<const E> assignment_;
  std::unordered_map<const void*, E> memo_;
};

}  // namespace detail

/// Evaluates w with x_r := assignment[r-1]. The assignment length must equal
/// the word's arity.
template <GroupCarrier C>
typename C::element_type evaluate(const Word& w, std::span<const typename C::element_type> assignment,
                                  const C& carrier) {
  if (assignment.size() != w.arity()) {
    throw config_error("word has arity " + std::to_string(w.arity()) + " but " +
                       std::to_string(assignment.size()) + " values were given");
  }
  return detail::Evaluator<C>(carrier, assignment).eval(w);
}

template <class E>
struct VanishingSearch {
  std::optional<unsigned> index;  // least j with w^(j)(a) = 1, if found
  unsigned bound;
  std::vector<E> values;          // w^(0)(a), w^(1)(a), ... up to the index or the bound

  bool exhausted() const { return !index.has_value(); }
};

inline constexpr unsigned kDefaultSearchBound = 64;

/// Least j <= bound with w^(j)(a) = 1. Each iterate is evaluated from the
/// value of the previous one, so the cost is linear in j.
template <GroupCarrier C>
VanishingSearch<typename C::element_type> min_vanishing_index(
    const Word& w, std::span<const typename C::element_type> assignment, const C& carrier,
    unsigned bound = kDefaultSearchBound) {
  using E = typename C::element_type;
  VanishingSearch<E> search{std::nullopt, bound, {}};
  std::vector<E> slots(assignment.begin(), assignment.end());
  for (unsigned j = 0; j <= bound; ++j) {
    E value = evaluate(w, std::span<const E>(slots), carrier);
    const bool trivial = carrier.equal(value, carrier.identity());
    search.values.push_back(value);
    if (trivial) {
      search.index = j;
      break;
    }
    if (!slots.empty()) slots[0] = std::move(value);
  }
  return search;
}

}  // namespace qcwreath
