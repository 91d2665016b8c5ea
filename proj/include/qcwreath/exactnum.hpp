#pragma once

// Exact arithmetic over Z[1/p] and the Pruefer group Z_{p^inf} = Z[1/p]/Z.
//
// Values carry the prime they live under. Arithmetic between values over
// different primes throws config_error; nothing is coerced.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace qcwreath {

using BigInt = boost::multiprecision::cpp_int;

/// Raised for invalid configuration: non-prime p, mixed primes, bad parameters.
class config_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by every textual parser in the library; carries a 0-based offset.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class Prime {
 public:
  static constexpr std::uint64_t kMaxValue = 0xFFFFFFFFull;

  explicit Prime(std::uint64_t value) : value_(value) {
    if (value < 2 || value > kMaxValue) {
      throw config_error("prime out of range: " + std::to_string(value));
    }
    for (std::uint64_t d = 2; d * d <= value; ++d) {
      if (value % d == 0) {
        throw config_error(std::to_string(value) + " is not prime");
      }
    }
  }

  std::uint64_t value() const noexcept { return value_; }

  /// p^e, exact.
  BigInt power(unsigned e) const { return boost::multiprecision::pow(BigInt(value_), e); }

  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  std::uint64_t value_;
};

namespace detail {

inline void require_same_prime(const Prime& a, const Prime& b) {
  if (a != b) {
    throw config_error("mixed primes " + std::to_string(a.value()) + " and " +
                       std::to_string(b.value()));
  }
}

// Strips common factors of p from numerator/p^exponent; zero goes to 0/p^0.
inline void cancel_p(const Prime& p, BigInt& numerator, unsigned& exponent) {
  if (numerator == 0) {
    exponent = 0;
    return;
  }
  const BigInt pp(p.value());
  while (exponent > 0 && numerator % pp == 0) {
    numerator /= pp;
    --exponent;
  }
}

// Least e with p^e == d, or -1 when d is not a power of p.
inline long exponent_of_power(const Prime& p, BigInt d) {
  if (d <= 0) return -1;
  const BigInt pp(p.value());
  long e = 0;
  while (d % pp == 0) {
    d /= pp;
    ++e;
  }
  return d == 1 ? e : -1;
}

inline std::size_t skip_spaces(std::string_view s, std::size_t pos) {
  while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  return pos;
}

// Reads an optionally signed decimal integer starting at pos (after spaces).
inline BigInt read_integer(std::string_view s, std::size_t& pos, std::size_t offset) {
  pos = skip_spaces(s, pos);
  bool negative = false;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
    negative = s[pos] == '-';
    ++pos;
  }
  const std::size_t start = pos;
  BigInt value = 0;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
    value = value * 10 + (s[pos] - '0');
    ++pos;
  }
  if (pos == start) throw parse_error("expected integer", offset + pos);
  return negative ? BigInt(-value) : value;
}

// Parses "n" or "n/d" with d a power of p. Returns (numerator, exponent),
// unreduced. The whole view must be consumed.
inline std::pair<BigInt, unsigned> parse_fraction(std::string_view s, const Prime& p,
                                                  std::size_t offset) {
  std::size_t pos = 0;
  BigInt numerator = read_integer(s, pos, offset);
  unsigned exponent = 0;
  pos = skip_spaces(s, pos);
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    const std::size_t denominator_at = skip_spaces(s, pos);
    const BigInt denominator = read_integer(s, pos, offset);
    const long e = exponent_of_power(p, denominator);
    if (e < 0) {
      throw parse_error("denominator is not a power of " + std::to_string(p.value()),
                        offset + denominator_at);
    }
    exponent = static_cast<unsigned>(e);
  }
  pos = skip_spaces(s, pos);
  if (pos != s.size()) throw parse_error("unexpected trailing input", offset + pos);
  return {std::move(numerator), exponent};
}

}  // namespace detail

class PruferElement;

/// An element numerator/p^exponent of Z[1/p], kept in lowest terms.
class PAdicFraction {
 public:
  explicit PAdicFraction(Prime p) : prime_(p) {}

  PAdicFraction(Prime p, BigInt numerator, unsigned exponent = 0)
      : prime_(p), numerator_(std::move(numerator)), exponent_(exponent) {
    detail::cancel_p(prime_, numerator_, exponent_);
  }

  static PAdicFraction parse(std::string_view text, Prime p) {
    auto [n, e] = detail::parse_fraction(text, p, 0);
    return PAdicFraction(p, std::move(n), e);
  }

  const Prime& prime() const noexcept { return prime_; }
  const BigInt& numerator() const noexcept { return numerator_; }
  unsigned exponent() const noexcept { return exponent_; }
  bool is_zero() const noexcept { return numerator_ == 0; }

  friend PAdicFraction operator+(const PAdicFraction& a, const PAdicFraction& b) {
    detail::require_same_prime(a.prime_, b.prime_);
    const unsigned e = std::max(a.exponent_, b.exponent_);
    return PAdicFraction(a.prime_,
                         a.numerator_ * a.prime_.power(e - a.exponent_) +
                             b.numerator_ * b.prime_.power(e - b.exponent_),
                         e);
  }

  friend PAdicFraction operator-(const PAdicFraction& a) {
    return PAdicFraction(a.prime_, -a.numerator_, a.exponent_);
  }

  friend PAdicFraction operator-(const PAdicFraction& a, const PAdicFraction& b) {
    return a + (-b);
  }

  friend bool operator==(const PAdicFraction&, const PAdicFraction&) = default;

  std::string to_string() const {
    if (exponent_ == 0) return numerator_.str();
    return numerator_.str() + "/" + prime_.power(exponent_).str();
  }

 private:
  Prime prime_;
  BigInt numerator_ = 0;
  unsigned exponent_ = 0;
};

/// An element of Z_{p^inf}: numerator/p^exponent modulo 1 in canonical form,
/// 0 <= numerator < p^exponent and p does not divide a nonzero numerator.
class PruferElement {
 public:
  explicit PruferElement(Prime p) : prime_(p) {}

  /// numerator/p^exponent reduced modulo 1; negative numerators wrap.
  PruferElement(Prime p, BigInt numerator, unsigned exponent)
      : prime_(p), numerator_(std::move(numerator)), exponent_(exponent) {
    const BigInt modulus = prime_.power(exponent_);
    numerator_ %= modulus;
    if (numerator_ < 0) numerator_ += modulus;
    detail::cancel_p(prime_, numerator_, exponent_);
  }

  /// 1/p^k.
  static PruferElement unit(Prime p, unsigned k) { return PruferElement(p, 1, k); }

  /// Accepts "0", "n" and "n/d" with d a power of p; unreduced input is fine.
  static PruferElement parse(std::string_view text, Prime p, std::size_t offset = 0) {
    auto [n, e] = detail::parse_fraction(text, p, offset);
    return PruferElement(p, std::move(n), e);
  }

  const Prime& prime() const noexcept { return prime_; }
  const BigInt& numerator() const noexcept { return numerator_; }
  unsigned exponent() const noexcept { return exponent_; }
  bool is_zero() const noexcept { return numerator_ == 0; }

  friend PruferElement operator+(const PruferElement& a, const PruferElement& b) {
    detail::require_same_prime(a.prime_, b.prime_);
    const unsigned e = std::max(a.exponent_, b.exponent_);
    return PruferElement(a.prime_,
                         a.numerator_ * a.prime_.power(e - a.exponent_) +
                             b.numerator_ * b.prime_.power(e - b.exponent_),
                         e);
  }

  friend PruferElement operator-(const PruferElement& a) {
    return PruferElement(a.prime_, -a.numerator_, a.exponent_);
  }

  friend PruferElement operator-(const PruferElement& a, const PruferElement& b) {
    return a + (-b);
  }

  PruferElement& operator+=(const PruferElement& other) { return *this = *this + other; }

  /// n-fold sum; n may be negative or arbitrarily large.
  friend PruferElement operator*(const BigInt& n, const PruferElement& a) {
    return PruferElement(a.prime_, n * a.numerator_, a.exponent_);
  }

  friend bool operator==(const PruferElement&, const PruferElement&) = default;

  /// Orders by the representative in [0, 1).
  friend std::strong_ordering operator<=>(const PruferElement& a, const PruferElement& b) {
    detail::require_same_prime(a.prime_, b.prime_);
    const unsigned e = std::max(a.exponent_, b.exponent_);
    const BigInt lhs = a.numerator_ * a.prime_.power(e - a.exponent_);
    const BigInt rhs = b.numerator_ * b.prime_.power(e - b.exponent_);
    if (lhs < rhs) return std::strong_ordering::less;
    if (rhs < lhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    return numerator_.str() + "/" + prime_.power(exponent_).str();
  }

 private:
  Prime prime_;
  BigInt numerator_ = 0;
  unsigned exponent_ = 0;
};

/// Least n >= 1 with n*a == 0; always p^exponent.
inline BigInt order(const PruferElement& a) { return a.prime().power(a.exponent()); }

/// The quotient map Z[1/p] -> Z[1/p]/Z.
inline PruferElement mod1(const PAdicFraction& a) {
  return PruferElement(a.prime(), a.numerator(), a.exponent());
}

}  // namespace qcwreath
