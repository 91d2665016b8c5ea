#pragma once

// Finitely supported functions Z_{p^inf} -> Z_{p^inf}, written sum_b a_b u^b.
// This is the base group of the wreath product; the top group acts on it by
// translating exponents.

#include "qcwreath/exactnum.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <string_view>

namespace qcwreath {

class BaseFunction {
 public:
  /// exponent -> coefficient, ascending by exponent in [0, 1). No zero values.
  using Terms = std::map<PruferElement, PruferElement>;

  explicit BaseFunction(Prime p) : prime_(p) {}

  /// a * u^b; the zero function when a == 0.
  static BaseFunction delta(const PruferElement& exponent, const PruferElement& coefficient) {
    detail::require_same_prime(exponent.prime(), coefficient.prime());
    BaseFunction f(exponent.prime());
    f.accumulate(exponent, coefficient);
    return f;
  }

  const Prime& prime() const noexcept { return prime_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t support_size() const noexcept { return terms_.size(); }

  PruferElement coefficient(const PruferElement& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? PruferElement(prime_) : it->second;
  }

  /// Adds coefficient * u^exponent in place, dropping the term if it cancels.
  void accumulate(const PruferElement& exponent, const PruferElement& coefficient) {
    detail::require_same_prime(prime_, exponent.prime());
    detail::require_same_prime(prime_, coefficient.prime());
    if (coefficient.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend BaseFunction operator+(BaseFunction f, const BaseFunction& g) {
    detail::require_same_prime(f.prime_, g.prime_);
    for (const auto& [b, a] : g.terms_) f.accumulate(b, a);
    return f;
  }

  friend BaseFunction operator-(BaseFunction f) {
    for (auto& [b, a] : f.terms_) a = -a;
    return f;
  }

  friend BaseFunction operator-(BaseFunction f, const BaseFunction& g) {
    detail::require_same_prime(f.prime_, g.prime_);
    for (const auto& [b, a] : g.terms_) f.accumulate(b, -a);
    return f;
  }

  friend BaseFunction operator*(const BigInt& n, const BaseFunction& f) {
    BaseFunction r(f.prime_);
    for (const auto& [b, a] : f.terms_) r.accumulate(b, n * a);
    return r;
  }

  friend bool operator==(const BaseFunction&, const BaseFunction&) = default;

  /// "(a)·u^{b} + ..." in ascending exponent order, "0" when empty.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [b, a] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + a.to_string() + ")·u^{" + b.to_string() + "}";
    }
    return out;
  }

 private:
  Prime prime_;
  Terms terms_;
};

/// Multiplication by u^shift: every exponent moves by shift.
inline BaseFunction translate(const BaseFunction& f, const PruferElement& shift) {
  detail::require_same_prime(f.prime(), shift.prime());
  if (shift.is_zero()) return f;
  BaseFunction r(f.prime());
  for (const auto& [b, a] : f.terms()) r.accumulate(b + shift, a);
  return r;
}

/// coeff * (u^b - 1)^j expanded binomially. Coefficients landing on the same
/// exponent k*b are summed in Z_{p^inf}.
inline BaseFunction engel_expand(const PruferElement& coeff, const PruferElement& b, unsigned j) {
  detail::require_same_prime(coeff.prime(), b.prime());
  BaseFunction r(coeff.prime());
  BigInt binomial = 1;
  for (unsigned k = 0; k <= j; ++k) {
    const bool negative = (j - k) % 2 == 1;
#ifdef QCWREATH_INJECT_ENGEL_FAULT
    // Fault-injection build only: flips the sign of the constant term.
    const BigInt sign = (negative != (k == 0)) ? -1 : 1;
#else
    const BigInt sign = negative ? -1 : 1;
#endif
    r.accumulate(BigInt(k) * b, (sign * binomial) * coeff);
    binomial = binomial * (j - k) / (k + 1);
  }
  return r;
}

namespace detail {

// Reads "{<fraction>}" or a bare optionally signed fraction at pos.
inline PruferElement read_exponent(std::string_view s, std::size_t& pos, const Prime& p,
                                   std::size_t offset) {
  pos = skip_spaces(s, pos);
  std::size_t start = pos;
  std::size_t end;
  if (pos < s.size() && s[pos] == '{') {
    start = pos + 1;
    end = s.find('}', start);
    if (end == std::string_view::npos) throw parse_error("expected '}'", offset + s.size());
    pos = end + 1;
  } else {
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && ((s[pos] >= '0' && s[pos] <= '9') || s[pos] == '/')) ++pos;
    end = pos;
  }
  return PruferElement::parse(s.substr(start, end - start), p, offset + start);
}

}  // namespace detail

/// Parses the to_string() form. Also accepts '*' or nothing in place of the
/// middle dot, bare exponents without braces, unreduced fractions and
/// repeated exponents (which are summed).
inline BaseFunction parse_base_function(std::string_view text, Prime p, std::size_t offset = 0) {
  using detail::skip_spaces;
  BaseFunction f(p);
  std::size_t pos = skip_spaces(text, 0);
  if (pos < text.size() && text[pos] == '0' && skip_spaces(text, pos + 1) == text.size()) return f;
  for (;;) {
    pos = skip_spaces(text, pos);
    if (pos >= text.size() || text[pos] != '(') throw parse_error("expected '('", offset + pos);
    const std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) throw parse_error("expected ')'", offset + text.size());
    const PruferElement coefficient =
        PruferElement::parse(text.substr(pos + 1, close - pos - 1), p, offset + pos + 1);
    pos = skip_spaces(text, close + 1);
    if (text.substr(pos).starts_with("\xC2\xB7")) {
      pos += 2;
    } else if (pos < text.size() && text[pos] == '*') {
      ++pos;
    }
    pos = skip_spaces(text, pos);
    if (pos >= text.size() || text[pos] != 'u') throw parse_error("expected 'u'", offset + pos);
    pos = skip_spaces(text, pos + 1);
    if (pos >= text.size() || text[pos] != '^') throw parse_error("expected '^'", offset + pos);
    ++pos;
    const PruferElement exponent = detail::read_exponent(text, pos, p, offset);
    f.accumulate(exponent, coefficient);
    pos = skip_spaces(text, pos);
    if (pos == text.size()) return f;
    if (text[pos] != '+') throw parse_error("expected '+'", offset + pos);
    ++pos;
  }
}

/// Order in the direct sum: the largest coefficient order, 1 for zero.
inline BigInt order(const BaseFunction& f) {
  BigInt result = 1;
  for (const auto& [b, a] : f.terms()) result = std::max(result, order(a));
  return result;
}

}  // namespace qcwreath
