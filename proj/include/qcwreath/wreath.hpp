#pragma once

// The restricted wreath product Z_{p^inf} wr Z_{p^inf}.
//
// Elements are pairs (f, u^b) with f a BaseFunction and b in Z_{p^inf}:
//
//   (f, u^b) (f', u^b') = (f + u^b f', u^{b + b'})
//
// Commutators are [a, b] = a^-1 b^-1 a b and conjugation is a^b = b^-1 a b.

#include "qcwreath/groupring.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace qcwreath {

class WreathElement {
 public:
  /// The identity (0, u^0).
  explicit WreathElement(Prime p) : base_(p), top_(p) {}

  WreathElement(BaseFunction base, PruferElement top)
      : base_(std::move(base)), top_(std::move(top)) {
    detail::require_same_prime(base_.prime(), top_.prime());
  }

  static WreathElement from_base(BaseFunction base) {
    PruferElement top(base.prime());
    return WreathElement(std::move(base), std::move(top));
  }

  static WreathElement from_top(PruferElement top) {
    BaseFunction base(top.prime());
    return WreathElement(std::move(base), std::move(top));
  }

  const Prime& prime() const noexcept { return top_.prime(); }
  const BaseFunction& base() const noexcept { return base_; }
  const PruferElement& top() const noexcept { return top_; }
  bool is_identity() const noexcept { return base_.is_zero() && top_.is_zero(); }

  friend WreathElement operator*(const WreathElement& a, const WreathElement& b) {
    detail::require_same_prime(a.prime(), b.prime());
    return WreathElement(a.base_ + translate(b.base_, a.top_), a.top_ + b.top_);
  }

  friend bool operator==(const WreathElement&, const WreathElement&) = default;

  /// "(<base>; u^{<top>})".
  std::string to_string() const {
    return "(" + base_.to_string() + "; u^{" + top_.to_string() + "})";
  }

 private:
  BaseFunction base_;
  PruferElement top_;
};

/// Parses "(<base>; u^{<top>})" as printed by to_string().
inline WreathElement parse_wreath(std::string_view text, Prime p) {
  using detail::skip_spaces;
  std::size_t pos = skip_spaces(text, 0);
  if (pos >= text.size() || text[pos] != '(') throw parse_error("expected '('", pos);
  const std::size_t semicolon = text.find(';', pos);
  if (semicolon == std::string_view::npos) throw parse_error("expected ';'", text.size());
  BaseFunction base = parse_base_function(text.substr(pos + 1, semicolon - pos - 1), p, pos + 1);
  pos = skip_spaces(text, semicolon + 1);
  if (pos >= text.size() || text[pos] != 'u') throw parse_error("expected 'u'", pos);
  pos = skip_spaces(text, pos + 1);
  if (pos >= text.size() || text[pos] != '^') throw parse_error("expected '^'", pos);
  ++pos;
  PruferElement top = detail::read_exponent(text, pos, p, 0);
  pos = skip_spaces(text, pos);
  if (pos >= text.size() || text[pos] != ')') throw parse_error("expected ')'", pos);
  pos = skip_spaces(text, pos + 1);
  if (pos != text.size()) throw parse_error("unexpected trailing input", pos);
  return WreathElement(std::move(base), std::move(top));
}

/// (f, u^b)^-1 = (-u^{-b} f, u^{-b}).
inline WreathElement inverse(const WreathElement& a) {
  const PruferElement back = -a.top();
  return WreathElement(-translate(a.base(), back), back);
}

inline WreathElement pow(const WreathElement& a, BigInt n) {
  if (n < 0) return pow(inverse(a), -n);
  if (a.top().is_zero()) return WreathElement::from_base(n * a.base());
  WreathElement result(a.prime());
  WreathElement square = a;
  while (n > 0) {
    if ((n & 1) != 0) result = result * square;
    n >>= 1;
    if (n > 0) square = square * square;
  }
  return result;
}

inline WreathElement commutator(const WreathElement& a, const WreathElement& b) {
  return inverse(a) * inverse(b) * a * b;
}

/// a^b = b^-1 a b.
inline WreathElement conjugate(const WreathElement& a, const WreathElement& b) {
  return inverse(b) * a * b;
}

/// Exact order. With m the order of the top b, (f, u^b)^m is
/// (sum_{r<m} u^{rb} f, 1). That sum is constant on each coset e + <b>, equal
/// there to the total of f's coefficients over the coset, so the order is m
/// times the largest order of a coset total. The coset of e is identified by
/// m*e since <b> is the kernel of multiplication by m.
inline BigInt order(const WreathElement& a) {
  const BigInt top_order = order(a.top());
  std::map<PruferElement, PruferElement> coset_totals;
  for (const auto& [e, c] : a.base().terms()) {
    auto [it, inserted] = coset_totals.try_emplace(top_order * e, c);
    if (!inserted) it->second += c;
  }
  BigInt base_order = 1;
  for (const auto& [key, total] : coset_totals) base_order = std::max(base_order, order(total));
  return top_order * base_order;
}

}  // namespace qcwreath
