#pragma once

// Explicit finite wreath products C_{p^k} wr C_{p^m}, computed by brute force.
// Used as an independent oracle for the wreath module through the embedding
//
//   base[r] -> coefficient base[r]/p^k at exponent r/p^m,  shift s -> u^{s/p^m}.

#include "qcwreath/random.hpp"
#include "qcwreath/wreath.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qcwreath {

struct FiniteParams {
  Prime p;
  unsigned k;  // coefficients live in C_{p^k}
  unsigned m;  // positions and shifts live in C_{p^m}

  FiniteParams(Prime prime, unsigned coefficient_exponent, unsigned position_exponent)
      : p(prime), k(coefficient_exponent), m(position_exponent) {
    if (p.power(k) > BigInt(1) << 32 || p.power(m) > BigInt(1) << 16) {
      throw config_error("finite wreath parameters too large");
    }
  }

  std::uint64_t modulus() const { return static_cast<std::uint64_t>(p.power(k)); }
  std::uint64_t positions() const { return static_cast<std::uint64_t>(p.power(m)); }

  /// p^(k * p^m + m).
  BigInt group_order() const {
    return boost::multiprecision::pow(BigInt(modulus()), static_cast<unsigned>(positions())) *
           positions();
  }

  friend bool operator==(const FiniteParams&, const FiniteParams&) = default;
};

class FiniteWreathElement {
 public:
  explicit FiniteWreathElement(const FiniteParams& params)
      : params_(params), base_(params.positions(), 0) {}

  FiniteWreathElement(const FiniteParams& params, std::vector<std::uint64_t> base,
                      std::uint64_t shift)
      : params_(params), base_(std::move(base)), shift_(shift) {
    if (base_.size() != params_.positions() || shift_ >= params_.positions()) {
      throw config_error("finite wreath element does not match its parameters");
    }
    for (auto c : base_) {
      if (c >= params_.modulus()) throw config_error("finite wreath coefficient out of range");
    }
  }

  const FiniteParams& params() const noexcept { return params_; }
  const std::vector<std::uint64_t>& base() const noexcept { return base_; }
  std::uint64_t shift() const noexcept { return shift_; }

  bool is_identity() const {
    if (shift_ != 0) return false;
    for (auto c : base_) {
      if (c != 0) return false;
    }
    return true;
  }

  /// (a*b).base[r] = a.base[r] + b.base[r - a.shift].
  friend FiniteWreathElement operator*(const FiniteWreathElement& a, const FiniteWreathElement& b) {
    if (!(a.params_ == b.params_)) throw config_error("finite wreath parameter mismatch");
    const std::uint64_t n = a.params_.positions();
    const std::uint64_t q = a.params_.modulus();
    FiniteWreathElement r(a.params_);
    for (std::uint64_t i = 0; i < n; ++i) {
      r.base_[i] = (a.base_[i] + b.base_[(i + n - a.shift_) % n]) % q;
    }
    r.shift_ = (a.shift_ + b.shift_) % n;
    return r;
  }

  friend bool operator==(const FiniteWreathElement&, const FiniteWreathElement&) = default;

  /// "([c0,...,c_{n-1}], s)".
  std::string to_string() const {
    std::string out = "([";
    for (std::size_t i = 0; i < base_.size(); ++i) {
      if (i > 0) out += ",";
      out += std::to_string(base_[i]);
    }
    return out + "], " + std::to_string(shift_) + ")";
  }

 private:
  FiniteParams params_;
  std::vector<std::uint64_t> base_;
  std::uint64_t shift_ = 0;
};

inline FiniteWreathElement inverse(const FiniteWreathElement& a) {
  const auto& params = a.params();
  const std::uint64_t n = params.positions();
  const std::uint64_t q = params.modulus();
  std::vector<std::uint64_t> base(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    base[i] = (q - a.base()[(i + a.shift()) % n]) % q;
  }
  return FiniteWreathElement(params, std::move(base), (n - a.shift()) % n);
}

inline FiniteWreathElement commutator(const FiniteWreathElement& a, const FiniteWreathElement& b) {
  return inverse(a) * inverse(b) * a * b;
}

/// Least n >= 1 with a^n = 1, by repeated multiplication.
inline std::uint64_t order_bruteforce(const FiniteWreathElement& a) {
  std::uint64_t n = 1;
  FiniteWreathElement power = a;
  while (!power.is_identity()) {
    power = power * a;
    ++n;
  }
  return n;
}

inline WreathElement embed(const FiniteWreathElement& a) {
  const auto& params = a.params();
  BaseFunction base(params.p);
  for (std::uint64_t r = 0; r < a.base().size(); ++r) {
    base.accumulate(PruferElement(params.p, r, params.m),
                    PruferElement(params.p, a.base()[r], params.k));
  }
  return WreathElement(std::move(base), PruferElement(params.p, a.shift(), params.m));
}

/// Uniform element; draws base entries in index order, then the shift.
inline FiniteWreathElement random_finite(SplitMix64& rng, const FiniteParams& params) {
  std::vector<std::uint64_t> base(params.positions());
  for (auto& c : base) c = rng.uniform(params.modulus());
  const std::uint64_t shift = rng.uniform(params.positions());
  return FiniteWreathElement(params, std::move(base), shift);
}

inline FiniteWreathElement random_finite(std::uint64_t seed, const FiniteParams& params) {
  SplitMix64 rng(seed);
  return random_finite(rng, params);
}

/// Every element, in lexicographic order of (base, shift) digits. Only
/// sensible for tiny groups.
inline std::vector<FiniteWreathElement> all_elements(const FiniteParams& params) {
  if (params.group_order() > 1u << 20) throw config_error("group too large to enumerate");
  const auto total = static_cast<std::uint64_t>(params.group_order());
  const std::uint64_t n = params.positions();
  const std::uint64_t q = params.modulus();
  std::vector<FiniteWreathElement> out;
  out.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    const std::uint64_t shift = rest % n;
    rest /= n;
    std::vector<std::uint64_t> base(n);
    for (auto& c : base) {
      c = rest % q;
      rest /= q;
    }
    out.emplace_back(params, std::move(base), shift);
  }
  return out;
}

}  // namespace qcwreath
