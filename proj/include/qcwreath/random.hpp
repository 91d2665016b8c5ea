#pragma once

// Seeded generators for test data. SplitMix64 is used so that any other
// implementation can reproduce a test case from its seed alone:
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
//
// uniform(n) rejects draws >= the largest multiple of n below 2^64 and
// returns draw % n.

#include "qcwreath/words.hpp"
#include "qcwreath/wreath.hpp"

#include <cstdint>
#include <limits>

namespace qcwreath {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t uniform(std::uint64_t bound) {
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t draw;
    do {
      draw = next();
    } while (draw >= limit);
    return draw % bound;
  }

  /// Uniform in [0, bound) for arbitrary-size bounds, built from 64-bit limbs.
  BigInt uniform(const BigInt& bound) {
    if (bound <= std::numeric_limits<std::uint64_t>::max()) {
      return BigInt(uniform(static_cast<std::uint64_t>(bound)));
    }
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(bound)) + 1;
    const unsigned limbs = (bits + 63) / 64;
    for (;;) {
      BigInt draw = 0;
      for (unsigned i = 0; i < limbs; ++i) draw = (draw << 64) | BigInt(next());
      draw &= (BigInt(1) << bits) - 1;
      if (draw < bound) return draw;
    }
  }

 private:
  std::uint64_t state_;
};

/// Exponent uniform in [0, max_exponent], then numerator uniform mod p^exponent.
inline PruferElement random_prufer(SplitMix64& rng, Prime p, unsigned max_exponent) {
  const auto e = static_cast<unsigned>(rng.uniform(std::uint64_t{max_exponent} + 1));
  return PruferElement(p, rng.uniform(p.power(e)), e);
}

inline BaseFunction random_base(SplitMix64& rng, Prime p, unsigned max_terms,
                                unsigned max_exponent) {
  BaseFunction f(p);
  const auto terms = rng.uniform(std::uint64_t{max_terms} + 1);
  for (std::uint64_t t = 0; t < terms; ++t) {
    const PruferElement e = random_prufer(rng, p, max_exponent);
    f.accumulate(e, random_prufer(rng, p, max_exponent));
  }
  return f;
}

inline WreathElement random_wreath(SplitMix64& rng, Prime p, unsigned max_terms,
                                   unsigned max_exponent) {
  BaseFunction base = random_base(rng, p, max_terms, max_exponent);
  return WreathElement(std::move(base), random_prufer(rng, p, max_exponent));
}

/// Random AST over x1..x_arity with nesting depth at most max_depth. Powers
/// use exponents in [-4, 4]; products have 2 or 3 factors.
inline Word random_word(SplitMix64& rng, unsigned arity, unsigned max_depth) {
  const auto leaf = [&] { return Word::variable(1 + static_cast<unsigned>(rng.uniform(arity))); };
  if (max_depth == 0 || rng.uniform(std::uint64_t{4}) == 0) return leaf();
  const unsigned d = max_depth - 1;
  switch (rng.uniform(std::uint64_t{5})) {
    case 0: {
      std::vector<Word> factors;
      const auto n = 2 + rng.uniform(std::uint64_t{2});
      for (std::uint64_t r = 0; r < n; ++r) factors.push_back(random_word(rng, arity, d));
      return Word::product(std::move(factors));
    }
    case 1:
      return Word::inverse(random_word(rng, arity, d));
    case 2:
      return Word::power(random_word(rng, arity, d),
                         static_cast<std::int64_t>(rng.uniform(std::uint64_t{9})) - 4);
    case 3: {
      Word a = random_word(rng, arity, d);
      return Word::commutator(std::move(a), random_word(rng, arity, d));
    }
    default: {
      Word a = random_word(rng, arity, d);
      return Word::conjugate(std::move(a), random_word(rng, arity, d));
    }
  }
}

}  // namespace qcwreath
