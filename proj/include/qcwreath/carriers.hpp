#pragma once

// GroupCarrier adapters for the groups this library computes in.

#include "qcwreath/finite_oracle.hpp"
#include "qcwreath/words.hpp"
#include "qcwreath/wreath.hpp"

namespace qcwreath {

/// Z_{p^inf} written multiplicatively.
struct PruferCarrier {
  using element_type = PruferElement;
  Prime p;

  PruferElement identity() const { return PruferElement(p); }
  PruferElement multiply(const PruferElement& a, const PruferElement& b) const { return a + b; }
  PruferElement inverse(const PruferElement& a) const { return -a; }
  PruferElement power(const PruferElement& a, std::int64_t n) const { return BigInt(n) * a; }
  bool equal(const PruferElement& a, const PruferElement& b) const { return a == b; }
};

struct GammaCarrier {
  using element_type = WreathElement;
  Prime p;

  WreathElement identity() const { return WreathElement(p); }
  WreathElement multiply(const WreathElement& a, const WreathElement& b) const { return a * b; }
  WreathElement inverse(const WreathElement& a) const { return qcwreath::inverse(a); }
  WreathElement power(const WreathElement& a, std::int64_t n) const {
    return qcwreath::pow(a, BigInt(n));
  }
  bool equal(const WreathElement& a, const WreathElement& b) const { return a == b; }
};

struct FiniteWreathCarrier {
  using element_type = FiniteWreathElement;
  FiniteParams params;

  FiniteWreathElement identity() const { return FiniteWreathElement(params); }
  FiniteWreathElement multiply(const FiniteWreathElement& a, const FiniteWreathElement& b) const {
    return a * b;
  }
  FiniteWreathElement inverse(const FiniteWreathElement& a) const {
    return qcwreath::inverse(a);
  }
  bool equal(const FiniteWreathElement& a, const FiniteWreathElement& b) const { return a == b; }
};

static_assert(GroupCarrier<PruferCarrier>);
static_assert(GroupCarrier<GammaCarrier>);
static_assert(GroupCarrier<FiniteWreathCarrier>);

}  // namespace qcwreath
