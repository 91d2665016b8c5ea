#pragma once

// Computations behind the unbounded iterated identity w = [x1,[x2,x3]]^p,
// carried out in the quotient Gamma = Z_{p^inf} wr Z_{p^inf}.
//
// z_k maps to (1/p^k * u^0, u^0) and y_k to (0, u^{1/p^k}); z_0 and y_0 map to
// the identity. The witness assignment x1 = z_i, x2 = t^-1, x3 = y_i^-1 only
// enters through [x2, x3] = y_i^{p-1}, so the word is used in the curried form
//
//   w'(x1, x2) = [x1, x2]^p   at   (z_i, y_i^{p-1}).
//
// Iterations are counted from 1 here: the j-th iteration is w'^(j-1), which
// equals [z_i,_j y_i^{p-1}]^{p^j}.

#include "qcwreath/carriers.hpp"
#include "qcwreath/groupring.hpp"
#include "qcwreath/words.hpp"
#include "qcwreath/wreath.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qcwreath {

/// Image of z_k, k >= 0.
inline WreathElement z_image(Prime p, unsigned k) {
  return WreathElement::from_base(BaseFunction::delta(PruferElement(p), PruferElement::unit(p, k)));
}

/// Image of y_k, k >= 0.
inline WreathElement y_image(Prime p, unsigned k) {
  return WreathElement::from_top(PruferElement::unit(p, k));
}

struct GammaGenerators {
  Prime p;
  unsigned i;
  WreathElement z;  // z_i
  WreathElement y;  // y_i

  GammaGenerators(Prime prime, unsigned parameter)
      : p(prime), i(parameter), z(z_image(prime, parameter)), y(y_image(prime, parameter)) {
    if (parameter == 0) throw config_error("theorem parameter i must be at least 1");
  }

  /// y_i^{p-1}, the image of [x2, x3].
  WreathElement engel_argument() const { return pow(y, BigInt(p.value() - 1)); }
};

/// [z_i,_j y_i^{p-1}], computed with group operations only.
inline WreathElement bracket_element(Prime p, unsigned i, unsigned j) {
  const GammaGenerators g(p, i);
  return engel(GammaCarrier{p}, g.z, g.engel_argument(), j);
}

/// (1/p^i)(u^c - 1)^j with c = (p-1)/p^i, moved to the a^-1 b^-1 a b
/// commutator convention. There [(f,1),(0,u^c)] = (f (u^-c - 1), 1) and
/// (u^-c - 1)^j = (-1)^j u^{-jc} (u^c - 1)^j.
inline BaseFunction expected_bracket_base(Prime p, unsigned i, unsigned j) {
  if (i == 0) throw config_error("theorem parameter i must be at least 1");
  const PruferElement c(p, BigInt(p.value() - 1), i);
  const BaseFunction expansion = engel_expand(PruferElement::unit(p, i), c, j);
  const BigInt sign = j % 2 == 0 ? 1 : -1;
  return sign * translate(expansion, -(BigInt(j) * c));
}

inline BigInt engel_order(Prime p, unsigned i, unsigned j) { return order(bracket_element(p, i, j)); }

/// Closed form of the j-th iteration, j >= 1: [z_i,_j y_i^{p-1}]^{p^j}.
inline WreathElement iterate_value(Prime p, unsigned i, unsigned j) {
  if (j == 0) throw config_error("iteration count j must be at least 1");
  return pow(bracket_element(p, i, j), p.power(j));
}

/// [x1, x2]^p with the exponent written out.
inline Word theorem_word(Prime p) {
  return Word::power(Word::commutator(Word::variable(1), Word::variable(2)),
                     static_cast<std::int64_t>(p.value()));
}

/// The uncurried word [x1, [x2, x3]]^p.
inline Word theorem_word_full(Prime p) {
  return Word::power(
      Word::commutator(Word::variable(1), Word::commutator(Word::variable(2), Word::variable(3))),
      static_cast<std::int64_t>(p.value()));
}

inline std::array<WreathElement, 2> theorem_assignment(Prime p, unsigned i) {
  const GammaGenerators g(p, i);
  return {g.z, g.engel_argument()};
}

/// The j-th iteration (j >= 1) obtained by evaluating the iterated word
/// w'^(j-1) literally.
inline WreathElement literal_iterate_value(Prime p, unsigned i, unsigned j) {
  if (j == 0) throw config_error("iteration count j must be at least 1");
  const auto assignment = theorem_assignment(p, i);
  return evaluate(iterate(theorem_word(p), j - 1), std::span<const WreathElement>(assignment),
                  GammaCarrier{p});
}

/// Number of iterations of w' needed to reach the identity at the witness
/// assignment, searching up to bound iterations; nullopt when exhausted.
inline std::optional<unsigned> minimal_index(Prime p, unsigned i, unsigned bound) {
  if (bound == 0) throw config_error("search bound must be at least 1");
  const auto assignment = theorem_assignment(p, i);
  const auto search = min_vanishing_index(theorem_word(p), std::span<const WreathElement>(assignment),
                                          GammaCarrier{p}, bound - 1);
  if (!search.index) return std::nullopt;
  return *search.index + 1;
}

struct RelationCheck {
  std::string relation;
  bool passed;
};

struct RelationReport {
  std::vector<RelationCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
};

/// Checks the defining relations of H on their images:
///   [z_i, y_j^s, z_k] = 1,  z_i = z_{i+1}^p,  y_i = y_{i+1}^p,  [z_0, y_0] = 1
/// for 0 <= i <= i_max, 0 <= j <= j_max, 0 <= k <= k_max, s_min <= s <= s_max.
inline RelationReport check_H_relations(Prime p, unsigned i_max, unsigned j_max, unsigned k_max,
                                        int s_min, int s_max) {
  if (s_min > s_max) throw config_error("empty range for s");
  RelationReport report;
  const BigInt pp(p.value());
  std::vector<WreathElement> z;
  std::vector<WreathElement> y;
  for (unsigned r = 0; r <= std::max({i_max, j_max, k_max}) + 1; ++r) {
    z.push_back(z_image(p, r));
    y.push_back(y_image(p, r));
  }
  for (unsigned i = 0; i <= i_max; ++i) {
    for (unsigned j = 0; j <= j_max; ++j) {
      for (int s = s_min; s <= s_max; ++s) {
        const WreathElement inner = commutator(z[i], pow(y[j], BigInt(s)));
        for (unsigned k = 0; k <= k_max; ++k) {
          report.checks.push_back({"[z_" + std::to_string(i) + ",y_" + std::to_string(j) + "^" +
                                       std::to_string(s) + ",z_" + std::to_string(k) + "] = 1",
                                   commutator(inner, z[k]).is_identity()});
        }
      }
    }
  }
  for (unsigned i = 0; i <= i_max; ++i) {
    report.checks.push_back({"z_" + std::to_string(i) + " = z_" + std::to_string(i + 1) + "^p",
                             z[i] == pow(z[i + 1], pp)});
  }
  for (unsigned j = 0; j <= j_max; ++j) {
    report.checks.push_back({"y_" + std::to_string(j) + " = y_" + std::to_string(j + 1) + "^p",
                             y[j] == pow(y[j + 1], pp)});
  }
  report.checks.push_back({"[z_0,y_0] = 1", commutator(z[0], y[0]).is_identity()});
  return report;
}

}  // namespace qcwreath
