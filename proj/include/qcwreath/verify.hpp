#pragma once

// The full verification suite: theorem sweeps, relation transport, finite
// oracle cross-validation, property suites and the word-language round trip.
// Every check yields one record; the run passes when every record does.

#include "qcwreath/carriers.hpp"
#include "qcwreath/finite_oracle.hpp"
#include "qcwreath/random.hpp"
#include "qcwreath/serialize.hpp"
#include "qcwreath/theorem.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qcwreath {

struct VerifyConfig {
  std::vector<Prime> primes{Prime(2), Prime(3), Prime(5)};
  unsigned i_max = 6;
  std::uint64_t seed = 0x5EED;
  unsigned property_samples = 1000;
  unsigned oracle_samples = 500;
  unsigned word_samples = 1000;
};

struct CheckRecord {
  std::string id;
  nlohmann::json params;
  bool passed = false;
  nlohmann::json values;  // deterministic detail: counts and the first failure, if any
  double seconds = 0;     // wall time, excluded from structured output
};

namespace detail {

// Counts cases and remembers the first failing one.
struct Tally {
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  nlohmann::json first_failure;

  void record(bool ok, const std::function<nlohmann::json()>& describe) {
    ++cases;
    if (!ok && failures++ == 0) first_failure = describe();
  }

  nlohmann::json summary() const {
    nlohmann::json out{{"cases", cases}, {"failures", failures}};
    if (failures > 0) out["first_failure"] = first_failure;
    return out;
  }
};

template <class Body>
CheckRecord timed_check(std::string id, nlohmann::json params, Body&& body) {
  const auto start = std::chrono::steady_clock::now();
  Tally tally;
  body(tally);
  CheckRecord record;
  record.id = std::move(id);
  record.params = std::move(params);
  record.passed = tally.failures == 0 && tally.cases > 0;
  record.values = tally.summary();
  record.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return record;
}

inline nlohmann::json ij(unsigned i, unsigned j) { return {{"i", i}, {"j", j}}; }

}  // namespace detail

/// Order of [z_i,_j y_i^{p-1}] is exactly p^i for 0 <= j < i.
inline CheckRecord check_order_law(Prime p, unsigned i_max) {
  return detail::timed_check("order_law", {{"p", p.value()}, {"i_max", i_max}}, [&](auto& t) {
    for (unsigned i = 1; i <= i_max; ++i) {
      for (unsigned j = 0; j < i; ++j) {
        const BigInt got = engel_order(p, i, j);
        t.record(got == p.power(i), [&] {
          auto d = detail::ij(i, j);
          d["order"] = got.str();
          return d;
        });
      }
    }
  });
}

/// The witness assignment needs exactly i iterations.
inline CheckRecord check_unboundedness(Prime p, unsigned i_max, unsigned bound) {
  return detail::timed_check("unboundedness", {{"p", p.value()}, {"i_max", i_max}, {"bound", bound}},
                             [&](auto& t) {
                               for (unsigned i = 1; i <= i_max; ++i) {
                                 const auto found = minimal_index(p, i, bound);
                                 t.record(found && *found == i, [&] {
                                   return nlohmann::json{
                                       {"i", i},
                                       {"iterations", found ? nlohmann::json(*found) : "exhausted"}};
                                 });
                               }
                             });
}

/// Literal evaluation of the iterated word agrees with the closed form, and
/// the closed form is nontrivial exactly for j < i.
inline CheckRecord check_literal_iterates(Prime p, unsigned i_max) {
  return detail::timed_check("literal_vs_closed_form", {{"p", p.value()}, {"i_max", i_max}},
                             [&](auto& t) {
                               for (unsigned i = 1; i <= i_max; ++i) {
                                 for (unsigned j = 1; j <= i + 3; ++j) {
                                   const WreathElement closed = iterate_value(p, i, j);
                                   const WreathElement literal = literal_iterate_value(p, i, j);
                                   const bool boundary = closed.is_identity() == (j >= i);
                                   t.record(closed == literal && boundary, [&] {
                                     auto d = detail::ij(i, j);
                                     d["closed_form"] = closed.to_string();
                                     d["literal"] = literal.to_string();
                                     return d;
                                   });
                                 }
                               }
                             });
}

/// The bracket's base is the convention-adjusted binomial expansion and its
/// u^0 coefficient has order p^i.
inline CheckRecord check_engel_expression(Prime p, unsigned i_max) {
  return detail::timed_check("engel_expression", {{"p", p.value()}, {"i_max", i_max}}, [&](auto& t) {
    for (unsigned i = 1; i <= i_max; ++i) {
      for (unsigned j = 0; j < i; ++j) {
        const WreathElement bracket = bracket_element(p, i, j);
        const BaseFunction expected = expected_bracket_base(p, i, j);
        const PruferElement constant = bracket.base().coefficient(PruferElement(p));
        const bool ok = bracket.base() == expected && bracket.top().is_zero() &&
                        order(constant) == p.power(i);
        t.record(ok, [&] {
          auto d = detail::ij(i, j);
          d["bracket"] = bracket.to_string();
          d["expected_base"] = expected.to_string();
          return d;
        });
      }
    }
  });
}

inline CheckRecord check_relations(Prime p, unsigned range) {
  return detail::timed_check(
      "relations", {{"p", p.value()}, {"range", range}, {"s_min", -6}, {"s_max", 6}}, [&](auto& t) {
        for (const auto& c : check_H_relations(p, range, range, range, -6, 6).checks) {
          t.record(c.passed, [&] { return nlohmann::json{{"relation", c.relation}}; });
        }
      });
}

/// Compares one pair through the embedding; order checks use brute force.
inline void compare_with_oracle(const FiniteWreathElement& a, const FiniteWreathElement& b,
                                detail::Tally& t) {
  const WreathElement ea = embed(a);
  const WreathElement eb = embed(b);
  const auto fail_info = [&] {
    return nlohmann::json{{"a", a.to_string()}, {"b", b.to_string()}};
  };
  t.record(embed(a * b) == ea * eb, fail_info);
  t.record(embed(inverse(a)) == inverse(ea), fail_info);
  t.record(embed(commutator(a, b)) == commutator(ea, eb), fail_info);
  t.record(BigInt(order_bruteforce(a)) == order(ea), fail_info);
}

/// Exhaustive over all pairs.
inline CheckRecord check_oracle_exhaustive(const FiniteParams& params) {
  return detail::timed_check(
      "oracle_exhaustive", {{"p", params.p.value()}, {"k", params.k}, {"m", params.m}}, [&](auto& t) {
        const auto elements = all_elements(params);
        for (const auto& a : elements) {
          for (const auto& b : elements) compare_with_oracle(a, b, t);
        }
      });
}

inline CheckRecord check_oracle_random(const FiniteParams& params, std::uint64_t seed,
                                       unsigned samples) {
  return detail::timed_check("oracle_random",
                             {{"p", params.p.value()},
                              {"k", params.k},
                              {"m", params.m},
                              {"seed", seed},
                              {"samples", samples}},
                             [&](auto& t) {
                               SplitMix64 rng(seed);
                               for (unsigned s = 0; s < samples; ++s) {
                                 const auto a = random_finite(rng, params);
                                 const auto b = random_finite(rng, params);
                                 compare_with_oracle(a, b, t);
                               }
                             });
}

/// Associativity, identity and inverses on random triples.
inline CheckRecord check_group_axioms(Prime p, std::uint64_t seed, unsigned samples) {
  return detail::timed_check(
      "group_axioms", {{"p", p.value()}, {"seed", seed}, {"samples", samples}}, [&](auto& t) {
        SplitMix64 rng(seed);
        const WreathElement e(p);
        for (unsigned s = 0; s < samples; ++s) {
          const auto a = random_wreath(rng, p, 4, 3);
          const auto b = random_wreath(rng, p, 4, 3);
          const auto c = random_wreath(rng, p, 4, 3);
          const bool ok = (a * b) * c == a * (b * c) && a * e == a && e * a == a &&
                          (a * inverse(a)).is_identity() && (inverse(a) * a).is_identity();
          t.record(ok, [&] {
            return nlohmann::json{{"a", a.to_string()}, {"b", b.to_string()}, {"c", c.to_string()}};
          });
        }
      });
}

/// [[a,b],[c,d]] = 1 on random quadruples.
inline CheckRecord check_metabelian(Prime p, std::uint64_t seed, unsigned samples) {
  return detail::timed_check(
      "metabelian", {{"p", p.value()}, {"seed", seed}, {"samples", samples}}, [&](auto& t) {
        SplitMix64 rng(seed);
        for (unsigned s = 0; s < samples; ++s) {
          const auto a = random_wreath(rng, p, 4, 3);
          const auto b = random_wreath(rng, p, 4, 3);
          const auto c = random_wreath(rng, p, 4, 3);
          const auto d = random_wreath(rng, p, 4, 3);
          const WreathElement value = commutator(commutator(a, b), commutator(c, d));
          t.record(value.is_identity(), [&] {
            return nlohmann::json{{"a", a.to_string()},
                                  {"b", b.to_string()},
                                  {"c", c.to_string()},
                                  {"d", d.to_string()}};
          });
        }
      });
}

/// Commutators have p-power order and their order-th power vanishes.
inline CheckRecord check_commutator_torsion(Prime p, std::uint64_t seed, unsigned samples) {
  return detail::timed_check(
      "commutator_torsion", {{"p", p.value()}, {"seed", seed}, {"samples", samples}}, [&](auto& t) {
        SplitMix64 rng(seed);
        for (unsigned s = 0; s < samples; ++s) {
          const auto a = random_wreath(rng, p, 4, 3);
          const auto b = random_wreath(rng, p, 4, 3);
          const WreathElement c = commutator(a, b);
          BigInt n = order(c);
          const bool killed = pow(c, n).is_identity();
          while (n % p.value() == 0) n /= p.value();
          t.record(n == 1 && killed && c.top().is_zero(), [&] {
            return nlohmann::json{{"a", a.to_string()}, {"b", b.to_string()}};
          });
        }
      });
}

/// parse(print(w)) == w on random ASTs, and the displayed iterates of
/// [x1,[x2,x3]]^2.
inline CheckRecord check_word_round_trip(std::uint64_t seed, unsigned samples) {
  return detail::timed_check("word_round_trip", {{"seed", seed}, {"samples", samples}},
                             [&](auto& t) {
                               SplitMix64 rng(seed);
                               for (unsigned s = 0; s < samples; ++s) {
                                 const Word w = random_word(rng, 4, 5);
                                 const std::string text = to_string(w);
                                 t.record(parse_word(text) == w,
                                          [&] { return nlohmann::json{{"word", text}}; });
                               }
                               const Prime two(2);
                               const std::string expected[] = {
                                   "[x1,[x2,x3]]^2",
                                   "[[x1,[x2,x3]]^2,[x2,x3]]^2",
                                   "[[[x1,[x2,x3]]^2,[x2,x3]]^2,[x2,x3]]^2",
                               };
                               const Word w = parse_word("[x1,[x2,x3]]^p", two);
                               for (unsigned j = 0; j < 3; ++j) {
                                 const std::string got = to_string(iterate(w, j));
                                 t.record(got == expected[j], [&] {
                                   return nlohmann::json{{"j", j}, {"printed", got}};
                                 });
                               }
                             });
}

/// Runs every check in a fixed order.
inline std::vector<CheckRecord> run_verification(const VerifyConfig& config) {
  if (config.primes.empty()) throw config_error("no primes to verify");
  if (config.i_max == 0) throw config_error("i-max must be at least 1");
  std::vector<CheckRecord> records;
  const unsigned relation_range = std::min(config.i_max, 5u);
  const unsigned bound = std::max(12u, config.i_max);
  for (const Prime& p : config.primes) {
    records.push_back(check_order_law(p, config.i_max));
    records.push_back(check_unboundedness(p, config.i_max, bound));
    records.push_back(check_literal_iterates(p, config.i_max));
    records.push_back(check_engel_expression(p, config.i_max));
    records.push_back(check_relations(p, relation_range));
  }
  records.push_back(check_oracle_exhaustive(FiniteParams(Prime(2), 1, 1)));
  records.push_back(check_oracle_random(FiniteParams(Prime(2), 2, 2), config.seed, config.oracle_samples));
  records.push_back(check_oracle_random(FiniteParams(Prime(3), 1, 1), config.seed + 1, config.oracle_samples));
  for (std::size_t r = 0; r < config.primes.size(); ++r) {
    const Prime& p = config.primes[r];
    const std::uint64_t s = config.seed + 100 * (r + 1);
    records.push_back(check_group_axioms(p, s, config.property_samples));
    records.push_back(check_metabelian(p, s + 1, config.property_samples));
    records.push_back(check_commutator_torsion(p, s + 2, config.property_samples));
  }
  records.push_back(check_word_round_trip(config.seed, config.word_samples));
  return records;
}

}  // namespace qcwreath
