#pragma once

// Subcommand implementations for the qcwreath CLI. Each takes parsed options
// and output streams and returns the process exit status.

#include "qcwreath/carriers.hpp"
#include "qcwreath/serialize.hpp"
#include "qcwreath/theorem.hpp"
#include "qcwreath/verify.hpp"

#include <json.hpp>

#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace qcwreath::cli {

enum class Format { text, json_lines };

struct EngelOptions {
  std::uint64_t p = 2;
  unsigned i = 1;
  unsigned j = 0;
  Format format = Format::text;
};

struct IterateOptions {
  std::uint64_t p = 2;
  std::optional<std::string> word;
  std::string assign;
  unsigned bound = kDefaultSearchBound;
  Format format = Format::text;
};

struct VerifyOptions {
  std::vector<std::uint64_t> primes{2, 3, 5};
  unsigned i_max = 6;
  std::uint64_t seed = 0x5EED;
  Format format = Format::text;
};

struct OracleOptions {
  std::uint64_t p = 2;
  unsigned k = 1;
  unsigned m = 1;
  std::uint64_t seed = 0x5EED;
  unsigned samples = 500;
  Format format = Format::text;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

inline nlohmann::json record(std::string check, nlohmann::json params, std::string result,
                             nlohmann::json values) {
  return {{"check", std::move(check)},
          {"params", std::move(params)},
          {"result", std::move(result)},
          {"values", std::move(values)}};
}

inline void emit(std::ostream& out, const nlohmann::json& j) { out << j.dump() << '\n'; }

// "error: <what>" followed by the input and a caret under the offending column.
inline void report_parse_error(std::ostream& err, const parse_error& e, std::string_view input) {
  err << "error: " << e.what() << '\n';
  err << "  " << input << '\n';
  err << "  " << std::string(std::min(e.position(), input.size()), ' ') << "^\n";
}

// Splits on commas outside (), [] and {}.
inline std::vector<std::string> split_top_level(std::string_view text) {
  std::vector<std::string> items;
  int depth = 0;
  std::string current;
  for (char c : text) {
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == ',' && depth == 0) {
      items.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  items.push_back(current);
  return items;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

template <class Carrier>
int run_search(const IterateOptions& opt, const Word& word,
               std::span<const typename Carrier::element_type> assignment, const Carrier& carrier,
               std::ostream& out) {
  const auto search = min_vanishing_index(word, assignment, carrier, opt.bound);
  const nlohmann::json params{{"p", opt.p}, {"word", to_string(word)}, {"assign", opt.assign},
                              {"bound", opt.bound}};
  for (std::size_t j = 0; j < search.values.size(); ++j) {
    const auto& value = search.values[j];
    const bool trivial = carrier.equal(value, carrier.identity());
    if (opt.format == Format::text) {
      out << "j=" << j << ": " << value.to_string() << '\n';
    } else {
      emit(out, record("iterate_value", {{"p", opt.p}, {"j", j}}, trivial ? "identity" : "nontrivial",
                       {{"element", to_json(value)}, {"text", value.to_string()}}));
    }
  }
  if (opt.format == Format::text) {
    out << "word: " << to_string(word) << '\n';
    if (search.index) {
      out << "min_index: " << *search.index << '\n';
      out << "iterations: " << *search.index + 1 << '\n';
    } else {
      out << "status: exhausted at bound " << opt.bound << '\n';
    }
  } else if (search.index) {
    emit(out, record("iterate", params, "found",
                     {{"min_index", *search.index}, {"iterations", *search.index + 1}}));
  } else {
    emit(out, record("iterate", params, "exhausted", {{"min_index", nullptr}, {"iterations", nullptr}}));
  }
  return kExitOk;
}

}  // namespace detail

inline int cmd_engel(const EngelOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    const Prime p(opt.p);
    if (opt.i == 0) throw config_error("--i must be at least 1");
    const WreathElement element = bracket_element(p, opt.i, opt.j);
    const BigInt element_order = order(element);
    if (opt.format == Format::text) {
      out << "p = " << opt.p << ", i = " << opt.i << ", j = " << opt.j << '\n';
      out << "element: " << element.to_string() << '\n';
      out << "order: " << element_order << '\n';
      out << "identity: " << (element.is_identity() ? "yes" : "no") << '\n';
    } else {
      detail::emit(out, detail::record("engel", {{"p", opt.p}, {"i", opt.i}, {"j", opt.j}},
                                       element.is_identity() ? "identity" : "nontrivial",
                                       {{"element", to_json(element)},
                                        {"text", element.to_string()},
                                        {"order", element_order.str()}}));
    }
    return kExitOk;
  } catch (const config_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

/// Assignments: "theorem:i=<i>", a comma-separated list of Pruefer elements
/// ("1/8,3/4"), or a comma-separated list of wreath elements in their
/// printed form.
inline int cmd_iterate(const IterateOptions& opt, std::ostream& out, std::ostream& err) {
  std::string current_input;
  try {
    const Prime p(opt.p);
    if (opt.bound == 0) throw config_error("--bound must be at least 1");
    std::optional<Word> word;
    if (opt.word) {
      current_input = *opt.word;
      word = parse_word(*opt.word, p);
    }
    current_input = opt.assign;
    constexpr std::string_view kTheorem = "theorem:i=";
    if (std::string_view(opt.assign).starts_with(kTheorem)) {
      const std::string digits = opt.assign.substr(kTheorem.size());
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
          digits.size() > 6) {
        throw parse_error("expected a positive integer after 'theorem:i='", kTheorem.size());
      }
      const auto i = static_cast<unsigned>(std::stoul(digits));
      if (i == 0) throw config_error("theorem parameter i must be at least 1");
      if (!word) word = theorem_word(p);
      const auto assignment = theorem_assignment(p, i);
      return detail::run_search(opt, *word, std::span<const WreathElement>(assignment),
                                GammaCarrier{p}, out);
    }
    if (!word) throw config_error("--word is required unless --assign is theorem:i=<i>");
    const auto items = detail::split_top_level(opt.assign);
    const bool wreath_items = detail::trim(items.front()).starts_with("(");
    if (wreath_items) {
      std::vector<WreathElement> assignment;
      for (const auto& item : items) {
        current_input = item;
        assignment.push_back(parse_wreath(item, p));
      }
      return detail::run_search(opt, *word, std::span<const WreathElement>(assignment),
                                GammaCarrier{p}, out);
    }
    std::vector<PruferElement> assignment;
    for (const auto& item : items) {
      current_input = item;
      assignment.push_back(PruferElement::parse(item, p));
    }
    return detail::run_search(opt, *word, std::span<const PruferElement>(assignment),
                              PruferCarrier{p}, out);
  } catch (const parse_error& e) {
    detail::report_parse_error(err, e, current_input);
    return kExitUsage;
  } catch (const config_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

inline int print_records(const std::vector<CheckRecord>& records, Format format, std::ostream& out) {
  std::size_t failed = 0;
  for (const auto& r : records) {
    if (!r.passed) ++failed;
    if (format == Format::text) {
      std::ostringstream line;
      line << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(24) << r.id << ' '
           << std::setw(40) << r.params.dump() << " cases=" << r.values.value("cases", 0)
           << std::fixed << std::setprecision(3) << " time=" << r.seconds << "s";
      out << line.str() << '\n';
      if (!r.passed && r.values.contains("first_failure")) {
        out << "     first failure: " << r.values["first_failure"].dump() << '\n';
      }
    } else {
      detail::emit(out, detail::record(r.id, r.params, r.passed ? "pass" : "fail", r.values));
    }
  }
  if (format == Format::text) {
    out << (failed == 0 ? "all " + std::to_string(records.size()) + " checks passed"
                        : std::to_string(failed) + " of " + std::to_string(records.size()) +
                              " checks failed")
        << '\n';
  } else {
    detail::emit(out, detail::record("summary", nlohmann::json::object(), failed == 0 ? "pass" : "fail",
                                     {{"checks", records.size()}, {"failed", failed}}));
  }
  return failed == 0 ? kExitOk : kExitFailed;
}

inline int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    VerifyConfig config;
    config.primes.clear();
    for (auto p : opt.primes) config.primes.emplace_back(p);
    config.i_max = opt.i_max;
    config.seed = opt.seed;
    return print_records(run_verification(config), opt.format, out);
  } catch (const config_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

/// Exhaustive over all pairs for groups of order <= 256, seeded samples otherwise.
inline int cmd_oracle(const OracleOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    const FiniteParams params(Prime(opt.p), opt.k, opt.m);
    std::vector<CheckRecord> records;
    if (params.group_order() <= 256) {
      records.push_back(check_oracle_exhaustive(params));
    } else {
      records.push_back(check_oracle_random(params, opt.seed, opt.samples));
    }
    return print_records(records, opt.format, out);
  } catch (const config_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace qcwreath::cli
