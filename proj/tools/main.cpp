#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

int main(int argc, char** argv) {
  using namespace qcwreath::cli;

  CLI::App app{"Exact computations in Z_{p^inf} wr Z_{p^inf} and iterated identities"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"text", Format::text},
                                              {"json-lines", Format::json_lines}};
  const auto add_format = [&](CLI::App* cmd, Format& target) {
    cmd->add_option("--format", target, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  EngelOptions engel;
  auto* engel_cmd = app.add_subcommand("engel", "Order and value of [z_i,_j y_i^(p-1)]");
  engel_cmd->add_option("--p", engel.p, "Prime")->required();
  engel_cmd->add_option("--i", engel.i, "Parameter i >= 1")->required();
  engel_cmd->add_option("--j", engel.j, "Engel length j >= 0")->required();
  add_format(engel_cmd, engel.format);

  IterateOptions iterate;
  auto* iterate_cmd =
      app.add_subcommand("iterate", "Evaluate iterates of a word until they reach the identity");
  iterate_cmd->add_option("--p", iterate.p, "Prime")->required();
  iterate_cmd->add_option("--word", iterate.word,
                          "Word, e.g. \"[x1,x2]^p\"; defaults to [x1,x2]^p for theorem:i=<i>");
  iterate_cmd
      ->add_option("--assign", iterate.assign,
                   "theorem:i=<i>, or comma-separated Pruefer or wreath elements")
      ->required();
  iterate_cmd->add_option("--bound", iterate.bound, "Largest iterate index to try")
      ->capture_default_str();
  add_format(iterate_cmd, iterate.format);

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the full verification suite");
  verify_cmd->add_option("--p", verify.primes, "Primes to sweep")
      ->delimiter(',')
      ->capture_default_str();
  verify_cmd->add_option("--i-max", verify.i_max, "Largest theorem parameter i")
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "Seed for randomized checks")
      ->capture_default_str();
  add_format(verify_cmd, verify.format);

  OracleOptions oracle;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "Cross-check against the finite wreath product C_{p^k} wr C_{p^m}");
  oracle_cmd->add_option("--p", oracle.p, "Prime")->capture_default_str();
  oracle_cmd->add_option("--k", oracle.k, "Coefficient exponent")->capture_default_str();
  oracle_cmd->add_option("--m", oracle.m, "Position exponent")->capture_default_str();
  oracle_cmd->add_option("--seed", oracle.seed, "Seed")->capture_default_str();
  oracle_cmd->add_option("--samples", oracle.samples, "Random pairs for large groups")
      ->capture_default_str();
  add_format(oracle_cmd, oracle.format);

  CLI11_PARSE(app, argc, argv);

  if (engel_cmd->parsed()) return cmd_engel(engel, std::cout, std::cerr);
  if (iterate_cmd->parsed()) return cmd_iterate(iterate, std::cout, std::cerr);
  if (verify_cmd->parsed()) return cmd_verify(verify, std::cout, std::cerr);
  return cmd_oracle(oracle, std::cout, std::cerr);
}
