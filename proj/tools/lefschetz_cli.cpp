#include <CLI11.hpp>

#include <iostream>

#include "lefschetz/cli.hpp"
#include "lefschetz/error.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Mod p^n trace formula checks for curves and the affine line"};
  app.require_subcommand(1);

  lefschetz::RunOptions opts;
  std::vector<std::string> files;
  std::string m_range;
  int budget = opts.budget.enumeration_log2;

  const auto scenario_cmd = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("files", files, "Scenario files")->required()->check(CLI::ExistingFile);
    sub->add_option("--m", m_range, "Override m_range, e.g. 1..3 or 1,2");
    sub->add_option("--budget", budget, "log2 of the largest field enumerated point by point")->check(CLI::Range(4, 24));
    return sub;
  };
  CLI::App* verify = scenario_cmd("verify", "Compare both sides of the trace formula");
  verify->add_option("--scale-rhs-u", opts.rhs_u_scale, "Multiply u on the right side only (harness self-test)")
      ->group("");
  scenario_cmd("woods-hole", "Coherent trace against fixed points mod p");
  scenario_cmd("fix-count", "Closed-form fixed-point counts against the oracle");
  scenario_cmd("hasse-witt", "Hasse invariant against the point count");

  CLI::App* lemma = app.add_subcommand("lemma5", "Randomized fixed-module property suite");
  lemma->add_option("--seed", opts.seed, "Random seed");
  lemma->add_option("--count", opts.per_config, "Modules per configuration")->check(CLI::PositiveNumber);
  lemma->add_option("--threads", opts.threads, "Worker threads (0 = hardware)");

  CLI::App* zp = app.add_subcommand("zp-demo", "Affine line x -> x + 1 in the p-adic limit");
  zp->add_option("--q", opts.q_values, "Field sizes (default 2 9)");
  zp->add_option("--m", m_range, "Twists (default 1..3)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!m_range.empty()) opts.m_override = lefschetz::parse_m_range(m_range);
  } catch (const lefschetz::Error& e) {
    std::cerr << "--m: " << e.what() << '\n';
    return 2;
  }
  opts.budget.enumeration_log2 = budget;
  const std::string name = app.get_subcommands().front()->get_name();
  const auto command = lefschetz::parse_command(name);
  return lefschetz::run(*command, files, opts, std::cout, std::cerr);
}
