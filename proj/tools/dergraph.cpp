// dergraph: distance spectra of derangement graphs.

#include "dergraph/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv)
{
  using namespace dergraph::cli;

  CLI::App app{"Distance spectra and diameter certificates for derangement graphs"};
  app.require_subcommand(1);

  Command cmd;
  bool json = false;
  bool no_cache = false;
  app.add_flag("--no-cache", no_cache, "Do not read or write the character-table cache");

  auto* dn = app.add_subcommand("dn", "Print the derangement number D_n");
  dn->add_option("n", cmd.n, "Degree")->required()->check(CLI::NonNegativeNumber);

  auto* spectrum = app.add_subcommand("spectrum", "Adjacency and distance eigenvalues per partition");
  spectrum->add_option("n", cmd.n, "Degree (>= 4)")->required();
  spectrum->add_flag("--json", json, "Emit JSON");

  auto* poly = app.add_subcommand("poly", "Distance polynomial in factored form");
  poly->add_option("n", cmd.n, "Degree (>= 4)")->required();

  auto* extremal = app.add_subcommand("extremal", "Largest and smallest distance eigenvalues");
  extremal->add_option("n", cmd.n, "Degree (>= 4)")->required();
  extremal->add_flag("--json", json, "Emit JSON");

  auto* factorize = app.add_subcommand("factorize", "Write a permutation as a product of two derangements");
  factorize->add_option("perm", cmd.permutation, "Cycle notation \"(1 2)(3 4 5)\" or one-line \"[2,1,4,5,3]\"")
      ->required();
  factorize->add_option("--n", cmd.n_hint, "Degree (default: largest listed point)");
  factorize->add_flag("--json", json, "Emit JSON");

  auto* verify = app.add_subcommand("verify", "Cross-check the analytic spectrum against the explicit graph");
  verify->add_option("n", cmd.n, "Degree (4..8; 8 checks the diameter only)")->required();
  verify->add_option("--k", cmd.k_max, "Highest trace power (0..4)")->check(CLI::Range(0, 4));
  verify->add_flag("--numeric", cmd.numeric, "Also compare floating-point eigenvalues (advisory)");

  auto* sweep = app.add_subcommand("sweep", "Check the eigenvalue inequality families");
  sweep->add_option("--from", cmd.from, "First degree (>= 6)")->check(CLI::Range(6, 1000));
  sweep->add_option("--to", cmd.to, "Last degree");

  auto* sign = app.add_subcommand("sign", "Check the alternating sign of eta");
  sign->add_option("--max", cmd.n, "Largest degree")->required()->check(CLI::Range(2, 1000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  const std::pair<CLI::App*, Subcommand> table[] = {
      {dn, Subcommand::dn},           {spectrum, Subcommand::spectrum}, {poly, Subcommand::poly},
      {extremal, Subcommand::extremal}, {factorize, Subcommand::factorize}, {verify, Subcommand::verify},
      {sweep, Subcommand::sweep},     {sign, Subcommand::sign},
  };
  for (const auto& [sub, which] : table)
    if (sub->parsed())
      cmd.subcommand = which;
  cmd.output_mode = json ? OutputMode::json : OutputMode::text;
  cmd.use_cache = !no_cache;

  return run(cmd, std::cout, std::cerr);
}
