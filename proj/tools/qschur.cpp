// qschur: compute statistics, canonical bases, crystal graphs and transfer
// verdicts, or run a verification suite.

#include "qschur/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using namespace qschur;
  CLI::App app{"Exact computations in the affine q-Schur algebra"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string psi = to_string(cfg.psi);
  std::string commutator = to_string(cfg.commutator);
  std::string cache;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "number of residues")->check(CLI::PositiveNumber);
    sub->add_option("--D", cfg.rank, "rank D")->check(CLI::PositiveNumber);
    sub->add_option("--window", cfg.window, "number of values in the enumeration window")->check(CLI::PositiveNumber);
    sub->add_option("--lo", cfg.lo, "first value of the window");
    sub->add_option("--band", cfg.band, "band offset |j - i| for matrix enumeration")->check(CLI::NonNegativeNumber);
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "dot"}));
    sub->add_option("--cache-dir", cache, "canonical basis cache (default $QSCHUR_CACHE)");
    sub->add_option("--psi-reading", psi, "twist psi in the transfer map")
        ->check(CLI::IsMember({"dominant-window", "weight", "matrix-degree"}));
    sub->add_option("--commutator", commutator, "commutator scalar checked by the suites")
        ->check(CLI::IsMember({"next-difference", "previous-difference"}));
    sub->add_option("--span-length", cfg.span_length, "word-length cap of the monomial span")->check(CLI::PositiveNumber);
    sub->add_option("--threads", cfg.threads, "worker threads (0: OpenMP default)")->check(CLI::NonNegativeNumber);
  };

  std::string entity;
  auto* compute = app.add_subcommand("compute", "compute one object");
  compute->add_option("entity", entity, "what to compute")->required()->check(CLI::IsMember(compute_entities()));
  compute->add_option("--p", cfg.flag, "flag symbol, e.g. \"n=2;D=2;[2,1]\"");
  compute->add_option("--s", cfg.matrix, "periodic matrix, e.g. \"n=2;{(1,1):1,(1,2):1}\"");
  common(compute);

  std::string suite;
  auto names = suite_names();
  names.push_back("all");
  auto* run = app.add_subcommand("suite", "run a verification suite; exit 0 iff every case passes");
  run->add_option("name", suite, "suite name")->required()->check(CLI::IsMember(names));
  common(run);

  CLI11_PARSE(app, argc, argv);
  cfg.psi = *psi_reading_from_string(psi);
  cfg.commutator = *commutator_form_from_string(commutator);
  if (!cache.empty()) cfg.cache_dir = cache;

  const CommandResult r = compute->parsed() ? compute_command(entity, cfg) : suite_command(suite, cfg);
  std::cout << r.output;
  if (!r.error.empty()) std::cerr << "qschur: " << r.error << "\n";
  return r.exit_code;
}
