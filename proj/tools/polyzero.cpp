// Command-line front end: generate family polynomials and sequences, compute
// certified real roots and float complex roots, run verification sweeps, and
// aggregate report manifests.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <limits>
#include <string>

#include "polyzero/cli.hpp"

using namespace polyzero;

namespace {

void add_common(CLI::App* cmd, RunConfig& cfg, std::string& family, std::string& tol,
                std::string& format) {
  cmd->add_option("--family", family, "family letter: F, D, I or H");
  cmd->add_option("-k,--k", cfg.k_lo, "degree parameter k");
  cmd->add_option("--tol", tol, "refinement tolerance, decimal or scientific (default 1e-12)");
  cmd->add_option("--seed", cfg.seed, "RNG seed for complex-root phase jitter");
  cmd->add_option("--format", format, "output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("-o,--out", cfg.output_path, "output file (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polyzero: exact root certification for recurrence-family polynomials"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string family_letter_str;
  std::string tol_str;
  std::string format_str = "json";
  int l_value = std::numeric_limits<int>::min();
  int kmax_verify = 0;

  CLI::App* gen = app.add_subcommand("gen", "emit one family polynomial (or sequence) as JSON");
  add_common(gen, cfg, family_letter_str, tol_str, format_str);
  int gseq_count = 0;
  bool gseq = false;
  gen->add_flag("--gseq", gseq, "emit the order-k integer sequence instead of a polynomial");
  gen->add_option("--count", gseq_count, "number of sequence terms for --gseq");
  gen->add_option("-l,--l", l_value, "order/depth parameter for D and H");

  CLI::App* roots = app.add_subcommand("roots", "certified real roots plus float complex roots");
  add_common(roots, cfg, family_letter_str, tol_str, format_str);
  roots->add_option("--kmax", cfg.k_hi, "sweep upper bound (inclusive)");
  roots->add_option("-l,--l", l_value, "order/depth parameter for D and H");
  roots->add_flag("--plot", cfg.plot, "emit plot-ready CSV (k, dominant root, gap to 2)");

  CLI::App* verify = app.add_subcommand("verify", "run claim verification sweeps");
  add_common(verify, cfg, family_letter_str, tol_str, format_str);
  verify->add_option("--claims", cfg.claims,
                     "comma-separated claim groups or \"all\" (table1, specials, thm1, thm2, "
                     "bounds, thm3, identities, complex, gratio)");
  verify->add_option("--jobs", cfg.jobs, "worker thread cap for claim fan-out");
  verify->add_option("-l,--l", l_value, "restrict thm1/thm3 sweeps to one l");
  verify->add_option("--kmax", kmax_verify, "range override for the selected claim group(s)");

  CLI::App* report = app.add_subcommand("report", "aggregate verify outputs into one manifest");
  report->add_option("-o,--out", cfg.output_path, "output file (default stdout)");
  report->add_option("inputs", cfg.inputs, "verify JSON outputs to merge")->expected(-1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    if (gen->parsed()) cfg.command = Command::gen;
    if (roots->parsed()) cfg.command = Command::roots;
    if (verify->parsed()) cfg.command = Command::verify;
    if (report->parsed()) cfg.command = Command::report;

    if (!family_letter_str.empty()) {
      FamilySpec spec;
      spec.family = family_from_letter(family_letter_str[0]);
      spec.k = cfg.k_lo ? cfg.k_lo : 1;
      spec.l = l_value == std::numeric_limits<int>::min()
                   ? (spec.family == Family::D ? 1 : 0)
                   : l_value;
      cfg.family = spec;
    }
    if (l_value != std::numeric_limits<int>::min() && verify->parsed()) cfg.l_override = l_value;
    if (kmax_verify > 0 && verify->parsed()) cfg.kmax_override = kmax_verify;
    if (roots->parsed() && cfg.k_hi && !cfg.k_lo) cfg.k_lo = 1;
    if (!tol_str.empty()) cfg.tolerance = rat_from_decimal_string(tol_str);
    if (sgn(cfg.tolerance) <= 0) throw ConfigError("tolerance must be positive");
    cfg.format = format_str == "csv" ? OutputFormat::csv : OutputFormat::json;
    if (gseq) {
      if (gseq_count <= 0) throw ConfigError("--gseq requires --count >= 1");
      cfg.gseq_count = gseq_count;
    }
    if (const char* env_seed = std::getenv("POLYZERO_SEED")) {
      cfg.seed = std::stoull(env_seed);
    }
    return run(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}
