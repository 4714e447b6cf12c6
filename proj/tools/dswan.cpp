// dswan: Newton polygons, slope factorizations, break multisets and
// Artin-Schreier conductor comparisons from the command line.

#include <iostream>

#include <CLI11.hpp>

#include "dswan/cli/commands.hpp"
#include "dswan/error.hpp"

using dswan::cli::Format;
using dswan::cli::RunConfig;

namespace {

void common(CLI::App* sub, RunConfig& cfg, std::string& grid, std::string& prec, std::string& format) {
  sub->add_option("--p", cfg.p, "residue characteristic")->capture_default_str();
  sub->add_option("--n", cfg.n, "number of u-variables")->capture_default_str();
  sub->add_flag("--pi", cfg.uses_pi, "allow pi (pi^(p-1) = -p) in coefficients");
  sub->add_option("--input,-i", cfg.input, "JSON input file");
  sub->add_option("--axis", cfg.axis, "derivation axis: u1..un or t");
  sub->add_option("--r", grid, "radius parameters a/b[,a/b...]");
  sub->add_option("--prec", prec, "working precision a/b")->capture_default_str();
  sub->add_option("--smax", cfg.s_max, "matrix-power estimate length")->capture_default_str();
  sub->add_option("--format", format, "json, csv or table");
  sub->add_option("--seed", cfg.seed, "seed for cyclic-vector search")->capture_default_str();
}

void module_source(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--dwork", cfg.dwork, "rank-one module with N_i = pi d_i(x)");
  sub->add_option("--pullback", cfg.pullback, "substitution JSON file applied first");
  sub->add_option("--rotate", cfg.rotate, "pull back along u_i -> u_i + t");
  sub->add_flag("--generic-rotation", cfg.generic_rotation, "pull back along the generic rotation");
  sub->add_option("--tame", cfg.tame, "pull back along t -> t^N");
  sub->add_option("--frobenius", cfg.frobenius, "pull back along t -> t^(p^N)");
  sub->add_flag("--fixed-grid", cfg.fixed_grid, "do not extend the radius grid");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scales, break multisets and Swan conductors of p-adic differential modules"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string grid, prec = "20", format;

  auto* np = app.add_subcommand("np", "Newton polygon of a twisted polynomial");
  auto* factor = app.add_subcommand("factor", "slope factorization of a twisted polynomial");
  auto* breaks = app.add_subcommand("breaks", "break multiset and Swan conductor of a module");
  auto* profile = app.add_subcommand("profile", "scale profile of a module over a radius grid");
  auto* swan_as = app.add_subcommand("swan-as", "Kato vs differential conductor of an Artin-Schreier character");
  for (auto* sub : {np, factor, breaks, profile, swan_as}) common(sub, cfg, grid, prec, format);
  for (auto* sub : {np, factor}) sub->add_option("--coeffs", cfg.coeffs, "coefficients a_0,...,a_d")->delimiter(',');
  factor->add_option("--budget", cfg.budget, "Newton rounds per split")->capture_default_str();
  for (auto* sub : {breaks, profile}) module_source(sub, cfg);
  swan_as->add_option("--f", cfg.f, "Artin-Schreier polynomial in b1..bn, t");
  swan_as->add_option("--corpus", cfg.corpus, "JSON-lines file of characters");
  swan_as->add_option("--jobs", cfg.jobs, "corpus worker threads");
  swan_as->add_flag("--fixed-grid", cfg.fixed_grid, "do not extend the radius grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : dswan::cli::kParse;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  try {
    if (!grid.empty()) cfg.rs = dswan::cli::parse_grid(grid);
    cfg.prec = dswan::parse_rational(prec);
  } catch (const dswan::ParseError& e) {
    std::cerr << e.what() << "\n";
    return dswan::cli::kParse;
  }
  if (format == "json") cfg.format = Format::Json;
  else if (format == "csv") cfg.format = Format::Csv;
  else if (format == "table") cfg.format = Format::Table;
  else if (!format.empty()) {
    std::cerr << "unknown format '" << format << "'\n";
    return dswan::cli::kParse;
  }

  const dswan::cli::Outcome out = dswan::cli::run(cfg);
  std::cout << out.out;
  std::cerr << out.err;
  return out.code;
}
