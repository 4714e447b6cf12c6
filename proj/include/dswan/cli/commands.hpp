#pragma once

// Subcommands of the dswan tool as plain functions, so the exit-code and
// output contracts can be tested without spawning processes.

#include <optional>
#include <string>
#include <vector>

#include "dswan/rational.hpp"

namespace dswan::cli {

/// Parse errors cover malformed flags, files and expressions alike.
enum ExitCode { kOk = 0, kParse = 2, kPrecondition = 3, kDiagnostic = 4 };

enum class Format { Json, Csv, Table };

struct RunConfig {
  std::string subcommand;
  /// JSON input file (twisted polynomial, module or character by subcommand).
  std::optional<std::string> input;
  unsigned p = 3;
  unsigned n = 0;
  bool uses_pi = false;
  std::optional<std::string> axis;
  /// Inline twisted polynomial coefficients a_0..a_d.
  std::vector<std::string> coeffs;
  /// Inline Dwork module exp-kernel x (forces the pi context).
  std::optional<std::string> dwork;
  /// Inline Artin-Schreier polynomial f.
  std::optional<std::string> f;
  std::vector<Rational> rs;
  bool fixed_grid = false;
  Rational prec = 20;
  unsigned budget = 64;
  unsigned s_max = 64;
  /// Defaults to CSV for profile and JSON elsewhere.
  std::optional<Format> format;
  unsigned long seed = 0;
  std::optional<std::string> corpus;
  unsigned jobs = 0;  ///< corpus workers; 0 picks the hardware count

  // Pullbacks applied before reading breaks or profiles.
  std::optional<std::string> pullback;  ///< substitution JSON file
  std::optional<unsigned> tame;
  std::optional<unsigned> frobenius;
  std::optional<std::string> rotate;  ///< axis name
  bool generic_rotation = false;
};

/// Checks the RunConfig invariants; throws PreconditionError.
void validate(const RunConfig& cfg);

struct Outcome {
  int code = kOk;
  std::string out;  ///< stdout payload
  std::string err;  ///< stderr payload (a JSON error record or a message)
};

Outcome cmd_np(const RunConfig& cfg);
Outcome cmd_factor(const RunConfig& cfg);
Outcome cmd_breaks(const RunConfig& cfg);
Outcome cmd_profile(const RunConfig& cfg);
Outcome cmd_swan_as(const RunConfig& cfg);

/// Dispatches on cfg.subcommand and maps exceptions to exit codes.
Outcome run(const RunConfig& cfg);

/// Comma-separated exact rationals "a/b,c/d"; throws ParseError.
std::vector<Rational> parse_grid(const std::string& text);

}  // namespace dswan::cli
