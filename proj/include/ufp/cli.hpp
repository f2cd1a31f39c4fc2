#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "ufp/analysis.hpp"
#include "ufp/game.hpp"

namespace ufp {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitIoError = 3;

struct RunConfig {
  std::string forecaster;
  std::string skeptic;
  ProtocolVariant variant = ProtocolVariant::Standard;
  NumericMode mode = NumericMode::ExactRational;
  Round horizon = 1;
  SignPolicy sign_policy = SignPolicy::PreferPositive;
  bool stop_on_bankruptcy = false;
  std::filesystem::path out;
};

struct MatchupResult {
  Trace trace;
  Verdict verdict;
  PropertyReport report;
};

/// Parses the grammar strings, loads any referenced files and plays the game.
/// Throws ParseError / ProtocolError.
MatchupResult play_matchup(const RunConfig& config);

/// "<out>.verdict.json"
std::filesystem::path verdict_path_for(const std::filesystem::path& trace_path);

/// Maps a ProtocolError to the CLI exit code: IoError -> 3, everything else -> 2.
int exit_code_for(const ProtocolError& error);

/// Plays one matchup and writes the trace plus its verdict document. Nothing
/// is written if the game cannot be completed.
int run_command(const RunConfig& config, std::ostream& err);

/// Runs the acceptance suite and prints one line per criterion.
int verify_command(std::ostream& out);

struct SweepEntry {
  std::string id;
  RunConfig config;
};

/// Grid file: a JSON array of run objects, or {"runs": [...]}. Each run has
/// "forecaster", "skeptic", "rounds", "out" and optionally "id", "variant",
/// "mode", "sign_policy", "stop_on_bankruptcy" (defaults to true).
std::vector<SweepEntry> load_sweep_grid(const std::filesystem::path& path);

/// Validates every config, plays all matchups on `workers` threads and
/// writes a summary CSV. Returns 2 before playing anything when a config is
/// invalid; no summary is written unless every run succeeds.
int sweep_command(const std::vector<SweepEntry>& grid, const std::filesystem::path& summary_path,
                  std::ostream& err, unsigned workers = 0);

}  // namespace ufp
