#include "ufp/cli.hpp"

#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <set>
#include <thread>

#include "ufp/acceptance.hpp"
#include "ufp/spec_parser.hpp"
#include "ufp/trace_io.hpp"

namespace ufp {

namespace {

struct PreparedRun {
  ForecasterSpec forecaster;
  SkepticSpec skeptic;
};

PreparedRun prepare(const RunConfig& config) {
  if (config.horizon < 1) throw ProtocolError(ErrorCode::InvalidHorizon, "horizon must be >= 1");
  PreparedRun run{resolve_forecaster(parse_forecaster_spec(config.forecaster)),
                  parse_skeptic_spec(config.skeptic)};
  if (const auto available = available_rounds(run.forecaster); available && *available < config.horizon) {
    throw ProtocolError(ErrorCode::SequenceExhausted, "variance file holds " + std::to_string(*available) +
                                                          " rounds, " + std::to_string(config.horizon) +
                                                          " requested");
  }
  return run;
}

MatchupResult play(const RunConfig& config, const PreparedRun& run) {
  RealityStrategy reality(config.sign_policy);
  const GameConfig game{config.horizon, config.mode, config.variant, config.stop_on_bankruptcy};
  MatchupResult result;
  result.trace = run_game(make_variance_source(run.forecaster), make_skeptic(run.skeptic, config.mode), reality, game);
  result.verdict = analyze_trace(result.trace, &run.forecaster);
  result.report = check_properties(result.verdict, result.trace);
  return result;
}

void write_outputs(const std::filesystem::path& out, const MatchupResult& result) {
  write_trace(out, result.trace);
  write_text_file(verdict_path_for(out), verdict_document(result.verdict, result.report));
}

template <typename T>
T enum_field(const Json& run, const char* key, T fallback, std::initializer_list<std::pair<const char*, T>> names) {
  if (!run.contains(key)) return fallback;
  const auto text = run.at(key).get<std::string>();
  for (const auto& [name, value] : names) {
    if (text == name) return value;
  }
  throw ProtocolError(ErrorCode::ParseError, std::string("unknown ") + key + " '" + text + "'");
}

}  // namespace

MatchupResult play_matchup(const RunConfig& config) { return play(config, prepare(config)); }

std::filesystem::path verdict_path_for(const std::filesystem::path& trace_path) {
  return std::filesystem::path(trace_path.string() + ".verdict.json");
}

int exit_code_for(const ProtocolError& error) {
  return error.code() == ErrorCode::IoError ? kExitIoError : kExitConfigError;
}

int run_command(const RunConfig& config, std::ostream& err) {
  MatchupResult result;
  try {
    result = play_matchup(config);
  } catch (const ProtocolError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  try {
    write_outputs(config.out, result);
  } catch (const ProtocolError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIoError;
  }
  return kExitOk;
}

int verify_command(std::ostream& out) {
  const auto results = acceptance::run_suite(out);
  std::size_t failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;
  out << (failed == 0 ? "all " + std::to_string(results.size()) + " criteria passed"
                      : std::to_string(failed) + " of " + std::to_string(results.size()) + " criteria failed")
      << '\n';
  return failed == 0 ? kExitOk : kExitVerificationFailed;
}

std::vector<SweepEntry> load_sweep_grid(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  std::vector<SweepEntry> grid;
  try {
    const Json doc = Json::parse(text);
    const Json& runs = doc.is_object() ? doc.at("runs") : doc;
    if (!runs.is_array()) throw ProtocolError(ErrorCode::ParseError, "grid must be an array of runs");
    for (std::size_t i = 0; i < runs.size(); ++i) {
      const Json& run = runs[i];
      SweepEntry entry;
      entry.id = run.value("id", "run" + std::to_string(i));
      entry.config.forecaster = run.at("forecaster").get<std::string>();
      entry.config.skeptic = run.at("skeptic").get<std::string>();
      entry.config.horizon = run.at("rounds").get<Round>();
      entry.config.out = run.at("out").get<std::string>();
      entry.config.variant = enum_field(run, "variant", ProtocolVariant::Standard,
                                        {{"standard", ProtocolVariant::Standard},
                                         {"modified", ProtocolVariant::Modified}});
      entry.config.mode = enum_field(run, "mode", NumericMode::ExactRational,
                                     {{"exact", NumericMode::ExactRational}, {"float", NumericMode::Float}});
      entry.config.sign_policy = enum_field(run, "sign_policy", SignPolicy::PreferPositive,
                                            {{"positive", SignPolicy::PreferPositive},
                                             {"alternate", SignPolicy::Alternate}});
      entry.config.stop_on_bankruptcy = run.value("stop_on_bankruptcy", true);
      grid.push_back(std::move(entry));
    }
  } catch (const Json::exception& e) {
    throw ProtocolError(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
  return grid;
}

int sweep_command(const std::vector<SweepEntry>& grid, const std::filesystem::path& summary_path,
                  std::ostream& err, unsigned workers) {
  if (grid.empty()) {
    err << "error: empty sweep grid\n";
    return kExitConfigError;
  }
  std::vector<PreparedRun> prepared;
  std::set<std::string> outputs;
  for (const auto& entry : grid) {
    const std::string out = std::filesystem::absolute(entry.config.out).lexically_normal().string();
    if (entry.config.out.empty() || !outputs.insert(out).second) {
      err << "error: run '" << entry.id << "' has a missing or duplicate output path\n";
      return kExitConfigError;
    }
    try {
      prepared.push_back(prepare(entry.config));
    } catch (const ProtocolError& e) {
      err << "error: run '" << entry.id << "': " << e.what() << '\n';
      return kExitConfigError;
    }
  }

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(grid.size()));

  std::vector<std::optional<Verdict>> verdicts(grid.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  int status = kExitOk;
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) {
          try {
            MatchupResult result = play(grid[i].config, prepared[i]);
            write_outputs(grid[i].config.out, result);
            verdicts[i] = std::move(result.verdict);
          } catch (const ProtocolError& e) {
            const std::lock_guard lock(error_mutex);
            err << "error: run '" << grid[i].id << "': " << e.what() << '\n';
            status = std::max(status, exit_code_for(e));
          }
        }
      });
    }
  }
  if (status != kExitOk) return status;

  std::string csv = "id,max_capital,bankrupt_at,trigger_count,kolmogorov_sum\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Verdict& v = *verdicts[i];
    csv += grid[i].id + "," + v.max_capital.to_string() + "," +
           (v.bankrupt_at ? std::to_string(*v.bankrupt_at) : std::string()) + "," +
           std::to_string(v.trigger_rounds.size()) + "," + v.kolmogorov_sum_at_horizon.to_string() + "\n";
  }
  try {
    write_text_file(summary_path, csv);
  } catch (const ProtocolError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIoError;
  }
  return kExitOk;
}

}  // namespace ufp
