#include "ufp/acceptance.hpp"

#include <chrono>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include "ufp/analysis.hpp"
#include "ufp/cli.hpp"
#include "ufp/game.hpp"
#include "ufp/spec_parser.hpp"
#include "ufp/trace_io.hpp"

namespace ufp::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

const std::vector<std::string> kGridSkeptics = {
    "zero", "avoider:eps=1e-6", "avoider:eps=1/8,decay=geo,ratio=1/2", "momentum:m=1", "momentum:m=-3",
};
const std::vector<std::string> kGridForecasters = {
    "powerlaw:c=1,p=0",
    "powerlaw:c=1,p=1",
    "powerlaw:c=1/2,p=2",
};
// Skeptics that never sit on Reality's trigger threshold.
const std::vector<std::string> kNonAdversarialSkeptics = {"zero", "momentum:m=1", "momentum:m=-3"};

constexpr Round kExactGridRounds = 2000;
constexpr Round kFloatGridRounds = 100000;
constexpr double kGridBudgetSeconds = 60.0;
constexpr double kExhaustiveBudgetSeconds = 120.0;

RunConfig config_for(const std::string& forecaster, const std::string& skeptic, NumericMode mode, Round rounds,
                     ProtocolVariant variant = ProtocolVariant::Standard) {
  RunConfig c;
  c.forecaster = forecaster;
  c.skeptic = skeptic;
  c.mode = mode;
  c.horizon = rounds;
  c.variant = variant;
  return c;
}

std::string label(const RunConfig& c) {
  return c.skeptic + " vs " + c.forecaster + " [" + std::string(to_string(c.mode)) + "]";
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

class Failures {
 public:
  void add(const std::string& what) {
    if (count_++ < 3) text_ += (text_.empty() ? "" : "; ") + what;
  }
  [[nodiscard]] bool empty() const { return count_ == 0; }
  [[nodiscard]] std::string summary(const std::string& ok) const {
    if (count_ == 0) return ok;
    return std::to_string(count_) + " failure(s): " + text_;
  }

 private:
  std::size_t count_ = 0;
  std::string text_;
};

CriterionResult finish(std::string name, const Failures& failures, const std::string& ok, Clock::time_point start) {
  return {std::move(name), failures.empty(), failures.summary(ok), seconds_since(start)};
}

// Rounds where |S| jumps by n must leave max(|S_{n-1}|, |S_n|) >= n / 2.
void check_trigger_jumps(const Trace& trace, const std::string& what, Failures& failures, std::size_t& triggers) {
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const auto& r = trace[i];
    if (!r.triggered) continue;
    ++triggers;
    const Scalar before = i == 0 ? r.outcome_sum_after.like(0) : trace[i - 1].outcome_sum_after;
    if (max(before.abs(), r.outcome_sum_after.abs()) * 2 < r.n) {
      failures.add(what + " round " + std::to_string(r.n));
      return;
    }
  }
}

std::set<Round> trigger_set(const Trace& trace) {
  std::set<Round> rounds;
  for (const auto& r : trace) {
    if (r.triggered) rounds.insert(r.n);
  }
  return rounds;
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() /
             ("ufp-acceptance-" + name + "-" + std::to_string(Clock::now().time_since_epoch().count()));
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

CriterionResult capital_ceiling() {
  const auto start = Clock::now();
  Failures failures;
  std::size_t rounds = 0;
  for (NumericMode mode : {NumericMode::ExactRational, NumericMode::Float}) {
    const Round horizon = mode == NumericMode::ExactRational ? kExactGridRounds : kFloatGridRounds;
    for (const auto& f : kGridForecasters) {
      for (const auto& s : kGridSkeptics) {
        const RunConfig c = config_for(f, s, mode, horizon);
        const MatchupResult result = play_matchup(c);
        rounds += result.trace.size();
        const auto& ceiling = result.report.at(Property::CapitalCeiling);
        if (result.trace.size() != static_cast<std::size_t>(horizon)) failures.add(label(c) + " short trace");
        if (ceiling.outcome != PropertyOutcome::Pass) failures.add(label(c) + ": " + ceiling.detail);
      }
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed > kGridBudgetSeconds) failures.add("runtime " + std::to_string(elapsed) + " s over budget");
  return finish("CapitalCeiling", failures,
                "30 matchups, " + std::to_string(rounds) + " rounds, K_n <= 1 (exact) / 1 + 1e-9 (float)", start);
}

CriterionResult trigger_jump() {
  const auto start = Clock::now();
  Failures failures;
  std::size_t triggers = 0;
  for (const auto& f : kGridForecasters) {
    for (const auto& s : kGridSkeptics) {
      const RunConfig c = config_for(f, s, NumericMode::ExactRational, kExactGridRounds);
      const MatchupResult result = play_matchup(c);
      check_trigger_jumps(result.trace, label(c), failures, triggers);
      if (result.report.at(Property::TriggerJump).outcome == PropertyOutcome::Fail) {
        failures.add(label(c) + " property report");
      }
    }
  }
  return finish("TriggerJump", failures, std::to_string(triggers) + " triggered rounds, all jumps >= n/2", start);
}

CriterionResult zero_skeptic_closed_form() {
  const auto start = Clock::now();
  Failures failures;
  constexpr Round n = 1000;
  const MatchupResult result = play_matchup(config_for("constant:c=1", "zero", NumericMode::ExactRational, n));
  if (result.verdict.trigger_rounds.size() != static_cast<std::size_t>(n)) failures.add("not every round triggered");
  const auto& last = result.trace.back();
  if (last.outcome_sum_after != Scalar::integer(n * (n + 1) / 2, NumericMode::ExactRational)) {
    failures.add("S_N = " + last.outcome_sum_after.to_string());
  }
  if (last.capital_after != 1) failures.add("K_N = " + last.capital_after.to_string());
  return finish("ZeroSkepticClosedForm", failures, "S_1000 = 500500, K_1000 = 1, 1000 triggers", start);
}

CriterionResult forced_bankruptcy() {
  const auto start = Clock::now();
  Failures failures;
  const MatchupResult result =
      play_matchup(config_for("powerlaw:c=1/2,p=2", "avoider:eps=1e-6", NumericMode::ExactRational, 100));
  const auto& v = result.verdict;
  if (!v.bankrupt_at) {
    failures.add("never bankrupt");
  } else {
    if (*v.bankrupt_at != kForcedBankruptcyRound) failures.add("bankrupt at " + std::to_string(*v.bankrupt_at));
    if (!v.trigger_rounds.empty() && v.trigger_rounds.front() <= *v.bankrupt_at) {
      failures.add("trigger at round " + std::to_string(v.trigger_rounds.front()));
    }
  }
  return finish("ForcedBankruptcy", failures,
                "bankrupt at round " + std::to_string(kForcedBankruptcyRound) + ", no trigger before it", start);
}

CriterionResult survival_sharpness() {
  const auto start = Clock::now();
  Failures failures;
  const MatchupResult result = play_matchup(
      config_for("constant:c=1", "avoider:eps=1/8,decay=geo,ratio=1/2", NumericMode::ExactRational, 10000));
  const auto& v = result.verdict;
  if (!v.trigger_rounds.empty()) {
    std::string rounds;
    for (std::size_t i = 0; i < std::min<std::size_t>(v.trigger_rounds.size(), 5); ++i) {
      rounds += (i ? "," : "") + std::to_string(v.trigger_rounds[i]);
    }
    failures.add(std::to_string(v.trigger_rounds.size()) + " trigger(s) at rounds " + rounds);
  }
  if (v.bankrupt_at) failures.add("bankrupt at " + std::to_string(*v.bankrupt_at));
  if (!(v.final_capital > 0 && v.final_capital < 1)) {
    failures.add("K_N ~ " + std::to_string(v.final_capital.to_double()) + " outside (0, 1)");
  }
  CriterionResult outcome = finish("SurvivalSharpness", failures, "no triggers, no bankruptcy, 0 < K_10000 < 1", start);
  std::ostringstream observed;
  observed << "; observed K_N ~ " << v.final_capital.to_double() << ", bankrupt: " << (v.bankrupt_at ? "yes" : "no");
  outcome.detail += observed.str();
  return outcome;
}

CriterionResult momentum_exploitation() {
  const auto start = Clock::now();
  Failures failures;
  const MatchupResult result =
      play_matchup(config_for("constant:c=1", "momentum:m=1", NumericMode::ExactRational, 2));
  const auto& t = result.trace;
  if (!t[0].triggered || t[0].outcome != -1) failures.add("x_1 = " + t[0].outcome.to_string());
  if (!t[1].triggered || t[1].outcome != -2) failures.add("x_2 = " + t[1].outcome.to_string());
  if (t[0].capital_after != 0) failures.add("K_1 = " + t[0].capital_after.to_string());
  if (t[1].capital_after != -2) failures.add("K_2 = " + t[1].capital_after.to_string());
  if (result.verdict.bankrupt_at != 2) failures.add("bankruptcy round differs from 2");
  return finish("MomentumExploitation", failures, "x = (-1, -2), K = (0, -2), bankrupt at 2", start);
}

CriterionResult punishment_lethality() {
  const auto start = Clock::now();
  Failures failures;
  const MatchupResult result = play_matchup(
      config_for("constant:c=0", "negv:v=-1/10", NumericMode::ExactRational, 1, ProtocolVariant::Modified));
  const auto& r = result.trace.front();
  const Scalar expected = punishment_magnitude(Scalar::integer(1, NumericMode::ExactRational), {r.stake_linear, r.stake_quadratic},
                                               r.variance, 1)
                              .outcome;
  if (r.outcome != expected) failures.add("x_1 = " + r.outcome.to_string());
  if (!(r.capital_after <= -1)) failures.add("K_1 = " + r.capital_after.to_string());

  const auto dir = scratch_dir("punish");
  RunConfig standard = config_for("constant:c=0", "negv:v=-1/10", NumericMode::ExactRational, 1);
  standard.out = dir / "standard.jsonl";
  std::ostringstream diagnostics;
  const int code = run_command(standard, diagnostics);
  if (code != kExitConfigError) failures.add("standard variant exit code " + std::to_string(code));
  if (diagnostics.str().find("NegativeQuadraticStake") == std::string::npos) failures.add("missing diagnostic");
  std::filesystem::remove_all(dir);
  return finish("PunishmentLethality", failures,
                "modified: x_1 = " + r.outcome.to_string() + ", K_1 = " + r.capital_after.to_string() +
                    "; standard: exit 2",
                start);
}

ExhaustiveSummary enumerate_policies(Round horizon, const std::function<mpq_class(Round)>& variance,
                                     const std::vector<mpq_class>& stake_grid) {
  ExhaustiveSummary summary;
  std::vector<std::uint64_t> subtree(static_cast<std::size_t>(horizon) + 1, 1);
  for (Round d = horizon - 1; d >= 0; --d) {
    subtree[static_cast<std::size_t>(d)] = subtree[static_cast<std::size_t>(d) + 1] * stake_grid.size();
  }
  const Scalar zero = Scalar::integer(0, NumericMode::ExactRational);

  // Reality's decision is deterministic, so open-loop policies sharing a
  // prefix share the game state up to that point.
  std::function<void(const GameState&)> descend = [&](const GameState& state) {
    const Round n = state.round;
    const ForecastMove fmove{Scalar::exact(variance(n))};
    for (const mpq_class& stake : stake_grid) {
      const SkepticMove smove{zero, Scalar::exact(stake)};
      RealityStrategy reality;
      const RealityDecision decision = reality.decide(state.capital, n, fmove.variance, smove, state.variant);
      auto [next, record] = apply_round(state, fmove, smove, decision.move, AfterBankruptcy::Continue);
      const std::uint64_t leaves = subtree[static_cast<std::size_t>(n)];
      if (record.triggered) {
        summary.triggered += leaves;
        summary.policies += leaves;
      } else if (n == horizon) {
        ++summary.policies;
        if (next.capital < 1) {
          ++summary.declined;
        } else {
          ++summary.violations;
        }
      } else {
        descend(next);
      }
    }
  };
  descend(GameState::initial(ProtocolVariant::Standard, NumericMode::ExactRational));
  return summary;
}

CriterionResult exhaustive_small_instance() {
  const auto start = Clock::now();
  Failures failures;
  std::vector<mpq_class> grid;
  for (int k = 0; k <= 8; ++k) grid.emplace_back(k, 4);
  const auto summary = enumerate_policies(6, [](Round n) { return mpq_class(n * n, 2); }, grid);
  if (summary.policies != 531441) failures.add("enumerated " + std::to_string(summary.policies) + " policies");
  if (summary.violations != 0) failures.add(std::to_string(summary.violations) + " policies neither trigger nor decline");
  const double elapsed = seconds_since(start);
  if (elapsed > kExhaustiveBudgetSeconds) failures.add("runtime over budget");
  return finish("ExhaustiveSmallInstance", failures,
                std::to_string(summary.policies) + " policies: " + std::to_string(summary.triggered) +
                    " trigger, " + std::to_string(summary.declined) + " end with K_6 < 1",
                start);
}

CriterionResult determinism_round_trip() {
  const auto start = Clock::now();
  Failures failures;
  const auto dir = scratch_dir("determinism");
  std::vector<RunConfig> configs;
  for (NumericMode mode : {NumericMode::ExactRational, NumericMode::Float}) {
    for (const auto& f : kGridForecasters) {
      for (const auto& s : kGridSkeptics) configs.push_back(config_for(f, s, mode, 300));
    }
    configs.push_back(config_for("constant:c=1", "negv:v=-1/10", mode, 50, ProtocolVariant::Modified));
  }
  configs.back().sign_policy = SignPolicy::Alternate;

  for (std::size_t i = 0; i < configs.size(); ++i) {
    RunConfig first = configs[i];
    RunConfig second = configs[i];
    first.out = dir / ("run" + std::to_string(i) + "a.jsonl");
    second.out = dir / ("run" + std::to_string(i) + "b.jsonl");
    std::ostringstream err;
    if (run_command(first, err) != kExitOk || run_command(second, err) != kExitOk) {
      failures.add(label(configs[i]) + ": " + err.str());
      continue;
    }
    const std::string trace_a = read_text_file(first.out);
    if (trace_a != read_text_file(second.out)) failures.add(label(configs[i]) + " traces differ");
    const std::string verdict_a = read_text_file(verdict_path_for(first.out));
    if (verdict_a != read_text_file(verdict_path_for(second.out))) failures.add(label(configs[i]) + " verdicts differ");

    const Trace reread = read_trace(first.out);
    const ForecasterSpec spec = resolve_forecaster(parse_forecaster_spec(configs[i].forecaster));
    const Verdict verdict = analyze_trace(reread, &spec);
    if (verdict_document(verdict, check_properties(verdict, reread)) != verdict_a) {
      failures.add(label(configs[i]) + " re-analysis differs from stored verdict");
    }
  }
  std::filesystem::remove_all(dir);
  return finish("DeterminismRoundTrip", failures,
                std::to_string(configs.size()) + " matchups byte-identical and re-analysed exactly", start);
}

CriterionResult exact_float_trigger_agreement() {
  const auto start = Clock::now();
  Failures failures;
  std::size_t triggers = 0;
  for (const auto& f : kGridForecasters) {
    for (const auto& s : kNonAdversarialSkeptics) {
      const auto exact = play_matchup(config_for(f, s, NumericMode::ExactRational, 1000));
      const auto real = play_matchup(config_for(f, s, NumericMode::Float, 1000));
      const auto exact_rounds = trigger_set(exact.trace);
      triggers += exact_rounds.size();
      if (exact_rounds != trigger_set(real.trace)) failures.add(s + " vs " + f);
    }
  }
  return finish("ExactFloatTriggerAgreement", failures,
                "9 matchups, " + std::to_string(triggers) + " trigger rounds identical in both modes", start);
}

const std::vector<Criterion>& all_criteria() {
  static const std::vector<Criterion> criteria = {
      {"CapitalCeiling", capital_ceiling},
      {"TriggerJump", trigger_jump},
      {"ZeroSkepticClosedForm", zero_skeptic_closed_form},
      {"ForcedBankruptcy", forced_bankruptcy},
      {"SurvivalSharpness", survival_sharpness},
      {"MomentumExploitation", momentum_exploitation},
      {"PunishmentLethality", punishment_lethality},
      {"ExhaustiveSmallInstance", exhaustive_small_instance},
      {"DeterminismRoundTrip", determinism_round_trip},
      {"ExactFloatTriggerAgreement", exact_float_trigger_agreement},
  };
  return criteria;
}

std::vector<CriterionResult> run_suite(std::ostream& out) {
  std::vector<CriterionResult> results;
  for (const auto& criterion : all_criteria()) {
    CriterionResult result;
    try {
      result = criterion.run();
    } catch (const std::exception& e) {
      result = {criterion.name, false, std::string("exception: ") + e.what(), 0.0};
    }
    out << (result.passed ? "PASS " : "FAIL ") << std::left << std::setw(28) << result.name << std::right
        << std::fixed << std::setprecision(2) << std::setw(8) << result.seconds << " s  " << result.detail << '\n'
        << std::flush;
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace ufp::acceptance
