#include "ufp/analysis.hpp"

#include <cmath>

namespace ufp {

namespace {

[[noreturn]] void malformed(Round n, const std::string& what) {
  throw ProtocolError(ErrorCode::MalformedTrace, "round " + std::to_string(n) + ": " + what);
}

// Equality that also identifies NaN with NaN, so a float trace that
// legitimately carries NaN still re-verifies.
bool identical(const Scalar& a, const Scalar& b) {
  if (a == b) return true;
  return !a.is_exact() && std::isnan(a.to_double()) && std::isnan(b.to_double());
}

bool within_ceiling(const Scalar& capital) {
  if (capital.is_exact()) return capital <= 1;
  return capital.to_double() <= 1.0 + kFloatCapitalTolerance;
}

Scalar jump_size(const Scalar& sum_before, const Scalar& sum_after) {
  return max(sum_before.abs(), sum_after.abs());
}

}  // namespace

Verdict analyze_trace(std::span<const RoundRecord> trace, const ForecasterSpec* spec) {
  if (trace.empty()) throw ProtocolError(ErrorCode::MalformedTrace, "empty trace");
  const NumericMode mode = trace.front().capital_after.mode();

  Verdict verdict;
  verdict.horizon = static_cast<Round>(trace.size());
  verdict.kolmogorov_sum_at_horizon = Scalar::integer(0, mode);

  Scalar capital = Scalar::integer(1, mode);
  Scalar sum = Scalar::integer(0, mode);
  GameStatus status;
  std::optional<std::size_t> last_trigger;

  for (std::size_t i = 0; i < trace.size(); ++i) {
    const RoundRecord& r = trace[i];
    const Round n = static_cast<Round>(i) + 1;
    if (r.n != n) malformed(n, "found round number " + std::to_string(r.n));
    try {
      if (!(r.variance >= 0) && !std::isnan(r.variance.to_double())) malformed(n, "negative variance");
      if (spec != nullptr && !identical(r.variance, variance_at(*spec, n, mode))) {
        malformed(n, "variance differs from the forecaster");
      }
      const Scalar expected_payoff = payoff({r.stake_linear, r.stake_quadratic}, r.variance, r.outcome);
      if (!identical(r.payoff, expected_payoff)) malformed(n, "payoff does not match f_n(x_n)");
      const Scalar expected_capital = capital + r.payoff;
      if (!identical(r.capital_after, expected_capital)) malformed(n, "capital breaks the ledger identity");
      const Scalar expected_sum = sum + r.outcome;
      if (!identical(r.outcome_sum_after, expected_sum)) malformed(n, "outcome sum breaks the ledger identity");
      if (r.triggered != (r.outcome.abs() >= n)) malformed(n, "trigger flag disagrees with |x_n| >= n");
      if (status.running() && r.capital_after < 0) status.bankrupt_since = n;
      if (r.status != status) malformed(n, "status disagrees with the capital history");

      if (i == 0 || verdict.max_capital < r.capital_after) verdict.max_capital = r.capital_after;
      const Scalar nn = Scalar::integer(n, mode);
      verdict.kolmogorov_sum_at_horizon += r.variance / (nn * nn);
      if (r.triggered) {
        verdict.trigger_rounds.push_back(n);
        Scalar ratio = jump_size(sum, r.outcome_sum_after) / nn;
        if (!verdict.min_trigger_jump_ratio || ratio < *verdict.min_trigger_jump_ratio) {
          verdict.min_trigger_jump_ratio = std::move(ratio);
        }
        last_trigger = i;
      }
    } catch (const std::logic_error&) {
      malformed(n, "values do not share one numeric mode");
    }
    capital = r.capital_after;
    sum = r.outcome_sum_after;
  }

  verdict.final_capital = capital;
  verdict.bankrupt_at = status.bankrupt_since;
  verdict.final_mean_outcome = sum / Scalar::integer(verdict.horizon, mode);

  Scalar previous = last_trigger ? trace[*last_trigger].capital_after : Scalar::integer(1, mode);
  for (std::size_t i = last_trigger ? *last_trigger + 1 : 0; i < trace.size(); ++i) {
    if (trace[i].capital_after > previous) {
      verdict.post_last_trigger_monotone = false;
      break;
    }
    previous = trace[i].capital_after;
  }
  return verdict;
}

std::string_view to_string(PropertyOutcome outcome) {
  switch (outcome) {
    case PropertyOutcome::Pass: return "pass";
    case PropertyOutcome::Fail: return "fail";
    case PropertyOutcome::NotApplicable: return "not_applicable";
  }
  return "unknown";
}

std::string_view to_string(Property property) {
  switch (property) {
    case Property::CapitalCeiling: return "CapitalCeiling";
    case Property::TriggerJump: return "TriggerJump";
    case Property::PostLastTriggerMonotone: return "PostLastTriggerMonotone";
    case Property::PunishmentLethal: return "PunishmentLethal";
    case Property::NoTriggerDecline: return "NoTriggerDecline";
  }
  return "Unknown";
}

const PropertyResult& PropertyReport::at(Property property) const {
  for (const auto& r : results) {
    if (r.property == property) return r;
  }
  throw std::out_of_range("property missing from report");
}

bool PropertyReport::all_pass_or_na() const {
  for (const auto& r : results) {
    if (r.outcome == PropertyOutcome::Fail) return false;
  }
  return true;
}

PropertyReport check_properties(const Verdict& verdict, std::span<const RoundRecord> trace) {
  PropertyReport report;
  const auto fail = [](Property p, Round n, std::string detail) {
    return PropertyResult{p, PropertyOutcome::Fail, n, std::move(detail)};
  };

  {
    PropertyResult result{Property::CapitalCeiling, PropertyOutcome::Pass, std::nullopt, {}};
    if (!within_ceiling(verdict.max_capital)) {
      result = fail(Property::CapitalCeiling, 0, "max capital " + verdict.max_capital.to_string());
      for (const auto& r : trace) {
        if (!within_ceiling(r.capital_after)) {
          result = fail(Property::CapitalCeiling, r.n, "K = " + r.capital_after.to_string() + " exceeds 1");
          break;
        }
      }
    }
    report.results.push_back(std::move(result));
  }

  {
    PropertyResult result{Property::TriggerJump, PropertyOutcome::Pass, std::nullopt, {}};
    if (verdict.trigger_rounds.empty()) result.outcome = PropertyOutcome::NotApplicable;
    for (std::size_t i = 0; i < trace.size(); ++i) {
      const auto& r = trace[i];
      if (!r.triggered) continue;
      const Scalar before = i == 0 ? r.outcome_sum_after.like(0) : trace[i - 1].outcome_sum_after;
      if (jump_size(before, r.outcome_sum_after) * 2 < r.n) {
        result = fail(Property::TriggerJump, r.n, "max(|S_{n-1}|, |S_n|) below n/2");
        break;
      }
    }
    report.results.push_back(std::move(result));
  }

  {
    PropertyResult result{Property::PostLastTriggerMonotone, PropertyOutcome::Pass, std::nullopt, {}};
    if (!verdict.post_last_trigger_monotone) {
      result = fail(Property::PostLastTriggerMonotone, 0, "capital increased after the last trigger");
      const Round last = verdict.trigger_rounds.empty() ? 0 : verdict.trigger_rounds.back();
      for (std::size_t i = static_cast<std::size_t>(last); i < trace.size(); ++i) {
        const Scalar previous = i == 0 ? trace[i].capital_after.like(1) : trace[i - 1].capital_after;
        if (trace[i].capital_after > previous) {
          result.round = trace[i].n;
          break;
        }
      }
    }
    report.results.push_back(std::move(result));
  }

  {
    PropertyResult result{Property::PunishmentLethal, PropertyOutcome::NotApplicable, std::nullopt, {}};
    for (const auto& r : trace) {
      if (!(r.stake_quadratic < 0)) continue;
      if (r.capital_after <= -1) {
        result.outcome = PropertyOutcome::Pass;
      } else {
        result = fail(Property::PunishmentLethal, r.n, "K = " + r.capital_after.to_string() + " above -1");
        break;
      }
    }
    report.results.push_back(std::move(result));
  }

  {
    PropertyResult result{Property::NoTriggerDecline, PropertyOutcome::NotApplicable, std::nullopt, {}};
    if (verdict.trigger_rounds.empty()) {
      bool staked = false;
      for (const auto& r : trace) staked = staked || (r.variance > 0 && r.stake_quadratic > 0);
      if (staked) {
        if (verdict.final_capital < 1) {
          result.outcome = PropertyOutcome::Pass;
        } else {
          result = fail(Property::NoTriggerDecline, verdict.horizon, "final capital did not decline");
        }
      }
    }
    report.results.push_back(std::move(result));
  }
  return report;
}

}  // namespace ufp
