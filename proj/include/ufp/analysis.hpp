#pragma once

// Finite-horizon checks on a finished trace. None of these establish the
// asymptotic statements; they are the observable shadows over rounds 1..N.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ufp/forecaster.hpp"
#include "ufp/protocol.hpp"

namespace ufp {

struct Verdict {
  Round horizon = 0;
  Scalar max_capital;
  Scalar final_capital;
  std::optional<Round> bankrupt_at;
  std::vector<Round> trigger_rounds;
  Scalar kolmogorov_sum_at_horizon;
  /// min over triggers of max(|S_{n-1}|, |S_n|) / n.
  std::optional<Scalar> min_trigger_jump_ratio;
  Scalar final_mean_outcome;
  bool post_last_trigger_monotone = true;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Float-mode slack for the capital ceiling.
inline constexpr double kFloatCapitalTolerance = 1e-9;

/// Checks that rounds run 1..N contiguously, that every record satisfies the
/// ledger identities (capital, outcome sum, payoff, trigger flag, sticky
/// bankruptcy) and, when a spec is supplied, that recorded variances match
/// it. Throws ProtocolError(MalformedTrace) otherwise.
Verdict analyze_trace(std::span<const RoundRecord> trace, const ForecasterSpec* spec = nullptr);

enum class PropertyOutcome { Pass, Fail, NotApplicable };

std::string_view to_string(PropertyOutcome outcome);

enum class Property {
  CapitalCeiling,
  TriggerJump,
  PostLastTriggerMonotone,
  PunishmentLethal,
  NoTriggerDecline,
};

inline constexpr std::array kAllProperties{Property::CapitalCeiling, Property::TriggerJump,
                                           Property::PostLastTriggerMonotone, Property::PunishmentLethal,
                                           Property::NoTriggerDecline};

std::string_view to_string(Property property);

struct PropertyResult {
  Property property;
  PropertyOutcome outcome = PropertyOutcome::Pass;
  std::optional<Round> round;  // first offending round on Fail
  std::string detail;

  friend bool operator==(const PropertyResult&, const PropertyResult&) = default;
};

/// One entry per Property, in kAllProperties order.
struct PropertyReport {
  std::vector<PropertyResult> results;

  [[nodiscard]] const PropertyResult& at(Property property) const;
  [[nodiscard]] bool all_pass_or_na() const;
  friend bool operator==(const PropertyReport&, const PropertyReport&) = default;
};

PropertyReport check_properties(const Verdict& verdict, std::span<const RoundRecord> trace);

}  // namespace ufp
