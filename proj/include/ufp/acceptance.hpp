#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "ufp/skeptic.hpp"

namespace ufp::acceptance {

struct CriterionResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Bankruptcy round of the constant-margin avoider (eps = 1e-6) against
/// v_n = n^2 / 2, from the independent reference simulation.
inline constexpr Round kForcedBankruptcyRound = 19;

CriterionResult capital_ceiling();
CriterionResult trigger_jump();
CriterionResult zero_skeptic_closed_form();
CriterionResult forced_bankruptcy();
CriterionResult survival_sharpness();
CriterionResult momentum_exploitation();
CriterionResult punishment_lethality();
CriterionResult exhaustive_small_instance();
CriterionResult determinism_round_trip();
CriterionResult exact_float_trigger_agreement();

struct Criterion {
  std::string name;
  std::function<CriterionResult()> run;
};

const std::vector<Criterion>& all_criteria();

/// Runs every criterion, printing "PASS|FAIL name (seconds) detail" lines.
std::vector<CriterionResult> run_suite(std::ostream& out);

/// Exhaustive enumeration of open-loop Skeptic policies with M = 0 and V on
/// a finite grid, played against Reality's strategy.
struct ExhaustiveSummary {
  std::uint64_t policies = 0;
  std::uint64_t triggered = 0;
  std::uint64_t declined = 0;
  std::uint64_t violations = 0;
};

ExhaustiveSummary enumerate_policies(Round horizon, const std::function<mpq_class(Round)>& variance,
                                     const std::vector<mpq_class>& stake_grid);

}  // namespace ufp::acceptance
