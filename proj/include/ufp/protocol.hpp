#pragma once

// Unbounded forecasting protocol with zero forecast means. Each round n:
// Forecaster announces a variance v_n >= 0, Skeptic stakes (M_n, V_n),
// Reality announces x_n, and Skeptic's capital changes by
//   f_n(x_n) = M_n x_n + V_n (x_n^2 - v_n).

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ufp/errors.hpp"
#include "ufp/scalar.hpp"

namespace ufp {

using Round = std::int64_t;

enum class ProtocolVariant {
  Standard,  // V_n >= 0
  Modified,  // any real V_n
};

std::string_view to_string(ProtocolVariant variant);

struct ForecastMove {
  Scalar variance;
};

struct SkepticMove {
  Scalar stake_linear;     // M_n
  Scalar stake_quadratic;  // V_n

  friend bool operator==(const SkepticMove&, const SkepticMove&) = default;
};

struct RealityMove {
  Scalar outcome;
};

/// Running, or bankrupt since a given round. Bankruptcy is sticky.
struct GameStatus {
  std::optional<Round> bankrupt_since;

  [[nodiscard]] bool running() const noexcept { return !bankrupt_since.has_value(); }
  friend bool operator==(const GameStatus&, const GameStatus&) = default;
};

/// One line of the game ledger.
struct RoundRecord {
  Round n = 0;
  Scalar variance;
  Scalar stake_linear;
  Scalar stake_quadratic;
  Scalar outcome;
  Scalar payoff;
  Scalar capital_after;
  Scalar outcome_sum_after;
  bool triggered = false;
  GameStatus status;

  friend bool operator==(const RoundRecord&, const RoundRecord&) = default;
};

using Trace = std::vector<RoundRecord>;

/// State before round `round` is played: capital is K_{round-1} and
/// outcome_sum is S_{round-1}. Initial capital is always 1.
struct GameState {
  Round round = 1;
  Scalar capital;
  Scalar outcome_sum;
  ProtocolVariant variant = ProtocolVariant::Standard;
  GameStatus status;

  static GameState initial(ProtocolVariant variant, NumericMode mode);
  [[nodiscard]] NumericMode mode() const noexcept { return capital.mode(); }
};

/// What Skeptic legally knows when choosing the round-n move.
struct SkepticView {
  Round n = 1;
  Scalar capital_before;
  Scalar variance;
  std::span<const RoundRecord> history;
};

/// f_n(x) = M x + V (x^2 - v).
Scalar payoff(const SkepticMove& move, const Scalar& variance, const Scalar& outcome);

/// Throws ProtocolError(NegativeQuadraticStake) when V < 0 under Standard.
void validate_skeptic_move(ProtocolVariant variant, const SkepticMove& move);

/// Throws ProtocolError(NegativeVariance) when v < 0 (or NaN).
void validate_forecast(const ForecastMove& move);

enum class AfterBankruptcy { Stop, Continue };

/// Plays one round. With AfterBankruptcy::Stop a bankrupt state is terminal
/// and applying another round throws ProtocolError(GameOver); with Continue
/// play goes on and the bankruptcy round stays recorded.
std::pair<GameState, RoundRecord> apply_round(const GameState& state, const ForecastMove& fmove,
                                              const SkepticMove& smove, const RealityMove& rmove,
                                              AfterBankruptcy policy = AfterBankruptcy::Stop);

}  // namespace ufp
