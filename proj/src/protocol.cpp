#include "ufp/protocol.hpp"

namespace ufp {

std::string_view to_string(ProtocolVariant variant) {
  return variant == ProtocolVariant::Standard ? "standard" : "modified";
}

GameState GameState::initial(ProtocolVariant variant, NumericMode mode) {
  GameState state;
  state.capital = Scalar::integer(1, mode);
  state.outcome_sum = Scalar::integer(0, mode);
  state.variant = variant;
  return state;
}

Scalar payoff(const SkepticMove& move, const Scalar& variance, const Scalar& outcome) {
  return move.stake_linear * outcome + move.stake_quadratic * (outcome * outcome - variance);
}

void validate_skeptic_move(ProtocolVariant variant, const SkepticMove& move) {
  if (variant == ProtocolVariant::Standard && move.stake_quadratic < 0) {
    throw ProtocolError(ErrorCode::NegativeQuadraticStake,
                        "V = " + move.stake_quadratic.to_string() + " is illegal under the standard protocol");
  }
}

void validate_forecast(const ForecastMove& move) {
  if (!(move.variance >= 0)) {
    throw ProtocolError(ErrorCode::NegativeVariance, "v = " + move.variance.to_string());
  }
}

std::pair<GameState, RoundRecord> apply_round(const GameState& state, const ForecastMove& fmove,
                                              const SkepticMove& smove, const RealityMove& rmove,
                                              AfterBankruptcy policy) {
  if (!state.status.running() && policy == AfterBankruptcy::Stop) {
    throw ProtocolError(ErrorCode::GameOver,
                        "Skeptic went bankrupt in round " + std::to_string(*state.status.bankrupt_since));
  }
  validate_forecast(fmove);
  validate_skeptic_move(state.variant, smove);

  RoundRecord record;
  record.n = state.round;
  record.variance = fmove.variance;
  record.stake_linear = smove.stake_linear;
  record.stake_quadratic = smove.stake_quadratic;
  record.outcome = rmove.outcome;
  record.payoff = payoff(smove, fmove.variance, rmove.outcome);
  record.capital_after = state.capital + record.payoff;
  record.outcome_sum_after = state.outcome_sum + rmove.outcome;
  record.triggered = rmove.outcome.abs() >= record.n;

  GameState next = state;
  next.round = state.round + 1;
  next.capital = record.capital_after;
  next.outcome_sum = record.outcome_sum_after;
  if (next.status.running() && next.capital < 0) next.status.bankrupt_since = state.round;
  record.status = next.status;
  return {std::move(next), std::move(record)};
}

}  // namespace ufp
