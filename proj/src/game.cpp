#include "ufp/game.hpp"

#include <algorithm>

namespace ufp {

VarianceSource make_variance_source(ForecasterSpec spec) {
  return [spec = std::move(spec)](Round n, NumericMode mode) { return variance_at(spec, n, mode); };
}

Trace run_game(const VarianceSource& forecaster, const SkepticStrategy& skeptic, RealityStrategy& reality,
               const GameConfig& config) {
  if (config.horizon < 1) throw ProtocolError(ErrorCode::InvalidHorizon, "horizon must be >= 1");
  const AfterBankruptcy policy = config.stop_on_bankruptcy ? AfterBankruptcy::Stop : AfterBankruptcy::Continue;

  Trace trace;
  trace.reserve(static_cast<std::size_t>(std::min<Round>(config.horizon, 1 << 20)));
  GameState state = GameState::initial(config.variant, config.mode);
  for (Round n = 1; n <= config.horizon; ++n) {
    if (!state.status.running() && config.stop_on_bankruptcy) break;
    const ForecastMove fmove{forecaster(n, config.mode)};
    validate_forecast(fmove);
    const SkepticMove smove = skeptic(SkepticView{n, state.capital, fmove.variance, trace});
    validate_skeptic_move(state.variant, smove);
    RealityDecision decision = reality.decide(state.capital, n, fmove.variance, smove, state.variant);
    auto [next, record] = apply_round(state, fmove, smove, decision.move, policy);
    state = std::move(next);
    trace.push_back(std::move(record));
  }
  return trace;
}

}  // namespace ufp
