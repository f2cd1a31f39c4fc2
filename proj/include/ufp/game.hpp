#pragma once

#include <functional>

#include "ufp/forecaster.hpp"
#include "ufp/reality.hpp"
#include "ufp/skeptic.hpp"

namespace ufp {

using VarianceSource = std::function<Scalar(Round n, NumericMode mode)>;

VarianceSource make_variance_source(ForecasterSpec spec);

struct GameConfig {
  Round horizon = 1;
  NumericMode mode = NumericMode::ExactRational;
  ProtocolVariant variant = ProtocolVariant::Standard;
  bool stop_on_bankruptcy = false;
};

/// Plays rounds 1..horizon (or up to and including the bankruptcy round when
/// stop_on_bankruptcy is set). Validation errors from Skeptic's moves and
/// the forecaster propagate as ProtocolError.
Trace run_game(const VarianceSource& forecaster, const SkepticStrategy& skeptic, RealityStrategy& reality,
               const GameConfig& config);

}  // namespace ufp
