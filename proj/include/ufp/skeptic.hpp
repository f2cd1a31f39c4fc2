#pragma once

#include <filesystem>
#include <functional>
#include <variant>
#include <vector>

#include "ufp/protocol.hpp"

namespace ufp {

/// Positive margin schedule for the threshold avoider: eps (Constant) or
/// eps * ratio^n (Geometric, 0 < ratio < 1).
struct EpsilonSchedule {
  enum class Kind { Constant, Geometric };

  Kind kind = Kind::Constant;
  mpq_class epsilon;
  mpq_class ratio = 1;

  static EpsilonSchedule constant(mpq_class epsilon);
  static EpsilonSchedule geometric(mpq_class epsilon, mpq_class ratio);

  [[nodiscard]] Scalar at(Round n, NumericMode mode) const;
};

SkepticMove zero_next(const SkepticView& view);

/// Smallest quadratic stake keeping Reality's trigger test false, plus the
/// schedule margin. When n^2 <= v_n no V >= 0 avoids the trigger and the
/// move is (0, 0).
SkepticMove avoider_next(const SkepticView& view, const EpsilonSchedule& schedule);

SkepticMove momentum_next(const SkepticView& view, const Scalar& stake_linear);

/// Only legal under the Modified protocol.
SkepticMove negative_v_next(const SkepticView& view, const Scalar& stake_quadratic);

/// script[0] is the round-1 move. Throws ProtocolError(ScriptExhausted).
SkepticMove replay_next(const SkepticView& view, std::span<const SkepticMove> script);

using SkepticStrategy = std::function<SkepticMove(const SkepticView&)>;

// Parsed strategy descriptions (see spec_parser.hpp for the text grammar).
struct ZeroSkeptic {};
struct AvoiderSkeptic {
  EpsilonSchedule schedule;
};
struct MomentumSkeptic {
  mpq_class stake_linear;
};
struct NegativeVSkeptic {
  mpq_class stake_quadratic;
};
struct ReplaySkeptic {
  std::filesystem::path path;
};

using SkepticSpec = std::variant<ZeroSkeptic, AvoiderSkeptic, MomentumSkeptic, NegativeVSkeptic, ReplaySkeptic>;

/// Builds a strategy producing moves in `mode`. Replay scripts are read here
/// from a trace file (its M and V columns).
SkepticStrategy make_skeptic(const SkepticSpec& spec, NumericMode mode);

/// Strategy replaying an in-memory script.
SkepticStrategy make_replay(std::vector<SkepticMove> script);

}  // namespace ufp
