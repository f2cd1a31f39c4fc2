#pragma once

#include "ufp/protocol.hpp"

namespace ufp {

/// How Reality breaks the tie between x = +n and x = -n when M_n = 0.
enum class SignPolicy {
  PreferPositive,
  Alternate,  // +1, -1, +1, ... across successive tied triggers
};

std::string_view to_string(SignPolicy policy);

/// Tie-break memory for SignPolicy::Alternate. One per game.
struct TieState {
  int next_sign = +1;
};

struct RealityDecision {
  RealityMove move;
  bool triggered = false;
  int chosen_sign = 0;  // -1, 0 or +1; 0 iff the outcome is 0
};

/// The sign s in {-1, +1} minimizing s * stake_linear. Pure; ties consult
/// the policy and the tie state without advancing it.
int preferred_sign(const Scalar& stake_linear, SignPolicy policy, const TieState& tie_state);

/// Answer to a negative quadratic stake (Modified protocol): s * t where s is
/// the preferred sign and t the smallest integer >= n driving the post-round
/// capital to -1 or below.
RealityMove punishment_magnitude(const Scalar& capital_before, const SkepticMove& smove, const Scalar& variance,
                                 Round n, SignPolicy policy = SignPolicy::PreferPositive,
                                 const TieState& tie_state = {});

/// Reality's explicit strategy. Plays 0 until Skeptic's move lets the
/// sign-minimized jump x = s*n keep the capital at or below 1, then plays
/// that jump. Negative quadratic stakes are punished.
class RealityStrategy {
 public:
  explicit RealityStrategy(SignPolicy policy = SignPolicy::PreferPositive) : policy_(policy) {}

  RealityDecision decide(const Scalar& capital_before, Round n, const Scalar& variance, const SkepticMove& smove,
                         ProtocolVariant variant);

  [[nodiscard]] SignPolicy policy() const noexcept { return policy_; }
  [[nodiscard]] const TieState& tie_state() const noexcept { return tie_state_; }

 private:
  int take_sign(const Scalar& stake_linear);

  SignPolicy policy_;
  TieState tie_state_;
};

}  // namespace ufp
