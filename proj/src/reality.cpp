#include "ufp/reality.hpp"

namespace ufp {

std::string_view to_string(SignPolicy policy) {
  return policy == SignPolicy::PreferPositive ? "positive" : "alternate";
}

int preferred_sign(const Scalar& stake_linear, SignPolicy policy, const TieState& tie_state) {
  const int m = stake_linear.sign();
  if (m != 0) return -m;
  return policy == SignPolicy::PreferPositive ? +1 : tie_state.next_sign;
}

RealityMove punishment_magnitude(const Scalar& capital_before, const SkepticMove& smove, const Scalar& variance,
                                 Round n, SignPolicy policy, const TieState& tie_state) {
  const int sign = preferred_sign(smove.stake_linear, policy, tie_state);
  const Scalar s = capital_before.like(sign);
  // Post-round capital at |x| = t; decreasing in t >= 0 because V < 0 and s*M <= 0.
  const auto capital_at = [&](const Scalar& t) { return capital_before + payoff(smove, variance, s * t); };
  const auto lethal = [&](const Scalar& t) { return capital_at(t) <= -1; };

  Scalar hi = capital_before.like(n);
  if (lethal(hi)) return {s * hi};
  Scalar lo = hi;
  while (!lethal(hi) && hi.is_finite()) {
    lo = hi;
    hi = hi * 2;
  }
  // Invariant: lethal(hi), !lethal(lo), lo < hi.
  while (hi - lo > 1) {
    Scalar mid = ((lo + hi) / hi.like(2)).floor();
    if (mid == lo || mid == hi) break;  // float mode beyond 2^53
    if (lethal(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {s * hi};
}

int RealityStrategy::take_sign(const Scalar& stake_linear) {
  const int sign = preferred_sign(stake_linear, policy_, tie_state_);
  if (stake_linear.sign() == 0 && policy_ == SignPolicy::Alternate) tie_state_.next_sign = -tie_state_.next_sign;
  return sign;
}

RealityDecision RealityStrategy::decide(const Scalar& capital_before, Round n, const Scalar& variance,
                                        const SkepticMove& smove, ProtocolVariant variant) {
  if (variant == ProtocolVariant::Modified && smove.stake_quadratic < 0) {
    RealityMove move = punishment_magnitude(capital_before, smove, variance, n, policy_, tie_state_);
    return {std::move(move), true, take_sign(smove.stake_linear)};
  }
  const int sign = preferred_sign(smove.stake_linear, policy_, tie_state_);
  const Scalar jump = capital_before.like(sign) * n;
  if (capital_before + payoff(smove, variance, jump) <= 1) {
    take_sign(smove.stake_linear);
    return {{jump}, true, sign};
  }
  return {{capital_before.like(0)}, false, 0};
}

}  // namespace ufp
