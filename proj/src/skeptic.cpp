#include "ufp/skeptic.hpp"

#include <cmath>

#include "ufp/trace_io.hpp"

namespace ufp {

EpsilonSchedule EpsilonSchedule::constant(mpq_class epsilon) {
  if (sgn(epsilon) <= 0) throw std::invalid_argument("epsilon must be positive");
  return {Kind::Constant, std::move(epsilon), 1};
}

EpsilonSchedule EpsilonSchedule::geometric(mpq_class epsilon, mpq_class ratio) {
  if (sgn(epsilon) <= 0) throw std::invalid_argument("epsilon must be positive");
  if (sgn(ratio) <= 0 || ratio >= 1) throw std::invalid_argument("ratio must lie in (0, 1)");
  return {Kind::Geometric, std::move(epsilon), std::move(ratio)};
}

Scalar EpsilonSchedule::at(Round n, NumericMode mode) const {
  if (kind == Kind::Constant) return Scalar::from_rational(epsilon, mode);
  if (mode == NumericMode::Float) {
    return Scalar::real(rational_to_double(epsilon) * std::pow(rational_to_double(ratio), static_cast<double>(n)));
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), ratio.get_num_mpz_t(), static_cast<unsigned long>(n));
  mpz_pow_ui(den.get_mpz_t(), ratio.get_den_mpz_t(), static_cast<unsigned long>(n));
  return Scalar::exact(epsilon * mpq_class(num, den));
}

SkepticMove zero_next(const SkepticView& view) {
  const Scalar zero = view.capital_before.like(0);
  return {zero, zero};
}

SkepticMove avoider_next(const SkepticView& view, const EpsilonSchedule& schedule) {
  const Scalar zero = view.capital_before.like(0);
  const Scalar n = view.capital_before.like(view.n);
  const Scalar headroom = n * n - view.variance;
  if (headroom <= 0) return {zero, zero};
  const Scalar threshold = max(zero, (1 - view.capital_before) / headroom);
  return {zero, threshold + schedule.at(view.n, view.capital_before.mode())};
}

SkepticMove momentum_next(const SkepticView& view, const Scalar& stake_linear) {
  return {stake_linear.in_mode(view.capital_before.mode()), view.capital_before.like(0)};
}

SkepticMove negative_v_next(const SkepticView& view, const Scalar& stake_quadratic) {
  return {view.capital_before.like(0), stake_quadratic.in_mode(view.capital_before.mode())};
}

SkepticMove replay_next(const SkepticView& view, std::span<const SkepticMove> script) {
  if (view.n < 1 || static_cast<std::size_t>(view.n) > script.size()) {
    throw ProtocolError(ErrorCode::ScriptExhausted, "script holds " + std::to_string(script.size()) +
                                                        " moves, round " + std::to_string(view.n) + " requested");
  }
  const SkepticMove& move = script[static_cast<std::size_t>(view.n - 1)];
  const NumericMode mode = view.capital_before.mode();
  return {move.stake_linear.in_mode(mode), move.stake_quadratic.in_mode(mode)};
}

SkepticStrategy make_replay(std::vector<SkepticMove> script) {
  return [script = std::move(script)](const SkepticView& view) { return replay_next(view, script); };
}

SkepticStrategy make_skeptic(const SkepticSpec& spec, NumericMode mode) {
  struct Builder {
    NumericMode mode;
    SkepticStrategy operator()(const ZeroSkeptic&) const { return zero_next; }
    SkepticStrategy operator()(const AvoiderSkeptic& s) const {
      return [schedule = s.schedule](const SkepticView& view) { return avoider_next(view, schedule); };
    }
    SkepticStrategy operator()(const MomentumSkeptic& s) const {
      return [m = Scalar::from_rational(s.stake_linear, mode)](const SkepticView& view) {
        return momentum_next(view, m);
      };
    }
    SkepticStrategy operator()(const NegativeVSkeptic& s) const {
      return [v = Scalar::from_rational(s.stake_quadratic, mode)](const SkepticView& view) {
        return negative_v_next(view, v);
      };
    }
    SkepticStrategy operator()(const ReplaySkeptic& s) const {
      std::vector<SkepticMove> script;
      for (const RoundRecord& r : read_trace(s.path)) script.push_back({r.stake_linear, r.stake_quadratic});
      return make_replay(std::move(script));
    }
  };
  return std::visit(Builder{mode}, spec);
}

}  // namespace ufp
