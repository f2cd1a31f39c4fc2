#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "ufp/acceptance.hpp"
#include "ufp/game.hpp"
#include "ufp/reality.hpp"

namespace {

using namespace ufp;
using ufp::testing::q;
using ufp::testing::smove;

constexpr auto kStandard = ProtocolVariant::Standard;
constexpr auto kModified = ProtocolVariant::Modified;

TEST(PreferredSign, OpposesTheLinearStake) {
  const TieState tie;
  EXPECT_EQ(preferred_sign(q("3"), SignPolicy::PreferPositive, tie), -1);
  EXPECT_EQ(preferred_sign(q("0"), SignPolicy::PreferPositive, tie), +1);
  EXPECT_EQ(preferred_sign(q("-2"), SignPolicy::PreferPositive, tie), +1);
  EXPECT_EQ(preferred_sign(q("-2"), SignPolicy::Alternate, TieState{-1}), +1);
  EXPECT_EQ(preferred_sign(q("0"), SignPolicy::Alternate, TieState{-1}), -1);
}

TEST(Decide, TriggersWhenJumpKeepsCapitalAtOne) {
  RealityStrategy reality;
  const auto d = reality.decide(q("1"), 1, q("1"), smove("0", "0"), kStandard);
  EXPECT_TRUE(d.triggered);
  EXPECT_EQ(d.move.outcome, 1);
  EXPECT_EQ(d.chosen_sign, 1);
}

TEST(Decide, PlaysZeroWhenJumpWouldLiftCapitalAboveOne) {
  RealityStrategy reality;
  const auto d = reality.decide(q("1"), 10, q("1"), smove("0", "1/500"), kStandard);
  EXPECT_FALSE(d.triggered);
  EXPECT_EQ(d.move.outcome, 0);
  EXPECT_EQ(d.chosen_sign, 0);
}

TEST(Decide, UsesTheSignMinimizedPayoff) {
  RealityStrategy reality;
  const auto d = reality.decide(q("1"), 2, q("1"), smove("1", "0"), kStandard);
  EXPECT_TRUE(d.triggered);
  EXPECT_EQ(d.move.outcome, -2);
  EXPECT_EQ(d.chosen_sign, -1);
}

TEST(Decide, TriggerBoundaryIsInclusive) {
  // K + f(n) == 1 exactly: 3/4 + (1/12)(4 - 1) = 1.
  RealityStrategy reality;
  EXPECT_TRUE(reality.decide(q("3/4"), 2, q("1"), smove("0", "1/12"), kStandard).triggered);
  EXPECT_FALSE(reality.decide(q("3/4"), 2, q("1"), smove("0", "1/11"), kStandard).triggered);
}

TEST(Decide, AlternateFlipsOnlyOnTiedTriggers) {
  RealityStrategy reality(SignPolicy::Alternate);
  EXPECT_EQ(reality.decide(q("1"), 1, q("1"), smove("0", "0"), kStandard).move.outcome, 1);
  EXPECT_EQ(reality.decide(q("1"), 2, q("1"), smove("0", "0"), kStandard).move.outcome, -2);
  // A non-tied trigger and a non-trigger leave the tie state alone.
  EXPECT_EQ(reality.decide(q("1"), 3, q("1"), smove("-1", "0"), kStandard).move.outcome, 3);
  EXPECT_FALSE(reality.decide(q("1"), 4, q("1"), smove("0", "1"), kStandard).triggered);
  EXPECT_EQ(reality.decide(q("1"), 5, q("1"), smove("0", "0"), kStandard).move.outcome, 5);
  EXPECT_EQ(reality.decide(q("1"), 6, q("1"), smove("0", "0"), kStandard).move.outcome, -6);
}

TEST(PunishmentMagnitude, SmallestLethalIntegerAtLeastN) {
  EXPECT_EQ(punishment_magnitude(q("1"), smove("0", "-1/10"), q("0"), 3).outcome, 5);
  EXPECT_EQ(punishment_magnitude(q("1"), smove("0", "-1"), q("0"), 1).outcome, 2);
  EXPECT_EQ(punishment_magnitude(q("0"), smove("4", "-1"), q("0"), 1).outcome, -1);
  // Already lethal at t = n: the magnitude is n itself.
  EXPECT_EQ(punishment_magnitude(q("-7"), smove("0", "-1"), q("0"), 4).outcome, 4);
}

TEST(PunishmentMagnitude, HugeThresholdsUseExponentialSearch) {
  // 1 - t^2 * 10^-30 <= -1  <=>  t >= sqrt(2) * 10^15.
  const Scalar x = punishment_magnitude(q("1"), smove("0", "-1e-30"), q("0"), 1).outcome;
  EXPECT_EQ(x.to_string(), "1414213562373096");
}

TEST(PunishmentMagnitude, FloatModeMatchesExactOnSmallCases) {
  EXPECT_EQ(punishment_magnitude(Scalar::real(1.0), {Scalar::real(0.0), Scalar::real(-0.1)}, Scalar::real(0.0), 3)
                .outcome,
            Scalar::real(5.0));
}

TEST(Decide, PunishesNegativeStakesUnderModified) {
  RealityStrategy reality;
  const auto d = reality.decide(q("1"), 3, q("0"), smove("0", "-1/10"), kModified);
  EXPECT_TRUE(d.triggered);
  EXPECT_EQ(d.move.outcome, 5);
  EXPECT_EQ(d.chosen_sign, 1);
}

// Random exact moves: triggered rounds end at or below capital 1, and
// zero rounds leave both jumps above 1.
TEST(RealityProperty, TriggerAndZeroMoveSoundness) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> small(-20, 20);
  std::uniform_int_distribution<int> positive(0, 40);
  std::uniform_int_distribution<int> den(1, 12);
  for (int trial = 0; trial < 5000; ++trial) {
    const Round n = 1 + trial % 9;
    const Scalar capital = Scalar::exact(mpq_class(1, 1) - mpq_class(positive(rng), den(rng)));
    const Scalar variance = Scalar::exact(mpq_class(positive(rng), den(rng)));
    const SkepticMove m{Scalar::exact(mpq_class(small(rng), den(rng))), Scalar::exact(mpq_class(positive(rng), 4 * den(rng)))};
    RealityStrategy reality;
    const auto d = reality.decide(capital, n, variance, m, kStandard);
    const Scalar after = capital + payoff(m, variance, d.move.outcome);
    if (d.triggered) {
      ASSERT_LE(after, 1);
      ASSERT_EQ(d.move.outcome.abs(), n);
    } else {
      ASSERT_EQ(d.move.outcome, 0);
      ASSERT_GT(capital + payoff(m, variance, capital.like(n)), 1);
      ASSERT_GT(capital + payoff(m, variance, capital.like(-n)), 1);
      ASSERT_LE(after, capital);
    }
  }
}

TEST(RealityProperty, PunishmentIsLethalAndMinimal) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(1, 50);
  std::uniform_int_distribution<int> lin(-10, 10);
  for (int trial = 0; trial < 500; ++trial) {
    const Round n = 1 + trial % 7;
    const Scalar capital = Scalar::exact(mpq_class(num(rng) - 25, 3));
    const Scalar variance = Scalar::exact(mpq_class(num(rng), 5));
    const SkepticMove m{Scalar::exact(mpq_class(lin(rng))), Scalar::exact(mpq_class(-num(rng), 97))};
    const Scalar x = punishment_magnitude(capital, m, variance, n).outcome;
    const Scalar t = x.abs();
    ASSERT_GE(t, n);
    ASSERT_LE(capital + payoff(m, variance, x), -1);
    if (t > n) {
      const Scalar shorter = x.sign() > 0 ? x - 1 : x + 1;
      ASSERT_GT(capital + payoff(m, variance, shorter), -1);
    }
  }
}

// Brute force with run_game over every open-loop policy, independent of the
// prefix-sharing enumeration used by the acceptance suite.
TEST(RealityProperty, ExhaustiveGridAgreesWithBruteForce) {
  std::vector<mpq_class> grid;
  for (int k = 0; k <= 8; ++k) grid.emplace_back(k, 4);
  const Round horizon = 4;
  const auto variance = [](Round n) { return mpq_class(n * n, 2); };

  std::uint64_t triggered = 0, declined = 0, violations = 0;
  std::vector<std::size_t> digits(horizon, 0);
  for (std::uint64_t policy = 0; policy < 6561; ++policy) {
    std::uint64_t code = policy;
    std::vector<SkepticMove> script;
    for (Round k = 0; k < horizon; ++k) {
      script.push_back({q("0"), Scalar::exact(grid[code % 9])});
      code /= 9;
    }
    RealityStrategy reality;
    const Trace trace = run_game([&](Round n, NumericMode) { return Scalar::exact(variance(n)); },
                                 make_replay(script), reality, {horizon, NumericMode::ExactRational});
    bool any = false;
    for (const auto& r : trace) any = any || r.triggered;
    if (any) {
      ++triggered;
    } else if (trace.back().capital_after < 1) {
      ++declined;
    } else {
      ++violations;
    }
  }
  const auto summary = acceptance::enumerate_policies(horizon, variance, grid);
  EXPECT_EQ(violations, 0u);
  EXPECT_EQ(summary.policies, 6561u);
  EXPECT_EQ(summary.triggered, triggered);
  EXPECT_EQ(summary.declined, declined);
  EXPECT_EQ(summary.violations, 0u);
}

TEST(RealityProperty, ExhaustiveGridAcrossHorizonsAndForecasts) {
  std::vector<mpq_class> grid;
  for (int k = 0; k <= 8; ++k) grid.emplace_back(k, 4);
  const std::vector<std::function<mpq_class(Round)>> forecasts = {
      [](Round n) { return mpq_class(n * n, 2); },
      [](Round) { return mpq_class(1); },
      [](Round n) { return mpq_class(n, 3); },
  };
  for (const auto& v : forecasts) {
    for (Round horizon = 1; horizon <= 5; ++horizon) {
      const auto summary = acceptance::enumerate_policies(horizon, v, grid);
      std::uint64_t expected = 1;
      for (Round k = 0; k < horizon; ++k) expected *= 9;
      EXPECT_EQ(summary.policies, expected);
      EXPECT_EQ(summary.violations, 0u) << "horizon " << horizon;
    }
  }
}

}  // namespace
