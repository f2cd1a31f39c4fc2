// Independent reference simulation on a separate bignum backend
// (Boost.Multiprecision). Golden values used by the acceptance suite are
// re-derived here.

#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

#include "ufp/acceptance.hpp"
#include "ufp/game.hpp"
#include "ufp/spec_parser.hpp"

namespace {

using boost::multiprecision::cpp_rational;

enum class Kind { Zero, AvoiderConst, AvoiderGeo, Momentum };

struct RefSkeptic {
  Kind kind;
  cpp_rational param;  // eps or m
};

struct RefRound {
  cpp_rational capital, sum;
  bool triggered;
};

// Reality plays s*n when K + f(s*n) <= 1 with s = -sign(M) (+1 on ties), else 0.
std::vector<RefRound> reference_game(const cpp_rational& c, int p, const RefSkeptic& sk, int horizon) {
  std::vector<RefRound> out;
  cpp_rational k = 1, s = 0;
  for (int n = 1; n <= horizon; ++n) {
    cpp_rational v = c;
    for (int i = 0; i < p; ++i) v *= n;
    cpp_rational m = 0, vq = 0;
    if (sk.kind == Kind::Momentum) m = sk.param;
    if ((sk.kind == Kind::AvoiderConst || sk.kind == Kind::AvoiderGeo) && n * n > v) {
      cpp_rational eps = sk.param;
      if (sk.kind == Kind::AvoiderGeo) {
        for (int i = 0; i < n; ++i) eps /= 2;
      }
      const cpp_rational need = (1 - k) / (n * n - v);
      vq = (need > 0 ? need : cpp_rational(0)) + eps;
    }
    const int sign = m > 0 ? -1 : 1;
    const cpp_rational jump = sign * n;
    const cpp_rational f_jump = m * jump + vq * (jump * jump - v);
    const bool trigger = k + f_jump <= 1;
    const cpp_rational x = trigger ? jump : cpp_rational(0);
    k += m * x + vq * (x * x - v);
    s += x;
    out.push_back({k, s, trigger});
  }
  return out;
}

std::optional<int> first_negative(const std::vector<RefRound>& rounds) {
  for (std::size_t i = 0; i < rounds.size(); ++i) {
    if (rounds[i].capital < 0) return static_cast<int>(i) + 1;
  }
  return std::nullopt;
}

TEST(Oracle, ForcedBankruptcyRoundIsFrozenCorrectly) {
  const auto rounds = reference_game(cpp_rational(1, 2), 2, {Kind::AvoiderConst, cpp_rational(1, 1000000)}, 100);
  const auto bankrupt = first_negative(rounds);
  ASSERT_TRUE(bankrupt.has_value());
  EXPECT_EQ(*bankrupt, ufp::acceptance::kForcedBankruptcyRound);
  EXPECT_LT(*bankrupt, 100);
  for (int i = 0; i < *bankrupt; ++i) EXPECT_FALSE(rounds[static_cast<std::size_t>(i)].triggered);

  // Deficit d_n = 1 - K_n more than doubles every round.
  cpp_rational previous = 0;
  for (int i = 0; i < *bankrupt; ++i) {
    const cpp_rational d = 1 - rounds[static_cast<std::size_t>(i)].capital;
    EXPECT_GT(d, 2 * previous);
    previous = d;
  }
}

TEST(Oracle, BankruptcyRoundGrowsAsEpsilonShrinks) {
  std::vector<int> rounds;
  for (int digits : {3, 6, 9, 12}) {
    cpp_rational eps = 1;
    for (int i = 0; i < digits; ++i) eps /= 10;
    rounds.push_back(*first_negative(reference_game(cpp_rational(1, 2), 2, {Kind::AvoiderConst, eps}, 200)));
  }
  EXPECT_EQ(rounds, (std::vector<int>{9, 19, 29, 39}));
}

TEST(Oracle, EngineMatchesReferenceOnTheMatchupGrid) {
  const std::vector<std::pair<std::string, RefSkeptic>> skeptics = {
      {"zero", {Kind::Zero, 0}},
      {"avoider:eps=1e-6", {Kind::AvoiderConst, cpp_rational(1, 1000000)}},
      {"avoider:eps=1/8,decay=geo,ratio=1/2", {Kind::AvoiderGeo, cpp_rational(1, 8)}},
      {"momentum:m=1", {Kind::Momentum, 1}},
      {"momentum:m=-3", {Kind::Momentum, -3}},
  };
  const std::vector<std::tuple<std::string, cpp_rational, int>> forecasters = {
      {"powerlaw:c=1,p=0", 1, 0}, {"powerlaw:c=1,p=1", 1, 1}, {"powerlaw:c=1/2,p=2", cpp_rational(1, 2), 2}};
  constexpr int kHorizon = 300;
  for (const auto& [fspec, c, p] : forecasters) {
    for (const auto& [sspec, ref_skeptic] : skeptics) {
      const auto expected = reference_game(c, p, ref_skeptic, kHorizon);
      ufp::RealityStrategy reality;
      const auto trace = ufp::run_game(ufp::make_variance_source(ufp::parse_forecaster_spec(fspec)),
                                       ufp::make_skeptic(ufp::parse_skeptic_spec(sspec), ufp::NumericMode::ExactRational),
                                       reality, {kHorizon});
      ASSERT_EQ(trace.size(), expected.size());
      for (std::size_t i = 0; i < trace.size(); ++i) {
        ASSERT_EQ(cpp_rational(trace[i].capital_after.to_string()), expected[i].capital)
            << sspec << " vs " << fspec << " round " << i + 1;
        ASSERT_EQ(cpp_rational(trace[i].outcome_sum_after.to_string()), expected[i].sum);
        ASSERT_EQ(trace[i].triggered, expected[i].triggered);
      }
    }
  }
}

TEST(Oracle, ZeroSkepticClosedForm) {
  const auto rounds = reference_game(1, 0, {Kind::Zero, 0}, 1000);
  EXPECT_EQ(rounds.back().sum, 500500);
  EXPECT_EQ(rounds.back().capital, 1);
  for (const auto& r : rounds) EXPECT_TRUE(r.triggered);
}

TEST(Oracle, MomentumHandTrace) {
  const auto rounds = reference_game(1, 0, {Kind::Momentum, 1}, 2);
  EXPECT_EQ(rounds[0].capital, 0);
  EXPECT_EQ(rounds[1].capital, -2);
  EXPECT_EQ(rounds[0].sum, -1);
  EXPECT_EQ(rounds[1].sum, -3);
}

// v_1 = 1 = 1^2 makes the first-round trigger unavoidable for any Skeptic.
TEST(Oracle, ConvergentCaseHasOnlyTheForcedFirstTrigger) {
  const auto rounds = reference_game(1, 0, {Kind::AvoiderGeo, cpp_rational(1, 8)}, 3000);
  EXPECT_TRUE(rounds.front().triggered);
  for (std::size_t i = 1; i < rounds.size(); ++i) ASSERT_FALSE(rounds[i].triggered);
  EXPECT_GT(rounds.back().capital, 0);
  EXPECT_LT(rounds.back().capital, 1);
}

}  // namespace
