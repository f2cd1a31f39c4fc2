#include <gtest/gtest.h>

#include "test_support.hpp"
#include "ufp/protocol.hpp"

namespace {

using namespace ufp;
using ufp::testing::fails_with;
using ufp::testing::q;
using ufp::testing::smove;

constexpr auto kExact = NumericMode::ExactRational;

TEST(Payoff, HandEvaluations) {
  EXPECT_EQ(payoff(smove("0", "1/2"), q("2"), q("1")), q("-1/2"));
  EXPECT_EQ(payoff(smove("2", "1"), q("1/2"), q("-1")), q("-3/2"));
  EXPECT_EQ(payoff(smove("0", "0"), q("37/3"), q("-91/7")), 0);
}

TEST(ValidateSkepticMove, StandardRejectsNegativeQuadraticStake) {
  EXPECT_TRUE(fails_with(ErrorCode::NegativeQuadraticStake,
                         [] { validate_skeptic_move(ProtocolVariant::Standard, smove("0", "-1/10")); }));
  EXPECT_NO_THROW(validate_skeptic_move(ProtocolVariant::Modified, smove("0", "-1/10")));
  EXPECT_NO_THROW(validate_skeptic_move(ProtocolVariant::Standard, smove("-5", "0")));
}

TEST(ApplyRound, ZeroStakesAndJumpTriggers) {
  const auto state = GameState::initial(ProtocolVariant::Standard, kExact);
  const auto [next, record] = apply_round(state, {q("1")}, smove("0", "0"), {q("1")});
  EXPECT_EQ(next.capital, 1);
  EXPECT_EQ(next.outcome_sum, 1);
  EXPECT_EQ(next.round, 2);
  EXPECT_TRUE(next.status.running());
  EXPECT_TRUE(record.triggered);
  EXPECT_EQ(record.n, 1);
}

TEST(ApplyRound, NegativeCapitalMarksBankruptcy) {
  const auto state = GameState::initial(ProtocolVariant::Standard, kExact);
  const auto [next, record] = apply_round(state, {q("1/2")}, smove("2", "1"), {q("-1")});
  EXPECT_EQ(next.capital, q("-1/2"));
  EXPECT_EQ(next.outcome_sum, -1);
  EXPECT_EQ(next.round, 2);
  EXPECT_EQ(next.status.bankrupt_since, 1);
  EXPECT_EQ(record.status.bankrupt_since, 1);
}

TEST(ApplyRound, ZeroOutcomeCostsVTimesV) {
  const auto state = GameState::initial(ProtocolVariant::Standard, kExact);
  const auto [next, record] = apply_round(state, {q("1")}, smove("0", "1/4"), {q("0")});
  EXPECT_EQ(next.capital, q("3/4"));
  EXPECT_EQ(next.outcome_sum, 0);
  EXPECT_FALSE(record.triggered);
  EXPECT_EQ(record.payoff, q("-1/4"));
}

TEST(ApplyRound, BankruptStateIsTerminalUnlessContinuing) {
  auto state = GameState::initial(ProtocolVariant::Standard, kExact);
  state = apply_round(state, {q("1/2")}, smove("2", "1"), {q("-1")}).first;
  EXPECT_TRUE(fails_with(ErrorCode::GameOver, [&] { apply_round(state, {q("1")}, smove("0", "0"), {q("0")}); }));

  // Bankruptcy stays recorded at its first round even if capital recovers.
  const auto [next, record] =
      apply_round(state, {q("0")}, smove("5", "0"), {q("2")}, AfterBankruptcy::Continue);
  EXPECT_EQ(next.capital, q("19/2"));
  EXPECT_EQ(next.status.bankrupt_since, 1);
  EXPECT_EQ(record.status.bankrupt_since, 1);
}

TEST(ApplyRound, RejectsIllegalInputs) {
  const auto state = GameState::initial(ProtocolVariant::Standard, kExact);
  EXPECT_TRUE(fails_with(ErrorCode::NegativeQuadraticStake,
                         [&] { apply_round(state, {q("1")}, smove("0", "-1"), {q("0")}); }));
  EXPECT_TRUE(fails_with(ErrorCode::NegativeVariance,
                         [&] { apply_round(state, {q("-1")}, smove("0", "0"), {q("0")}); }));
}

TEST(GameState, InitialState) {
  for (auto mode : {NumericMode::ExactRational, NumericMode::Float}) {
    const auto s = GameState::initial(ProtocolVariant::Modified, mode);
    EXPECT_EQ(s.round, 1);
    EXPECT_EQ(s.capital, 1);
    EXPECT_EQ(s.outcome_sum, 0);
    EXPECT_TRUE(s.status.running());
    EXPECT_EQ(s.mode(), mode);
  }
}

}  // namespace
