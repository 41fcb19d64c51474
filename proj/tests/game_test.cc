// Copyright 2026 The twoxtwo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "twoxtwo/game.hpp"

#include <gtest/gtest.h>

#include <limits>
#include <set>

#include "test_support.hpp"
#include "twoxtwo/rational.hpp"

namespace twoxtwo {
namespace {

using testing::coordination;
using testing::matching_pennies;
using testing::prisoners_dilemma;
using testing::Rng;
using testing::zero_game;

Rational R(const char* text) { return Rational::parse(text); }

TEST(RationalTest, ParsesLiteralsExactly) {
  EXPECT_EQ(R(".4"), Rational(2, 5));
  EXPECT_EQ(R("-0.25"), Rational(-1, 4));
  EXPECT_EQ(R("+1"), Rational(1));
  EXPECT_EQ(R("5."), Rational(5));
  EXPECT_EQ(R("2/3"), Rational(2, 3));
  EXPECT_EQ(R("-6/4"), Rational(-3, 2));
  EXPECT_EQ(R("0.1") + R("0.2"), R("0.3"));
}

TEST(RationalTest, RejectsMalformedLiterals) {
  for (const char* bad :
       {"", "-", ".", "1/0", "1/", "/2", "1.2.3", "abc", "1e3", "2/-3", "--1", " 1"}) {
    EXPECT_THROW(R(bad), FormatError) << bad;
  }
}

TEST(RationalTest, AlwaysReduced) {
  const Rational r(BigInt(-12), BigInt(-18));
  EXPECT_EQ(r.numerator(), 2);
  EXPECT_EQ(r.denominator(), 3);
  EXPECT_EQ(Rational(BigInt(4), BigInt(-8)).to_string(), "-1/2");
  EXPECT_EQ(Rational(7).to_string(), "7");
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), DomainError);
  EXPECT_THROW(Rational(1) / Rational(0), DomainError);
}

TEST(RationalTest, SerializationRoundTrips) {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const Rational r = rng.rational() * rng.rational();
    EXPECT_EQ(Rational::parse(r.to_string()), r);
  }
}

TEST(RationalTest, ArbitraryPrecision) {
  Rational big = 1;
  for (int i = 0; i < 40; ++i) big *= Rational(1000003);
  EXPECT_EQ((big + 1) - big, 1);
  EXPECT_GT(big.to_string().size(), 200u);
}

// The inline 64-bit representation must agree with plain cpp_rational,
// including across the promotion boundary.
TEST(RationalTest, FastPathMatchesReference) {
  using Ref = boost::multiprecision::cpp_rational;
  Rng rng(12);
  const std::int64_t edges[] = {std::numeric_limits<std::int64_t>::max(),
                                std::numeric_limits<std::int64_t>::min(),
                                (std::int64_t{1} << 62) + 3,
                                3037000499LL,
                                -3037000501LL,
                                1,
                                -1,
                                0,
                                7};
  auto pick = [&]() -> std::pair<Rational, Ref> {
    const std::int64_t n =
        rng.next() % 3 == 0 ? edges[rng.next() % 9] : static_cast<std::int64_t>(rng.next());
    const std::int64_t positive[] = {edges[0], edges[2], edges[3]};
    const std::int64_t d = rng.next() % 2 == 0
                               ? positive[rng.next() % 3]
                               : static_cast<std::int64_t>(rng.next() % 1000000 + 1);
    return {Rational(BigInt(n), BigInt(d)), Ref(BigInt(n), BigInt(d))};
  };
  auto same = [](const Rational& r, const Ref& ref) {
    return r.numerator() == boost::multiprecision::numerator(ref) &&
           r.denominator() == boost::multiprecision::denominator(ref);
  };
  for (int i = 0; i < 3000; ++i) {
    auto [a, ra] = pick();
    auto [b, rb] = pick();
    ASSERT_TRUE(same(a, ra));
    ASSERT_TRUE(same(a + b, ra + rb));
    ASSERT_TRUE(same(a - b, ra - rb));
    ASSERT_TRUE(same(a * b, ra * rb));
    if (!b.is_zero()) {
      ASSERT_TRUE(same(a / b, ra / rb));
    }
    ASSERT_TRUE(same(-a, Ref(-ra)));
    ASSERT_EQ(a < b, ra < rb);
    ASSERT_EQ(a == b, ra == rb);
    // Equality must not depend on which representation produced a value.
    if (!b.is_zero()) {
      ASSERT_EQ((a * b) / b, a);
    }
  }
  EXPECT_EQ(Rational(std::numeric_limits<std::int64_t>::min()).to_string(), "-9223372036854775808");
  EXPECT_EQ(-Rational(std::numeric_limits<std::int64_t>::min()),
            Rational(BigInt("9223372036854775808"), BigInt(1)));
}

TEST(GameTest, FromFlatFollowsRowMajorRowPlayerFirst) {
  const Game pd = prisoners_dilemma();
  EXPECT_EQ(pd.payoff(Player::kRow, Action::kB, Action::kA), 0);
  EXPECT_EQ(pd.payoff(Player::kCol, Action::kA, Action::kB), 0);
  EXPECT_EQ(pd.payoff(Player::kRow, Action::kA, Action::kB), -3);
  EXPECT_EQ(pd.payoff(Player::kCol, Action::kB, Action::kA), -3);

  const Game coord = coordination();
  EXPECT_EQ(coord.payoff(Player::kRow, Action::kA, Action::kA), 2);
  EXPECT_EQ(coord.payoff(Player::kCol, Action::kA, Action::kA), 2);
  for (const Rational& v : zero_game().flat()) EXPECT_EQ(v, 0);
}

TEST(GameTest, WrongArity) {
  const std::vector<Rational> seven(7, Rational(1));
  EXPECT_THROW(game_from_flat(seven), ArityError);
  const std::vector<Rational> nine(9, Rational(1));
  EXPECT_THROW(game_from_flat(nine), ArityError);
}

TEST(GameTest, FlatRoundTrip) {
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    std::array<Rational, 8> v;
    for (auto& x : v) x = rng.rational();
    EXPECT_EQ(game_to_flat(game_from_flat(v)), v);
  }
}

TEST(GameTest, ExpectedPayoff) {
  EXPECT_EQ(expected_payoff(prisoners_dilemma(), Player::kRow,
                            JointDistribution::from_values({0, 0, 0, 1})),
            -2);
  EXPECT_EQ(expected_payoff(matching_pennies(), Player::kRow, JointDistribution::uniform()), 0);
  Rng rng(2);
  for (int i = 0; i < 50; ++i) {
    const Game g = rng.game();
    for (const Player p : kPlayers) {
      EXPECT_EQ(expected_payoff(g, p, JointDistribution::point_mass(kCells[0])),
                g.payoff(p, Action::kA, Action::kA));
    }
  }
}

TEST(GameTest, ExpectedPayoffIsLinearInTheJoint) {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const Game g = rng.game();
    const JointDistribution s1 = rng.joint();
    const JointDistribution s2 = rng.joint();
    const Rational alpha = rng.probability(9);
    std::array<Rational, 4> mix;
    for (int k = 0; k < 4; ++k) {
      mix[k] = alpha * s1.values()[k] + (1 - alpha) * s2.values()[k];
    }
    const auto s = JointDistribution::from_values(mix);
    for (const Player p : kPlayers) {
      EXPECT_EQ(expected_payoff(g, p, s),
                alpha * expected_payoff(g, p, s1) + (1 - alpha) * expected_payoff(g, p, s2));
    }
  }
}

TEST(GameTest, JointValidation) {
  EXPECT_THROW(JointDistribution::from_values({R(".5"), R(".5"), 0}), ArityError);
  EXPECT_THROW(JointDistribution::from_values({R(".5"), R(".5"), R(".1"), 0}), DomainError);
  EXPECT_THROW(JointDistribution::from_values({R("1.5"), R("-.5"), 0, 0}), DomainError);
  EXPECT_THROW(MarginalPair(R("1.1"), 0), DomainError);
  EXPECT_THROW(MarginalPair(0, -1), DomainError);
}

TEST(GameTest, BestResponseSet) {
  for (const char* mix : {"0", "1/3", "1/2", "1"}) {
    EXPECT_EQ(best_response_set(prisoners_dilemma(), Player::kRow, R(mix)),
              (ActionSet{false, true}));
  }
  EXPECT_EQ(best_response_set(matching_pennies(), Player::kRow, R("1/2")), (ActionSet{true, true}));
  EXPECT_EQ(best_response_set(coordination(), Player::kRow, R("1/2")), (ActionSet{true, false}));
  EXPECT_THROW(best_response_set(coordination(), Player::kRow, R("1.01")), DomainError);
  EXPECT_THROW(best_response_set(coordination(), Player::kCol, R("-1/2")), DomainError);
}

TEST(GameTest, Marginals) {
  const auto table5 = JointDistribution::from_values({R(".4"), R(".3"), R(".1"), R(".2")});
  EXPECT_EQ(marginals_from_joint(table5), MarginalPair(R("0.7"), R("0.5")));
  EXPECT_EQ(marginals_from_joint(JointDistribution::point_mass(kCells[3])), MarginalPair(0, 0));
  EXPECT_EQ(marginals_from_joint(JointDistribution::uniform()), MarginalPair(R("1/2"), R("1/2")));
}

TEST(GameTest, Conditionals) {
  const auto table5 = JointDistribution::from_values({R(".4"), R(".3"), R(".1"), R(".2")});
  const ConditionalTable t = conditional(table5, Player::kRow);
  ASSERT_TRUE(t.rows[0] && t.rows[1]);
  EXPECT_EQ((*t.rows[0])[0], R("4/7"));
  EXPECT_EQ((*t.rows[0])[1], R("3/7"));
  EXPECT_EQ((*t.rows[1])[0], R("1/3"));
  EXPECT_EQ((*t.rows[1])[1], R("2/3"));

  const ConditionalTable half =
      conditional(JointDistribution::from_values({R(".5"), R(".5"), 0, 0}), Player::kRow);
  ASSERT_TRUE(half.rows[0]);
  EXPECT_EQ((*half.rows[0])[0], R("1/2"));
  EXPECT_FALSE(half.rows[1]);

  const auto product =
      JointDistribution::from_values({R("1/100"), R("9/100"), R("9/100"), R("81/100")});
  for (const Player p : kPlayers) {
    const ConditionalTable c = conditional(product, p);
    for (const auto& row : c.rows) {
      ASSERT_TRUE(row);
      EXPECT_EQ((*row)[0], R("0.1"));
      EXPECT_EQ((*row)[1], R("0.9"));
    }
  }

  // Column conditioning: distribution of the row action given column A / B.
  const ConditionalTable col = conditional(table5, Player::kCol);
  EXPECT_EQ((*col.rows[0])[0], R("4/5"));
  EXPECT_EQ((*col.rows[1])[1], R("2/5"));
}

TEST(GameTest, ProductJoint) {
  EXPECT_EQ(product_joint(MarginalPair(R("0.1"), R("0.1"))),
            JointDistribution::from_values({R(".01"), R(".09"), R(".09"), R(".81")}));
  EXPECT_EQ(product_joint(MarginalPair(1, 0)),
            JointDistribution::point_mass(Cell{Action::kA, Action::kB}));
  EXPECT_EQ(product_joint(MarginalPair(R("1/2"), R("1/2"))), JointDistribution::uniform());

  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const MarginalPair m(rng.probability(), rng.probability());
    EXPECT_EQ(marginals_from_joint(product_joint(m)), m);
    const JointDistribution s = product_joint(m);
    EXPECT_EQ(product_joint(marginals_from_joint(s)), s);
  }
}

TEST(GameTest, RandomJointsAreValid) {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const JointDistribution s = rng.joint();
    Rational total = 0;
    for (const auto& v : s.values()) total += v;
    EXPECT_EQ(total, 1);
    const MarginalPair m = marginals_from_joint(s);
    EXPECT_TRUE(m.row_a() >= 0 && m.row_a() <= 1);
  }
}

TEST(GameTest, TransformAffine) {
  Rng rng(6);
  const Game g = rng.game();
  EXPECT_EQ(transform_affine(g, Player::kRow, 1, 0, 0), g);

  const Game scaled = transform_affine(prisoners_dilemma(), Player::kRow, 2, 0, 0);
  EXPECT_EQ(scaled, game_from_flat({-2, -6, 0, -4, -1, 0, -3, -2}));

  // Column offsets by the row player's action: -2 against A, -1 against B.
  const Game shifted = transform_affine(coordination(), Player::kCol, 1, -2, -1);
  EXPECT_EQ(shifted, game_from_flat({2, 0, 0, 1, 0, -2, -1, 0}));

  EXPECT_THROW(transform_affine(g, Player::kRow, 0, 0, 0), DomainError);
  EXPECT_THROW(transform_affine(g, Player::kCol, -1, 0, 0), DomainError);
}

TEST(GameTest, BestResponsesInvariantUnderAffineTransforms) {
  Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    const Game g = rng.game();
    const Player p = kPlayers[rng.next() % 2];
    const Game h = transform_affine(g, p, rng.positive_rational(), rng.rational(), rng.rational());
    const Rational mix = rng.probability();
    for (const Player who : kPlayers) {
      EXPECT_EQ(best_response_set(g, who, mix), best_response_set(h, who, mix));
    }
  }
}

TEST(GameTest, Permute) {
  const Game coord = coordination();
  EXPECT_EQ(permute(coord, Symmetry{}), coord);
  EXPECT_EQ(permute(coord, Symmetry{true, false, false}), game_from_flat({0, 1, 2, 0, 0, 1, 2, 0}));
  const Game pd = prisoners_dilemma();
  const Symmetry players{false, false, true};
  EXPECT_EQ(permute(permute(pd, players), players), pd);
  // The prisoner's dilemma is symmetric.
  EXPECT_EQ(permute(pd, players), pd);
}

TEST(GameTest, PermuteIsAGroupAction) {
  Rng rng(8);
  std::set<std::array<int, 8>> distinct;
  for (const Symmetry s : Symmetry::all()) distinct.insert(slot_permutation(s));
  EXPECT_EQ(distinct.size(), 8u);

  for (int i = 0; i < 100; ++i) {
    const Game g = rng.game();
    for (const Symmetry a : Symmetry::all()) {
      const Symmetry inv = inverse(a);
      EXPECT_EQ(permute(permute(g, a), inv), g);
      for (const Symmetry b : Symmetry::all()) {
        EXPECT_EQ(permute(permute(g, a), b), permute(g, compose(a, b)));
      }
      // Orders: pure flags are involutions, the combined swaps have order
      // dividing 4.
      const Game twice = permute(permute(g, a), a);
      const Game four = permute(permute(twice, a), a);
      EXPECT_EQ(four, g);
    }
  }
  int order_four = 0;
  for (const Symmetry a : Symmetry::all()) {
    order_four += compose(a, a) != Symmetry{};
  }
  EXPECT_EQ(order_four, 2);
}

TEST(GameTest, PermuteIsConsistentAcrossGamesJointsAndMarginals) {
  Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    const Game g = rng.game();
    const JointDistribution s = rng.joint();
    const Symmetry sym = rng.symmetry();
    for (const Player p : kPlayers) {
      const Player moved = sym.swap_players ? opponent(p) : p;
      EXPECT_EQ(expected_payoff(g, p, s), expected_payoff(permute(g, sym), moved, permute(s, sym)));
    }
    const MarginalPair m(rng.probability(), rng.probability());
    EXPECT_EQ(permute(product_joint(m), sym), product_joint(permute(m, sym)));
  }
}

}  // namespace
}  // namespace twoxtwo
