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

#ifndef TWOXTWO_EMBEDDING_HPP_
#define TWOXTWO_EMBEDDING_HPP_

#include <cmath>
#include <numbers>
#include <optional>
#include <utility>

#include "twoxtwo/game.hpp"
#include "twoxtwo/graphs.hpp"
#include "twoxtwo/rational.hpp"

namespace twoxtwo {

// Advantage of action A over action B against each pure opponent action.
// Offsets that depend only on the opponent's action cancel out; a positive
// scale multiplies both entries.
struct AdvantageVector {
  Rational given_opponent_a;
  Rational given_opponent_b;

  friend bool operator==(const AdvantageVector&, const AdvantageVector&) = default;
};

inline AdvantageVector advantage(const Game& g, Player p) {
  return AdvantageVector{advantage_given(g, p, Action::kA), advantage_given(g, p, Action::kB)};
}

// Coprime integer direction of a nonzero advantage vector. The sign is kept:
// negating a direction changes the game.
struct Direction {
  BigInt given_opponent_a;
  BigInt given_opponent_b;

  // Degrees in [0, 360): atan2(given_opponent_b, given_opponent_a).
  double angle_degrees() const {
    const double rad =
        std::atan2(given_opponent_b.convert_to<double>(), given_opponent_a.convert_to<double>());
    double deg = rad * 180.0 / std::numbers::pi;
    if (deg < 0) deg += 360.0;
    if (deg >= 360.0) deg -= 360.0;
    return deg;
  }

  friend bool operator==(const Direction&, const Direction&) = default;
};

inline std::optional<Direction> direction_of(const AdvantageVector& v) {
  if (v.given_opponent_a.is_zero() && v.given_opponent_b.is_zero()) {
    return std::nullopt;
  }
  const BigInt da = v.given_opponent_a.denominator();
  const BigInt db = v.given_opponent_b.denominator();
  const BigInt common = boost::multiprecision::lcm(da, db);
  BigInt a = v.given_opponent_a.numerator() * (common / da);
  BigInt b = v.given_opponent_b.numerator() * (common / db);
  const BigInt g = boost::multiprecision::gcd(a, b);
  a /= g;
  b /= g;
  return Direction{a, b};
}

// Equilibrium-invariant embedding: one direction per player, absent for a
// player who is indifferent everywhere.
struct EmbeddingPoint {
  std::optional<Direction> row;
  std::optional<Direction> col;

  const std::optional<Direction>& direction(Player p) const {
    return p == Player::kRow ? row : col;
  }
  std::optional<double> row_angle_degrees() const {
    return row ? std::optional(row->angle_degrees()) : std::nullopt;
  }
  std::optional<double> col_angle_degrees() const {
    return col ? std::optional(col->angle_degrees()) : std::nullopt;
  }
  bool nontrivial() const { return row.has_value() && col.has_value(); }

  friend bool operator==(const EmbeddingPoint&, const EmbeddingPoint&) = default;
};

inline EmbeddingPoint embed(const Game& g) {
  return EmbeddingPoint{direction_of(advantage(g, Player::kRow)),
                        direction_of(advantage(g, Player::kCol))};
}

namespace embedding_detail {

inline int sign(const BigInt& v) { return v.sign(); }

inline Pref pref(const std::optional<Direction>& d, bool given_a) {
  if (!d) return Pref::kIndifferent;
  return pref_from_sign(sign(given_a ? d->given_opponent_a : d->given_opponent_b));
}

}  // namespace embedding_detail

inline BRGraph br_graph_of_embedding(const EmbeddingPoint& e) {
  using embedding_detail::pref;
  return BRGraph{pref(e.row, true), pref(e.row, false), pref(e.col, true), pref(e.col, false)};
}

inline BRClass class_of_embedding(const EmbeddingPoint& e,
                                  const BRNameTable& names = BRNameTable::builtin()) {
  return br_class_of_graph(br_graph_of_embedding(e), names);
}

// Symmetry action on embeddings:
//   swap row actions:    row (a, b) -> (-a, -b), col (a, b) -> (b, a)
//   swap column actions: row (a, b) -> (b, a),   col (a, b) -> (-a, -b)
//   swap players:        row <-> col
inline EmbeddingPoint permute(EmbeddingPoint e, Symmetry s) {
  auto negate = [](std::optional<Direction>& d) {
    if (d) d = Direction{-d->given_opponent_a, -d->given_opponent_b};
  };
  auto exchange = [](std::optional<Direction>& d) {
    if (d) std::swap(d->given_opponent_a, d->given_opponent_b);
  };
  if (s.swap_row_actions) {
    negate(e.row);
    exchange(e.col);
  }
  if (s.swap_col_actions) {
    exchange(e.row);
    negate(e.col);
  }
  if (s.swap_players) std::swap(e.row, e.col);
  return e;
}

}  // namespace twoxtwo

#endif  // TWOXTWO_EMBEDDING_HPP_
