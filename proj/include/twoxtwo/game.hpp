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

#ifndef TWOXTWO_GAME_HPP_
#define TWOXTWO_GAME_HPP_

#include <array>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "twoxtwo/errors.hpp"
#include "twoxtwo/rational.hpp"

namespace twoxtwo {

enum class Player { kRow = 0, kCol = 1 };
enum class Action { kA = 0, kB = 1 };

constexpr Player opponent(Player p) { return p == Player::kRow ? Player::kCol : Player::kRow; }
constexpr Action other(Action a) { return a == Action::kA ? Action::kB : Action::kA; }
constexpr int index(Player p) { return static_cast<int>(p); }
constexpr int index(Action a) { return static_cast<int>(a); }
constexpr char label(Action a) { return a == Action::kA ? 'A' : 'B'; }

inline constexpr std::array<Player, 2> kPlayers = {Player::kRow, Player::kCol};
inline constexpr std::array<Action, 2> kActions = {Action::kA, Action::kB};

// A joint pure action. Cells are numbered row-major: AA=0, AB=1, BA=2, BB=3.
struct Cell {
  Action row = Action::kA;
  Action col = Action::kA;

  constexpr int index() const { return 2 * static_cast<int>(row) + static_cast<int>(col); }
  static constexpr Cell from_index(int i) {
    return Cell{static_cast<Action>(i / 2), static_cast<Action>(i % 2)};
  }
  std::string name() const { return {label(row), label(col)}; }
  friend constexpr bool operator==(Cell, Cell) = default;
};

inline constexpr std::array<Cell, 4> kCells = {
    Cell{Action::kA, Action::kA}, Cell{Action::kA, Action::kB}, Cell{Action::kB, Action::kA},
    Cell{Action::kB, Action::kB}};

// The cell reached when `p` plays `own` and the opponent plays `theirs`.
constexpr Cell cell_for(Player p, Action own, Action theirs) {
  return p == Player::kRow ? Cell{own, theirs} : Cell{theirs, own};
}
constexpr Action own_action(Player p, Cell c) { return p == Player::kRow ? c.row : c.col; }

// Exact payoffs of a 2x2 game. The flat layout is the row player's payoffs
// row-major followed by the column player's payoffs row-major:
//   G1(A,A) G1(A,B) G1(B,A) G1(B,B) G2(A,A) G2(A,B) G2(B,A) G2(B,B)
class Game {
 public:
  Game() = default;

  const Rational& payoff(Player p, Cell c) const { return flat_[4 * index(p) + c.index()]; }
  const Rational& payoff(Player p, Action row, Action col) const {
    return payoff(p, Cell{row, col});
  }
  const std::array<Rational, 8>& flat() const { return flat_; }

  friend bool operator==(const Game&, const Game&) = default;

 private:
  friend Game game_from_flat(std::span<const Rational> values);
  std::array<Rational, 8> flat_{};
};

inline Game game_from_flat(std::span<const Rational> values) {
  if (values.size() != 8) {
    throw ArityError("a 2x2 game needs 8 payoffs, got " + std::to_string(values.size()));
  }
  Game g;
  for (std::size_t i = 0; i < 8; ++i) g.flat_[i] = values[i];
  return g;
}

inline Game game_from_flat(std::initializer_list<Rational> values) {
  return game_from_flat(std::span<const Rational>(values.begin(), values.size()));
}

inline std::array<Rational, 8> game_to_flat(const Game& g) { return g.flat(); }

// Probability distribution over the four joint actions.
class JointDistribution {
 public:
  // Throws ArityError for != 4 values and DomainError unless the values are
  // nonnegative and sum to exactly 1.
  static JointDistribution from_values(std::span<const Rational> values) {
    if (values.size() != 4) {
      throw ArityError("a joint distribution needs 4 probabilities, got " +
                       std::to_string(values.size()));
    }
    JointDistribution s;
    Rational total = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      if (values[i].sign() < 0) {
        throw DomainError("negative probability " + values[i].to_string());
      }
      s.prob_[i] = values[i];
      total += values[i];
    }
    if (total != 1) {
      throw DomainError("joint probabilities sum to " + total.to_string());
    }
    return s;
  }
  static JointDistribution from_values(std::initializer_list<Rational> values) {
    return from_values(std::span<const Rational>(values.begin(), values.size()));
  }

  static JointDistribution point_mass(Cell c) {
    JointDistribution s;
    s.prob_[c.index()] = 1;
    return s;
  }
  static JointDistribution uniform() {
    JointDistribution s;
    s.prob_.fill(Rational(1, 4));
    return s;
  }

  const Rational& prob(Cell c) const { return prob_[c.index()]; }
  const std::array<Rational, 4>& values() const { return prob_; }

  friend bool operator==(const JointDistribution&, const JointDistribution&) = default;
  friend auto operator<=>(const JointDistribution& a, const JointDistribution& b) {
    return a.prob_ <=> b.prob_;
  }

 private:
  JointDistribution() = default;
  std::array<Rational, 4> prob_{};
};

// Each player's probability of playing A.
class MarginalPair {
 public:
  MarginalPair(Rational row_a, Rational col_a)
      : row_a_(std::move(row_a)), col_a_(std::move(col_a)) {
    check(row_a_);
    check(col_a_);
  }

  const Rational& row_a() const { return row_a_; }
  const Rational& col_a() const { return col_a_; }
  const Rational& prob_a(Player p) const { return p == Player::kRow ? row_a_ : col_a_; }
  Rational prob(Player p, Action a) const { return a == Action::kA ? prob_a(p) : 1 - prob_a(p); }

  friend bool operator==(const MarginalPair&, const MarginalPair&) = default;

 private:
  static void check(const Rational& v) {
    if (v.sign() < 0 || v > 1) {
      throw DomainError("marginal probability " + v.to_string() + " outside [0,1]");
    }
  }
  Rational row_a_;
  Rational col_a_;
};

// Distribution of the other player's action given the conditioning player's
// action. A row is empty when its conditioning action has probability zero.
struct ConditionalTable {
  Player conditioning = Player::kRow;
  std::array<std::optional<std::array<Rational, 2>>, 2> rows;
};

struct ActionSet {
  bool a = false;
  bool b = false;

  bool contains(Action x) const { return x == Action::kA ? a : b; }
  int size() const { return static_cast<int>(a) + static_cast<int>(b); }
  friend bool operator==(const ActionSet&, const ActionSet&) = default;
};

inline Rational expected_payoff(const Game& g, Player p, const JointDistribution& s) {
  Rational total = 0;
  for (const Cell c : kCells) total += s.prob(c) * g.payoff(p, c);
  return total;
}

// Payoff to `p` for playing `own` against an opponent who plays A with
// probability `opponent_mix`.
inline Rational payoff_against(const Game& g, Player p, Action own, const Rational& opponent_mix) {
  return opponent_mix * g.payoff(p, cell_for(p, own, Action::kA)) +
         (1 - opponent_mix) * g.payoff(p, cell_for(p, own, Action::kB));
}

// How much better A is than B for `p` when the opponent plays `theirs`.
inline Rational advantage_given(const Game& g, Player p, Action theirs) {
  return g.payoff(p, cell_for(p, Action::kA, theirs)) -
         g.payoff(p, cell_for(p, Action::kB, theirs));
}

inline ActionSet best_response_set(const Game& g, Player p, const Rational& opponent_mix) {
  if (opponent_mix.sign() < 0 || opponent_mix > 1) {
    throw DomainError("opponent mix " + opponent_mix.to_string() + " outside [0,1]");
  }
  const Rational va = payoff_against(g, p, Action::kA, opponent_mix);
  const Rational vb = payoff_against(g, p, Action::kB, opponent_mix);
  return ActionSet{va >= vb, vb >= va};
}

inline MarginalPair marginals_from_joint(const JointDistribution& s) {
  const auto& v = s.values();
  return MarginalPair(v[0] + v[1], v[0] + v[2]);
}

inline ConditionalTable conditional(const JointDistribution& s, Player conditioning) {
  ConditionalTable table;
  table.conditioning = conditioning;
  for (const Action given : kActions) {
    const Rational pa = s.prob(cell_for(conditioning, given, Action::kA));
    const Rational pb = s.prob(cell_for(conditioning, given, Action::kB));
    const Rational mass = pa + pb;
    if (mass.is_zero()) continue;
    table.rows[index(given)] = std::array<Rational, 2>{pa / mass, pb / mass};
  }
  return table;
}

inline JointDistribution product_joint(const MarginalPair& m) {
  std::array<Rational, 4> v;
  for (const Cell c : kCells) {
    v[c.index()] = m.prob(Player::kRow, c.row) * m.prob(Player::kCol, c.col);
  }
  return JointDistribution::from_values(v);
}

// p's payoffs become scale * G_p(a) + offset[opponent's action].
inline Game transform_affine(const Game& g, Player p, const Rational& scale,
                             const Rational& offset_given_opponent_a,
                             const Rational& offset_given_opponent_b) {
  if (scale.sign() <= 0) {
    throw DomainError("affine scale must be positive, got " + scale.to_string());
  }
  std::array<Rational, 8> v = g.flat();
  for (const Cell c : kCells) {
    const Action theirs = own_action(opponent(p), c);
    const Rational& offset =
        theirs == Action::kA ? offset_given_opponent_a : offset_given_opponent_b;
    v[4 * index(p) + c.index()] = scale * g.payoff(p, c) + offset;
  }
  return game_from_flat(v);
}

// An element of the order-8 symmetry group of 2x2 games. Applying it swaps
// the row player's actions, then the column player's actions, then the
// players, each only when its flag is set.
struct Symmetry {
  bool swap_row_actions = false;
  bool swap_col_actions = false;
  bool swap_players = false;

  friend constexpr bool operator==(Symmetry, Symmetry) = default;

  static constexpr std::array<Symmetry, 8> all() {
    std::array<Symmetry, 8> out{};
    for (int i = 0; i < 8; ++i) {
      out[i] = Symmetry{(i & 4) != 0, (i & 2) != 0, (i & 1) != 0};
    }
    return out;
  }
  constexpr int code() const { return 4 * swap_row_actions + 2 * swap_col_actions + swap_players; }
};

namespace detail {

// For each step, the destination cell (r,c) takes its value from the source
// cell returned here. Player swap additionally exchanges the two tensors.
inline Cell source_cell_row_swap(Cell c) { return Cell{other(c.row), c.col}; }
inline Cell source_cell_col_swap(Cell c) { return Cell{c.row, other(c.col)}; }
inline Cell source_cell_player_swap(Cell c) { return Cell{c.col, c.row}; }

}  // namespace detail

inline Game permute(const Game& g, Symmetry s) {
  std::array<Rational, 8> v = g.flat();
  auto apply = [&v](auto source, bool exchange_players) {
    std::array<Rational, 8> next;
    for (const Player p : kPlayers) {
      const Player from = exchange_players ? opponent(p) : p;
      for (const Cell c : kCells) {
        next[4 * index(p) + c.index()] = v[4 * index(from) + source(c).index()];
      }
    }
    v = std::move(next);
  };
  if (s.swap_row_actions) apply(detail::source_cell_row_swap, false);
  if (s.swap_col_actions) apply(detail::source_cell_col_swap, false);
  if (s.swap_players) apply(detail::source_cell_player_swap, true);
  return game_from_flat(v);
}

inline JointDistribution permute(const JointDistribution& joint, Symmetry s) {
  std::array<Rational, 4> v = joint.values();
  auto apply = [&v](auto source) {
    std::array<Rational, 4> next;
    for (const Cell c : kCells) next[c.index()] = v[source(c).index()];
    v = std::move(next);
  };
  if (s.swap_row_actions) apply(detail::source_cell_row_swap);
  if (s.swap_col_actions) apply(detail::source_cell_col_swap);
  if (s.swap_players) apply(detail::source_cell_player_swap);
  return JointDistribution::from_values(v);
}

inline MarginalPair permute(const MarginalPair& m, Symmetry s) {
  Rational p = m.row_a();
  Rational q = m.col_a();
  if (s.swap_row_actions) p = 1 - p;
  if (s.swap_col_actions) q = 1 - q;
  if (s.swap_players) std::swap(p, q);
  return MarginalPair(p, q);
}

// Where each of the 8 flat payoff slots ends up under `s`: result[i] is the
// source slot of destination slot i.
inline std::array<int, 8> slot_permutation(Symmetry s) {
  std::array<Rational, 8> probe;
  for (int i = 0; i < 8; ++i) probe[i] = i;
  const Game moved = permute(game_from_flat(probe), s);
  std::array<int, 8> out{};
  for (int i = 0; i < 8; ++i) {
    out[i] = static_cast<int>(moved.flat()[i].numerator());
  }
  return out;
}

// The symmetry equal to applying `first` and then `second`.
inline Symmetry compose(Symmetry first, Symmetry second) {
  const auto a = slot_permutation(first);
  const auto b = slot_permutation(second);
  std::array<int, 8> combined{};
  for (int i = 0; i < 8; ++i) combined[i] = a[b[i]];
  for (const Symmetry s : Symmetry::all()) {
    if (slot_permutation(s) == combined) return s;
  }
  throw std::logic_error("symmetry group not closed under composition");
}

inline Symmetry inverse(Symmetry s) {
  for (const Symmetry t : Symmetry::all()) {
    if (compose(s, t) == Symmetry{}) return t;
  }
  throw std::logic_error("symmetry without inverse");
}

inline std::string to_string(const Game& g) {
  std::string out;
  for (const Rational& v : g.flat()) {
    if (!out.empty()) out += ' ';
    out += v.to_string();
  }
  return out;
}

}  // namespace twoxtwo

#endif  // TWOXTWO_GAME_HPP_
