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

#ifndef TWOXTWO_VERIFY_HPP_
#define TWOXTWO_VERIFY_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "twoxtwo/embedding.hpp"
#include "twoxtwo/equilibria.hpp"
#include "twoxtwo/game.hpp"
#include "twoxtwo/graphs.hpp"

namespace twoxtwo::verify {

// The solvers under test. Replacing one lets a caller check that the
// verifier notices a broken implementation.
struct Solvers {
  std::function<std::array<DeviationConstraint, 4>(const Game&)> constraints = cce_constraints;
  std::function<CcePolytope(const Game&)> polytope = cce_polytope;
  std::function<NashSet(const Game&)> nash = nash_set;
  std::function<EmbeddingPoint(const Game&)> embedding = embed;
};

struct Failure {
  int trial = 0;
  Game game;
  std::string check;
};

struct Summary {
  int trials = 0;
  int passed = 0;
  std::optional<Failure> failure;

  bool ok() const { return !failure && passed == trials; }
};

// Seeded source of small games with frequent ties. Uses raw mt19937_64
// output only, so sequences agree across platforms.
class GameSource {
 public:
  explicit GameSource(std::uint64_t seed) : engine_(seed) {}

  long uniform(long lo, long hi) {
    return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Rational value() {
    if (engine_() % 3 == 0) return Rational(uniform(-2, 2));
    return Rational(BigInt(uniform(-12, 12)), BigInt(uniform(1, 4)));
  }
  Game game() {
    std::array<Rational, 8> v;
    for (auto& x : v) x = value();
    return game_from_flat(v);
  }
  JointDistribution joint() {
    std::array<long, 4> w{};
    long total = 0;
    while (total == 0) {
      total = 0;
      for (auto& x : w) total += (x = uniform(0, 6));
    }
    std::array<Rational, 4> v;
    for (int i = 0; i < 4; ++i) v[i] = Rational(BigInt(w[i]), BigInt(total));
    return JointDistribution::from_values(v);
  }
  Symmetry symmetry() { return Symmetry::all()[engine_() % 8]; }

 private:
  std::mt19937_64 engine_;
};

namespace oracle {

// Expected gain from always playing `deviation`, evaluated cell by cell.
inline Rational gain(const Game& g, Player p, Action deviation, const JointDistribution& s) {
  const auto flat = game_to_flat(g);
  const int base = p == Player::kRow ? 0 : 4;
  Rational total = 0;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      const int dr = p == Player::kRow ? static_cast<int>(deviation) : r;
      const int dc = p == Player::kCol ? static_cast<int>(deviation) : c;
      total += s.values()[2 * r + c] * (flat[base + 2 * dr + dc] - flat[base + 2 * r + c]);
    }
  }
  return total;
}

inline bool in_cce(const Game& g, const JointDistribution& s) {
  for (const Player p : kPlayers) {
    for (const Action a : kActions) {
      if (gain(g, p, a, s).sign() > 0) return false;
    }
  }
  return true;
}

inline JointDistribution product(const Rational& p, const Rational& q) {
  return JointDistribution::from_values({p * q, p * (1 - q), (1 - p) * q, (1 - p) * (1 - q)});
}

}  // namespace oracle

namespace detail {

inline bool member(const Solvers& s, const Game& g, const JointDistribution& joint) {
  for (const auto& c : s.constraints(g)) {
    if (!c.holds(joint)) return false;
  }
  return true;
}

// Name of the first failing check for one game, or empty.
inline std::string check_game(const Game& g, GameSource& rng, const Solvers& s) {
  for (int i = 0; i < 16; ++i) {
    const JointDistribution joint = rng.joint();
    if (member(s, g, joint) != oracle::in_cce(g, joint)) return "cce-membership";
  }

  const CcePolytope poly = s.polytope(g);
  if (poly.vertices.empty()) return "cce-empty";
  for (const auto& v : poly.vertices) {
    if (!oracle::in_cce(g, v) || !member(s, g, v)) return "cce-vertex";
  }
  for (int i = 0; i < 8; ++i) {
    std::vector<long> w(poly.vertices.size());
    long total = 0;
    for (auto& x : w) total += (x = rng.uniform(1, 9));
    std::array<Rational, 4> mix{};
    for (std::size_t k = 0; k < w.size(); ++k) {
      const Rational weight{BigInt(w[k]), BigInt(total)};
      for (int j = 0; j < 4; ++j) mix[j] += weight * poly.vertices[k].values()[j];
    }
    if (!oracle::in_cce(g, JointDistribution::from_values(mix))) return "cce-convexity";
  }

  const NashSet nash = s.nash(g);
  if (nash.components.empty()) return "nash-empty";
  constexpr int kGrid = 12;
  for (int i = 0; i <= kGrid; ++i) {
    for (int j = 0; j <= kGrid; ++j) {
      const Rational p{BigInt(i), BigInt(kGrid)};
      const Rational q{BigInt(j), BigInt(kGrid)};
      if (nash.contains(p, q) != oracle::in_cce(g, oracle::product(p, q))) return "nash-grid";
    }
  }
  for (const NashBox& b : nash.components) {
    for (const Rational& p : {b.p_low, b.p_high, (b.p_low + b.p_high) / 2}) {
      for (const Rational& q : {b.q_low, b.q_high, (b.q_low + b.q_high) / 2}) {
        const JointDistribution joint = oracle::product(p, q);
        if (!oracle::in_cce(g, joint)) return "nash-component";
        if (!member(s, g, joint)) return "nash-inside-cce";
      }
    }
  }

  const Symmetry sym = rng.symmetry();
  if (s.nash(permute(g, sym)) != permute(nash, sym)) return "nash-equivariance";

  const EmbeddingPoint e = s.embedding(g);
  if (br_graph_of_embedding(e) != br_graph(g)) return "embedding-graph";
  if (class_of_embedding(e).class_index != br_class(g).class_index) return "embedding-class";
  return {};
}

}  // namespace detail

inline Summary run_verification(std::uint64_t seed, int trials, const Solvers& solvers = {}) {
  GameSource rng(seed);
  Summary out;
  out.trials = trials;
  for (int t = 0; t < trials; ++t) {
    const Game g = rng.game();
    if (std::string check = detail::check_game(g, rng, solvers); !check.empty()) {
      out.failure = Failure{t, g, std::move(check)};
      return out;
    }
    ++out.passed;
  }
  return out;
}

}  // namespace twoxtwo::verify

#endif  // TWOXTWO_VERIFY_HPP_
