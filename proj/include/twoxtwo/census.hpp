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

#ifndef TWOXTWO_CENSUS_HPP_
#define TWOXTWO_CENSUS_HPP_

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <span>
#include <vector>

#include "twoxtwo/game.hpp"
#include "twoxtwo/graphs.hpp"

namespace twoxtwo {

struct CensusReport {
  long strict_ordinal_total = 0;
  long strict_ordinal_up_to_strategy = 0;
  long strict_ordinal_up_to_strategy_and_player = 0;
  long partial_ordinal_classes = 0;
  long br_graph_total = 0;
  long br_class_total = 0;

  friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

namespace census_detail {

// Small-integer games in flat payoff order; symmetries act by slot
// permutation, which avoids exact arithmetic in the enumeration.
using IntGame = std::array<int, 8>;

inline IntGame act(const IntGame& g, const std::array<int, 8>& slots) {
  IntGame out{};
  for (int i = 0; i < 8; ++i) out[i] = g[slots[i]];
  return out;
}

inline std::vector<std::array<int, 8>> slot_tables(std::span<const Symmetry> group) {
  std::vector<std::array<int, 8>> out;
  for (const Symmetry s : group) out.push_back(slot_permutation(s));
  return out;
}

inline long count_orbits(const std::vector<IntGame>& games, std::span<const Symmetry> group) {
  const auto tables = slot_tables(group);
  std::set<IntGame> representatives;
  for (const IntGame& g : games) {
    IntGame best = g;
    for (const auto& t : tables) best = std::min(best, act(g, t));
    representatives.insert(best);
  }
  return static_cast<long>(representatives.size());
}

// Burnside: the orbit count is the mean number of fixed points. Only valid
// when `games` is closed under the group.
inline long burnside_count(const std::vector<IntGame>& games, std::span<const Symmetry> group) {
  long fixed = 0;
  for (const auto& t : slot_tables(group)) {
    for (const IntGame& g : games) fixed += act(g, t) == g;
  }
  return fixed / static_cast<long>(group.size());
}

inline std::vector<std::array<int, 4>> strict_orders() {
  std::vector<std::array<int, 4>> out;
  std::array<int, 4> p = {1, 2, 3, 4};
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Tuples over {1..4} whose value set is {1..k}: weak orders of 4 cells.
inline std::vector<std::array<int, 4>> weak_orders() {
  std::vector<std::array<int, 4>> out;
  for (int code = 0; code < 256; ++code) {
    std::array<int, 4> t{};
    int top = 0;
    for (int i = 0; i < 4; ++i) {
      t[i] = (code >> (2 * i) & 3) + 1;
      top = std::max(top, t[i]);
    }
    bool dense = true;
    for (int v = 1; v <= top; ++v) {
      dense &= std::find(t.begin(), t.end(), v) != t.end();
    }
    if (dense) out.push_back(t);
  }
  return out;
}

inline std::vector<IntGame> pairs(const std::vector<std::array<int, 4>>& orders) {
  std::vector<IntGame> out;
  out.reserve(orders.size() * orders.size());
  for (const auto& r : orders) {
    for (const auto& c : orders) {
      IntGame g{};
      std::copy(r.begin(), r.end(), g.begin());
      std::copy(c.begin(), c.end(), g.begin() + 4);
      out.push_back(g);
    }
  }
  return out;
}

inline int sign(int v) { return (v > 0) - (v < 0); }

inline BRGraph int_br_graph(const IntGame& g) {
  return BRGraph{pref_from_sign(sign(g[0] - g[2])), pref_from_sign(sign(g[1] - g[3])),
                 pref_from_sign(sign(g[4] - g[5])), pref_from_sign(sign(g[6] - g[7]))};
}

inline std::vector<Symmetry> strategy_subgroup() {
  std::vector<Symmetry> out;
  for (const Symmetry s : Symmetry::all()) {
    if (!s.swap_players) out.push_back(s);
  }
  return out;
}

}  // namespace census_detail

inline std::vector<census_detail::IntGame> strict_ordinal_games() {
  return census_detail::pairs(census_detail::strict_orders());
}

inline std::vector<census_detail::IntGame> partial_ordinal_games() {
  return census_detail::pairs(census_detail::weak_orders());
}

inline CensusReport census() {
  using namespace census_detail;
  const auto full = Symmetry::all();
  const auto strategy = strategy_subgroup();
  const auto strict = strict_ordinal_games();
  const auto partial = partial_ordinal_games();

  CensusReport r;
  r.strict_ordinal_total = static_cast<long>(strict.size());
  r.strict_ordinal_up_to_strategy = count_orbits(strict, strategy);
  r.strict_ordinal_up_to_strategy_and_player = count_orbits(strict, full);
  r.partial_ordinal_classes = count_orbits(partial, full);

  // Every weak-order game realizes some best-response graph; count the
  // distinct graphs and their orbits.
  std::set<int> graph_codes;
  std::set<int> canonical_codes;
  for (const IntGame& g : partial) {
    const BRGraph b = int_br_graph(g);
    graph_codes.insert(b.encode());
    canonical_codes.insert(canonical(b).encode());
  }
  r.br_graph_total = static_cast<long>(graph_codes.size());
  r.br_class_total = static_cast<long>(canonical_codes.size());
  return r;
}

}  // namespace twoxtwo

#endif  // TWOXTWO_CENSUS_HPP_
