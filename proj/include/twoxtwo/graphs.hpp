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

#ifndef TWOXTWO_GRAPHS_HPP_
#define TWOXTWO_GRAPHS_HPP_

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "twoxtwo/errors.hpp"
#include "twoxtwo/game.hpp"
#include "twoxtwo/rational.hpp"

namespace twoxtwo {

// Preference order of one player's four payoff cells. Levels hold cells of
// equal payoff in strictly increasing payoff order; every cell of level i
// points to every cell of level i + 1.
struct OrdinalGraph {
  Player player = Player::kRow;
  std::vector<std::vector<Cell>> levels;
  std::vector<std::pair<Cell, Cell>> edges;

  friend bool operator==(const OrdinalGraph&, const OrdinalGraph&) = default;
};

inline OrdinalGraph ordinal_graph(const Game& g, Player p) {
  std::vector<Rational> distinct;
  for (const Cell c : kCells) distinct.push_back(g.payoff(p, c));
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  OrdinalGraph graph;
  graph.player = p;
  graph.levels.resize(distinct.size());
  for (const Cell c : kCells) {
    const auto rank =
        std::lower_bound(distinct.begin(), distinct.end(), g.payoff(p, c)) - distinct.begin();
    graph.levels[rank].push_back(c);
  }
  for (std::size_t i = 0; i + 1 < graph.levels.size(); ++i) {
    for (const Cell from : graph.levels[i]) {
      for (const Cell to : graph.levels[i + 1]) graph.edges.emplace_back(from, to);
    }
  }
  return graph;
}

// Dense ranks (1 = lowest) of p's four payoffs, in cell order.
inline std::array<int, 4> dense_ranks(const Game& g, Player p) {
  const OrdinalGraph graph = ordinal_graph(g, p);
  std::array<int, 4> ranks{};
  for (std::size_t level = 0; level < graph.levels.size(); ++level) {
    for (const Cell c : graph.levels[level]) {
      ranks[c.index()] = static_cast<int>(level) + 1;
    }
  }
  return ranks;
}

enum class Pref { kA = 0, kB = 1, kIndifferent = 2 };

constexpr Pref flip(Pref x) { return x == Pref::kA ? Pref::kB : x == Pref::kB ? Pref::kA : x; }
constexpr char label(Pref x) { return x == Pref::kA ? 'A' : x == Pref::kB ? 'B' : '-'; }

// Pref from the sign of an advantage of A over B.
inline Pref pref_from_sign(int sign) {
  return sign > 0 ? Pref::kA : sign < 0 ? Pref::kB : Pref::kIndifferent;
}

// Best-response graph: each player's preferred action against each pure
// action of the opponent.
struct BRGraph {
  Pref row_given_col_a = Pref::kIndifferent;
  Pref row_given_col_b = Pref::kIndifferent;
  Pref col_given_row_a = Pref::kIndifferent;
  Pref col_given_row_b = Pref::kIndifferent;

  friend constexpr bool operator==(const BRGraph&, const BRGraph&) = default;

  // Base-3 digits in field order; the total order used for canonical forms.
  constexpr int encode() const {
    return 27 * static_cast<int>(row_given_col_a) + 9 * static_cast<int>(row_given_col_b) +
           3 * static_cast<int>(col_given_row_a) + static_cast<int>(col_given_row_b);
  }
  static constexpr BRGraph decode(int code) {
    return BRGraph{static_cast<Pref>(code / 27 % 3), static_cast<Pref>(code / 9 % 3),
                   static_cast<Pref>(code / 3 % 3), static_cast<Pref>(code % 3)};
  }
  std::string to_string() const {
    return {label(row_given_col_a), label(row_given_col_b), label(col_given_row_a),
            label(col_given_row_b)};
  }
};

inline BRGraph br_graph(const Game& g) {
  auto cmp = [&g](Player p, Action theirs) {
    const Rational& a = g.payoff(p, cell_for(p, Action::kA, theirs));
    const Rational& b = g.payoff(p, cell_for(p, Action::kB, theirs));
    return pref_from_sign((a - b).sign());
  };
  return BRGraph{cmp(Player::kRow, Action::kA), cmp(Player::kRow, Action::kB),
                 cmp(Player::kCol, Action::kA), cmp(Player::kCol, Action::kB)};
}

// Action of the symmetry group on best-response graphs, consistent with
// br_graph(permute(g, s)) == permute(br_graph(g), s).
constexpr BRGraph permute(BRGraph b, Symmetry s) {
  if (s.swap_row_actions) {
    b = BRGraph{flip(b.row_given_col_a), flip(b.row_given_col_b), b.col_given_row_b,
                b.col_given_row_a};
  }
  if (s.swap_col_actions) {
    b = BRGraph{b.row_given_col_b, b.row_given_col_a, flip(b.col_given_row_a),
                flip(b.col_given_row_b)};
  }
  if (s.swap_players) {
    b = BRGraph{b.col_given_row_a, b.col_given_row_b, b.row_given_col_a, b.row_given_col_b};
  }
  return b;
}

constexpr BRGraph canonical(BRGraph b) {
  BRGraph best = b;
  for (const Symmetry s : Symmetry::all()) {
    const BRGraph candidate = permute(b, s);
    if (candidate.encode() < best.encode()) best = candidate;
  }
  return best;
}

inline constexpr int kNumBRGraphs = 81;
inline constexpr int kNumBRClasses = 15;

// Canonical codes of the classes, ascending. Class index i + 1 belongs to
// the i-th entry.
inline const std::vector<int>& br_class_codes() {
  static const std::vector<int> codes = [] {
    std::vector<int> out;
    for (int code = 0; code < kNumBRGraphs; ++code) {
      if (canonical(BRGraph::decode(code)).encode() == code) out.push_back(code);
    }
    return out;
  }();
  return codes;
}

inline int br_class_index(BRGraph b) {
  const auto& codes = br_class_codes();
  const int code = canonical(b).encode();
  return static_cast<int>(std::lower_bound(codes.begin(), codes.end(), code) - codes.begin()) + 1;
}

// Maps class index (1..15) to a display name.
class BRNameTable {
 public:
  // Names for classes evidenced by labelled example games; the rest fall
  // back to "class-N".
  static const BRNameTable& builtin();

  // One "index<TAB>name" line per class. Blank lines and lines starting with
  // '#' are ignored. Unlisted classes keep their "class-N" placeholder.
  static BRNameTable parse(std::istream& in) {
    BRNameTable table;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line.front() == '#') continue;
      const auto tab = line.find('\t');
      if (tab == std::string::npos) {
        throw FormatError("name table line " + std::to_string(line_no) +
                          ": expected index<TAB>name");
      }
      int idx = 0;
      try {
        std::size_t used = 0;
        idx = std::stoi(line.substr(0, tab), &used);
        if (used != tab) throw FormatError("");
      } catch (const std::exception&) {
        throw FormatError("name table line " + std::to_string(line_no) + ": bad index");
      }
      if (idx < 1 || idx > kNumBRClasses) {
        throw FormatError("name table line " + std::to_string(line_no) +
                          ": index out of range 1..15");
      }
      const std::string name = line.substr(tab + 1);
      if (name.empty()) {
        throw FormatError("name table line " + std::to_string(line_no) + ": empty name");
      }
      table.names_[idx - 1] = name;
    }
    return table;
  }

  static BRNameTable load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open name table " + path);
    return parse(in);
  }

  const std::string& name(int class_index) const { return names_.at(class_index - 1); }

  std::string serialize() const {
    std::string out;
    for (int i = 0; i < kNumBRClasses; ++i) {
      out += std::to_string(i + 1) + '\t' + names_[i] + '\n';
    }
    return out;
  }

 private:
  BRNameTable() {
    for (int i = 0; i < kNumBRClasses; ++i) {
      names_[i] = "class-" + std::to_string(i + 1);
    }
  }
  std::array<std::string, kNumBRClasses> names_;
};

struct BRClass {
  BRGraph canonical_graph;
  int class_index = 0;
  std::string name;

  friend bool operator==(const BRClass&, const BRClass&) = default;
};

inline BRClass br_class_of_graph(BRGraph b, const BRNameTable& names = BRNameTable::builtin()) {
  const int idx = br_class_index(b);
  return BRClass{canonical(b), idx, names.name(idx)};
}

inline BRClass br_class(const Game& g, const BRNameTable& names = BRNameTable::builtin()) {
  return br_class_of_graph(br_graph(g), names);
}

inline const BRNameTable& BRNameTable::builtin() {
  static const BRNameTable instance = [] {
    BRNameTable table;
    const std::pair<std::array<Rational, 8>, const char*> labelled[] = {
        {{0, 1, 1, 0, 0, 1, 1, 0}, "coordination"},
        {{1, -1, -1, 1, 1, -1, 0, 0}, "safety"},
        {{1, -1, -1, 1, 0, 0, 0, 0}, "horseplay"},
        {{0, 0, 0, 0, 0, 0, 0, 0}, "zero"},
    };
    for (const auto& [payoffs, name] : labelled) {
      table.names_[br_class_index(br_graph(game_from_flat(payoffs))) - 1] = name;
    }
    return table;
  }();
  return instance;
}

}  // namespace twoxtwo

#endif  // TWOXTWO_GRAPHS_HPP_
