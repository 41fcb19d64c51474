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

#ifndef TWOXTWO_EQUILIBRIA_HPP_
#define TWOXTWO_EQUILIBRIA_HPP_

#include <algorithm>
#include <array>
#include <iterator>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "twoxtwo/game.hpp"
#include "twoxtwo/rational.hpp"

namespace twoxtwo {

using Vec4 = std::array<Rational, 4>;

inline Rational dot(const Vec4& a, const Vec4& b) {
  Rational total = 0;
  for (int i = 0; i < 4; ++i) total += a[i] * b[i];
  return total;
}

// sum_a sigma(a) * coefficients[a] <= 0, with
// coefficients[a] = G_p(deviation, a_-p) - G_p(a).
struct DeviationConstraint {
  Player player = Player::kRow;
  Action deviation = Action::kA;
  Vec4 coefficients{};

  Rational gain(const JointDistribution& s) const { return dot(coefficients, s.values()); }
  bool holds(const JointDistribution& s) const { return gain(s).sign() <= 0; }
};

// Ordered (Row,A), (Row,B), (Col,A), (Col,B).
inline std::array<DeviationConstraint, 4> cce_constraints(const Game& g) {
  std::array<DeviationConstraint, 4> out;
  int k = 0;
  for (const Player p : kPlayers) {
    for (const Action dev : kActions) {
      DeviationConstraint& c = out[k++];
      c.player = p;
      c.deviation = dev;
      for (const Cell cell : kCells) {
        const Cell deviated = cell_for(p, dev, own_action(opponent(p), cell));
        c.coefficients[cell.index()] = g.payoff(p, deviated) - g.payoff(p, cell);
      }
    }
  }
  return out;
}

inline bool joint_in_cce(const Game& g, const JointDistribution& s) {
  for (const auto& c : cce_constraints(g)) {
    if (!c.holds(s)) return false;
  }
  return true;
}

namespace linalg {

// Rank of a set of 4-vectors, by exact Gaussian elimination.
inline int rank(std::vector<Vec4> rows) {
  int r = 0;
  for (int col = 0; col < 4 && r < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i) {
      if (!rows[i][col].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[r], rows[pivot]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      const Rational f = rows[i][col] / rows[r][col];
      for (int j = col; j < 4; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

// Unique solution of the 4x4 system, or nullopt when singular.
inline std::optional<Vec4> solve(std::array<Vec4, 4> a, Vec4 b) {
  for (int col = 0; col < 4; ++col) {
    int pivot = -1;
    for (int i = col; i < 4; ++i) {
      if (!a[i][col].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (int i = 0; i < 4; ++i) {
      if (i == col || a[i][col].is_zero()) continue;
      const Rational f = a[i][col] / a[col][col];
      for (int j = col; j < 4; ++j) a[i][j] -= f * a[col][j];
      b[i] -= f * b[col];
    }
  }
  Vec4 x;
  for (int i = 0; i < 4; ++i) x[i] = b[i] / a[i][i];
  return x;
}

}  // namespace linalg

// normal . sigma <= 0. All CCE halfspaces pass through the origin; together
// with sum(sigma) = 1 they cut the polytope out of the simplex.
struct Halfspace {
  Vec4 normal{};
  std::string label;
};

struct CcePolytope {
  // 4 deviation constraints followed by sigma(AA), sigma(AB), sigma(BA),
  // sigma(BB) >= 0.
  std::vector<Halfspace> halfspaces;
  // Deduplicated, sorted lexicographically by coordinates.
  std::vector<JointDistribution> vertices;
  // Indices into halfspaces that are tight at each vertex.
  std::vector<std::vector<int>> tight;
  // Vertex index pairs (i < j), sorted.
  std::vector<std::pair<int, int>> edges;
  int dimension = 0;
};

inline std::vector<Halfspace> cce_halfspaces(const Game& g) {
  std::vector<Halfspace> out;
  for (const auto& c : cce_constraints(g)) {
    out.push_back(Halfspace{c.coefficients, std::string(1, c.player == Player::kRow ? 'r' : 'c') +
                                                "->" + label(c.deviation)});
  }
  for (const Cell cell : kCells) {
    Vec4 n{};
    n[cell.index()] = -1;
    out.push_back(Halfspace{n, cell.name() + ">=0"});
  }
  return out;
}

inline std::vector<int> tight_set(const std::vector<Halfspace>& hs, const Vec4& x) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(hs.size()); ++i) {
    if (dot(hs[i].normal, x).is_zero()) out.push_back(i);
  }
  return out;
}

inline CcePolytope cce_polytope(const Game& g) {
  CcePolytope poly;
  poly.halfspaces = cce_halfspaces(g);
  const auto& hs = poly.halfspaces;
  const int m = static_cast<int>(hs.size());
  const Vec4 ones = {1, 1, 1, 1};

  std::set<Vec4> found;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      for (int k = j + 1; k < m; ++k) {
        const auto x =
            linalg::solve({hs[i].normal, hs[j].normal, hs[k].normal, ones}, {0, 0, 0, 1});
        if (!x) continue;
        bool feasible = true;
        for (const auto& h : hs) {
          if (dot(h.normal, *x).sign() > 0) {
            feasible = false;
            break;
          }
        }
        if (feasible) found.insert(*x);
      }
    }
  }
  for (const Vec4& x : found) {
    poly.vertices.push_back(JointDistribution::from_values(x));
    poly.tight.push_back(tight_set(hs, x));
  }

  const int n = static_cast<int>(poly.vertices.size());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      std::vector<int> common;
      std::set_intersection(poly.tight[a].begin(), poly.tight[a].end(), poly.tight[b].begin(),
                            poly.tight[b].end(), std::back_inserter(common));
      // a and b span an edge iff the face cut out by their common tight
      // constraints holds no third vertex.
      int on_face = 0;
      for (int c = 0; c < n; ++c) {
        on_face +=
            std::includes(poly.tight[c].begin(), poly.tight[c].end(), common.begin(), common.end());
      }
      if (on_face == 2) poly.edges.emplace_back(a, b);
    }
  }

  std::vector<Vec4> spans;
  for (int a = 1; a < n; ++a) {
    Vec4 d;
    for (int i = 0; i < 4; ++i) {
      d[i] = poly.vertices[a].values()[i] - poly.vertices[0].values()[i];
    }
    spans.push_back(d);
  }
  poly.dimension = linalg::rank(spans);
  return poly;
}

// Closed axis-aligned box [p_low, p_high] x [q_low, q_high] of marginal
// profiles; p is the row player's probability of A, q the column player's.
struct NashBox {
  Rational p_low, p_high, q_low, q_high;

  bool contains(const Rational& p, const Rational& q) const {
    return p_low <= p && p <= p_high && q_low <= q && q <= q_high;
  }
  bool contains(const NashBox& o) const {
    return p_low <= o.p_low && o.p_high <= p_high && q_low <= o.q_low && o.q_high <= q_high;
  }
  // 0 for a point, 1 for a segment, 2 for a proper box.
  int dimension() const {
    return static_cast<int>(p_low != p_high) + static_cast<int>(q_low != q_high);
  }

  friend bool operator==(const NashBox&, const NashBox&) = default;
  friend auto operator<=>(const NashBox& a, const NashBox& b) {
    return std::tie(a.p_low, a.p_high, a.q_low, a.q_high) <=>
           std::tie(b.p_low, b.p_high, b.q_low, b.q_high);
  }
};

struct NashSet {
  std::vector<NashBox> components;

  bool contains(const Rational& p, const Rational& q) const {
    return std::any_of(components.begin(), components.end(),
                       [&](const NashBox& b) { return b.contains(p, q); });
  }
  friend bool operator==(const NashSet&, const NashSet&) = default;
};

namespace nash_detail {

inline std::optional<NashBox> intersect(const NashBox& a, const NashBox& b) {
  NashBox out{std::max(a.p_low, b.p_low), std::min(a.p_high, b.p_high), std::max(a.q_low, b.q_low),
              std::min(a.q_high, b.q_high)};
  if (out.p_low > out.p_high || out.q_low > out.q_high) return std::nullopt;
  return out;
}

// Union of a and b when that union is itself a box.
inline std::optional<NashBox> merge(const NashBox& a, const NashBox& b) {
  const bool same_p = a.p_low == b.p_low && a.p_high == b.p_high;
  const bool same_q = a.q_low == b.q_low && a.q_high == b.q_high;
  if (same_p && a.q_low <= b.q_high && b.q_low <= a.q_high) {
    return NashBox{a.p_low, a.p_high, std::min(a.q_low, b.q_low), std::max(a.q_high, b.q_high)};
  }
  if (same_q && a.p_low <= b.p_high && b.p_low <= a.p_high) {
    return NashBox{std::min(a.p_low, b.p_low), std::max(a.p_high, b.p_high), a.q_low, a.q_high};
  }
  return std::nullopt;
}

// Graph of one player's best-response correspondence, as closed boxes in
// (own probability of A, opponent probability of A) coordinates.
inline std::vector<NashBox> best_response_boxes(const Rational& adv_given_a,
                                                const Rational& adv_given_b) {
  const Rational zero = 0;
  const Rational one = 1;
  const int sa = adv_given_a.sign();
  const int sb = adv_given_b.sign();
  if (sa == 0 && sb == 0) return {NashBox{zero, one, zero, one}};
  if (sa > 0 && sb > 0) return {NashBox{one, one, zero, one}};
  if (sa < 0 && sb < 0) return {NashBox{zero, zero, zero, one}};

  // The advantage b + y (a - b) changes sign (or vanishes) at y*.
  const Rational y = adv_given_b / (adv_given_b - adv_given_a);
  std::vector<NashBox> out = {NashBox{zero, one, y, y}};
  if (y > 0) {
    const Rational own = sb > 0 ? one : zero;
    out.push_back(NashBox{own, own, zero, y});
  }
  if (y < 1) {
    const Rational own = sa > 0 ? one : zero;
    out.push_back(NashBox{own, own, y, one});
  }
  return out;
}

inline std::vector<NashBox> normalize(std::vector<NashBox> boxes) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(boxes.begin(), boxes.end());
    boxes.erase(std::unique(boxes.begin(), boxes.end()), boxes.end());
    for (std::size_t i = 0; i < boxes.size() && !changed; ++i) {
      for (std::size_t j = 0; j < boxes.size() && !changed; ++j) {
        if (i == j) continue;
        if (boxes[i].contains(boxes[j])) {
          boxes.erase(boxes.begin() + static_cast<long>(j));
          changed = true;
        } else if (auto m = merge(boxes[i], boxes[j])) {
          boxes[i] = *m;
          boxes.erase(boxes.begin() + static_cast<long>(j));
          changed = true;
        }
      }
    }
  }
  return boxes;
}

}  // namespace nash_detail

inline NashSet nash_set(const Game& g) {
  using nash_detail::best_response_boxes;
  const auto row = best_response_boxes(advantage_given(g, Player::kRow, Action::kA),
                                       advantage_given(g, Player::kRow, Action::kB));
  // The column player's boxes come out in (q, p) order.
  auto col = best_response_boxes(advantage_given(g, Player::kCol, Action::kA),
                                 advantage_given(g, Player::kCol, Action::kB));
  for (NashBox& b : col) {
    b = NashBox{b.q_low, b.q_high, b.p_low, b.p_high};
  }
  std::vector<NashBox> meet;
  for (const NashBox& r : row) {
    for (const NashBox& c : col) {
      if (auto b = nash_detail::intersect(r, c)) meet.push_back(*b);
    }
  }
  return NashSet{nash_detail::normalize(std::move(meet))};
}

inline bool is_nash(const Game& g, const MarginalPair& m) {
  // A strictly positive advantage forces pure A, a negative one pure B.
  auto ok = [&g](Player p, const Rational& own, const Rational& theirs) {
    const Rational adv = theirs * advantage_given(g, p, Action::kA) +
                         (1 - theirs) * advantage_given(g, p, Action::kB);
    if (adv.sign() > 0) return own == 1;
    if (adv.sign() < 0) return own.is_zero();
    return true;
  };
  return ok(Player::kRow, m.row_a(), m.col_a()) && ok(Player::kCol, m.col_a(), m.row_a());
}

inline NashBox permute(const NashBox& b, Symmetry s) {
  NashBox out = b;
  if (s.swap_row_actions) out = NashBox{1 - out.p_high, 1 - out.p_low, out.q_low, out.q_high};
  if (s.swap_col_actions) out = NashBox{out.p_low, out.p_high, 1 - out.q_high, 1 - out.q_low};
  if (s.swap_players) out = NashBox{out.q_low, out.q_high, out.p_low, out.p_high};
  return out;
}

inline NashSet permute(const NashSet& n, Symmetry s) {
  std::vector<NashBox> boxes;
  for (const NashBox& b : n.components) boxes.push_back(permute(b, s));
  return NashSet{nash_detail::normalize(std::move(boxes))};
}

}  // namespace twoxtwo

#endif  // TWOXTWO_EQUILIBRIA_HPP_
