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

#ifndef TWOXTWO_RENDER_FIGURES_HPP_
#define TWOXTWO_RENDER_FIGURES_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "twoxtwo/embedding.hpp"
#include "twoxtwo/equilibria.hpp"
#include "twoxtwo/errors.hpp"
#include "twoxtwo/game.hpp"
#include "twoxtwo/graphs.hpp"
#include "twoxtwo/render/drawing.hpp"

namespace twoxtwo::render {

// Default camera for simplex scenes.
inline constexpr double kDefaultAzimuthDeg = 35.0;
inline constexpr double kDefaultElevationDeg = 18.0;
inline constexpr double kCameraDistance = 4.0;

struct StyleOptions {
  double size_pt = 100;
  double stroke_width_pt = 0.8;
  std::array<Color, 2> player_colors = {colors::kBlack, colors::kGray};
  bool show_axes_labels = true;
  bool show_tick_labels = true;
  bool show_best_response_names = true;
  double camera_azimuth_deg = kDefaultAzimuthDeg;
  double camera_elevation_deg = kDefaultElevationDeg;

  const Color& color(Player p) const { return player_colors[index(p)]; }

  void validate() const {
    if (!(size_pt > 0) || !std::isfinite(size_pt)) {
      throw DomainError("figure size must be positive");
    }
    if (!(stroke_width_pt > 0) || !std::isfinite(stroke_width_pt)) {
      throw DomainError("stroke width must be positive");
    }
    if (!std::isfinite(camera_azimuth_deg) || !std::isfinite(camera_elevation_deg) ||
        std::fabs(camera_elevation_deg) >= 90) {
      throw DomainError("camera elevation must lie strictly between -90 and 90 degrees");
    }
  }
};

enum class FigureKind {
  kOrdGraph,
  kBRGraph,
  kPayoffTable,
  kJointGlyph,
  kRowCondGlyph,
  kColCondGlyph,
  kMarginalGlyph,
  kJointMarginalGlyph,
  kPolytopeScene,
  kEmbeddingScene,
};

inline constexpr std::array<FigureKind, 10> kAllFigureKinds = {
    FigureKind::kOrdGraph,      FigureKind::kBRGraph,
    FigureKind::kPayoffTable,   FigureKind::kJointGlyph,
    FigureKind::kRowCondGlyph,  FigureKind::kColCondGlyph,
    FigureKind::kMarginalGlyph, FigureKind::kJointMarginalGlyph,
    FigureKind::kPolytopeScene, FigureKind::kEmbeddingScene};

enum class Format { kTikZ, kSVG };

inline std::string_view to_string(FigureKind k) {
  switch (k) {
    case FigureKind::kOrdGraph:
      return "ordgraph";
    case FigureKind::kBRGraph:
      return "brgraph";
    case FigureKind::kPayoffTable:
      return "payoffs";
    case FigureKind::kJointGlyph:
      return "joint";
    case FigureKind::kRowCondGlyph:
      return "rowcond";
    case FigureKind::kColCondGlyph:
      return "colcond";
    case FigureKind::kMarginalGlyph:
      return "marginal";
    case FigureKind::kJointMarginalGlyph:
      return "jm";
    case FigureKind::kPolytopeScene:
      return "polytope";
    case FigureKind::kEmbeddingScene:
      return "embedding";
  }
  return "?";
}

inline FigureKind parse_figure_kind(std::string_view name) {
  for (const FigureKind k : kAllFigureKinds) {
    if (to_string(k) == name) return k;
  }
  throw UnsupportedFigureError("unknown figure kind '" + std::string(name) + "'");
}

inline std::string_view to_string(Format f) { return f == Format::kTikZ ? "tikz" : "svg"; }

inline Format parse_format(std::string_view name) {
  if (name == "tikz" || name == "tex") return Format::kTikZ;
  if (name == "svg") return Format::kSVG;
  throw UnsupportedFigureError("unknown format '" + std::string(name) + "'");
}

// Kinds whose payload is a game; the distribution glyphs take a joint.
inline bool takes_game(FigureKind k) {
  return k == FigureKind::kOrdGraph || k == FigureKind::kBRGraph || k == FigureKind::kPayoffTable ||
         k == FigureKind::kPolytopeScene;
}
inline bool takes_joint(FigureKind k) {
  return k == FigureKind::kJointGlyph || k == FigureKind::kRowCondGlyph ||
         k == FigureKind::kColCondGlyph || k == FigureKind::kMarginalGlyph ||
         k == FigureKind::kJointMarginalGlyph;
}

// A point of the embedding plane: the two players' direction angles.
struct AnglePoint {
  double row_deg = 0;
  double col_deg = 0;
  friend bool operator==(const AnglePoint&, const AnglePoint&) = default;
};

using Heatmap = std::vector<std::vector<double>>;

inline void check_heatmap(const Heatmap& m) {
  if (m.empty() || m.front().empty()) throw FormatError("heatmap is empty");
  for (const auto& row : m) {
    if (row.size() != m.front().size()) throw FormatError("heatmap is not rectangular");
    for (double v : row) {
      if (!std::isfinite(v)) throw FormatError("heatmap holds a non-finite value");
    }
  }
}

struct EmbeddingPayload {
  std::vector<AnglePoint> points;
  std::optional<Heatmap> heatmap;
};

// Nontrivial embeddings only; a player without a direction has no angle.
inline std::vector<AnglePoint> angle_points(const std::vector<EmbeddingPoint>& points) {
  std::vector<AnglePoint> out;
  for (const EmbeddingPoint& e : points) {
    if (e.nontrivial()) out.push_back({*e.row_angle_degrees(), *e.col_angle_degrees()});
  }
  return out;
}

using Payload = std::variant<Game, JointDistribution, EmbeddingPayload>;

struct FigureSpec {
  FigureKind kind = FigureKind::kOrdGraph;
  Payload payload;
  StyleOptions style;
};

namespace detail {

inline Point add(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point sub(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point scale(Point a, double s) { return {a.x * s, a.y * s}; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }

// 2x2 cell layout shared by the payoff graphs: row A on top, column A left.
inline Point node_position(Cell c, double size) {
  const double x = c.col == Action::kA ? 0.3 : 0.7;
  const double y = c.row == Action::kA ? 0.7 : 0.3;
  return {x * size, y * size};
}

inline void add_nodes(Drawing& d, const StyleOptions& style) {
  for (const Cell c : kCells) {
    d.add(Circle{node_position(c, style.size_pt), 0.035 * style.size_pt, colors::kWhite,
                 colors::kBlack, style.stroke_width_pt, "node"});
  }
}

// Arrow between two nodes, trimmed at both ends and shifted sideways by
// `offset`. The sideways direction is fixed per unordered cell pair, so two
// players' edges between the same cells never overlap.
inline Line node_arrow(Cell from, Cell to, double offset, const Color& color,
                       const StyleOptions& style, std::string cls) {
  const double s = style.size_pt;
  const Point a = node_position(from, s);
  const Point b = node_position(to, s);
  const Point lo = node_position(from.index() < to.index() ? from : to, s);
  const Point hi = node_position(from.index() < to.index() ? to : from, s);
  const Point axis = scale(sub(hi, lo), 1.0 / norm(sub(hi, lo)));
  const Point side{-axis.y, axis.x};
  const Point u = scale(sub(b, a), 1.0 / norm(sub(b, a)));
  const double trim = 0.06 * s;
  return Line{add(add(a, scale(u, trim)), scale(side, offset)),
              add(sub(b, scale(u, trim)), scale(side, offset)),
              color,
              style.stroke_width_pt,
              false,
              true,
              std::move(cls)};
}

inline Drawing ordinal_graph_figure(const Game& g, const StyleOptions& style) {
  Drawing d{style.size_pt, style.size_pt, "ordinal graph " + to_string(g), {}};
  add_nodes(d, style);
  for (const Player p : kPlayers) {
    const double offset = (p == Player::kRow ? -0.025 : 0.025) * style.size_pt;
    for (const auto& [from, to] : ordinal_graph(g, p).edges) {
      d.add(node_arrow(from, to, offset, style.color(p), style,
                       p == Player::kRow ? "edge-row" : "edge-col"));
    }
  }
  return d;
}

inline Drawing br_graph_figure(const Game& g, const StyleOptions& style) {
  Drawing d{style.size_pt, style.size_pt, "best-response graph " + to_string(g), {}};
  add_nodes(d, style);
  const BRGraph b = br_graph(g);
  // Vertical edges: row player's choice against a fixed column action.
  const std::array<std::pair<Action, Pref>, 2> rows = {std::pair{Action::kA, b.row_given_col_a},
                                                       std::pair{Action::kB, b.row_given_col_b}};
  for (const auto& [col, pref] : rows) {
    if (pref == Pref::kIndifferent) continue;
    const Action best = pref == Pref::kA ? Action::kA : Action::kB;
    d.add(node_arrow(Cell{other(best), col}, Cell{best, col}, 0, style.color(Player::kRow), style,
                     "edge-row"));
  }
  // Horizontal edges: column player's choice against a fixed row action.
  const std::array<std::pair<Action, Pref>, 2> cols = {std::pair{Action::kA, b.col_given_row_a},
                                                       std::pair{Action::kB, b.col_given_row_b}};
  for (const auto& [row, pref] : cols) {
    if (pref == Pref::kIndifferent) continue;
    const Action best = pref == Pref::kA ? Action::kA : Action::kB;
    d.add(node_arrow(Cell{row, other(best)}, Cell{row, best}, 0, style.color(Player::kCol), style,
                     "edge-col"));
  }
  return d;
}

inline Drawing payoff_table_figure(const Game& g, const StyleOptions& style) {
  const double s = style.size_pt;
  const double c = s / 3;
  const double font = 0.11 * s;
  Drawing d{s, s, "payoffs " + to_string(g), {}};
  d.add(Line{{c, 0}, {c, s}, colors::kBlack, style.stroke_width_pt, false, false, "rule"});
  d.add(Line{{0, 2 * c}, {s, 2 * c}, colors::kBlack, style.stroke_width_pt, false, false, "rule"});
  for (const Action a : kActions) {
    const double off = index(a);
    d.add(Text{{c * (1.5 + off), 2.5 * c},
               std::string(1, label(a)),
               Anchor::kCenter,
               font,
               colors::kBlack,
               "header"});
    d.add(Text{{0.5 * c, c * (1.5 - off)},
               std::string(1, label(a)),
               Anchor::kCenter,
               font,
               colors::kBlack,
               "header"});
  }
  for (const Cell cell : kCells) {
    const Point mid{c * (1.5 + index(cell.col)), c * (1.5 - index(cell.row))};
    d.add(Text{{mid.x - 0.04 * c, mid.y},
               g.payoff(Player::kRow, cell).to_string() + ",",
               Anchor::kEast,
               font,
               style.color(Player::kRow),
               "payoff-row"});
    d.add(Text{{mid.x + 0.04 * c, mid.y},
               g.payoff(Player::kCol, cell).to_string(),
               Anchor::kWest,
               font,
               style.color(Player::kCol),
               "payoff-col"});
  }
  return d;
}

inline Rect shaded(Point corner, double w, double h, double prob, const Color& color,
                   const StyleOptions& style, std::string cls) {
  return Rect{corner,        w, h, color, prob, colors::kLightGray, style.stroke_width_pt / 2,
              std::move(cls)};
}

// Cell (r, c) of a 2x2 block whose bottom-left corner is `origin`.
inline Point block_cell(Point origin, double cell, Cell c) {
  return {origin.x + cell * index(c.col), origin.y + cell * (1 - index(c.row))};
}

inline Drawing joint_figure(const JointDistribution& s, const StyleOptions& style) {
  const double cell = style.size_pt / 2;
  Drawing d{style.size_pt, style.size_pt, "joint distribution", {}};
  for (const Cell c : kCells) {
    d.add(shaded(block_cell({0, 0}, cell, c), cell, cell, s.prob(c).to_double(),
                 style.color(Player::kRow), style, "joint-cell"));
  }
  return d;
}

inline Drawing conditional_figure(const JointDistribution& s, Player conditioning,
                                  const StyleOptions& style) {
  const double cell = style.size_pt / 2;
  Drawing d{style.size_pt,
            style.size_pt,
            conditioning == Player::kRow ? "row conditional" : "column conditional",
            {}};
  const ConditionalTable t = conditional(s, conditioning);
  for (const Cell c : kCells) {
    const Action given = own_action(conditioning, c);
    const Action theirs = own_action(opponent(conditioning), c);
    const Point corner = block_cell({0, 0}, cell, c);
    if (const auto& row = t.rows[index(given)]) {
      d.add(shaded(corner, cell, cell, (*row)[index(theirs)].to_double(), style.color(conditioning),
                   style, "cond-cell"));
    } else {
      d.add(Rect{corner, cell, cell, std::nullopt, 1, colors::kLightGray, style.stroke_width_pt / 2,
                 "cond-cell-absent"});
    }
  }
  return d;
}

// Row marginal as a bar on the left, column marginal as a bar on top, and
// optionally the joint in the remaining 2x2 block.
inline Drawing marginal_figure(const JointDistribution& s, bool with_joint,
                               const StyleOptions& style) {
  const double size = style.size_pt;
  const double bar = 0.22 * size;
  const double gap = 0.06 * size;
  const double cell = (size - bar - gap) / 2;
  const Point origin{bar + gap, 0};
  Drawing d{size, size, with_joint ? "joint and marginals" : "marginals", {}};
  const MarginalPair m = marginals_from_joint(s);
  for (const Action a : kActions) {
    const Point row_corner{0, cell * (1 - index(a))};
    d.add(shaded(row_corner, bar, cell, m.prob(Player::kRow, a).to_double(),
                 style.color(Player::kRow), style, "marginal-row"));
    const Point col_corner{origin.x + cell * index(a), 2 * cell + gap};
    d.add(shaded(col_corner, cell, bar, m.prob(Player::kCol, a).to_double(),
                 style.color(Player::kCol), style, "marginal-col"));
  }
  if (with_joint) {
    for (const Cell c : kCells) {
      d.add(shaded(block_cell(origin, cell, c), cell, cell, s.prob(c).to_double(),
                   style.color(Player::kRow), style, "joint-cell"));
    }
  }
  return d;
}

}  // namespace detail

struct Vec3 {
  double x = 0, y = 0, z = 0;
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(Vec3 a, double s) { return {a.x * s, a.y * s, a.z * s}; }
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline Vec3 normalized(Vec3 a) { return a * (1.0 / std::sqrt(dot(a, a))); }

// Unit-edge regular tetrahedron centred at the origin, one corner per pure
// joint action in cell order AA, AB, BA, BB.
inline std::array<Vec3, 4> simplex_vertices() {
  const double k = 1.0 / (2.0 * std::numbers::sqrt2);
  return {Vec3{k, k, k}, Vec3{k, -k, -k}, Vec3{-k, k, -k}, Vec3{-k, -k, k}};
}

inline Vec3 simplex_point(const std::array<double, 4>& weights) {
  const auto v = simplex_vertices();
  Vec3 out;
  for (int i = 0; i < 4; ++i) out = out + v[i] * weights[i];
  return out;
}

inline Vec3 simplex_point(const JointDistribution& s) {
  std::array<double, 4> w{};
  for (int i = 0; i < 4; ++i) w[i] = s.values()[i].to_double();
  return simplex_point(w);
}

// Perspective camera on a sphere around the origin, fitted so that the
// simplex fills a square canvas of the given size.
class Projection {
 public:
  Projection(double azimuth_deg, double elevation_deg, double canvas, double margin) {
    const double az = azimuth_deg * std::numbers::pi / 180;
    const double el = elevation_deg * std::numbers::pi / 180;
    eye_ = Vec3{std::cos(el) * std::cos(az), std::cos(el) * std::sin(az), std::sin(el)} *
           kCameraDistance;
    forward_ = normalized(Vec3{} - eye_);
    right_ = normalized(cross(forward_, Vec3{0, 0, 1}));
    up_ = cross(right_, forward_);

    double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
    for (const Vec3& v : simplex_vertices()) {
      const Point p = raw(v);
      lo_x = std::min(lo_x, p.x);
      hi_x = std::max(hi_x, p.x);
      lo_y = std::min(lo_y, p.y);
      hi_y = std::max(hi_y, p.y);
    }
    scale_ = (canvas - 2 * margin) / std::max(hi_x - lo_x, hi_y - lo_y);
    offset_ = {canvas / 2 - scale_ * (lo_x + hi_x) / 2, canvas / 2 - scale_ * (lo_y + hi_y) / 2};
  }

  Point operator()(Vec3 v) const {
    const Point p = raw(v);
    return {offset_.x + scale_ * p.x, offset_.y + scale_ * p.y};
  }

  // Whether a face with the given outward normal points at the camera.
  bool faces_camera(Vec3 on_face, Vec3 outward) const { return dot(eye_ - on_face, outward) > 0; }

  const Vec3& eye() const { return eye_; }

 private:
  Point raw(Vec3 v) const {
    const Vec3 rel = v - eye_;
    const double depth = dot(rel, forward_);
    const double f = kCameraDistance / depth;
    return {dot(rel, right_) * f, dot(rel, up_) * f};
  }

  Vec3 eye_, forward_, right_, up_;
  double scale_ = 1;
  Point offset_;
};

inline constexpr std::array<std::pair<int, int>, 6> kSimplexEdges = {
    std::pair{0, 1}, std::pair{0, 2}, std::pair{0, 3},
    std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}};

// Joint-strategy simplex with the CCE polytope and the Nash set on it.
struct PolytopeScene {
  std::array<Vec3, 4> simplex = simplex_vertices();
  CcePolytope polytope;
  NashSet nash;
  Projection projection;
  Drawing drawing;

  Point project(const JointDistribution& s) const { return projection(simplex_point(s)); }

  // Edges of the tetrahedron hidden behind both of their faces.
  std::array<bool, 6> hidden_edges() const {
    std::array<bool, 6> out{};
    for (std::size_t e = 0; e < kSimplexEdges.size(); ++e) {
      const auto [a, b] = kSimplexEdges[e];
      bool visible = false;
      for (int opposite = 0; opposite < 4; ++opposite) {
        if (opposite == a || opposite == b) continue;
        // Face without vertex `opposite`; its outward normal points away
        // from that vertex, i.e. along minus the vertex for a centred solid.
        Vec3 centroid;
        for (int i = 0; i < 4; ++i) {
          if (i != opposite) centroid = centroid + simplex[i] * (1.0 / 3);
        }
        visible |= projection.faces_camera(centroid, simplex[opposite] * -1.0);
      }
      out[e] = !visible;
    }
    return out;
  }
};

namespace detail {

// Lines in the simplex traced by the product joints of a Nash component.
inline std::vector<std::pair<JointDistribution, JointDistribution>> nash_lines(const NashBox& b,
                                                                               int rulings) {
  auto joint = [](const Rational& p, const Rational& q) {
    return product_joint(MarginalPair(p, q));
  };
  std::vector<std::pair<JointDistribution, JointDistribution>> out;
  if (b.dimension() == 1) {
    out.emplace_back(joint(b.p_low, b.q_low), joint(b.p_high, b.q_high));
    return out;
  }
  // A box maps to a ruled surface: p fixed gives a straight line in q, and
  // vice versa.
  for (int k = 0; k <= rulings; ++k) {
    const Rational t{BigInt(k), BigInt(rulings)};
    const Rational p = b.p_low + t * (b.p_high - b.p_low);
    const Rational q = b.q_low + t * (b.q_high - b.q_low);
    out.emplace_back(joint(p, b.q_low), joint(p, b.q_high));
    out.emplace_back(joint(b.p_low, q), joint(b.p_high, q));
  }
  return out;
}

// Orders the projected points of a planar convex polygon by angle.
inline std::vector<Point> convex_order(std::vector<Point> pts) {
  Point c;
  for (const Point& p : pts) c = add(c, scale(p, 1.0 / pts.size()));
  std::sort(pts.begin(), pts.end(), [&c](const Point& a, const Point& b) {
    return std::atan2(a.y - c.y, a.x - c.x) < std::atan2(b.y - c.y, b.x - c.x);
  });
  return pts;
}

inline std::vector<std::vector<int>> polytope_faces(const CcePolytope& poly) {
  std::vector<std::vector<int>> faces;
  const int n = static_cast<int>(poly.vertices.size());
  if (poly.dimension == 2) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    faces.push_back(all);
    return faces;
  }
  if (poly.dimension != 3) return faces;
  for (int h = 0; h < static_cast<int>(poly.halfspaces.size()); ++h) {
    std::vector<int> on;
    for (int i = 0; i < n; ++i) {
      if (std::binary_search(poly.tight[i].begin(), poly.tight[i].end(), h)) on.push_back(i);
    }
    if (on.size() < 3) continue;
    std::vector<Vec4> spans;
    for (std::size_t k = 1; k < on.size(); ++k) {
      Vec4 d;
      for (int j = 0; j < 4; ++j) {
        d[j] = poly.vertices[on[k]].values()[j] - poly.vertices[on[0]].values()[j];
      }
      spans.push_back(d);
    }
    if (linalg::rank(spans) != 2) continue;
    if (std::find(faces.begin(), faces.end(), on) == faces.end()) faces.push_back(on);
  }
  return faces;
}

}  // namespace detail

inline constexpr int kNashRulings = 8;

inline PolytopeScene build_polytope_scene(const Game& g, const StyleOptions& style) {
  style.validate();
  const double s = style.size_pt;
  const double w = style.stroke_width_pt;
  PolytopeScene scene{simplex_vertices(), cce_polytope(g), nash_set(g),
                      Projection(style.camera_azimuth_deg, style.camera_elevation_deg, s, 0.12 * s),
                      Drawing{s, s, "equilibria " + to_string(g), {}}};
  Drawing& d = scene.drawing;

  std::array<Point, 4> corners;
  for (int i = 0; i < 4; ++i) corners[i] = scene.projection(scene.simplex[i]);

  const auto hidden = scene.hidden_edges();
  for (std::size_t e = 0; e < kSimplexEdges.size(); ++e) {
    const auto [a, b] = kSimplexEdges[e];
    if (hidden[e]) {
      d.add(Line{corners[a], corners[b], colors::kLightGray, w / 2, true, false,
                 "simplex-edge-hidden"});
    } else {
      d.add(Line{corners[a], corners[b], colors::kGray, w / 2, false, false, "simplex-edge"});
    }
  }

  for (const auto& face : detail::polytope_faces(scene.polytope)) {
    std::vector<Point> pts;
    for (int i : face) pts.push_back(scene.project(scene.polytope.vertices[i]));
    d.add(Polygon{detail::convex_order(pts), colors::kPurple, 0.15, std::nullopt, w, "cce-face"});
  }
  for (const auto& [a, b] : scene.polytope.edges) {
    d.add(Line{scene.project(scene.polytope.vertices[a]), scene.project(scene.polytope.vertices[b]),
               colors::kPurple, w, false, false, "cce-edge"});
  }
  for (const auto& v : scene.polytope.vertices) {
    d.add(Circle{scene.project(v), 1.5 * w, colors::kPurple, std::nullopt, w, "cce-vertex"});
  }

  for (const NashBox& b : scene.nash.components) {
    if (b.dimension() == 0) {
      d.add(Circle{scene.project(product_joint(MarginalPair(b.p_low, b.q_low))), 2.2 * w,
                   std::nullopt, colors::kBlue, w, "ne-point"});
      continue;
    }
    const char* cls = b.dimension() == 1 ? "ne-segment" : "ne-surface";
    for (const auto& [from, to] : detail::nash_lines(b, kNashRulings)) {
      d.add(Line{scene.project(from), scene.project(to), colors::kBlue, w, true, false, cls});
    }
  }

  if (style.show_axes_labels) {
    Point centre;
    for (const Point& c : corners) centre = detail::add(centre, detail::scale(c, 0.25));
    for (const Cell c : kCells) {
      const Point at = corners[c.index()];
      Point dir = detail::sub(at, centre);
      dir = detail::scale(dir, 1.0 / detail::norm(dir));
      d.add(Text{detail::add(at, detail::scale(dir, 0.06 * s)), c.name(), Anchor::kCenter, 0.07 * s,
                 colors::kBlack, "vertex-label"});
    }
  }
  return scene;
}

namespace detail {

// Quadrant (0..3) of an angle in degrees: the sign pattern of a direction.
inline Pref quadrant_pref(int quadrant, bool given_a) {
  // Quadrant centres at 45, 135, 225, 315 degrees.
  const double rad = (45.0 + 90.0 * quadrant) * std::numbers::pi / 180;
  const double v = given_a ? std::cos(rad) : std::sin(rad);
  return v > 0 ? Pref::kA : Pref::kB;
}

inline Drawing embedding_figure(const EmbeddingPayload& payload, const StyleOptions& style) {
  const double s = style.size_pt;
  const double w = style.stroke_width_pt;
  const double left = 0.16 * s, bottom = 0.16 * s, right = 0.04 * s, top = 0.08 * s;
  const double pw = s - left - right, ph = s - bottom - top;
  auto at = [&](double row_deg, double col_deg) {
    return Point{left + pw * row_deg / 360.0, bottom + ph * col_deg / 360.0};
  };
  Drawing d{s, s, "equilibrium-invariant embedding", {}};

  if (payload.heatmap) {
    const Heatmap& m = *payload.heatmap;
    check_heatmap(m);
    double lo = m[0][0], hi = m[0][0];
    for (const auto& row : m) {
      for (double v : row) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    }
    const double cw = pw / m.front().size();
    const double ch = ph / m.size();
    // Row 0 of the matrix is the top of the plot.
    for (std::size_t r = 0; r < m.size(); ++r) {
      for (std::size_t c = 0; c < m[r].size(); ++c) {
        const double t = hi > lo ? (m[r][c] - lo) / (hi - lo) : 0.5;
        d.add(Rect{{left + cw * c, bottom + ph - ch * (r + 1)},
                   cw,
                   ch,
                   colors::kBlue,
                   t,
                   std::nullopt,
                   w,
                   "heat-cell"});
      }
    }
  }

  d.add(Rect{{left, bottom}, pw, ph, std::nullopt, 1, colors::kBlack, w, "axis"});
  for (int k = 1; k < 4; ++k) {
    const Point vx = at(90.0 * k, 0), vy = at(0, 90.0 * k);
    d.add(Line{vx, {vx.x, bottom + ph}, colors::kLightGray, w / 2, true, false, "grid"});
    d.add(Line{vy, {left + pw, vy.y}, colors::kLightGray, w / 2, true, false, "grid"});
  }
  const double font = 0.045 * s;
  for (int k = 0; k <= 4; ++k) {
    const Point tx = at(90.0 * k, 0), ty = at(0, 90.0 * k);
    d.add(Line{tx, {tx.x, tx.y - 0.02 * s}, colors::kBlack, w, false, false, "tick"});
    d.add(Line{ty, {ty.x - 0.02 * s, ty.y}, colors::kBlack, w, false, false, "tick"});
    if (style.show_tick_labels) {
      const std::string label = std::to_string(90 * k);
      d.add(
          Text{{tx.x, tx.y - 0.03 * s}, label, Anchor::kNorth, font, colors::kBlack, "tick-label"});
      d.add(
          Text{{ty.x - 0.03 * s, ty.y}, label, Anchor::kEast, font, colors::kBlack, "tick-label"});
    }
  }
  if (style.show_axes_labels) {
    d.add(Text{{left + pw / 2, 0.01 * s},
               "row direction (deg)",
               Anchor::kSouth,
               font,
               colors::kBlack,
               "axis-label"});
    d.add(Text{{left, s - 0.035 * s},
               "col direction (deg)",
               Anchor::kWest,
               font,
               colors::kBlack,
               "axis-label"});
  }
  if (style.show_best_response_names) {
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        const BRGraph b{quadrant_pref(i, true), quadrant_pref(i, false), quadrant_pref(j, true),
                        quadrant_pref(j, false)};
        d.add(Text{at(45.0 + 90.0 * i, 45.0 + 90.0 * j), br_class_of_graph(b).name, Anchor::kCenter,
                   0.028 * s, colors::kGray, "br-name"});
      }
    }
  }
  for (const AnglePoint& p : payload.points) {
    if (!std::isfinite(p.row_deg) || !std::isfinite(p.col_deg)) {
      throw FormatError("embedding point with a non-finite angle");
    }
    d.add(Circle{at(p.row_deg, p.col_deg), 1.8 * w, colors::kRed, colors::kBlack, w / 2, "point"});
  }
  return d;
}

}  // namespace detail

inline Drawing build_figure(const FigureSpec& f) {
  f.style.validate();
  const bool has_game = std::holds_alternative<Game>(f.payload);
  const bool has_joint = std::holds_alternative<JointDistribution>(f.payload);
  const bool has_embedding = std::holds_alternative<EmbeddingPayload>(f.payload);
  if ((takes_game(f.kind) && !has_game) || (takes_joint(f.kind) && !has_joint) ||
      (f.kind == FigureKind::kEmbeddingScene && !has_embedding)) {
    throw UnsupportedFigureError("payload does not match figure kind '" +
                                 std::string(to_string(f.kind)) + "'");
  }
  const StyleOptions& st = f.style;
  switch (f.kind) {
    case FigureKind::kOrdGraph:
      return detail::ordinal_graph_figure(std::get<Game>(f.payload), st);
    case FigureKind::kBRGraph:
      return detail::br_graph_figure(std::get<Game>(f.payload), st);
    case FigureKind::kPayoffTable:
      return detail::payoff_table_figure(std::get<Game>(f.payload), st);
    case FigureKind::kJointGlyph:
      return detail::joint_figure(std::get<JointDistribution>(f.payload), st);
    case FigureKind::kRowCondGlyph:
      return detail::conditional_figure(std::get<JointDistribution>(f.payload), Player::kRow, st);
    case FigureKind::kColCondGlyph:
      return detail::conditional_figure(std::get<JointDistribution>(f.payload), Player::kCol, st);
    case FigureKind::kMarginalGlyph:
      return detail::marginal_figure(std::get<JointDistribution>(f.payload), false, st);
    case FigureKind::kJointMarginalGlyph:
      return detail::marginal_figure(std::get<JointDistribution>(f.payload), true, st);
    case FigureKind::kPolytopeScene:
      return build_polytope_scene(std::get<Game>(f.payload), st).drawing;
    case FigureKind::kEmbeddingScene:
      return detail::embedding_figure(std::get<EmbeddingPayload>(f.payload), st);
  }
  throw UnsupportedFigureError("unsupported figure kind");
}

inline std::string serialize(const Drawing& d, Format format) {
  switch (format) {
    case Format::kTikZ:
      return to_tikz(d);
    case Format::kSVG:
      return to_svg(d);
  }
  throw UnsupportedFigureError("unsupported output format");
}

inline std::string render_figure(const FigureSpec& f, Format format) {
  return serialize(build_figure(f), format);
}

inline std::string render_polytope(const Game& g, const StyleOptions& style, Format format) {
  return serialize(build_polytope_scene(g, style).drawing, format);
}

inline std::string render_embedding(const std::vector<EmbeddingPoint>& points,
                                    const std::optional<Heatmap>& heatmap,
                                    const StyleOptions& style, Format format) {
  return render_figure(FigureSpec{FigureKind::kEmbeddingScene,
                                  EmbeddingPayload{angle_points(points), heatmap}, style},
                       format);
}

}  // namespace twoxtwo::render

#endif  // TWOXTWO_RENDER_FIGURES_HPP_
