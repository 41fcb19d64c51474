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

#ifndef TWOXTWO_IO_HPP_
#define TWOXTWO_IO_HPP_

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "twoxtwo/embedding.hpp"
#include "twoxtwo/equilibria.hpp"
#include "twoxtwo/errors.hpp"
#include "twoxtwo/game.hpp"
#include "twoxtwo/graphs.hpp"
#include "twoxtwo/render/drawing.hpp"
#include "twoxtwo/render/figures.hpp"

namespace twoxtwo::io {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

// Locale independent; the whole token must be consumed.
inline double parse_double(std::string_view token, int line_no) {
  double v = 0;
  const char* first = token.data();
  if (!token.empty() && token.front() == '+') ++first;
  const auto [end, ec] = std::from_chars(first, token.data() + token.size(), v);
  if (ec != std::errc() || end != token.data() + token.size() || !std::isfinite(v)) {
    throw FormatError("line " + std::to_string(line_no) + ": bad number '" + std::string(token) +
                      "'");
  }
  return v;
}

inline std::string shortest(double v) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

// Rows of numbers; blank lines and '#' comments are skipped.
inline std::vector<std::vector<double>> read_rows(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    std::vector<double> row;
    for (const auto t : tokens) row.push_back(parse_double(t, line_no));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  return in;
}

}  // namespace detail

// Two columns per line: row angle and column angle in degrees.
inline std::vector<render::AnglePoint> read_points(std::istream& in) {
  std::vector<render::AnglePoint> out;
  for (const auto& row : detail::read_rows(in)) {
    if (row.size() != 2) throw FormatError("point lines need exactly two numbers");
    out.push_back({row[0], row[1]});
  }
  return out;
}

inline std::vector<render::AnglePoint> read_points(const std::string& path) {
  auto in = detail::open(path);
  return read_points(in);
}

inline void write_points(std::ostream& out, const std::vector<render::AnglePoint>& points) {
  for (const auto& p : points) {
    out << detail::shortest(p.row_deg) << ' ' << detail::shortest(p.col_deg) << '\n';
  }
}

inline render::Heatmap read_heatmap(std::istream& in) {
  render::Heatmap m = detail::read_rows(in);
  render::check_heatmap(m);
  return m;
}

inline render::Heatmap read_heatmap(const std::string& path) {
  auto in = detail::open(path);
  return read_heatmap(in);
}

inline void write_heatmap(std::ostream& out, const render::Heatmap& m) {
  render::check_heatmap(m);
  for (const auto& row : m) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? " " : "") << detail::shortest(row[i]);
    }
    out << '\n';
  }
}

// Line-oriented `key value` report. Rationals are written exactly and
// parse back through Rational::parse.
inline std::string analysis_report(const Game& g) {
  std::ostringstream out;
  out << "game " << to_string(g) << '\n';
  const BRGraph b = br_graph(g);
  out << "br_graph " << b.to_string() << '\n';
  const BRClass c = br_class(g);
  out << "br_class " << c.class_index << ' ' << c.name << '\n';
  for (const Player p : kPlayers) {
    out << (p == Player::kRow ? "ordinal_ranks_row" : "ordinal_ranks_col");
    for (const int r : dense_ranks(g, p)) out << ' ' << r;
    out << '\n';
  }

  const NashSet nash = nash_set(g);
  out << "nash_components " << nash.components.size() << '\n';
  for (const NashBox& box : nash.components) {
    out << "nash_box " << box.p_low.to_string() << ' ' << box.p_high.to_string() << ' '
        << box.q_low.to_string() << ' ' << box.q_high.to_string() << '\n';
  }

  const CcePolytope poly = cce_polytope(g);
  out << "cce_dimension " << poly.dimension << '\n';
  out << "cce_vertices " << poly.vertices.size() << '\n';
  for (const JointDistribution& v : poly.vertices) {
    out << "cce_vertex";
    for (const Rational& x : v.values()) out << ' ' << x.to_string();
    out << '\n';
  }
  out << "cce_edges " << poly.edges.size() << '\n';
  for (const auto& [i, j] : poly.edges) out << "cce_edge " << i << ' ' << j << '\n';

  const EmbeddingPoint e = embed(g);
  auto direction = [&out](const char* key, const std::optional<Direction>& d) {
    out << key;
    if (d) {
      out << ' ' << d->given_opponent_a.str() << ' ' << d->given_opponent_b.str() << '\n';
      out << key << "_angle " << render::fmt(d->angle_degrees()) << '\n';
    } else {
      out << " none\n";
    }
  };
  direction("embedding_row", e.row);
  direction("embedding_col", e.col);
  return out.str();
}

}  // namespace twoxtwo::io

#endif  // TWOXTWO_IO_HPP_
