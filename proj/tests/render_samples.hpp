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

#ifndef TWOXTWO_TESTS_RENDER_SAMPLES_HPP_
#define TWOXTWO_TESTS_RENDER_SAMPLES_HPP_

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "twoxtwo/render/figures.hpp"

namespace twoxtwo::testing {

using render::EmbeddingPayload;
using render::FigureKind;
using render::FigureSpec;
using render::Heatmap;

inline JointDistribution jm_example() {
  return JointDistribution::from_values({Rational::parse("1/100"), Rational::parse("9/100"),
                                         Rational::parse("9/100"), Rational::parse("81/100")});
}

// One representative payload per kind, shared by the golden files.
inline FigureSpec sample(FigureKind kind) {
  if (render::takes_game(kind)) return {kind, coordination(), {}};
  if (render::takes_joint(kind)) return {kind, jm_example(), {}};
  EmbeddingPayload e{render::angle_points({embed(coordination())}), Heatmap{{0, 1, 2}, {3, 4, 5}}};
  return {kind, e, {}};
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline boost::property_tree::ptree parse_xml(const std::string& text) {
  std::istringstream in(text);
  boost::property_tree::ptree tree;
  boost::property_tree::read_xml(in, tree);
  return tree;
}

// Braces and begin/end pairs nest properly.
inline bool tikz_balanced(const std::string& t) {
  int depth = 0;
  std::vector<std::string> envs;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == '\\' && i + 1 < t.size() && (t[i + 1] == '{' || t[i + 1] == '}')) {
      ++i;
      continue;
    }
    if (t[i] == '{') ++depth;
    if (t[i] == '}' && --depth < 0) return false;
    for (const std::string kw : {"\\begin{", "\\end{"}) {
      if (t.compare(i, kw.size(), kw) != 0) continue;
      const std::size_t close = t.find('}', i + kw.size());
      const std::string name = t.substr(i + kw.size(), close - i - kw.size());
      if (kw == "\\begin{") {
        envs.push_back(name);
      } else if (envs.empty() || envs.back() != name) {
        return false;
      } else {
        envs.pop_back();
      }
    }
  }
  return depth == 0 && envs.empty();
}

// Path of the golden file for one figure kind and format.
inline std::string golden_path(FigureKind kind, render::Format format) {
  return source_path("tests/golden/" + std::string(render::to_string(kind)) +
                     (format == render::Format::kSVG ? ".svg" : ".tex"));
}

}  // namespace twoxtwo::testing

#endif  // TWOXTWO_TESTS_RENDER_SAMPLES_HPP_
