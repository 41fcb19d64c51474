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

#ifndef TWOXTWO_TOOLS_CLI_HPP_
#define TWOXTWO_TOOLS_CLI_HPP_

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "twoxtwo/census.hpp"
#include "twoxtwo/io.hpp"
#include "twoxtwo/render/figures.hpp"
#include "twoxtwo/verify.hpp"

namespace twoxtwo::cli {

inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

// CLI11 reads "-1/2" as an option name. Payoff literals that start with a
// minus get a leading space here and lose it again in parse_literals.
inline bool looks_negative_literal(const std::string& s) {
  return s.size() > 1 && s[0] == '-' &&
         (std::isdigit(static_cast<unsigned char>(s[1])) || s[1] == '.');
}

inline std::vector<Rational> parse_literals(const std::vector<std::string>& tokens,
                                            std::size_t arity, const std::string& what) {
  if (tokens.size() != arity) {
    throw UsageError(what + " needs " + std::to_string(arity) + " values, got " +
                     std::to_string(tokens.size()));
  }
  std::vector<Rational> out;
  for (const std::string& raw : tokens) {
    const std::string t = raw.starts_with(' ') ? raw.substr(1) : raw;
    try {
      out.push_back(Rational::parse(t));
    } catch (const FormatError&) {
      throw UsageError("bad number '" + t + "'");
    }
  }
  return out;
}

inline Game parse_game(const std::vector<std::string>& tokens) {
  return game_from_flat(parse_literals(tokens, 8, "a game"));
}

inline render::Format pick_format(const std::string& format, const std::string& path) {
  if (!format.empty()) return render::parse_format(format);
  if (path.ends_with(".tex") || path.ends_with(".tikz")) return render::Format::kTikZ;
  return render::Format::kSVG;
}

inline void census_report(std::ostream& out) {
  const CensusReport c = census();
  out << "strict_ordinal_total " << c.strict_ordinal_total << '\n'
      << "strict_ordinal_up_to_strategy " << c.strict_ordinal_up_to_strategy << '\n'
      << "strict_ordinal_up_to_strategy_and_player " << c.strict_ordinal_up_to_strategy_and_player
      << '\n'
      << "partial_ordinal_classes " << c.partial_ordinal_classes << '\n'
      << "br_graph_total " << c.br_graph_total << '\n'
      << "br_classes " << c.br_class_total << '\n';
}

}  // namespace detail

// Runs one command line (without the program name). Verify uses `solvers`.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err,
               const verify::Solvers& solvers = {}) {
  CLI::App app{"Analyze and draw 2x2 normal-form games.", "twoxtwo"};
  app.require_subcommand(1);

  std::vector<std::string> payoffs;
  auto* analyze = app.add_subcommand("analyze", "Print equilibria and classification of a game");
  analyze->add_option("payoffs", payoffs, "G1(AA) G1(AB) G1(BA) G1(BB) G2(AA) ... G2(BB)")
      ->required();

  std::vector<std::string> values;
  std::string kind, format, output, points_path, matrix_path;
  render::StyleOptions style;
  bool no_axes = false, no_ticks = false, no_names = false;
  std::vector<std::string> kind_names;
  for (const auto k : render::kAllFigureKinds) kind_names.emplace_back(render::to_string(k));
  auto* render_cmd = app.add_subcommand("render", "Draw a figure as TikZ or SVG");
  render_cmd->add_option("--kind", kind, "Figure kind")
      ->required()
      ->check(CLI::IsMember(kind_names));
  render_cmd->add_option("--format", format, "tikz or svg; defaults from the output suffix")
      ->check(CLI::IsMember({"tikz", "svg"}));
  render_cmd->add_option("-o,--output", output, "Output path; standard output when absent");
  render_cmd->add_option("--points", points_path, "Embedding points, two angles per line")
      ->check(CLI::ExistingFile);
  render_cmd->add_option("--matrix", matrix_path, "Embedding heatmap matrix")
      ->check(CLI::ExistingFile);
  render_cmd->add_option("--size", style.size_pt, "Figure size in points")
      ->check(CLI::PositiveNumber);
  render_cmd->add_option("--stroke", style.stroke_width_pt, "Stroke width in points")
      ->check(CLI::PositiveNumber);
  render_cmd->add_option("--azimuth", style.camera_azimuth_deg, "Polytope camera azimuth");
  render_cmd->add_option("--elevation", style.camera_elevation_deg, "Polytope camera elevation")
      ->check(CLI::Range(-89.0, 89.0));
  render_cmd->add_flag("--no-axes-labels", no_axes);
  render_cmd->add_flag("--no-tick-labels", no_ticks);
  render_cmd->add_flag("--no-best-response-names", no_names);
  render_cmd->add_option("values", values, "Eight payoffs, or four joint probabilities");

  app.add_subcommand("census", "Count ordinal games and best-response classes");

  std::uint64_t seed = 0;
  int trials = 100;
  auto* verify_cmd = app.add_subcommand("verify", "Check solvers against brute-force oracles");
  verify_cmd->add_option("--seed", seed, "Random seed");
  verify_cmd->add_option("--trials", trials, "Number of random games")
      ->check(CLI::Range(1, 1000000));

  for (auto& a : args) {
    if (detail::looks_negative_literal(a)) a.insert(a.begin(), ' ');
  }
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (analyze->parsed()) {
      out << io::analysis_report(detail::parse_game(payoffs));
      return kOk;
    }
    if (app.got_subcommand("census")) {
      detail::census_report(out);
      return kOk;
    }
    if (verify_cmd->parsed()) {
      const verify::Summary s = verify::run_verification(seed, trials, solvers);
      if (s.ok()) {
        out << "PASS " << s.passed << '/' << s.trials << '\n';
        return kOk;
      }
      out << "FAIL " << s.passed << '/' << s.trials << '\n';
      out << "check " << s.failure->check << '\n';
      out << "counterexample " << to_string(s.failure->game) << '\n';
      return kFailure;
    }

    style.show_axes_labels = !no_axes;
    style.show_tick_labels = !no_ticks;
    style.show_best_response_names = !no_names;
    const render::FigureKind k = render::parse_figure_kind(kind);
    render::FigureSpec spec{k, Game{}, style};
    if (render::takes_game(k)) {
      spec.payload = detail::parse_game(values);
    } else if (render::takes_joint(k)) {
      spec.payload =
          JointDistribution::from_values(detail::parse_literals(values, 4, "a joint distribution"));
    } else {
      render::EmbeddingPayload e;
      if (!points_path.empty()) e.points = io::read_points(points_path);
      if (!matrix_path.empty()) e.heatmap = io::read_heatmap(matrix_path);
      if (!values.empty()) {
        for (const auto& p : render::angle_points({embed(detail::parse_game(values))})) {
          e.points.push_back(p);
        }
      }
      spec.payload = std::move(e);
    }
    if (k != render::FigureKind::kEmbeddingScene &&
        (!points_path.empty() || !matrix_path.empty())) {
      throw UsageError("--points and --matrix apply to embedding figures only");
    }
    const std::string text = render::render_figure(spec, detail::pick_format(format, output));
    if (output.empty()) {
      out << text;
      return kOk;
    }
    std::ofstream file(output, std::ios::binary);
    file << text;
    file.close();
    if (!file) {
      err << "twoxtwo: cannot write '" << output << "'\n";
      return kFailure;
    }
    return kOk;
  } catch (const UsageError& e) {
    err << "twoxtwo: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "twoxtwo: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "twoxtwo: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace twoxtwo::cli

#endif  // TWOXTWO_TOOLS_CLI_HPP_
