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

#ifndef TWOXTWO_RENDER_DRAWING_HPP_
#define TWOXTWO_RENDER_DRAWING_HPP_

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "twoxtwo/errors.hpp"

namespace twoxtwo::render {

struct Color {
  std::uint8_t r = 0, g = 0, b = 0;

  std::string hex() const {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
    return buf;
  }
  // xcolor extended expression, usable as a TikZ color value.
  std::string tikz() const {
    return "{rgb,255:red," + std::to_string(r) + ";green," + std::to_string(g) + ";blue," +
           std::to_string(b) + "}";
  }
  static Color parse(std::string_view text) {
    auto nibble = [&](char c) -> int {
      if (c >= '0' && c <= '9') return c - '0';
      if (c >= 'a' && c <= 'f') return c - 'a' + 10;
      if (c >= 'A' && c <= 'F') return c - 'A' + 10;
      throw FormatError("bad color '" + std::string(text) + "'");
    };
    if (text.size() != 7 || text[0] != '#') {
      throw FormatError("bad color '" + std::string(text) + "', want #rrggbb");
    }
    auto byte = [&](int i) {
      return static_cast<std::uint8_t>(nibble(text[i]) * 16 + nibble(text[i + 1]));
    };
    return Color{byte(1), byte(3), byte(5)};
  }
  friend bool operator==(const Color&, const Color&) = default;
};

namespace colors {
inline constexpr Color kBlack{0, 0, 0};
inline constexpr Color kGray{128, 128, 128};
inline constexpr Color kLightGray{190, 190, 190};
inline constexpr Color kWhite{255, 255, 255};
inline constexpr Color kPurple{123, 50, 148};
inline constexpr Color kBlue{33, 102, 172};
inline constexpr Color kRed{202, 0, 32};
}  // namespace colors

struct Point {
  double x = 0;
  double y = 0;
};

enum class Anchor { kCenter, kNorth, kSouth, kEast, kWest };

// Coordinates are in points with the origin at the bottom left, y up.
struct Line {
  Point from, to;
  Color color;
  double width = 0.8;
  bool dashed = false;
  bool arrow = false;
  std::string cls;
};

struct Circle {
  Point center;
  double radius = 1;
  std::optional<Color> fill;
  std::optional<Color> stroke;
  double width = 0.8;
  std::string cls;
};

struct Rect {
  Point corner;  // bottom left
  double w = 0, h = 0;
  std::optional<Color> fill;
  double fill_opacity = 1;
  std::optional<Color> stroke;
  double width = 0.8;
  std::string cls;
};

struct Polygon {
  std::vector<Point> points;
  std::optional<Color> fill;
  double fill_opacity = 1;
  std::optional<Color> stroke;
  double width = 0.8;
  std::string cls;
};

struct Text {
  Point at;
  std::string text;
  Anchor anchor = Anchor::kCenter;
  double size = 8;
  Color color;
  std::string cls;
};

using Element = std::variant<Line, Circle, Rect, Polygon, Text>;

struct Drawing {
  double width = 100;
  double height = 100;
  std::string title;
  std::vector<Element> elements;

  template <typename T>
  void add(T element) {
    elements.emplace_back(std::move(element));
  }

  // Number of elements tagged with `cls`.
  int count(std::string_view cls) const {
    int n = 0;
    for (const auto& e : elements) {
      std::visit([&](const auto& x) { n += x.cls == cls; }, e);
    }
    return n;
  }
  template <typename T>
  std::vector<T> all(std::string_view cls) const {
    std::vector<T> out;
    for (const auto& e : elements) {
      if (const T* x = std::get_if<T>(&e); x && x->cls == cls) out.push_back(*x);
    }
    return out;
  }
};

// Six significant digits, trailing zeros trimmed, locale independent.
inline std::string fmt(double v) {
  if (!std::isfinite(v)) throw FormatError("non-finite coordinate");
  if (std::fabs(v) < 5e-7) return "0";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 6);
  std::string out(buf, res.ptr);
  if (out.find('e') != std::string::npos) {
    // Outside the plain range of %g; fall back to fixed notation.
    const auto fixed = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 6);
    out.assign(buf, fixed.ptr);
    if (out.find('.') != std::string::npos) {
      while (out.back() == '0') out.pop_back();
      if (out.back() == '.') out.pop_back();
    }
  }
  if (out == "-0") out = "0";
  return out;
}

inline std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

namespace detail {

inline std::string escape_latex(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '\\':
        out += "\\textbackslash{}";
        break;
      case '{':
        out += "\\{";
        break;
      case '}':
        out += "\\}";
        break;
      case '$':
        out += "\\$";
        break;
      case '&':
        out += "\\&";
        break;
      case '#':
        out += "\\#";
        break;
      case '%':
        out += "\\%";
        break;
      case '_':
        out += "\\_";
        break;
      case '^':
        out += "\\^{}";
        break;
      case '~':
        out += "\\~{}";
        break;
      default:
        out += c;
    }
  }
  return out;
}

inline std::string escape_xml(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      case '\'':
        out += "&apos;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

inline std::string pt(Point p) { return "(" + fmt(p.x) + "," + fmt(p.y) + ")"; }

inline const char* tikz_anchor(Anchor a) {
  switch (a) {
    case Anchor::kNorth:
      return "north";
    case Anchor::kSouth:
      return "south";
    case Anchor::kEast:
      return "east";
    case Anchor::kWest:
      return "west";
    case Anchor::kCenter:
      break;
  }
  return "center";
}

}  // namespace detail

inline std::string to_tikz(const Drawing& d) {
  using detail::pt;
  std::ostringstream out;
  out << "% " << (d.title.empty() ? "twoxtwo figure" : d.title) << "\n";
  out << "% requires \\usepackage{tikz}\n";
  out << "\\begin{tikzpicture}[x=1pt,y=1pt]\n";
  out << "\\useasboundingbox (0,0) rectangle " << pt({d.width, d.height}) << ";\n";
  for (const auto& e : d.elements) {
    if (const auto* l = std::get_if<Line>(&e)) {
      out << "\\draw[line width=" << fmt(l->width) << "pt,color=" << l->color.tikz();
      if (l->dashed) out << ",dashed";
      if (l->arrow) out << ",-latex";
      out << "] " << pt(l->from) << " -- " << pt(l->to) << ";\n";
    } else if (const auto* c = std::get_if<Circle>(&e)) {
      out << "\\path[";
      if (c->fill) out << "fill=" << c->fill->tikz();
      if (c->stroke) {
        out << (c->fill ? "," : "") << "draw=" << c->stroke->tikz()
            << ",line width=" << fmt(c->width) << "pt";
      }
      out << "] " << pt(c->center) << " circle[radius=" << fmt(c->radius) << "];\n";
    } else if (const auto* r = std::get_if<Rect>(&e)) {
      out << "\\path[";
      bool first = true;
      if (r->fill) {
        out << "fill=" << r->fill->tikz();
        if (r->fill_opacity != 1) out << ",fill opacity=" << fmt(r->fill_opacity);
        first = false;
      }
      if (r->stroke) {
        out << (first ? "" : ",") << "draw=" << r->stroke->tikz() << ",line width=" << fmt(r->width)
            << "pt";
      }
      out << "] " << pt(r->corner) << " rectangle " << pt({r->corner.x + r->w, r->corner.y + r->h})
          << ";\n";
    } else if (const auto* p = std::get_if<Polygon>(&e)) {
      out << "\\path[";
      bool first = true;
      if (p->fill) {
        out << "fill=" << p->fill->tikz();
        if (p->fill_opacity != 1) out << ",fill opacity=" << fmt(p->fill_opacity);
        first = false;
      }
      if (p->stroke) {
        out << (first ? "" : ",") << "draw=" << p->stroke->tikz() << ",line width=" << fmt(p->width)
            << "pt";
      }
      out << "]";
      for (const Point& q : p->points) out << " " << pt(q) << " --";
      out << " cycle;\n";
    } else if (const auto* t = std::get_if<Text>(&e)) {
      out << "\\node[anchor=" << detail::tikz_anchor(t->anchor)
          << ",inner sep=1pt,text=" << t->color.tikz() << ",font=\\fontsize{" << fmt(t->size)
          << "}{" << fmt(t->size * 1.2) << "}\\selectfont] at " << pt(t->at) << " {"
          << detail::escape_latex(t->text) << "};\n";
    }
  }
  out << "\\end{tikzpicture}\n";
  return out.str();
}

inline std::string to_svg(const Drawing& d) {
  using detail::escape_xml;
  const double h = d.height;
  auto X = [](double x) { return fmt(x); };
  auto Y = [h](double y) { return fmt(h - y); };

  // Marker ids derive from the content so that several figures can be
  // inlined into one page without collisions.
  char prefix[24];
  std::snprintf(prefix, sizeof(prefix), "t%012llx",
                static_cast<unsigned long long>(fnv1a(to_tikz(d)) & 0xffffffffffffULL));
  auto marker_id = [&](const Color& c) { return std::string(prefix) + "-" + c.hex().substr(1); };

  std::vector<Color> arrow_colors;
  for (const auto& e : d.elements) {
    if (const auto* l = std::get_if<Line>(&e); l && l->arrow) {
      if (std::find(arrow_colors.begin(), arrow_colors.end(), l->color) == arrow_colors.end()) {
        arrow_colors.push_back(l->color);
      }
    }
  }

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(d.width) << "pt\" height=\""
      << fmt(d.height) << "pt\" viewBox=\"0 0 " << fmt(d.width) << " " << fmt(d.height) << "\">\n";
  if (!d.title.empty()) out << "<title>" << escape_xml(d.title) << "</title>\n";
  if (!arrow_colors.empty()) {
    out << "<defs>\n";
    for (const Color& c : arrow_colors) {
      out << "<marker id=\"" << marker_id(c)
          << "\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"5\" "
             "markerHeight=\"5\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\""
          << c.hex() << "\"/></marker>\n";
    }
    out << "</defs>\n";
  }
  auto cls = [](const std::string& c) {
    return c.empty() ? std::string() : " class=\"" + escape_xml(c) + "\"";
  };
  auto paint = [](const std::optional<Color>& fill, double opacity,
                  const std::optional<Color>& stroke, double width) {
    std::string s = " fill=\"" + (fill ? fill->hex() : std::string("none")) + "\"";
    if (fill && opacity != 1) s += " fill-opacity=\"" + fmt(opacity) + "\"";
    if (stroke) s += " stroke=\"" + stroke->hex() + "\" stroke-width=\"" + fmt(width) + "\"";
    return s;
  };
  for (const auto& e : d.elements) {
    if (const auto* l = std::get_if<Line>(&e)) {
      out << "<line" << cls(l->cls) << " x1=\"" << X(l->from.x) << "\" y1=\"" << Y(l->from.y)
          << "\" x2=\"" << X(l->to.x) << "\" y2=\"" << Y(l->to.y) << "\" stroke=\""
          << l->color.hex() << "\" stroke-width=\"" << fmt(l->width) << "\"";
      if (l->dashed) {
        out << " stroke-dasharray=\"" << fmt(3 * l->width) << " " << fmt(2 * l->width) << "\"";
      }
      if (l->arrow) out << " marker-end=\"url(#" << marker_id(l->color) << ")\"";
      out << "/>\n";
    } else if (const auto* c = std::get_if<Circle>(&e)) {
      out << "<circle" << cls(c->cls) << " cx=\"" << X(c->center.x) << "\" cy=\"" << Y(c->center.y)
          << "\" r=\"" << fmt(c->radius) << "\"" << paint(c->fill, 1, c->stroke, c->width)
          << "/>\n";
    } else if (const auto* r = std::get_if<Rect>(&e)) {
      out << "<rect" << cls(r->cls) << " x=\"" << X(r->corner.x) << "\" y=\""
          << Y(r->corner.y + r->h) << "\" width=\"" << fmt(r->w) << "\" height=\"" << fmt(r->h)
          << "\"" << paint(r->fill, r->fill_opacity, r->stroke, r->width) << "/>\n";
    } else if (const auto* p = std::get_if<Polygon>(&e)) {
      out << "<polygon" << cls(p->cls) << " points=\"";
      for (std::size_t i = 0; i < p->points.size(); ++i) {
        out << (i ? " " : "") << X(p->points[i].x) << "," << Y(p->points[i].y);
      }
      out << "\"" << paint(p->fill, p->fill_opacity, p->stroke, p->width) << "/>\n";
    } else if (const auto* t = std::get_if<Text>(&e)) {
      const char* anchor = "middle";
      const char* baseline = "central";
      switch (t->anchor) {
        case Anchor::kNorth:
          baseline = "hanging";
          break;
        case Anchor::kSouth:
          baseline = "text-after-edge";
          break;
        case Anchor::kEast:
          anchor = "end";
          break;
        case Anchor::kWest:
          anchor = "start";
          break;
        case Anchor::kCenter:
          break;
      }
      out << "<text" << cls(t->cls) << " x=\"" << X(t->at.x) << "\" y=\"" << Y(t->at.y)
          << "\" font-size=\"" << fmt(t->size) << "\" text-anchor=\"" << anchor
          << "\" dominant-baseline=\"" << baseline << "\" fill=\"" << t->color.hex() << "\">"
          << escape_xml(t->text) << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace twoxtwo::render

#endif  // TWOXTWO_RENDER_DRAWING_HPP_
