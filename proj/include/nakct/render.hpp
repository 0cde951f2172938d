#pragma once

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nakct/singularity.hpp"

namespace nakct {

enum class Format { Dot, Tikz, Ascii };

/// Rectangles mark cluster tilting members, circles mark e.g. objects of F.
struct RenderSpec {
  Format format = Format::Dot;
  std::set<Indec> highlight;
  std::set<Indec> circle;
};

inline std::string node_id(const Indec& x) { return std::to_string(x.i) + "_" + std::to_string(x.j); }

inline std::string node_label(const Indec& x) {
  return "(" + std::to_string(x.i) + "," + std::to_string(x.j) + ")";
}

namespace detail {

inline std::string render_ar_dot(const ARQuiver& q, const RenderSpec& spec) {
  std::ostringstream os;
  os << "digraph ar_quiver {\n";
  os << "  node [shape=plaintext];\n";
  for (const Indec& x : q.vertices) {
    os << "  \"" << node_id(x) << "\" [label=\"" << node_label(x) << "\"";
    const bool box = spec.highlight.count(x) > 0;
    const bool ring = spec.circle.count(x) > 0;
    if (box && ring)
      os << ", shape=box, style=rounded";
    else if (box)
      os << ", shape=box";
    else if (ring)
      os << ", shape=circle";
    os << "];\n";
  }
  for (const ARArrow& a : q.arrows)
    os << "  \"" << node_id(a.from) << "\" -> \"" << node_id(a.to) << "\";\n";
  for (const auto& [x, y] : q.translations)
    os << "  \"" << node_id(x) << "\" -> \"" << node_id(y)
       << "\" [style=dashed, arrowhead=none, constraint=false];\n";
  os << "}\n";
  return os.str();
}

inline std::string render_ar_tikz(const ARQuiver& q, const RenderSpec& spec) {
  std::ostringstream os;
  os << "\\begin{tikzpicture}[xscale=0.8,yscale=0.9]\n";
  for (const Indec& x : q.vertices) {
    std::string style;
    if (spec.highlight.count(x)) style = "draw,rectangle";
    if (spec.circle.count(x)) style += std::string(style.empty() ? "" : ",") + "draw,circle";
    os << "  \\node" << (style.empty() ? "" : "[" + style + "]") << " (n" << node_id(x) << ") at ("
       << (x.i + x.j) << "," << (x.length() - 1) << ") {$" << x.i << x.j << "$};\n";
  }
  for (const ARArrow& a : q.arrows)
    os << "  \\draw[->] (n" << node_id(a.from) << ") -- (n" << node_id(a.to) << ");\n";
  for (const auto& [x, y] : q.translations)
    os << "  \\draw[dotted] (n" << node_id(x) << ") -- (n" << node_id(y) << ");\n";
  os << "\\end{tikzpicture}\n";
  return os.str();
}

/// One text row per module length, longest on top, columns by i + j.
inline std::string render_ar_ascii(const ARQuiver& q, const RenderSpec& spec) {
  std::map<int, std::map<int, std::string>, std::greater<>> rows;
  size_t width = 0;
  for (const Indec& x : q.vertices) {
    std::string cell = std::to_string(x.i) + "," + std::to_string(x.j);
    if (spec.circle.count(x)) cell = "(" + cell + ")";
    if (spec.highlight.count(x)) cell = "[" + cell + "]";
    width = std::max(width, cell.size());
    rows[x.length()][x.i + x.j] = cell;
  }
  const size_t half = width / 2 + 1;
  int min_col = 1 << 30;
  for (const auto& [len, cells] : rows) min_col = std::min(min_col, cells.begin()->first);
  std::ostringstream os;
  for (const auto& [len, cells] : rows) {
    std::string line;
    for (const auto& [col, cell] : cells) {
      const size_t at = static_cast<size_t>(col - min_col) * half;
      if (line.size() < at) line.append(at - line.size(), ' ');
      if (!line.empty() && line.back() != ' ') line += ' ';
      line += cell;
    }
    os << line << "\n";
  }
  return os.str();
}

}  // namespace detail

inline std::string render_ar_quiver(const ARQuiver& q, const RenderSpec& spec) {
  switch (spec.format) {
    case Format::Dot: return detail::render_ar_dot(q, spec);
    case Format::Tikz: return detail::render_ar_tikz(q, spec);
    case Format::Ascii: return detail::render_ar_ascii(q, spec);
  }
  return {};
}

inline std::string render_resolution_quiver(const ResolutionQuiver& q, Format format) {
  std::ostringstream os;
  const int m = static_cast<int>(q.successor.size());
  switch (format) {
    case Format::Dot:
      os << "digraph resolution_quiver {\n";
      for (int v = 1; v <= m; ++v) os << "  \"S_" << v << "\";\n";
      for (int v = 1; v <= m; ++v)
        if (q(v)) os << "  \"S_" << v << "\" -> \"S_" << *q(v) << "\";\n";
      os << "}\n";
      break;
    case Format::Tikz:
      os << "\\begin{tikzpicture}\n";
      for (int v = 1; v <= m; ++v)
        os << "  \\node (s" << v << ") at (" << (360.0 * (v - 1) / m) << ":3) {$S_{" << v << "}$};\n";
      for (int v = 1; v <= m; ++v)
        if (q(v)) os << "  \\draw[->] (s" << v << ") -- (s" << *q(v) << ");\n";
      os << "\\end{tikzpicture}\n";
      break;
    case Format::Ascii:
      for (int v = 1; v <= m; ++v) {
        os << "S_" << v << " -> ";
        if (q(v))
          os << "S_" << *q(v);
        else
          os << "-";
        os << "\n";
      }
      break;
  }
  return os.str();
}

}  // namespace nakct
