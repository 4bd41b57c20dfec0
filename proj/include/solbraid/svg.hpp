#pragma once

// Static SVG 1.1 diagrams of closed braids, in the usual figure style:
// strands run top to bottom as polylines, letter j of the word occupies one
// 40-unit row where the two involved strands cross (the under strand drawn
// with a gap), and closure arcs return every bottom endpoint to the top in
// nested rectangular lanes on the right.  All coordinates are integers and
// the output is byte-identical for identical input.

#include <sstream>
#include <string>
#include <vector>

#include "solbraid/braid.hpp"

namespace solbraid {

namespace detail {

struct SvgPoint {
  int x, y;
};

/// Polyline accumulator that merges collinear runs.
class SvgPath {
 public:
  void move_to(int x, int y) {
    if (pts_.size() > 1) done_.push_back(std::move(pts_));
    pts_ = {SvgPoint{x, y}};
  }

  void line_to(int x, int y) {
    if (pts_.size() >= 2) {
      const SvgPoint& b = pts_[pts_.size() - 1];
      const SvgPoint& a = pts_[pts_.size() - 2];
      const int dx1 = b.x - a.x, dy1 = b.y - a.y;
      const int dx2 = x - b.x, dy2 = y - b.y;
      if (dx1 * dy2 - dy1 * dx2 == 0 && dx1 * dx2 + dy1 * dy2 > 0) {
        pts_.back() = SvgPoint{x, y};
        return;
      }
    }
    pts_.push_back(SvgPoint{x, y});
  }

  std::vector<std::vector<SvgPoint>> take() {
    if (pts_.size() > 1) done_.push_back(std::move(pts_));
    pts_.clear();
    return std::move(done_);
  }

 private:
  std::vector<SvgPoint> pts_;
  std::vector<std::vector<SvgPoint>> done_;
};

inline void emit_polyline(std::ostringstream& out, const std::vector<SvgPoint>& pts) {
  out << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out << ' ';
    out << pts[i].x << ',' << pts[i].y;
  }
  out << "\"/>\n";
}

}  // namespace detail

/// Render the closure of b.  Deterministic; see the header comment for the
/// layout.
inline std::string render_svg(const BraidWord& b) {
  const int n = b.strands;
  const int m = static_cast<int>(b.letters.size());
  const int rows = m > 0 ? m : 1;

  const auto xcol = [](int j) { return 20 + (j - 1) * 40; };  // j in 1..n
  const int y_top = 10 * n + 20;
  const int y_bot = y_top + rows * 40;
  const int width = xcol(n) + 10 * n + 20;
  const int height = y_bot + 10 * n + 20;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";

  // strands, in order of their top column
  for (int start = 1; start <= n; ++start) {
    detail::SvgPath path;
    int col = start;
    path.move_to(xcol(col), y_top);
    for (int l = 0; l < m; ++l) {
      const int y0 = y_top + l * 40;
      const int y1 = y0 + 40;
      const int k = b.letters[static_cast<std::size_t>(l)];
      const int i = k > 0 ? k : -k;
      if (col != i && col != i + 1) {
        path.line_to(xcol(col), y1);
        continue;
      }
      const int from = xcol(col);
      const int next_col = col == i ? i + 1 : i;
      const int to = xcol(next_col);
      const bool over = (col == i) == (k > 0);
      if (over) {
        path.line_to(to, y1);
      } else {
        const int dx = to > from ? 1 : -1;
        path.line_to(from + dx * 14, y0 + 14);
        path.move_to(from + dx * 26, y0 + 26);
        path.line_to(to, y1);
      }
      col = next_col;
    }
    if (m == 0) path.line_to(xcol(col), y_bot);
    for (const auto& pts : path.take()) detail::emit_polyline(out, pts);
  }

  // closure arcs: bottom of column j back to its top, lane n-j+1
  for (int j = 1; j <= n; ++j) {
    const int lane = 10 * (n - j + 1);
    const int x = xcol(j);
    const int xr = xcol(n) + lane;
    detail::SvgPath arc;
    arc.move_to(x, y_bot);
    arc.line_to(x, y_bot + lane);
    arc.line_to(xr, y_bot + lane);
    arc.line_to(xr, y_top - lane);
    arc.line_to(x, y_top - lane);
    arc.line_to(x, y_top);
    for (const auto& pts : arc.take()) detail::emit_polyline(out, pts);
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace solbraid
