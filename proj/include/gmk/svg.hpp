#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <string>

#include "gmk/error.hpp"
#include "gmk/gauss_code.hpp"
#include "gmk/meander.hpp"

namespace gmk {

struct render_spec {
  double width = 400;
  double height = 400;
  double margin = 40;
  double stroke = 1.5;
  double point_radius = 3;
  /// Polyline segments per semicircle; 0 draws exact SVG arcs.
  std::size_t arc_samples = 0;

  void validate() const {
    if (!(width > 0 && height > 0)) throw error(errc::parse_error, "canvas size must be positive");
    if (!(margin >= 0) || 2 * margin >= width || 2 * margin >= height)
      throw error(errc::parse_error, "margin must leave a positive drawing area");
    if (!(stroke > 0) || !(point_radius > 0)) throw error(errc::parse_error, "stroke widths must be positive");
  }
};

namespace detail {

class svg_writer {
 public:
  svg_writer(double w, double h) {
    out_ << std::fixed << std::setprecision(2);
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
         << ' ' << h << "\">\n";
  }

  std::ostringstream& raw() { return out_; }

  void line(double x1, double y1, double x2, double y2, double stroke, const char* cls) {
    out_ << "  <line class=\"" << cls << "\" x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
         << "\" stroke=\"black\" stroke-width=\"" << stroke << "\"/>\n";
  }

  void circle(double cx, double cy, double r, double stroke, bool filled) {
    out_ << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << r << "\" fill=\"" << (filled ? "black" : "none")
         << "\" stroke=\"black\" stroke-width=\"" << stroke << "\"/>\n";
  }

  void text(double x, double y, const std::string& s) {
    out_ << "  <text x=\"" << x << "\" y=\"" << y
         << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\">";
    for (char ch : s) {
      switch (ch) {
        case '<':
          out_ << "&lt;";
          break;
        case '>':
          out_ << "&gt;";
          break;
        case '&':
          out_ << "&amp;";
          break;
        default:
          out_ << ch;
      }
    }
    out_ << "</text>\n";
  }

  // Semicircle on the baseline from x1 to x2, bulging up (above) or down.
  void semicircle(double x1, double x2, double y, bool above, double stroke, std::size_t samples, const char* cls) {
    const double cx = (x1 + x2) / 2;
    const double r = std::abs(x2 - x1) / 2;
    out_ << "  <path class=\"" << cls << "\" d=\"M " << x1 << ' ' << y;
    if (samples == 0) {
      out_ << " A " << r << ' ' << r << " 0 0 " << ((x1 < x2) == above ? 1 : 0) << ' ' << x2 << ' ' << y;
    } else {
      for (std::size_t k = 1; k <= samples; ++k) {
        const double t = std::numbers::pi * static_cast<double>(k) / static_cast<double>(samples);
        const double x = x1 < x2 ? cx - r * std::cos(t) : cx + r * std::cos(t);
        const double dy = r * std::sin(t);
        out_ << " L " << x << ' ' << (above ? y - dy : y + dy);
      }
    }
    out_ << "\" fill=\"none\" stroke=\"black\" stroke-width=\"" << stroke << "\"/>\n";
  }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  std::ostringstream out_;
};

}  // namespace detail

/// Circle with the 2n word positions evenly spaced clockwise from the top and
/// one straight segment per chord.
inline std::string render_chord_diagram(const gauss_code& code, const render_spec& spec = {}) {
  spec.validate();
  detail::svg_writer svg(spec.width, spec.height);
  const double cx = spec.width / 2, cy = spec.height / 2;
  const double r = std::min(spec.width, spec.height) / 2 - spec.margin;
  svg.circle(cx, cy, r, spec.stroke, false);
  const std::size_t len = code.length();
  const auto at = [&](std::size_t pos, double radius) {
    const double t = 2 * std::numbers::pi * static_cast<double>(pos) / static_cast<double>(len);
    return std::pair{cx + radius * std::sin(t), cy - radius * std::cos(t)};
  };
  const chord_diagram d(code);
  for (const auto& c : d.chords()) {
    auto [x1, y1] = at(c.first, r);
    auto [x2, y2] = at(c.second, r);
    svg.line(x1, y1, x2, y2, spec.stroke, "chord");
  }
  for (std::size_t pos = 0; pos < len; ++pos) {
    auto [x, y] = at(pos, r);
    svg.circle(x, y, spec.point_radius, spec.stroke, true);
    auto [tx, ty] = at(pos, r + spec.margin / 2);
    svg.text(tx, ty, code.word()[pos]);
  }
  return svg.finish();
}

/// Horizontal line with points 1..N, upper arcs above it and lower arcs below.
/// The crossing r sits at the bottom of the lower arc (w_N, w_1); from there
/// the two ends of the line run down, outside every arc, and back up to the
/// baseline beyond points 1 and N.
inline std::string render_meander(const meander_reconstruction& rec, const render_spec& spec = {}) {
  spec.validate();
  detail::svg_writer svg(spec.width, spec.height);
  const std::size_t n = rec.points;
  // slots 0 and N + 1 are where the line ends turn down
  const double step = (spec.width - 2 * spec.margin) / static_cast<double>(n + 1);
  double up = 0, down = 0;
  for (const auto& [a, b] : rec.upper) up = std::max(up, step * (b - a) / 2);
  for (const auto& [a, b] : rec.lower) down = std::max(down, step * (b - a) / 2);
  down += step / 2;
  // centre the drawing vertically
  const double y = (spec.height - up - down) / 2 + up;
  const double bottom = y + down;
  const auto x = [&](int p) { return spec.margin + step * static_cast<double>(p); };
  const double left = x(0), right = x(static_cast<int>(n) + 1);
  svg.line(left, y, right, y, spec.stroke, "line");

  const int w1 = rec.visitation.front(), wn = rec.visitation.back();
  const arc closing{std::min(w1, wn), std::max(w1, wn)};

  for (const auto& [a, b] : rec.upper) svg.semicircle(x(a), x(b), y, true, spec.stroke, spec.arc_samples, "upper");
  for (const auto& [a, b] : rec.lower) {
    const char* cls = arc{a, b} == closing ? "lower closing" : "lower";
    svg.semicircle(x(a), x(b), y, false, spec.stroke, spec.arc_samples, cls);
  }

  const double rx = (x(closing.first) + x(closing.second)) / 2;
  const double ry = y + step * (closing.second - closing.first) / 2;
  const double spread = std::min(step / 4, (x(closing.second) - x(closing.first)) / 4);
  svg.raw() << "  <path class=\"line-end\" d=\"M " << left << ' ' << y << " L " << left << ' ' << bottom << " L "
            << rx - spread << ' ' << bottom << " L " << rx << ' ' << ry << " L " << rx + spread << ' ' << bottom
            << " L " << right << ' ' << bottom << " L " << right << ' ' << y
            << "\" fill=\"none\" stroke=\"black\" stroke-width=\"" << spec.stroke << "\"/>\n";
  svg.circle(rx, ry, spec.point_radius, spec.stroke, false);
  svg.text(rx + spread + 8, ry, "r");

  for (std::size_t p = 1; p <= n; ++p) {
    svg.circle(x(static_cast<int>(p)), y, spec.point_radius, spec.stroke, true);
    svg.text(x(static_cast<int>(p)) + 8, y - 10, std::to_string(p));
  }
  return svg.finish();
}

}  // namespace gmk
