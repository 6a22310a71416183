#include "orchard/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace orchard {

namespace {

struct Frame {
  double x0, x1, y0, y1;  // world box
  double size, margin;

  double sx(double x) const { return margin + (x - x0) / (x1 - x0) * (size - 2 * margin); }
  double sy(double y) const { return size - margin - (y - y0) / (y1 - y0) * (size - 2 * margin); }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

Frame fit_frame(const PointSet& set, int size) {
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  bool any = false;
  for (const auto& p : set.points()) {
    if (at_infinity(p)) continue;
    const auto xy = affine(p);
    const double x = xy[0].get_d(), y = xy[1].get_d();
    if (!any) {
      x0 = x1 = x;
      y0 = y1 = y;
      any = true;
    }
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
  double w = x1 - x0, h = y1 - y0;
  const double span = std::max({w, h, 1e-9});
  if (w < span) {
    x0 -= (span - w) / 2;
    x1 = x0 + span;
  }
  if (h < span) {
    y0 -= (span - h) / 2;
    y1 = y0 + span;
  }
  const double pad = span * 0.08;
  return Frame{x0 - pad, x1 + pad, y0 - pad, y1 + pad, static_cast<double>(size), 24.0};
}

// Segment of ax + by + c = 0 inside the world box.
bool clip(const Frame& f, double a, double b, double c, double out[4]) {
  std::vector<std::pair<double, double>> hits;
  if (std::abs(b) > 0) {
    for (double x : {f.x0, f.x1}) {
      const double y = -(a * x + c) / b;
      if (y >= f.y0 - 1e-12 && y <= f.y1 + 1e-12) hits.emplace_back(x, y);
    }
  }
  if (std::abs(a) > 0) {
    for (double y : {f.y0, f.y1}) {
      const double x = -(b * y + c) / a;
      if (x >= f.x0 - 1e-12 && x <= f.x1 + 1e-12) hits.emplace_back(x, y);
    }
  }
  if (hits.size() < 2) return false;
  std::sort(hits.begin(), hits.end());
  out[0] = hits.front().first;
  out[1] = hits.front().second;
  out[2] = hits.back().first;
  out[3] = hits.back().second;
  return true;
}

}  // namespace

std::string render_svg(const PointSet& set, const SvgOptions& opts) {
  const Frame f = fit_frame(set, opts.size);
  const double s = f.size;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.size << "\" height=\""
      << opts.size << "\" viewBox=\"0 0 " << opts.size << ' ' << opts.size << "\">\n"
      << "<defs><marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"4\" "
         "orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\" fill=\"#444\"/></marker></defs>\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << opts.size << "\" height=\"" << opts.size
      << "\" fill=\"white\"/>\n";

  if (opts.mark_triple_lines) {
    for (const auto& li : rich_incidences(set, 3, {1, false})) {
      const double a = li.line[0].get_d(), b = li.line[1].get_d(), c = li.line[2].get_d();
      out << "<path class=\"triple-line\" d=\"";
      double seg[4];
      if (a == 0 && b == 0) {
        const double m = 6;
        out << "M" << num(m) << ',' << num(m) << " L" << num(s - m) << ',' << num(m) << " L"
            << num(s - m) << ',' << num(s - m) << " L" << num(m) << ',' << num(s - m) << " Z";
      } else if (clip(f, a, b, c, seg)) {
        out << "M" << num(f.sx(seg[0])) << ',' << num(f.sy(seg[1])) << " L" << num(f.sx(seg[2]))
            << ',' << num(f.sy(seg[3]));
      } else {
        out << "M0,0";
      }
      out << "\" stroke=\"#c0392b\" stroke-width=\"1\" fill=\"none\"/>\n";
    }
  }

  const double cx = s / 2, cy = s / 2;
  for (std::size_t i = 0; i < set.size(); ++i) {
    const ProjPoint& p = set[i];
    const int label = set.has_labels() ? set.labels()[i] : 0;
    static const char* colors[] = {"#222222", "#1f77b4", "#2ca02c", "#9467bd"};
    if (at_infinity(p)) {
      const double dx = p[0].get_d(), dy = -p[1].get_d();
      const double len = std::hypot(dx, dy);
      const double r = s / 2 - 8;
      const double tx = cx + dx / len * r, ty = cy + dy / len * r;
      const double bx = cx + dx / len * (r - 18), by = cy + dy / len * (r - 18);
      out << "<path class=\"infinite-point\" d=\"M" << num(bx) << ',' << num(by) << " L"
          << num(tx) << ',' << num(ty) << "\" stroke=\"" << colors[label]
          << "\" stroke-width=\"2\" marker-end=\"url(#arrow)\"/>\n";
      continue;
    }
    const auto xy = affine(p);
    out << "<circle cx=\"" << num(f.sx(xy[0].get_d())) << "\" cy=\"" << num(f.sy(xy[1].get_d()))
        << "\" r=\"3\" fill=\"" << colors[label] << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace orchard
