#include "rsyt/diagrams.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "rsyt/error.hpp"

namespace rsyt {

namespace {

const char* const kPalette[] = {"#000000", "#d62728", "#1f77b4", "#2ca02c", "#9467bd",
                                "#ff7f0e", "#8c564b", "#e377c2", "#17becf", "#7f7f7f"};

const char* color(int index) { return kPalette[index % (sizeof(kPalette) / sizeof(kPalette[0]))]; }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

class Svg {
 public:
  Svg(double width, double height, const std::string& title) {
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
         << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
    out_ << "<title>" << escape(title) << "</title>\n";
    out_ << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  }

  std::ostringstream& raw() { return out_; }

  void line(double x1, double y1, double x2, double y2, const std::string& attrs) {
    out_ << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2) << "\" y2=\"" << num(y2)
         << "\" " << attrs << "/>\n";
  }

  void text(double x, double y, const std::string& body, const std::string& attrs = "") {
    out_ << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" font-family=\"sans-serif\" font-size=\"11\""
         << (attrs.empty() ? "" : " ") << attrs << '>' << escape(body) << "</text>\n";
  }

  // Marker shape cycles with the style index: circle, square, diamond.
  void marker(int style, double cx, double cy, const std::string& attrs) {
    const char* fill = color(style);
    switch (style % 3) {
      case 0:
        out_ << "<circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"4\" fill=\"" << fill << "\" "
             << attrs << "/>\n";
        break;
      case 1:
        out_ << "<rect x=\"" << num(cx - 4) << "\" y=\"" << num(cy - 4)
             << "\" width=\"8\" height=\"8\" fill=\"" << fill << "\" " << attrs << "/>\n";
        break;
      default:
        out_ << "<polygon points=\"" << num(cx) << ',' << num(cy - 5) << ' ' << num(cx + 5) << ',' << num(cy) << ' '
             << num(cx) << ',' << num(cy + 5) << ' ' << num(cx - 5) << ',' << num(cy) << "\" fill=\"" << fill
             << "\" " << attrs << "/>\n";
    }
  }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  std::ostringstream out_;
};

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string point_attrs(const char* cls, std::size_t i, std::size_t j, const Rational& pos, int rank) {
  return std::string("class=\"") + cls + "\" data-i=\"" + std::to_string(i + 1) + "\" data-j=\"" +
         std::to_string(j + 1) + "\" data-pos=\"" + to_string(pos) + "\" data-rank=\"" + std::to_string(rank) + "\"";
}

// Affine map from [lo, hi] onto [0, span].
struct Scale {
  Rational lo;
  double factor;
  Scale(const Rational& lo_, const Rational& hi, double span)
      : lo(lo_), factor(hi == lo_ ? 1.0 : span / to_double(hi - lo_)) {}
  double operator()(const Rational& v) const { return to_double(v - lo) * factor; }
};

}  // namespace

std::string render_projection_diagram(const OuterSumWitness& w) {
  const Tableau t = tableau_of_outer_sum(w);
  const std::size_t m = w.x.size(), n = w.y.size();
  Rational lo = std::min(w.x.front(), w.y.front()), hi = std::max(w.x.back(), w.y.back());
  const double pad = 40, span = 400;
  const Scale s(lo, hi, span);
  auto sx = [&](const Rational& v) { return pad + s(v); };
  auto sy = [&](const Rational& v) { return pad + span - s(v); };

  Svg svg(span + 2 * pad, span + 2 * pad, "Projection of the points (x_i, y_j) onto y = x");
  svg.line(sx(lo), sy(lo), sx(hi), sy(lo), "class=\"axis\" stroke=\"#444\"");
  svg.line(sx(lo), sy(lo), sx(lo), sy(hi), "class=\"axis\" stroke=\"#444\"");
  svg.line(sx(lo), sy(lo), sx(hi), sy(hi), "class=\"diagonal\" stroke=\"#444\"");
  svg.text(sx(hi) + 4, sy(hi), "y = x");

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational sum = w.x[i] + w.y[j];
      const Rational foot = sum / 2;
      const int rank = t.at(static_cast<int>(i), static_cast<int>(j));
      svg.line(sx(w.x[i]), sy(w.y[j]), sx(foot), sy(foot), "class=\"projector\" stroke=\"#999\"");
      svg.marker(static_cast<int>(i), sx(w.x[i]), sy(w.y[j]), point_attrs("point", i, j, sum, rank));
      svg.raw() << "<circle cx=\"" << num(sx(foot)) << "\" cy=\"" << num(sy(foot)) << "\" r=\"2\" fill=\""
                << color(static_cast<int>(i)) << "\" " << point_attrs("projection", i, j, sum, rank) << "/>\n";
    }
  return svg.finish();
}

std::string render_line_diagram(const OuterSumWitness& w) {
  const Tableau t = tableau_of_outer_sum(w);
  const std::size_t m = w.x.size(), n = w.y.size();
  const Rational lo = w.x.front() + w.y.front(), hi = w.x.back() + w.y.back();
  const double pad = 40, span = 600, base = 120;
  const Scale s(lo, hi, span);
  auto px = [&](const Rational& v) { return pad + s(v); };

  Svg svg(span + 2 * pad, 2 * base, "Points x_i + y_j on a line");
  svg.line(pad - 10, base, pad + span + 10, base, "class=\"axis\" stroke=\"#444\"");

  // Arcs for each j join x_1 + y_j, x_2 + y_j, ...; alternate sides by j.
  for (std::size_t j = 0; j < n; ++j) {
    const double dir = j % 2 == 0 ? -1.0 : 1.0;
    for (std::size_t i = 0; i + 1 < m; ++i) {
      const double a = px(w.x[i] + w.y[j]), b = px(w.x[i + 1] + w.y[j]);
      const double lift = std::min(80.0, 10 + (b - a) / 3);
      svg.raw() << "<path class=\"link\" data-j=\"" << j + 1 << "\" d=\"M " << num(a) << ' ' << num(base) << " Q "
                << num((a + b) / 2) << ' ' << num(base + dir * lift) << ' ' << num(b) << ' ' << num(base)
                << "\" fill=\"none\" stroke=\"#666\"/>\n";
    }
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational sum = w.x[i] + w.y[j];
      svg.marker(static_cast<int>(i), px(sum), base,
                 point_attrs("point", i, j, sum, t.at(static_cast<int>(i), static_cast<int>(j))));
    }
  return svg.finish();
}

std::string render_wiring_diagram(const SortingNetwork& net) {
  const auto ranks = rank_sequences(net);
  const auto pairs = swap_pairs(net);
  const int k = net.wires;
  const std::size_t steps = net.swaps.size();
  const double pad = 40, dx = 40, dy = 30;
  auto xs = [&](std::size_t s) { return pad + dx * static_cast<double>(s); };
  auto ys = [&](int position) { return pad + dy * (position - 1); };

  Svg svg(2 * pad + dx * static_cast<double>(steps), 2 * pad + dy * (k - 1), "Wiring diagram");
  for (int label = 1; label <= k; ++label) {
    svg.raw() << "<polyline class=\"wire\" data-label=\"" << label << "\" fill=\"none\" stroke=\"" << color(label - 1)
              << "\" stroke-width=\"2\" points=\"";
    for (std::size_t s = 0; s <= steps; ++s)
      svg.raw() << (s ? " " : "") << num(xs(s)) << ',' << num(ys(ranks[s][label - 1]));
    svg.raw() << "\"/>\n";
    svg.text(pad - 20, ys(label) + 4, std::to_string(label), "class=\"start-label\"");
    svg.text(xs(steps) + 10, ys(ranks[steps][label - 1]) + 4, std::to_string(label), "class=\"end-label\"");
  }
  for (std::size_t s = 0; s < steps; ++s) {
    const int p = net.swaps[s];
    svg.raw() << "<circle class=\"crossing\" data-step=\"" << s + 1 << "\" data-pos=\"" << p << "\" data-labels=\""
              << pairs[s].first << ',' << pairs[s].second << "\" cx=\"" << num((xs(s) + xs(s + 1)) / 2)
              << "\" cy=\"" << num((ys(p) + ys(p + 1)) / 2) << "\" r=\"3\" fill=\"#000\"/>\n";
  }
  return svg.finish();
}

std::string render_lattice_path(const SliceVertex& v) {
  const LabeledLatticePath path = lattice_path_of_vertex(v);
  const double pad = 40, unit = 40;
  auto px = [&](int c) { return pad + unit * c; };
  auto py = [&](int r) { return pad + unit * (v.m - r); };

  Svg svg(2 * pad + unit * v.n, 2 * pad + unit * v.m, "Labeled lattice path");
  // Cells above the path: in row r, columns 0 .. (right steps before the r-th up step) - 1.
  int rights = 0, row = 0;
  for (const auto& s : path.steps) {
    if (!s.up) {
      ++rights;
      continue;
    }
    for (int c = 0; c < rights; ++c)
      svg.raw() << "<rect class=\"area-cell\" data-row=\"" << row + 1 << "\" data-col=\"" << c + 1 << "\" x=\""
                << num(px(c)) << "\" y=\"" << num(py(row + 1)) << "\" width=\"" << num(unit) << "\" height=\""
                << num(unit) << "\" fill=\"#dde\"/>\n";
    ++row;
  }
  for (int c = 0; c <= v.n; ++c) svg.line(px(c), py(0), px(c), py(v.m), "class=\"grid\" stroke=\"#bbb\" stroke-dasharray=\"3,3\"");
  for (int r = 0; r <= v.m; ++r) svg.line(px(0), py(r), px(v.n), py(r), "class=\"grid\" stroke=\"#bbb\" stroke-dasharray=\"3,3\"");

  int cx = 0, cy = 0;
  for (std::size_t t = 0; t < path.steps.size(); ++t) {
    const auto& s = path.steps[t];
    const int nx = cx + (s.up ? 0 : 1), ny = cy + (s.up ? 1 : 0);
    svg.raw() << "<line class=\"step\" data-t=\"" << t + 1 << "\" data-dir=\"" << (s.up ? "up" : "right")
              << "\" data-label=\"" << s.label << "\" x1=\"" << num(px(cx)) << "\" y1=\"" << num(py(cy)) << "\" x2=\""
              << num(px(nx)) << "\" y2=\"" << num(py(ny)) << "\" stroke=\"#000\" stroke-width=\"2\"/>\n";
    if (s.up)
      svg.text(px(cx) - 14, (py(cy) + py(ny)) / 2 + 4, std::to_string(s.label));
    else
      svg.text((px(cx) + px(nx)) / 2 - 3, py(cy) - 6, std::to_string(s.label));
    cx = nx;
    cy = ny;
  }
  return svg.finish();
}

}  // namespace rsyt
