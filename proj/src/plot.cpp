#include "gathersim/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

namespace gathersim {

namespace {

constexpr double kSize = 640.0;
constexpr double kMargin = 48.0;

const char* const kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += ch;
    }
  }
  return out;
}

class Canvas {
 public:
  explicit Canvas(const std::vector<const std::vector<Point>*>& layers) {
    for (const auto* layer : layers) {
      for (const Point& p : *layer) {
        const double x = p.x.to_double(), y = p.y.to_double();
        min_x_ = std::min(min_x_, x);
        max_x_ = std::max(max_x_, x);
        min_y_ = std::min(min_y_, y);
        max_y_ = std::max(max_y_, y);
      }
    }
    if (min_x_ > max_x_) min_x_ = max_x_ = min_y_ = max_y_ = 0.0;
    span_ = std::max({max_x_ - min_x_, max_y_ - min_y_, 1e-9});
  }

  std::string x(const Point& p) const {
    return fmt(kMargin + (p.x.to_double() - min_x_) / span_ * (kSize - 2 * kMargin));
  }
  std::string y(const Point& p) const {
    return fmt(kSize - kMargin - (p.y.to_double() - min_y_) / span_ * (kSize - 2 * kMargin));
  }

 private:
  double min_x_ = std::numeric_limits<double>::infinity();
  double max_x_ = -std::numeric_limits<double>::infinity();
  double min_y_ = std::numeric_limits<double>::infinity();
  double max_y_ = -std::numeric_limits<double>::infinity();
  double span_ = 1.0;
};

void draw_points(std::ostringstream& svg, const Canvas& cv, const Configuration& c, const char* color,
                 const char* cls, bool label) {
  for (const OccupiedPoint& o : occupied_points(c)) {
    svg << "  <circle class=\"" << cls << "\" cx=\"" << cv.x(o.point) << "\" cy=\"" << cv.y(o.point)
        << "\" r=\"5\" fill=\"" << color << "\"><title>" << escape(o.point.to_string()) << " x" << o.count
        << "</title></circle>\n";
    if (o.count >= 2) {
      svg << "  <text class=\"badge\" x=\"" << cv.x(o.point) << "\" y=\"" << cv.y(o.point)
          << "\" dx=\"7\" dy=\"-7\" font-size=\"11\" fill=\"" << color << "\">" << o.count << "</text>\n";
    }
    if (label) {
      svg << "  <text class=\"label\" x=\"" << cv.x(o.point) << "\" y=\"" << cv.y(o.point)
          << "\" dx=\"7\" dy=\"14\" font-size=\"10\" fill=\"#333\">" << escape(o.point.to_string()) << "</text>\n";
    }
  }
}

}  // namespace

std::string render_svg(const Trace& trace) {
  std::vector<const std::vector<Point>*> layers;
  for (const RoundRecord& rec : trace.rounds) {
    layers.push_back(&rec.before.positions);
    layers.push_back(&rec.destinations);
  }
  layers.push_back(&trace.final_config.positions);
  const Canvas cv(layers);

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
      << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n";
  svg << "  <defs><marker id=\"head\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" "
         "markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#555\"/></marker></defs>\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t t = 0; t < trace.rounds.size(); ++t) {
    const RoundRecord& rec = trace.rounds[t];
    const char* color = kPalette[t % std::size(kPalette)];
    svg << " <g class=\"round\" data-round=\"" << rec.before.round << "\">\n";
    for (std::size_t r = 0; r < rec.before.size(); ++r) {
      const Point& from = rec.before.positions[r];
      const Point& to = rec.destinations[r];
      if (from == to) continue;
      svg << "  <line class=\"arrow\" x1=\"" << cv.x(from) << "\" y1=\"" << cv.y(from) << "\" x2=\"" << cv.x(to)
          << "\" y2=\"" << cv.y(to) << "\" stroke=\"" << color << "\" stroke-width=\"1.2\" marker-end=\"url(#head)\"/>\n";
    }
    draw_points(svg, cv, rec.before, color, "robot", false);
    svg << " </g>\n";
  }
  svg << " <g class=\"final\" data-round=\"" << trace.final_config.round << "\">\n";
  draw_points(svg, cv, trace.final_config, "#000000", "final", true);
  svg << " </g>\n";
  svg << "  <text x=\"" << fmt(kMargin) << "\" y=\"" << fmt(kMargin / 2) << "\" font-size=\"13\">"
      << escape(trace.verdict.to_string()) << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace gathersim
