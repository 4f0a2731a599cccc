#include "render.hpp"

#include <cstdio>
#include <stdexcept>

namespace slowcf {

namespace {

double to_double(const Rational& r) { return mpq_class(r.num(), r.den()).get_d(); }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

} // namespace

std::string render_scfa(const Scfa& s, int width, int height) {
  if (width < 64 || height < 64) throw std::invalid_argument("render needs width, height >= 64");
  const double ml = 44, mr = 12, mt = 12, mb = 34; // margins
  const double pw = width - ml - mr, ph = height - mt - mb;
  auto px = [&](double x) { return ml + x * pw; };
  auto py = [&](double y) { return mt + (1.0 - y) * ph; }; // y axis inverted

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + std::to_string(width) +
         " " + std::to_string(height) + "\" width=\"" + std::to_string(width) + "\" height=\"" +
         std::to_string(height) + "\">\n";

  // unit box
  auto line = [&](double x1, double y1, double x2, double y2, const char* stroke) {
    svg += "  <line x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y1) + "\" x2=\"" + fmt(x2) + "\" y2=\"" +
           fmt(y2) + "\" stroke=\"" + stroke + "\" stroke-width=\"1\"/>\n";
  };
  line(px(0), py(0), px(1), py(0), "#333");
  line(px(0), py(0), px(0), py(1), "#333");
  line(px(1), py(0), px(1), py(1), "#bbb");
  line(px(0), py(1), px(1), py(1), "#bbb");

  // one polyline per branch of the forward map
  const int samples = 32;
  for (int i = 1; i <= s.branch_count(); ++i) {
    const UnimodularInterval& cell = s.cell(i);
    Mobius inv = s.branch(i).inverse();
    svg += "  <polyline fill=\"none\" stroke=\"#1a66cc\" stroke-width=\"1.5\" points=\"";
    for (int k = 0; k <= samples; ++k) {
      Rational x = cell.lo() + (cell.hi() - cell.lo()) * Rational(k, samples);
      Rational y = inv(x);
      if (k != 0) svg += " ";
      svg += fmt(px(to_double(x))) + "," + fmt(py(to_double(y)));
    }
    svg += "\"/>\n";
  }

  // ticks and exact fraction labels at the partition endpoints
  std::vector<Rational> pts;
  pts.push_back(Rational(0));
  for (const Rational& p : s.partition().interior_points()) pts.push_back(p);
  pts.push_back(Rational(1));
  for (const Rational& p : pts) {
    double x = px(to_double(p));
    line(x, py(0), x, py(0) + 5, "#333");
    svg += "  <text x=\"" + fmt(x) + "\" y=\"" + fmt(py(0) + 18) +
           "\" font-size=\"11\" text-anchor=\"middle\" font-family=\"monospace\">" + p.str() +
           "</text>\n";
  }
  // y-axis ticks at 0 and 1
  for (int y = 0; y <= 1; ++y) {
    line(px(0) - 5, py(y), px(0), py(y), "#333");
    svg += "  <text x=\"" + fmt(px(0) - 8) + "\" y=\"" + fmt(py(y) + 4) +
           "\" font-size=\"11\" text-anchor=\"end\" font-family=\"monospace\">" +
           std::to_string(y) + "/1</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

} // namespace slowcf
