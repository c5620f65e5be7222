#include "k3stab/io/svg.hpp"

#include <cstdio>

namespace k3stab::io {

namespace {

constexpr double kSize = 600;
constexpr double kMargin = 50;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

const char* tint(int id) {
  static const char* palette[] = {"#dbe9f6", "#f6e3db", "#e1f3dc", "#efe0f4", "#f7f2d0", "#d9f1ef", "#f4dbe6", "#e6e6e6"};
  return palette[id % 8];
}

}  // namespace

std::string walls_svg(const Slice2D& slice, const std::vector<Wall>& walls, const ChamberMap& chambers) {
  const Rect& w = slice.window();
  const double x0 = w.x0.convert_to<double>(), x1 = w.x1.convert_to<double>();
  const double y0 = w.y0.convert_to<double>(), y1 = w.y1.convert_to<double>();
  auto px = [&](double x) { return kMargin + (x - x0) / (x1 - x0) * kSize; };
  auto py = [&](double y) { return kMargin + (y1 - y) / (y1 - y0) * kSize; };

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kSize + 2 * kMargin) + "\" height=\"" +
                    num(kSize + 2 * kMargin) + "\">\n";
  out += "<g class=\"chambers\">\n";
  const double cw = kSize / std::max(chambers.nx, 1), ch = kSize / std::max(chambers.ny, 1);
  for (int j = 0; j < chambers.ny; ++j)
    for (int i = 0; i < chambers.nx; ++i) {
      int id = chambers.at(i, j);
      out += "<rect x=\"" + num(kMargin + i * cw) + "\" y=\"" + num(kMargin + kSize - (j + 1) * ch) + "\" width=\"" +
             num(cw) + "\" height=\"" + num(ch) + "\" fill=\"" + (id < 0 ? "#ffffff" : tint(id)) + "\"/>\n";
    }
  out += "</g>\n<g class=\"walls\" fill=\"none\" stroke-width=\"2\">\n";
  for (const auto& wall : walls)
    for (const auto& line : wall.segments) {
      if (line.empty()) continue;
      std::string d;
      for (std::size_t k = 0; k < line.size(); ++k)
        d += (k ? " L" : "M") + num(px(line[k].x.convert_to<double>())) + "," + num(py(line[k].y.convert_to<double>()));
      out += "<path class=\"" + to_string(wall.kind) + "\" stroke=\"" +
             (wall.kind == WallKind::HoleBoundary ? "#b2182b" : "#2166ac") + "\" d=\"" + d + "\"/>\n";
    }
  out += "</g>\n<g class=\"axes\" stroke=\"#000000\" font-size=\"14\">\n";
  out += "<rect x=\"" + num(kMargin) + "\" y=\"" + num(kMargin) + "\" width=\"" + num(kSize) + "\" height=\"" +
         num(kSize) + "\" fill=\"none\"/>\n";
  out += "<text x=\"" + num(kMargin + kSize / 2) + "\" y=\"" + num(kSize + 1.7 * kMargin) +
         "\" stroke=\"none\" text-anchor=\"middle\">x (beta coordinate)</text>\n";
  out += "<text x=\"" + num(kMargin / 3) + "\" y=\"" + num(kMargin + kSize / 2) + "\" stroke=\"none\" transform=\"rotate(-90 " +
         num(kMargin / 3) + "," + num(kMargin + kSize / 2) + ")\" text-anchor=\"middle\">y (omega coordinate)</text>\n";
  for (auto [v, label] : {std::pair{x0, w.x0.str()}, std::pair{x1, w.x1.str()}})
    out += "<text x=\"" + num(px(v)) + "\" y=\"" + num(kSize + 1.3 * kMargin) + "\" stroke=\"none\" text-anchor=\"middle\">" +
           label + "</text>\n";
  for (auto [v, label] : {std::pair{y0, w.y0.str()}, std::pair{y1, w.y1.str()}})
    out += "<text x=\"" + num(kMargin - 5) + "\" y=\"" + num(py(v)) + "\" stroke=\"none\" text-anchor=\"end\">" + label +
           "</text>\n";
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace k3stab::io
