#include "polytoric/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <fstream>

#include "polytoric/errors.hpp"

namespace polytoric {
namespace {

constexpr double kUnit = 40.0;
constexpr double kMargin = 1.0;

}  // namespace

std::string render_svg(const Polygon& p, const std::optional<WidthCertificate>& cert) {
  double xmin = p.vertex(0).x.get_d(), xmax = xmin;
  double ymin = p.vertex(0).y.get_d(), ymax = ymin;
  for (const auto& v : p.vertices()) {
    xmin = std::min(xmin, v.x.get_d());
    xmax = std::max(xmax, v.x.get_d());
    ymin = std::min(ymin, v.y.get_d());
    ymax = std::max(ymax, v.y.get_d());
  }
  const double gx0 = std::floor(xmin) - kMargin, gx1 = std::ceil(xmax) + kMargin;
  const double gy0 = std::floor(ymin) - kMargin, gy1 = std::ceil(ymax) + kMargin;
  auto sx = [&](double x) { return (x - gx0) * kUnit; };
  auto sy = [&](double y) { return (gy1 - y) * kUnit; };

  std::string out = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
      "viewBox=\"0 0 {0} {1}\">\n",
      (gx1 - gx0) * kUnit, (gy1 - gy0) * kUnit);
  out += "<g stroke=\"#ddd\" stroke-width=\"1\">\n";
  for (double x = gx0; x <= gx1; x += 1.0) {
    out += fmt::format("<line x1=\"{0}\" y1=\"0\" x2=\"{0}\" y2=\"{1}\"/>\n", sx(x), sy(gy0));
  }
  for (double y = gy0; y <= gy1; y += 1.0) {
    out += fmt::format("<line x1=\"0\" y1=\"{0}\" x2=\"{1}\" y2=\"{0}\"/>\n", sy(y), sx(gx1));
  }
  out += "</g>\n<g fill=\"#444\">\n";
  for (double x = std::ceil(gx0); x <= gx1; x += 1.0) {
    for (double y = std::ceil(gy0); y <= gy1; y += 1.0) {
      out += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"2\"/>\n", sx(x), sy(y));
    }
  }
  out += "</g>\n<polygon fill=\"#8ab4f8\" fill-opacity=\"0.5\" stroke=\"#1a4fa0\" "
         "stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < p.size(); ++i) {
    out += fmt::format("{}{},{}", i ? " " : "", sx(p.vertex(i).x.get_d()), sy(p.vertex(i).y.get_d()));
  }
  out += "\"/>\n";

  if (cert) {
    const DualVector v = cert->direction;
    const double a = static_cast<double>(v.a), b = static_cast<double>(v.b);
    for (const Rational& c : {support(p, v), Rational(-support(p, -v))}) {
      const double level = c.get_d();
      double x1, y1, x2, y2;
      if (v.b != 0) {
        x1 = gx0;
        x2 = gx1;
        y1 = (level - a * x1) / b;
        y2 = (level - a * x2) / b;
      } else {
        x1 = x2 = level / a;
        y1 = gy0;
        y2 = gy1;
      }
      out += fmt::format(
          "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#c0392b\" stroke-width=\"2\" "
          "stroke-dasharray=\"6 4\"/>\n",
          sx(x1), sy(y1), sx(x2), sy(y2));
    }
    out += fmt::format(
        "<text x=\"4\" y=\"16\" font-family=\"monospace\" font-size=\"14\">width {} along ({},{})"
        "</text>\n",
        to_string(cert->width), v.a, v.b);
  }
  out += "</svg>\n";
  return out;
}

void emit_svg(const Polygon& p, const std::optional<WidthCertificate>& cert,
              const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << render_svg(p, cert);
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace polytoric
