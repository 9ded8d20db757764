#include "brillouin/render.hpp"

#include <cmath>
#include <cstdio>

namespace brillouin {

namespace {

std::array<std::uint8_t, 3> hsv_to_rgb(double h, double s, double v) {
  h = std::fmod(h, 360.0);
  if (h < 0.0) h += 360.0;
  double c = v * s;
  double x = c * (1.0 - std::abs(std::fmod(h / 60.0, 2.0) - 1.0));
  double m = v - c;
  double r = 0.0, g = 0.0, b = 0.0;
  if (h < 60.0) { r = c; g = x; }
  else if (h < 120.0) { r = x; g = c; }
  else if (h < 180.0) { g = c; b = x; }
  else if (h < 240.0) { g = x; b = c; }
  else if (h < 300.0) { r = x; b = c; }
  else { r = c; b = x; }
  auto q = [&](double t) {
    return static_cast<std::uint8_t>(std::lround(255.0 * (t + m)));
  };
  return {q(r), q(g), q(b)};
}

std::array<std::uint8_t, 3> cell_color(const ZoneRaster& raster, std::size_t i,
                                       std::size_t j, std::uint64_t palette_seed,
                                       std::uint32_t max_zone) {
  if (raster.boundary_at(i, j)) return {0, 0, 0};
  std::uint32_t n = raster.at(i, j);
  if (n == 0) return {255, 255, 255};  // sentinel: outside the domain
  if (max_zone > 0 && n > max_zone) n = max_zone;
  return palette_color(n, palette_seed);
}

}  // namespace

std::array<std::uint8_t, 3> palette_color(std::uint32_t zone_index,
                                          std::uint64_t palette_seed) {
  double hue = std::fmod(
      (static_cast<double>(zone_index) + static_cast<double>(palette_seed)) *
          137.508,
      360.0);
  return hsv_to_rgb(hue, 0.55, 0.95);
}

std::string to_ppm(const ZoneRaster& raster, std::uint64_t palette_seed,
                   std::uint32_t max_zone) {
  char header[64];
  int n = std::snprintf(header, sizeof(header), "P6\n%zu %zu\n255\n",
                        raster.width, raster.height);
  std::string out(header, static_cast<std::size_t>(n));
  out.reserve(out.size() + 3 * raster.width * raster.height);
  for (std::size_t row = 0; row < raster.height; ++row) {
    std::size_t j = raster.height - 1 - row;  // top row first
    for (std::size_t i = 0; i < raster.width; ++i) {
      auto rgb = cell_color(raster, i, j, palette_seed, max_zone);
      out.push_back(static_cast<char>(rgb[0]));
      out.push_back(static_cast<char>(rgb[1]));
      out.push_back(static_cast<char>(rgb[2]));
    }
  }
  return out;
}

std::string to_svg(const ZoneRaster& raster, std::uint64_t palette_seed,
                   std::uint32_t max_zone) {
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%zu\" "
                "height=\"%zu\" viewBox=\"0 0 %zu %zu\" "
                "shape-rendering=\"crispEdges\">\n",
                raster.width, raster.height, raster.width, raster.height);
  out += buf;
  for (std::size_t row = 0; row < raster.height; ++row) {
    std::size_t j = raster.height - 1 - row;
    std::size_t i = 0;
    while (i < raster.width) {
      auto rgb = cell_color(raster, i, j, palette_seed, max_zone);
      std::size_t run = 1;
      while (i + run < raster.width &&
             cell_color(raster, i + run, j, palette_seed, max_zone) == rgb)
        ++run;
      std::snprintf(buf, sizeof(buf),
                    "<rect x=\"%zu\" y=\"%zu\" width=\"%zu\" height=\"1\" "
                    "fill=\"#%02x%02x%02x\"/>\n",
                    i, row, run, rgb[0], rgb[1], rgb[2]);
      out += buf;
      i += run;
    }
  }
  out += "</svg>\n";
  return out;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace brillouin
