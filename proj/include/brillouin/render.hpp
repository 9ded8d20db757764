#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "brillouin/zones.hpp"

namespace brillouin {

// Golden-angle palette: zone index n gets hue (n + seed) * 137.508 deg mod 360
// at fixed saturation/value. Boundary cells are black, sentinel cells white.
std::array<std::uint8_t, 3> palette_color(std::uint32_t zone_index,
                                          std::uint64_t palette_seed);

// Binary PPM (P6, maxval 255), rows emitted top to bottom (y_max first).
// max_zone > 0 clamps indices for color stability across renders.
std::string to_ppm(const ZoneRaster& raster, std::uint64_t palette_seed = 0,
                   std::uint32_t max_zone = 0);

// Minimal SVG 1.1: one rect per horizontal run of same-colored cells, no
// scripts, deterministic output.
std::string to_svg(const ZoneRaster& raster, std::uint64_t palette_seed = 0,
                   std::uint32_t max_zone = 0);

// Floats in CSV output carry 17 significant digits.
std::string format_double(double v);

}  // namespace brillouin
