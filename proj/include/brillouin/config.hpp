#pragma once

#include <cstdint>
#include <string>

#include "brillouin/geometry.hpp"
#include "brillouin/metric.hpp"
#include "brillouin/pointset.hpp"

namespace brillouin {

// Declarative description of a zone-map render; round-trips through JSON
// exactly (parse(emit(c)) == c).
struct SceneConfig {
  Metric metric = Metric::euclidean();
  PointSetKind set_kind = PointSetKind::square_lattice;
  double alpha = 0.0;          // irrational_lattice
  std::int64_t gamma_k = 0;    // gamma_orbit
  std::int64_t gamma_n_max = 0;
  Point2 basepoint{0.0, 0.0};
  Window window{-3.0, 3.0, -3.0, 3.0};
  std::uint32_t width = 600;
  std::uint32_t height = 600;
  std::uint64_t palette_seed = 0;
  std::uint32_t max_zone = 0;          // 0: unlimited
  bool allow_horizon_clip = false;

  PointSet make_set() const;

  bool operator==(const SceneConfig& o) const;
};

std::string emit_config(const SceneConfig& config);
SceneConfig parse_config(const std::string& json_text);  // throws std::invalid_argument

}  // namespace brillouin
