#include "brillouin/config.hpp"

#include <stdexcept>

#include "json.hpp"

namespace brillouin {

namespace {

const char* kind_name(PointSetKind k) {
  switch (k) {
    case PointSetKind::square_lattice: return "square_lattice";
    case PointSetKind::irrational_lattice: return "irrational_lattice";
    case PointSetKind::cross_set: return "cross_set";
    case PointSetKind::gamma_orbit: return "gamma_orbit";
  }
  throw std::logic_error("kind_name: bad enum");
}

PointSetKind kind_from(const std::string& s) {
  if (s == "square_lattice") return PointSetKind::square_lattice;
  if (s == "irrational_lattice") return PointSetKind::irrational_lattice;
  if (s == "cross_set") return PointSetKind::cross_set;
  if (s == "gamma_orbit") return PointSetKind::gamma_orbit;
  throw std::invalid_argument("unknown point set kind: " + s);
}

}  // namespace

PointSet SceneConfig::make_set() const {
  switch (set_kind) {
    case PointSetKind::square_lattice: return PointSet::square_lattice();
    case PointSetKind::irrational_lattice:
      return alpha > 0.0 ? PointSet::irrational_lattice(alpha)
                         : PointSet::irrational_lattice();
    case PointSetKind::cross_set: return PointSet::cross_set();
    case PointSetKind::gamma_orbit:
      return PointSet::gamma_orbit(gamma_k, gamma_n_max);
  }
  throw std::logic_error("make_set: bad enum");
}

bool SceneConfig::operator==(const SceneConfig& o) const {
  return metric == o.metric && set_kind == o.set_kind && alpha == o.alpha &&
         gamma_k == o.gamma_k && gamma_n_max == o.gamma_n_max &&
         basepoint == o.basepoint && window.x_min == o.window.x_min &&
         window.x_max == o.window.x_max && window.y_min == o.window.y_min &&
         window.y_max == o.window.y_max && width == o.width &&
         height == o.height && palette_seed == o.palette_seed &&
         max_zone == o.max_zone && allow_horizon_clip == o.allow_horizon_clip;
}

std::string emit_config(const SceneConfig& c) {
  nlohmann::ordered_json j;
  j["metric"]["kind"] =
      c.metric.kind() == MetricKind::lk_norm ? "lk_norm" : "hyperbolic_disk";
  if (c.metric.kind() == MetricKind::lk_norm)
    j["metric"]["exponent"] = c.metric.exponent();
  j["set"]["kind"] = kind_name(c.set_kind);
  if (c.set_kind == PointSetKind::irrational_lattice) j["set"]["alpha"] = c.alpha;
  if (c.set_kind == PointSetKind::gamma_orbit) {
    j["set"]["k"] = c.gamma_k;
    j["set"]["n_max"] = c.gamma_n_max;
  }
  j["basepoint"] = {c.basepoint.x, c.basepoint.y};
  j["window"] = {c.window.x_min, c.window.x_max, c.window.y_min, c.window.y_max};
  j["width"] = c.width;
  j["height"] = c.height;
  j["palette_seed"] = c.palette_seed;
  j["max_zone"] = c.max_zone;
  j["allow_horizon_clip"] = c.allow_horizon_clip;
  return j.dump(2);
}

SceneConfig parse_config(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("config parse: ") + e.what());
  }
  try {
    SceneConfig c;
    const auto& jm = j.at("metric");
    std::string mk = jm.at("kind").get<std::string>();
    if (mk == "lk_norm")
      c.metric = Metric::lk(jm.at("exponent").get<double>());
    else if (mk == "hyperbolic_disk")
      c.metric = Metric::hyperbolic();
    else
      throw std::invalid_argument("unknown metric kind: " + mk);

    const auto& js = j.at("set");
    c.set_kind = kind_from(js.at("kind").get<std::string>());
    if (c.set_kind == PointSetKind::irrational_lattice)
      c.alpha = js.value("alpha", 0.0);
    if (c.set_kind == PointSetKind::gamma_orbit) {
      c.gamma_k = js.at("k").get<std::int64_t>();
      c.gamma_n_max = js.at("n_max").get<std::int64_t>();
    }
    if (j.contains("basepoint")) {
      c.basepoint = {j["basepoint"].at(0).get<double>(),
                     j["basepoint"].at(1).get<double>()};
    }
    if (j.contains("window")) {
      const auto& w = j["window"];
      c.window = {w.at(0).get<double>(), w.at(1).get<double>(),
                  w.at(2).get<double>(), w.at(3).get<double>()};
      if (!(c.window.x_min < c.window.x_max && c.window.y_min < c.window.y_max))
        throw std::invalid_argument("config: degenerate window");
    }
    c.width = j.value("width", 600u);
    c.height = j.value("height", 600u);
    c.palette_seed = j.value("palette_seed", std::uint64_t{0});
    c.max_zone = j.value("max_zone", 0u);
    c.allow_horizon_clip = j.value("allow_horizon_clip", false);
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
}

}  // namespace brillouin
