// brillouin: zone maps, mediatrices, and focusing counts for discrete point
// sets in metric planes.
//
// Exit codes: 0 success, 1 verification/consistency failure, 2 usage,
// 3 I/O, 4 horizon.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "brillouin/config.hpp"
#include "brillouin/counting.hpp"
#include "brillouin/errors.hpp"
#include "brillouin/mediatrix.hpp"
#include "brillouin/pointset.hpp"
#include "brillouin/render.hpp"
#include "brillouin/verify.hpp"
#include "brillouin/zones.hpp"

namespace {

using namespace brillouin;

constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitHorizon = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Metric parse_metric(const std::string& s) {
  if (s == "l1" || s == "manhattan") return Metric::manhattan();
  if (s == "l2" || s == "euclidean") return Metric::euclidean();
  if (s == "l4") return Metric::lk(4.0);
  if (s == "hyperbolic" || s == "hyp") return Metric::hyperbolic();
  if (s.rfind("lk:", 0) == 0) {
    double k = std::stod(s.substr(3));
    if (!(k >= 1.0)) throw UsageError("metric exponent must be >= 1");
    return Metric::lk(k);
  }
  throw UsageError("unknown metric: " + s +
                   " (use l1, l2, l4, lk:<k>, hyperbolic)");
}

PointSet parse_set(const std::string& s, std::int64_t default_nmax = 1500) {
  if (s == "z2") return PointSet::square_lattice();
  if (s == "irrational") return PointSet::irrational_lattice();
  if (s.rfind("irrational:", 0) == 0)
    return PointSet::irrational_lattice(std::stod(s.substr(11)));
  if (s == "cross") return PointSet::cross_set();
  if (s.rfind("gamma:", 0) == 0) {
    std::string rest = s.substr(6);
    auto colon = rest.find(':');
    std::int64_t k = std::stoll(rest.substr(0, colon));
    std::int64_t nmax =
        colon == std::string::npos ? default_nmax : std::stoll(rest.substr(colon + 1));
    return PointSet::gamma_orbit(k, nmax);
  }
  throw UsageError("unknown set: " + s +
                   " (use z2, irrational[:alpha], cross, gamma:<k>[:<nmax>])");
}

Point2 parse_point(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw UsageError("expected x,y: " + s);
  return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

Window parse_window(const std::string& s) {
  std::istringstream in(s);
  double v[4];
  char sep;
  for (int i = 0; i < 4; ++i) {
    if (i > 0 && !(in >> sep)) throw UsageError("expected xmin,xmax,ymin,ymax");
    if (!(in >> v[i])) throw UsageError("expected xmin,xmax,ymin,ymax");
  }
  Window w{v[0], v[1], v[2], v[3]};
  if (!(w.x_min < w.x_max && w.y_min < w.y_max))
    throw UsageError("degenerate window");
  return w;
}

// "7", "3..9", or "1,2,5".
std::vector<std::size_t> parse_index_list(const std::string& s) {
  std::vector<std::size_t> out;
  auto dots = s.find("..");
  if (dots != std::string::npos) {
    long a = std::stol(s.substr(0, dots));
    long b = std::stol(s.substr(dots + 2));
    if (a < 0 || b < a) throw UsageError("bad range: " + s);
    for (long n = a; n <= b; ++n) out.push_back(static_cast<std::size_t>(n));
    return out;
  }
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    long v = std::stol(tok);
    if (v < 0) throw UsageError("bad index: " + tok);
    out.push_back(static_cast<std::size_t>(v));
  }
  if (out.empty()) throw UsageError("empty index list");
  return out;
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("short write to " + path);
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path);
  return file;
}

int cmd_rg(const std::string& range) {
  auto dots = range.find("..");
  std::int64_t lo, hi;
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoll(range);
    } else {
      lo = std::stoll(range.substr(0, dots));
      hi = std::stoll(range.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw UsageError("rg: expected n or a..b, got " + range);
  }
  if (lo < 0 || hi < lo) throw UsageError("rg: bad range");
  bool all_ok = true;
  for (std::int64_t n = lo; n <= hi; ++n) {
    std::int64_t f = r2_formula(n);
    std::int64_t b = r2_bruteforce(n);
    bool ok = f == b;
    all_ok = all_ok && ok;
    std::printf("%lld,%lld,%lld,%s\n", static_cast<long long>(n),
                static_cast<long long>(f), static_cast<long long>(b),
                ok ? "ok" : "mismatch");
  }
  return all_ok ? 0 : kExitVerifyFail;
}

int cmd_count(const std::string& target, std::int64_t k, std::int64_t nmax,
              bool nonzero_only, const std::string& out_path) {
  std::ofstream file;
  std::ostream& out = open_out(file, out_path);
  bool gamma = target == "gamma";
  if (!gamma && target != "torus")
    throw UsageError("count: target must be torus or gamma");
  bool closed_form = !gamma || k == 2 || k == 3 || k == 5;
  bool mismatch = false;

  out << "n,t,count_formula,count_bruteforce";
  if (!closed_form) out << ",bound";
  out << "\n";
  for (std::int64_t n = 1; n <= nmax; ++n) {
    std::int64_t formula, brute;
    double t;
    if (gamma) {
      // length of the focusing geodesics at level n
      t = std::atanh(std::sqrt(static_cast<double>(n) / (n + 1.0)));
      brute = gamma_focusing_bruteforce(k, n);
      formula = closed_form ? gamma_focusing_formula(k, n)
                            : gamma_focusing_bound(k, n);
      if (closed_form && formula != brute) mismatch = true;
      if (!closed_form && brute > formula) mismatch = true;
    } else {
      t = std::sqrt(static_cast<double>(n));
      formula = torus_focusing({n, 1});
      brute = r2_bruteforce(n);
      if (formula != brute) mismatch = true;
    }
    if (nonzero_only && formula == 0 && brute == 0) continue;
    out << n << "," << format_double(t) << "," << formula << "," << brute;
    if (!closed_form) out << ",1";
    out << "\n";
  }
  if (!out) throw IoError("count: write failed");
  return mismatch ? kExitVerifyFail : 0;
}

int cmd_zones(const std::optional<std::string>& config_path, SceneConfig cfg,
              bool have_inline_window, const std::string& window_arg,
              const std::string& ppm_path, const std::string& svg_path,
              bool dump_config) {
  if (config_path) {
    std::ifstream in(*config_path, std::ios::binary);
    if (!in) throw IoError("cannot open " + *config_path);
    std::stringstream buf;
    buf << in.rdbuf();
    cfg = parse_config(buf.str());
  }
  if (have_inline_window) cfg.window = parse_window(window_arg);
  if (dump_config) std::cout << emit_config(cfg) << "\n";
  if (ppm_path.empty() && svg_path.empty() && !dump_config)
    throw UsageError("zones: nothing to do (pass --ppm, --svg, or --dump-config)");
  if (ppm_path.empty() && svg_path.empty()) return 0;

  PointSet set = cfg.make_set();
  ZoneRaster zr = raster(cfg.metric, set, cfg.basepoint, cfg.window, cfg.width,
                         cfg.height, kDefaultTol, cfg.allow_horizon_clip);
  if (!ppm_path.empty())
    write_file(ppm_path, to_ppm(zr, cfg.palette_seed, cfg.max_zone));
  if (!svg_path.empty())
    write_file(svg_path, to_svg(zr, cfg.palette_seed, cfg.max_zone));
  return 0;
}

int cmd_trace(const std::string& metric_arg, const std::string& a_arg,
              const std::string& window_arg, double step, double tol,
              const std::string& out_path) {
  Metric metric = parse_metric(metric_arg);
  Point2 a = parse_point(a_arg);
  Window window = parse_window(window_arg);
  TraceOptions opt;
  opt.step_size = step;
  opt.tol = tol;
  Polyline poly = trace_level_set(metric, a, window, opt);

  std::ofstream file;
  std::ostream& out = open_out(file, out_path);
  out << "x,y,residual\n";
  for (std::size_t i = 0; i < poly.points.size(); ++i) {
    out << format_double(poly.points[i].x) << ","
        << format_double(poly.points[i].y) << ","
        << format_double(poly.residuals[i]) << "\n";
  }
  if (!out) throw IoError("trace: write failed");
  return 0;
}

int cmd_verify(const std::string& check, const std::string& metric_arg,
               const std::string& set_arg, const std::string& n_arg,
               const std::string& region_arg, std::size_t samples,
               std::uint64_t seed) {
  Metric metric = parse_metric(metric_arg);
  Window region = region_arg.empty()
                      ? (metric.kind() == MetricKind::hyperbolic_disk
                             ? square_window(0.6)
                             : square_window(3.0))
                      : parse_window(region_arg);
  VerificationReport report;
  if (check == "consistency") {
    report = check_consistency_sweep(metric, region, samples, 200, seed);
  } else {
    PointSet set = parse_set(set_arg);
    std::vector<std::size_t> ns = parse_index_list(n_arg);
    if (check == "tiling") {
      report = check_tiling(metric, set, ns.at(0), region, samples, seed);
    } else if (check == "area") {
      report = check_equal_area(metric, set, {0.0, 0.0}, ns, samples, seed);
    } else if (check == "fundamental") {
      report = check_fundamental_domain(metric, set, {0.0, 0.0}, ns.at(0),
                                        region, samples, seed);
    } else if (check == "boundary") {
      std::vector<std::size_t> resolutions{100, 200, 400, 800};
      report = check_boundary_measure(metric, set, {0.0, 0.0}, resolutions,
                                      region);
    } else {
      throw UsageError("verify: unknown check " + check);
    }
  }
  std::cout << report.to_json() << "\n";
  return report.passed ? 0 : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Brillouin zones of discrete point sets in metric planes"};
  app.require_subcommand(1);

  std::string rg_range;
  auto* rg = app.add_subcommand(
      "rg", "Count lattice points on circles: formula vs brute force");
  rg->add_option("range", rg_range, "n or a..b")->required();

  std::string count_target, count_out;
  std::int64_t count_k = 2, count_nmax = 100;
  bool count_nonzero = false;
  auto* count = app.add_subcommand(
      "count", "Focusing counts (torus or level-k orbit surface) as CSV");
  count->add_option("target", count_target, "torus or gamma")->required();
  count->add_option("--k", count_k, "congruence level (gamma)");
  count->add_option("--nmax", count_nmax, "largest n")->required();
  count->add_flag("--nonzero", count_nonzero, "skip all-zero rows");
  count->add_option("--out", count_out, "output file (default stdout)");

  std::string zones_config, zones_metric = "l2", zones_set = "z2";
  std::string zones_basepoint = "0,0", zones_window;
  std::uint32_t zones_w = 600, zones_h = 600, zones_maxzone = 0;
  std::uint64_t zones_palette = 0;
  bool zones_clip = false, zones_dump = false;
  std::string zones_ppm, zones_svg;
  auto* zones = app.add_subcommand("zones", "Render a zone map to PPM/SVG");
  zones->add_option("--config", zones_config, "JSON scene config file");
  zones->add_option("--metric", zones_metric, "l1,l2,l4,lk:<k>,hyperbolic");
  zones->add_option("--set", zones_set, "z2,irrational[:a],cross,gamma:<k>[:<n>]");
  zones->add_option("--basepoint", zones_basepoint, "x,y");
  zones->add_option("--window", zones_window, "xmin,xmax,ymin,ymax");
  zones->add_option("--width", zones_w, "raster width");
  zones->add_option("--height", zones_h, "raster height");
  zones->add_option("--palette-seed", zones_palette, "palette rotation");
  zones->add_option("--max-zone", zones_maxzone, "clamp zone indices");
  zones->add_flag("--allow-horizon-clip", zones_clip,
                  "blank cells past the orbit horizon instead of failing");
  zones->add_flag("--dump-config", zones_dump, "print the effective config JSON");
  zones->add_option("--ppm", zones_ppm, "write binary PPM here");
  zones->add_option("--svg", zones_svg, "write SVG here");

  std::string trace_metric = "l4", trace_a, trace_window = "-5,5,-5,5";
  std::string trace_out;
  double trace_step = 0.0, trace_tol = 1e-9;
  auto* trace = app.add_subcommand(
      "trace", "Trace the equidistant curve of the origin and a as CSV");
  trace->add_option("--metric", trace_metric, "l2,l4,lk:<k>");
  trace->add_option("--a", trace_a, "second center x,y")->required();
  trace->add_option("--window", trace_window, "xmin,xmax,ymin,ymax");
  trace->add_option("--step", trace_step, "step size (0: auto)");
  trace->add_option("--tol", trace_tol, "corrector tolerance");
  trace->add_option("--out", trace_out, "output file (default stdout)");

  std::string verify_check, verify_metric = "l2", verify_set = "z2";
  std::string verify_n = "1", verify_region;
  std::size_t verify_samples = 100000;
  std::uint64_t verify_seed = 1;
  auto* verify = app.add_subcommand("verify", "Randomized property checks");
  verify->add_option("--check", verify_check,
                     "tiling, area, fundamental, boundary, consistency")
      ->required();
  verify->add_option("--metric", verify_metric, "l1,l2,l4,lk:<k>,hyperbolic");
  verify->add_option("--set", verify_set, "z2,irrational[:a],cross,gamma:<k>[:<n>]");
  verify->add_option("--n", verify_n, "zone index, list, or range");
  verify->add_option("--region", verify_region, "xmin,xmax,ymin,ymax");
  verify->add_option("--samples", verify_samples, "sample count");
  verify->add_option("--seed", verify_seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (rg->parsed()) return cmd_rg(rg_range);
    if (count->parsed())
      return cmd_count(count_target, count_k, count_nmax, count_nonzero,
                       count_out);
    if (zones->parsed()) {
      SceneConfig cfg;
      cfg.metric = parse_metric(zones_metric);
      PointSet set = parse_set(zones_set);
      cfg.set_kind = set.kind();
      cfg.alpha = set.alpha();
      cfg.gamma_k = set.gamma_k();
      cfg.gamma_n_max = set.gamma_n_max();
      cfg.basepoint = parse_point(zones_basepoint);
      cfg.width = zones_w;
      cfg.height = zones_h;
      cfg.palette_seed = zones_palette;
      cfg.max_zone = zones_maxzone;
      cfg.allow_horizon_clip = zones_clip;
      std::optional<std::string> config_path;
      if (!zones_config.empty()) config_path = zones_config;
      return cmd_zones(config_path, cfg, !zones_window.empty(), zones_window,
                       zones_ppm, zones_svg, zones_dump);
    }
    if (trace->parsed())
      return cmd_trace(trace_metric, trace_a, trace_window, trace_step,
                       trace_tol, trace_out);
    if (verify->parsed())
      return cmd_verify(verify_check, verify_metric, verify_set, verify_n,
                        verify_region, verify_samples, verify_seed);
  } catch (const horizon_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitHorizon;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const window_too_small_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFail;
  } catch (const inconclusive_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
