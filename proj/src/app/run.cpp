#include <fstream>
#include <iostream>
#include <sstream>

#include "polyknot/app.hpp"
#include "polyknot/error.hpp"
#include "polyknot/invariants.hpp"
#include "report.hpp"

namespace polyknot::app {

namespace {

using detail::Json;

const char* const kCommands[] = {"crossings", "lift", "diagram", "jones", "identify",
                                 "bounds",    "sweep", "plot",   "reproduce"};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DataError("cannot write " + path);
  f << text;
  if (!f) throw DataError("failed writing " + path);
}

CurveInput load_curve(const JobConfig& cfg) {
  if (cfg.in_path) return parse_curve(read_file(*cfg.in_path));
  if (!cfg.x || !cfg.y) throw DomainError("give a curve with --in FILE or --x and --y");
  std::optional<RealPoly> z;
  if (cfg.z) z = parse_coefficients(*cfg.z);
  return make_curve(parse_coefficients(*cfg.x), parse_coefficients(*cfg.y), std::move(z));
}

bool has_curve(const JobConfig& cfg) { return cfg.in_path || cfg.x || cfg.y; }

KnotDiagram load_diagram(const JobConfig& cfg) {
  if (cfg.pd) return KnotDiagram::from_pd(parse_pd(*cfg.pd));
  const CurveInput c = load_curve(cfg);
  if (c.z) return build_diagram(c.knot());
  if (!cfg.pattern)
    throw DomainError("a diagram needs a height polynomial (--z) or an over/under --pattern");
  return diagram_from_pattern(find_double_points(c.plane(), cfg.tol),
                              SignPattern::parse(*cfg.pattern));
}

Json curve_json(const CurveInput& c) {
  Json j{{"x", detail::to_json(c.x)}, {"y", detail::to_json(c.y)}};
  if (c.z) j["z"] = detail::to_json(*c.z);
  return j;
}

std::pair<double, double> plot_range(const JobConfig& cfg, std::span<const DoublePoint> pts) {
  if (cfg.range) return *cfg.range;
  if (pts.empty()) return {-2.0, 2.0};
  double lo = pts.front().t, hi = pts.front().s;
  for (const auto& p : pts) {
    lo = std::min(lo, p.t);
    hi = std::max(hi, p.s);
  }
  return {lo - 0.5, hi + 0.5};
}

struct Output {
  Json report;
  std::optional<std::string> svg;
  int status = 0;
};

Output cmd_crossings(const JobConfig& cfg) {
  const CurveInput c = load_curve(cfg);
  const DoublePointSearch search = locate_double_points(c.plane(), cfg.tol);
  const std::vector<DoublePoint> pts = find_double_points(c.plane(), cfg.tol);
  Output o;
  o.report = Json{{"command", "crossings"},
                  {"curve", curve_json(c)},
                  {"regularity", detail::to_json(check_regularity(c.plane(), cfg.tol))},
                  {"resultant_degree", search.resultant.degree()},
                  {"resultant_real_roots", search.resultant_real_roots},
                  {"double_points", detail::to_json(pts)},
                  {"crossing_bound", max_crossing_bound(std::max(3, c.y.degree() + 1))},
                  {"warnings", search.warnings}};
  if (cfg.svg_path) {
    const auto [t0, t1] = plot_range(cfg, pts);
    o.svg = plot_curve_svg(c.plane(), t0, t1, pts);
  }
  return o;
}

Output cmd_lift(const JobConfig& cfg) {
  const CurveInput c = load_curve(cfg);
  const std::vector<DoublePoint> pts = find_double_points(c.plane(), cfg.tol);
  if (pts.empty()) throw DomainError("the projection has no crossings to lift");
  const SignPattern pattern =
      cfg.pattern ? SignPattern::parse(*cfg.pattern) : SignPattern::alternating(pts.size());
  if (pattern.size() != pts.size())
    throw DomainError("pattern has " + std::to_string(pattern.size()) + " letters but the curve has " +
                      std::to_string(pts.size()) + " crossings");
  const int degree = cfg.degree ? *cfg.degree : c.z ? c.z->degree() : c.y.degree() + 1;
  const std::vector<ParameterPair> pairs = parameter_pairs(pts);

  Output o;
  o.report = Json{{"command", "lift"},
                  {"curve", curve_json(c)},
                  {"pattern", pattern.to_string()},
                  {"degree", degree},
                  {"magnitude", cfg.magnitude}};
  std::string square_error;
  if (static_cast<int>(pts.size()) <= degree) {
    try {
      const LiftResult r =
          solve_lift(pairs, pattern, LiftSpec::for_crossings(pts.size(), degree, cfg.magnitude));
      o.report["method"] = "square system";
      o.report["lift"] = detail::to_json(r);
      return o;
    } catch (const DegenerateSystem& e) {
      square_error = e.what();
    }
  } else {
    square_error = "more crossings than free monomials";
  }
  const Realizability real = realize_pattern(pairs, pattern, degree, cfg.magnitude);
  if (!real.realizable) {
    std::ostringstream msg;
    msg << "pattern " << pattern.to_string() << " is not realizable in degree " << degree
        << " (square system: " << square_error << "; best LP margin " << real.margin << ")";
    for (const auto& w : real.null_vectors) {
      msg << "\n  every h satisfies sum w_i (h(t_i) - h(s_i)) = 0 with w =";
      for (double v : w) msg << ' ' << v;
    }
    throw DomainError(msg.str());
  }
  o.report["method"] = "max-margin linear program";
  o.report["square_system"] = square_error;
  o.report["lift"] = detail::to_json(real);
  return o;
}

Output cmd_diagram(const JobConfig& cfg) {
  Output o;
  o.report = Json{{"command", "diagram"}, {"diagram", detail::to_json(load_diagram(cfg))}};
  return o;
}

Output cmd_invariants(const JobConfig& cfg) {
  const KnotDiagram d = load_diagram(cfg);
  Output o;
  o.report = Json{{"command", cfg.command}, {"crossing_count", d.size()}};
  o.report["invariants"] = detail::invariants_json(d);
  if (cfg.command == "identify") {
    const Identification id = identify(jones(d), KnotTable::bundled());
    o.report["match"] = Json{{"found", id.found},
                             {"name", id.found ? Json(id.name) : Json(nullptr)},
                             {"description", id.describe()}};
  }
  return o;
}

Output cmd_bounds(const JobConfig& cfg) {
  std::optional<int> d = cfg.degree;
  if (!d && has_curve(cfg)) {
    const CurveInput c = load_curve(cfg);
    if (c.z) d = c.z->degree();
  }
  if (!d && !cfg.torus) throw DomainError("bounds needs --degree, --torus or a curve with a height polynomial");
  Output o;
  o.report = Json{{"command", "bounds"}};
  if (d) {
    const DegreeBounds b = degree_bounds(*d);
    o.report["degree"] = *d;
    o.report["crossing"] = b.crossing;
    o.report["bridge"] = b.bridge;
    o.report["superbridge"] = b.superbridge;
  }
  if (cfg.torus) {
    const auto [p, q] = *cfg.torus;
    o.report["torus"] = Json{{"p", p}, {"q", q}, {"superbridge", torus_superbridge(p, q)}};
  }
  return o;
}

Output cmd_sweep(const JobConfig& cfg) {
  const CurveInput c = load_curve(cfg);
  const DirectionSweep s = sweep_directions(c.knot(), cfg.sweep_n, cfg.seed);
  Output o;
  o.report = Json{{"command", "sweep"}, {"curve", curve_json(c)}, {"seed", cfg.seed}};
  o.report["sweep"] = detail::to_json(s);
  o.report["superbridge_bound"] = degree_bounds(std::max(3, c.z->degree())).superbridge;
  return o;
}

Output cmd_plot(const JobConfig& cfg) {
  const CurveInput c = load_curve(cfg);
  const std::vector<DoublePoint> pts = find_double_points(c.plane(), cfg.tol);
  const auto [t0, t1] = plot_range(cfg, pts);
  Output o;
  o.svg = plot_curve_svg(c.plane(), t0, t1, pts);
  o.report = Json{{"command", "plot"}, {"range", {t0, t1}}, {"marks", pts.size()}};
  return o;
}

Output cmd_reproduce(const JobConfig& cfg) {
  const Preset& p = preset(cfg.preset);
  ReproduceOptions opt;
  opt.magnitude = cfg.magnitude;
  opt.sweep_n = cfg.sweep_n;
  opt.seed = cfg.seed;
  opt.tol = cfg.tol;
  Reproduction r = reproduce(p, opt);
  Output o;
  o.report = std::move(r.report);
  o.status = r.all_pass() ? 0 : 2;
  if (cfg.svg_path) {
    const auto& v = p.variants.front();
    for (const auto& [label, curve] : p.variants)
      if (label == o.report["crossings"]["chosen"].get<std::string>()) {
        o.svg = plot_curve_svg(curve, p.plot_t0, p.plot_t1, find_double_points(curve, cfg.tol));
        break;
      }
    if (!o.svg) o.svg = plot_curve_svg(v.second, p.plot_t0, p.plot_t1, {});
  }
  return o;
}

}  // namespace

void validate(const JobConfig& cfg) {
  if (std::find(std::begin(kCommands), std::end(kCommands), cfg.command) == std::end(kCommands))
    throw DomainError("unknown command '" + cfg.command + "'");
  if (!(cfg.tol > 0.0)) throw DomainError("--tol must be positive");
  if (!(cfg.magnitude > 0.0)) throw DomainError("--magnitude must be positive");
  if (cfg.sweep_n < 1) throw DomainError("--sweep-n must be at least 1");
  if (cfg.in_path && (cfg.x || cfg.y || cfg.z))
    throw DomainError("give the curve either with --in or with --x/--y/--z, not both");
  if (cfg.command == "reproduce" && cfg.preset.empty())
    throw DomainError("reproduce needs a preset name");
  if (cfg.range && !(cfg.range->first < cfg.range->second))
    throw DomainError("--range must be an increasing pair");
  if (cfg.command == "plot" && !cfg.svg_path) throw DomainError("plot needs --svg FILE");
}

int run(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  Output o;
  try {
    validate(cfg);
    const std::string& c = cfg.command;
    if (c == "crossings")
      o = cmd_crossings(cfg);
    else if (c == "lift")
      o = cmd_lift(cfg);
    else if (c == "diagram")
      o = cmd_diagram(cfg);
    else if (c == "jones" || c == "identify")
      o = cmd_invariants(cfg);
    else if (c == "bounds")
      o = cmd_bounds(cfg);
    else if (c == "sweep")
      o = cmd_sweep(cfg);
    else if (c == "plot")
      o = cmd_plot(cfg);
    else
      o = cmd_reproduce(cfg);

    const std::string text = o.report.dump(2) + "\n";
    if (o.svg && cfg.svg_path) write_file(*cfg.svg_path, *o.svg);
    if (cfg.out_path)
      write_file(*cfg.out_path, text);
    else
      out << text;
  } catch (const NonTransverse& e) {
    err << "polyknot " << cfg.command << ": " << e.what() << " at (t, s) = (" << e.t() << ", "
        << e.s() << ")\n";
    return 1;
  } catch (const Error& e) {
    err << "polyknot " << cfg.command << ": " << e.what() << "\n";
    return 1;
  }
  if (o.status == 2) err << "polyknot reproduce: some checks failed (see \"checks\")\n";
  return o.status;
}

}  // namespace polyknot::app
