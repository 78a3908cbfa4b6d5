// polyknot: double points, lifts, diagrams and invariants of polynomial knots.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "polyknot/app.hpp"

namespace {

std::pair<double, double> parse_range(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw CLI::ValidationError("--range", "expected T0,T1");
  return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

std::pair<int, int> parse_torus(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw CLI::ValidationError("--torus", "expected P,Q");
  return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"Double points, height lifts, diagrams and Jones polynomials of polynomial knots"};
  cli.require_subcommand(1);

  polyknot::app::JobConfig cfg;
  std::string in, x, y, z, pd, pattern, range, torus, out, svg;
  int degree = 0;

  auto add_curve = [&](CLI::App* sub) {
    sub->add_option("--in", in, "JSON file {\"x\": [...], \"y\": [...], \"z\": [...]}")
        ->check(CLI::ExistingFile);
    sub->add_option("--x", x, "x coefficients, ascending degree");
    sub->add_option("--y", y, "y coefficients, ascending degree");
    sub->add_option("--z", z, "height coefficients, ascending degree");
    sub->add_option("--tol", cfg.tol, "double-point matching tolerance");
  };
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", out, "write the JSON report here instead of stdout");
  };

  auto* crossings = cli.add_subcommand("crossings", "double points and regularity of (x, y)");
  add_curve(crossings);
  crossings->add_option("--svg", svg, "also plot the projection");
  crossings->add_option("--range", range, "parameter range T0,T1 of the plot");

  auto* lift = cli.add_subcommand("lift", "height polynomial realizing an over/under pattern");
  add_curve(lift);
  lift->add_option("--pattern", pattern, "U/O per crossing in t order (default UOUO...)");
  lift->add_option("--magnitude", cfg.magnitude, "target |h(t_i) - h(s_i)|");
  lift->add_option("--degree", degree, "degree of h (default deg y + 1)");

  for (const char* name : {"diagram", "jones", "identify"}) {
    auto* sub = cli.add_subcommand(name, std::string(name) == "diagram"
                                             ? "PD and Gauss codes of the closed diagram"
                                         : std::string(name) == "jones"
                                             ? "Kauffman bracket and Jones polynomial"
                                             : "match the Jones polynomial against the knot table");
    add_curve(sub);
    sub->add_option("--pattern", pattern, "over/under pattern when no --z is given");
    sub->add_option("--pd", pd, "PD code \"X(a,b,c,d) ...\" instead of a curve");
    add_out(sub);
  }

  auto* bounds = cli.add_subcommand("bounds", "crossing, bridge and superbridge bounds");
  add_curve(bounds);
  bounds->add_option("--degree", degree, "degree of the height polynomial");
  bounds->add_option("--torus", torus, "also Kuiper's superbridge index of T(P,Q)");

  auto* sweep = cli.add_subcommand("sweep", "maxima of height functions over many directions");
  add_curve(sweep);
  sweep->add_option("--sweep-n", cfg.sweep_n, "number of directions");
  sweep->add_option("--seed", cfg.seed, "jitter seed");

  auto* plot = cli.add_subcommand("plot", "SVG of the projection with its double points");
  add_curve(plot);
  plot->add_option("--svg", svg, "output file")->required();
  plot->add_option("--range", range, "parameter range T0,T1");

  auto* repro = cli.add_subcommand("reproduce", "run a built-in construction end to end");
  repro->add_option("name", cfg.preset, "preset: 5_2 or 6_2")->required();
  repro->add_option("--magnitude", cfg.magnitude, "target |h(t_i) - h(s_i)|");
  repro->add_option("--sweep-n", cfg.sweep_n, "number of sweep directions");
  repro->add_option("--seed", cfg.seed, "sweep jitter seed");
  repro->add_option("--tol", cfg.tol, "double-point matching tolerance");
  repro->add_option("--svg", svg, "also plot the projection");

  for (auto* sub : {crossings, lift, bounds, sweep, plot, repro}) add_out(sub);

  try {
    cli.parse(argc, argv);
    cfg.command = cli.get_subcommands().front()->get_name();
    if (!in.empty()) cfg.in_path = in;
    if (!x.empty()) cfg.x = x;
    if (!y.empty()) cfg.y = y;
    if (!z.empty()) cfg.z = z;
    if (!pd.empty()) cfg.pd = pd;
    if (!pattern.empty()) cfg.pattern = pattern;
    if (degree > 0) cfg.degree = degree;
    if (!range.empty()) cfg.range = parse_range(range);
    if (!torus.empty()) cfg.torus = parse_torus(torus);
    if (!out.empty()) cfg.out_path = out;
    if (!svg.empty()) cfg.svg_path = svg;
  } catch (const CLI::ParseError& e) {
    return cli.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "polyknot: " << e.what() << "\n";
    return 1;
  }
  return polyknot::app::run(cfg, std::cout, std::cerr);
}
