#pragma once

// Pipeline orchestration behind the polyknot command-line tool: curve input,
// built-in reproduction presets and JSON reports.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "polyknot/bridges.hpp"
#include "polyknot/diagram.hpp"
#include "polyknot/lift.hpp"
#include "polyknot/projection.hpp"

namespace polyknot::app {

/// Ascending coefficients from "[0, 1, -27]" or "0 1 -27" / "0,1,-27".
RealPoly parse_coefficients(std::string_view text);

struct CurveInput {
  RealPoly x;
  RealPoly y;
  std::optional<RealPoly> z;

  PlaneCurve plane() const { return {x, y}; }
  /// DomainError when no z component was given.
  SpaceKnot knot() const;
};

/// {"x": [...], "y": [...], "z": [...]} with z optional. Degrees must
/// increase strictly from x to y to z.
CurveInput parse_curve(std::string_view json_text);
/// Same checks for components given separately.
CurveInput make_curve(RealPoly x, RealPoly y, std::optional<RealPoly> z);

/// A built-in construction together with the values it is expected to
/// reproduce.
struct Preset {
  std::string name;
  /// Candidate projections; the one whose double points best match
  /// published_pairs is used.
  std::vector<std::pair<std::string, PlaneCurve>> variants;
  std::vector<ParameterPair> published_pairs;
  double pair_tolerance = 0.01;
  double variant_tolerance = 0.02;
  SignPattern pattern;
  int degree = 6;
  double published_determinant = 0.0;
  /// Exponent -> coefficient of the published height polynomial's solve.
  std::vector<std::pair<int, double>> published_coefficients;
  RealPoly published_h;
  double relative_tolerance = 0.01;
  std::optional<std::string> published_bracket;
  std::optional<int> published_writhe;
  std::optional<std::string> published_f;
  std::string published_jones;
  std::string expected_knot;
  double plot_t0 = -1.0;
  double plot_t1 = 1.0;
};

const Preset& preset(std::string_view name);
std::vector<std::string> preset_names();

struct ReproduceOptions {
  double magnitude = 100.0;
  int sweep_n = 10000;
  std::uint64_t seed = 42;
  double tol = kMatchTolerance;
};

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Reproduction {
  nlohmann::ordered_json report;
  std::vector<Check> checks;
  /// Space knot (chosen projection, height solved from the published
  /// parameters) used for the sweep.
  std::optional<SpaceKnot> lifted;

  bool all_pass() const;
};

Reproduction reproduce(const Preset& p, const ReproduceOptions& opt = {});

/// Options of one CLI invocation.
struct JobConfig {
  std::string command;
  std::string preset;
  std::optional<std::string> in_path;
  std::optional<std::string> x, y, z;
  std::optional<std::string> pd;
  std::optional<std::string> pattern;
  std::optional<int> degree;
  std::optional<std::pair<int, int>> torus;
  std::optional<std::pair<double, double>> range;
  double magnitude = 100.0;
  double tol = kMatchTolerance;
  int sweep_n = 10000;
  std::uint64_t seed = 42;
  std::optional<std::string> out_path;
  std::optional<std::string> svg_path;
};

/// Throws DomainError on inconsistent options.
void validate(const JobConfig& cfg);

/// Runs one command. The JSON report goes to cfg.out_path or `out`;
/// diagnostics go to `err`. Nothing is written when the command fails.
/// Returns 0 on success, 1 on pipeline or input errors and 2 when
/// `reproduce` completes with failed checks.
int run(const JobConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace polyknot::app
