#pragma once

// Height polynomials h(t) that put one strand over the other at each double
// point of a plane projection.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polyknot/polycore.hpp"
#include "polyknot/projection.hpp"

namespace polyknot {

/// The two parameters of a crossing, t < s.
struct ParameterPair {
  double t = 0.0;
  double s = 0.0;
};

std::vector<ParameterPair> parameter_pairs(std::span<const DoublePoint> points);

/// Which strand the earlier parameter t_i is on.
enum class Passage : std::uint8_t { Under, Over };

/// Per-crossing over/under demand: Under means h(t_i) < h(s_i).
class SignPattern {
 public:
  SignPattern() = default;
  explicit SignPattern(std::vector<Passage> flags) : flags_(std::move(flags)) {}

  /// Letters U/O, e.g. "UOUOU". Throws DomainError on other characters.
  static SignPattern parse(std::string_view text);
  /// U, O, U, O, ... of the given length.
  static SignPattern alternating(std::size_t n);
  /// Pattern realized by h: Under where h(t) < h(s).
  static SignPattern from_separations(std::span<const double> separations);

  std::size_t size() const { return flags_.size(); }
  Passage operator[](std::size_t i) const { return flags_[i]; }
  /// -1 for Under, +1 for Over.
  int sign(std::size_t i) const { return flags_[i] == Passage::Under ? -1 : 1; }
  SignPattern mirrored() const;
  std::string to_string() const;

  friend bool operator==(const SignPattern&, const SignPattern&) = default;

 private:
  std::vector<Passage> flags_;
};

/// Unknowns of the square lift system.
struct LiftSpec {
  int degree = 0;
  /// Exponents solved for, in unknown order (descending).
  std::vector<int> free_monomials;
  /// Exponent -> fixed coefficient.
  std::map<int, double> pinned;
  double magnitude = 100.0;
  /// |det| below this fraction of the product of row norms is degenerate.
  double degeneracy_ratio = 1e-6;

  /// n free monomials t^n..t; the rest up to t^degree pinned (t^degree to 1,
  /// anything between to 0). With n == degree everything is free.
  static LiftSpec for_crossings(std::size_t n, int degree, double magnitude = 100.0);
  void validate(std::size_t crossings) const;
};

struct LinearSystem {
  /// Row i: m(t_i) - m(s_i) for each free monomial m.
  std::vector<std::vector<double>> matrix;
  std::vector<double> rhs;
  std::vector<int> unknowns;
  double determinant = 0.0;
  /// |det| / prod(row norms), in [0, 1].
  double hadamard_ratio = 0.0;
};

LinearSystem build_sign_system(std::span<const ParameterPair> points, const SignPattern& pattern,
                               const LiftSpec& spec);

struct LiftResult {
  RealPoly h;
  double determinant = 0.0;
  double hadamard_ratio = 0.0;
  std::map<int, double> coefficients;
  /// h(t_i) - h(s_i).
  std::vector<double> separations;
  double residual = 0.0;
};

/// Solves the square system with partial pivoting. Throws DegenerateSystem
/// when the system is (numerically) singular and InternalError when the
/// solved h fails to realize the pattern.
LiftResult solve_lift(std::span<const ParameterPair> points, const SignPattern& pattern,
                      const LiftSpec& spec);

struct PatternCheck {
  bool ok = false;
  std::vector<double> separations;
};

/// ok iff every separation has the demanded sign and |separation| >= margin.
PatternCheck verify_pattern(const RealPoly& h, std::span<const ParameterPair> points,
                            const SignPattern& pattern, double margin);

/// Outcome of asking whether any h of degree <= d realizes a pattern.
struct Realizability {
  bool realizable = false;
  /// Best achievable min_i sign_i * sep_i with coefficients normalized to
  /// the unit box; positive iff realizable.
  double margin = 0.0;
  /// Realizing polynomial scaled so that min |separation| == magnitude.
  RealPoly h;
  std::vector<double> separations;
  /// Rank of the separation map and a basis of its left null space. Every h
  /// satisfies sum_i w_i (h(t_i) - h(s_i)) = 0 for each w listed here.
  int rank = 0;
  std::vector<std::vector<double>> null_vectors;
};

/// Maximizes the worst signed separation over h in span{t, ..., t^degree}
/// with a linear program.
Realizability realize_pattern(std::span<const ParameterPair> points, const SignPattern& pattern,
                              int degree, double magnitude = 100.0);

}  // namespace polyknot
