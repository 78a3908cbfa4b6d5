#include "polyknot/app.hpp"
#include "polyknot/error.hpp"

namespace polyknot::app {

namespace {

std::vector<Preset> make_presets() {
  std::vector<Preset> out;

  Preset p52;
  p52.name = "5_2";
  // (t - 2)(t + 4)(t^2 - c) for c = 11 and c = 12; y = t(t^2 - 6)(t^2 - 16).
  const RealPoly y52{0, 96, 0, -22, 0, 1};
  p52.variants = {{"(t-2)(t+4)(t^2-11)", {RealPoly{88, -22, -19, 2, 1}, y52}},
                  {"(t-2)(t+4)(t^2-12)", {RealPoly{96, -24, -20, 2, 1}, y52}}};
  p52.published_pairs = {{-4.21, 3.43}, {-3.85, 2.08}, {-3.01, 1.79}, {-2.05, 3.84}, {0.105, 4.03}};
  p52.pattern = SignPattern::parse("UOUOU");
  p52.published_determinant = 5123.92;
  p52.published_coefficients = {{5, -1505.83}, {4, -293.032}, {3, 32625.7}, {2, 5323.59},
                                {1, -138788}};
  p52.published_h = RealPoly{0, -138788, 5323.59, 32625.7, -293.032, -1505.83, 1};
  p52.published_bracket = "-A^11+A^7-2A^3+A^-1-A^-5+A^-9";
  p52.published_writhe = 5;
  p52.published_f = "A^-4-A^-8+2A^-12-A^-16+A^-20-A^-24";
  p52.published_jones = "q-q^2+2q^3-q^4+q^5-q^6";
  p52.expected_knot = "5_2";
  p52.plot_t0 = -4.5;
  p52.plot_t1 = 4.3;
  out.push_back(std::move(p52));

  Preset p62;
  p62.name = "6_2";
  p62.variants = {{"t^4-27t^2+t", {RealPoly{0, 1, -27, 0, 1}, RealPoly{0, 260, 0, -36, 0, 1}}}};
  p62.published_pairs = {{-5.201, -0.363}, {-5.118, 5.078}, {-4.698, 2.31},
                         {-3.090, 3.233},  {-2.226, 4.651}, {0.252, 5.172}};
  p62.pattern = SignPattern::parse("UOUOUO");
  p62.published_determinant = -5.22794e6;
  p62.published_coefficients = {{6, -0.0221563}, {5, -413.2},   {4, 3202.02},
                                {3, 14878.7},    {2, -86446.7}, {1, -104260}};
  p62.published_h = RealPoly{0, -104260, -86446.7, 14878.7, 3202.02, -413.2, -0.02215};
  p62.published_jones = "q-1+2q^-1-2q^-2+2q^-3-2q^-4+q^-5";
  p62.expected_knot = "6_2";
  p62.plot_t0 = -5.5;
  p62.plot_t1 = 5.4;
  out.push_back(std::move(p62));
  return out;
}

const std::vector<Preset>& all_presets() {
  static const std::vector<Preset> presets = make_presets();
  return presets;
}

}  // namespace

const Preset& preset(std::string_view name) {
  for (const auto& p : all_presets())
    if (p.name == name) return p;
  std::string known;
  for (const auto& p : all_presets()) known += (known.empty() ? "" : ", ") + p.name;
  throw DomainError("unknown preset '" + std::string(name) + "' (known: " + known + ")");
}

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& p : all_presets()) out.push_back(p.name);
  return out;
}

}  // namespace polyknot::app
