#include "polyknot/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <regex>
#include <sstream>

#include "polyknot/error.hpp"

namespace polyknot {

namespace {

// Traversal of a PD code along its orientation.
struct Orientation {
  std::vector<std::array<bool, 4>> incoming;
  // (crossing, entry slot) in the order the strand meets them.
  std::vector<std::pair<int, int>> passages;
};

Orientation orient(const std::vector<PdTuple>& pd) {
  const int n = static_cast<int>(pd.size());
  std::map<int, std::vector<std::pair<int, int>>> where;
  for (int x = 0; x < n; ++x)
    for (int k = 0; k < 4; ++k) where[pd[x][k]].push_back({x, k});
  for (const auto& [label, slots] : where)
    if (slots.size() != 2)
      throw DataError("PD label " + std::to_string(label) + " occurs " +
                      std::to_string(slots.size()) + " times, expected 2");

  Orientation o;
  o.incoming.assign(n, {false, false, false, false});
  if (n == 0) return o;
  std::pair<int, int> at{0, 0};
  std::vector<int> under_visits(n, 0), over_visits(n, 0);
  for (int step = 0; step <= 2 * n; ++step) {
    auto [y, f] = at;
    o.passages.push_back(at);
    o.incoming[y][f] = true;
    (f == 0 ? under_visits : over_visits)[y]++;
    const int exit = (f + 2) % 4;
    const auto& ends = where[pd[y][exit]];
    const auto next = ends[0] == std::make_pair(y, exit) ? ends[1] : ends[0];
    if (next.second == 2)
      throw DataError("PD code is inconsistently oriented at crossing " +
                      std::to_string(next.first + 1));
    if (next == std::make_pair(0, 0)) break;
    at = next;
  }
  if (static_cast<int>(o.passages.size()) != 2 * n)
    throw DataError("PD code does not describe a single closed strand");
  for (int x = 0; x < n; ++x)
    if (under_visits[x] != 1 || over_visits[x] != 1)
      throw DataError("PD code does not describe a knot (crossing " + std::to_string(x + 1) +
                      " visited inconsistently)");
  return o;
}

PdTuple mirrored_tuple(const PdTuple& x, int sign) {
  // The former over-strand becomes the under-strand; start at its incoming end.
  if (sign > 0) return {x[3], x[0], x[1], x[2]};
  return {x[1], x[2], x[3], x[0]};
}

}  // namespace

void validate_space_knot(const SpaceKnot& k) {
  validate_plane_curve(k.projection());
  if (k.h.degree() <= k.g.degree())
    throw DomainError("degrees must satisfy deg f < deg g < deg h");
}

int crossing_sign(Vec2 tangent_over, Vec2 tangent_under) {
  const double c = cross(tangent_over, tangent_under);
  const double scale = std::hypot(tangent_over.x, tangent_over.y) *
                       std::hypot(tangent_under.x, tangent_under.y);
  if (!(scale > 0.0) || std::abs(c) <= 1e-12 * scale)
    throw NonTransverse("crossing strands are tangent", 0.0, 0.0);
  return c > 0.0 ? 1 : -1;
}

KnotDiagram KnotDiagram::from_pd(std::vector<PdTuple> pd) {
  const Orientation o = orient(pd);
  KnotDiagram d;
  d.pd_ = std::move(pd);
  for (const auto& in : o.incoming) d.signs_.push_back(in[3] ? 1 : -1);
  return d;
}

KnotDiagram KnotDiagram::from_pd(std::vector<PdTuple> pd, std::vector<Crossing> crossings) {
  if (crossings.size() != pd.size())
    throw DataError("crossing geometry does not match the PD code");
  KnotDiagram d = from_pd(std::move(pd));
  for (std::size_t i = 0; i < crossings.size(); ++i)
    if (crossings[i].sign != d.signs_[i])
      throw InternalError("crossing " + std::to_string(i + 1) +
                          ": geometric sign disagrees with the PD code");
  d.crossings_ = std::move(crossings);
  return d;
}

int KnotDiagram::writhe() const {
  int w = 0;
  for (int s : signs_) w += s;
  return w;
}

std::string KnotDiagram::pd_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < pd_.size(); ++i) {
    if (i) out << ", ";
    const auto& x = pd_[i];
    out << "X(" << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ')';
  }
  return out.str();
}

std::string KnotDiagram::gauss_code() const {
  if (pd_.empty()) return "";
  const Orientation o = orient(pd_);
  int min_label = pd_[0][0];
  for (const auto& x : pd_)
    for (int v : x) min_label = std::min(min_label, v);
  std::size_t start = 0;
  for (std::size_t i = 0; i < o.passages.size(); ++i) {
    const auto [y, f] = o.passages[i];
    if (pd_[y][(f + 2) % 4] == min_label) {
      start = i;
      break;
    }
  }
  std::ostringstream out;
  for (std::size_t k = 0; k < o.passages.size(); ++k) {
    const auto [y, f] = o.passages[(start + k) % o.passages.size()];
    if (k) out << ' ';
    out << (f == 0 ? 'U' : 'O') << y + 1 << (signs_[y] > 0 ? '+' : '-');
  }
  return out.str();
}

std::vector<PdTuple> parse_pd(std::string_view text) {
  static const std::regex tuple(
      R"(X\s*[\(\[]\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*[\)\]])");
  const std::string s(text);
  std::vector<PdTuple> out;
  std::size_t last = 0;
  auto check_gap = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i)
      if (!std::isspace(static_cast<unsigned char>(s[i])) && s[i] != ',')
        throw DataError("unexpected text in PD code near '" + s.substr(i, 12) + "'");
  };
  for (auto it = std::sregex_iterator(s.begin(), s.end(), tuple); it != std::sregex_iterator();
       ++it) {
    const auto& m = *it;
    check_gap(last, static_cast<std::size_t>(m.position(0)));
    out.push_back({std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]), std::stoi(m[4])});
    last = static_cast<std::size_t>(m.position(0) + m.length(0));
  }
  check_gap(last, s.size());
  return out;
}

KnotDiagram diagram_from_pattern(std::span<const DoublePoint> points, const SignPattern& pattern) {
  if (points.size() != pattern.size())
    throw DomainError("sign pattern length does not match the crossing count");
  const int n = static_cast<int>(points.size());

  struct Passage {
    double param;
    int crossing;
    bool under;
    Vec2 tangent;
  };
  std::vector<Passage> passages;
  for (int i = 0; i < n; ++i) {
    const bool t_under = pattern[i] == polyknot::Passage::Under;
    passages.push_back({points[i].t, i, t_under, points[i].tangent_t});
    passages.push_back({points[i].s, i, !t_under, points[i].tangent_s});
  }
  std::sort(passages.begin(), passages.end(),
            [](const Passage& a, const Passage& b) { return a.param < b.param; });

  // Arc p enters passage p; the arc through infinity is 2n.
  auto arc_in = [n](int p) { return p == 0 ? 2 * n : p; };
  auto arc_out = [](int p) { return p + 1; };
  std::vector<int> under_at(n, -1), over_at(n, -1);
  for (int p = 0; p < 2 * n; ++p)
    (passages[p].under ? under_at : over_at)[passages[p].crossing] = p;

  std::vector<PdTuple> pd(n);
  std::vector<Crossing> crossings(n);
  for (int i = 0; i < n; ++i) {
    const Passage& u = passages[under_at[i]];
    const Passage& o = passages[over_at[i]];
    const int sign = crossing_sign(o.tangent, u.tangent);
    const int a = arc_in(under_at[i]);
    const int c = arc_out(under_at[i]);
    if (sign > 0)
      pd[i] = {a, arc_out(over_at[i]), c, arc_in(over_at[i])};
    else
      pd[i] = {a, arc_in(over_at[i]), c, arc_out(over_at[i])};
    crossings[i] = {i + 1, u.param, o.param, points[i].point, sign};
  }
  return KnotDiagram::from_pd(std::move(pd), std::move(crossings));
}

KnotDiagram build_diagram(const SpaceKnot& k, double tol) {
  validate_space_knot(k);
  const std::vector<DoublePoint> points = find_double_points(k.projection());
  std::vector<double> seps;
  for (const auto& p : points) {
    const double sep = k.h(p.t) - k.h(p.s);
    const double scale = k.h.magnitude_at(p.t) + k.h.magnitude_at(p.s);
    if (std::abs(sep) <= tol * scale) {
      std::ostringstream msg;
      msg << "ambiguous crossing at (t, s) = (" << p.t << ", " << p.s
          << "): both strands at the same height";
      throw DomainError(msg.str());
    }
    seps.push_back(sep);
  }
  return diagram_from_pattern(points, SignPattern::from_separations(seps));
}

KnotDiagram mirror(const KnotDiagram& d) {
  std::vector<PdTuple> pd;
  for (std::size_t i = 0; i < d.size(); ++i) pd.push_back(mirrored_tuple(d.pd()[i], d.signs()[i]));
  if (d.crossings().empty()) return KnotDiagram::from_pd(std::move(pd));
  std::vector<Crossing> crossings = d.crossings();
  for (auto& c : crossings) {
    std::swap(c.t_under, c.t_over);
    c.sign = -c.sign;
  }
  return KnotDiagram::from_pd(std::move(pd), std::move(crossings));
}

KnotDiagram with_kink(const KnotDiagram& d, int arc, int sign, bool under_first) {
  if (sign != 1 && sign != -1) throw DomainError("kink sign must be +1 or -1");
  std::vector<PdTuple> pd = d.pd();
  int top = pd.empty() ? arc : 0;
  for (const auto& x : pd)
    for (int v : x) top = std::max(top, v);
  const int loop = top + 1;
  int exit = top + 2;
  if (pd.empty()) {
    exit = arc;
  } else {
    const Orientation o = orient(pd);
    bool replaced = false;
    for (std::size_t x = 0; x < pd.size() && !replaced; ++x)
      for (int k = 0; k < 4; ++k)
        if (pd[x][k] == arc && o.incoming[x][k]) {
          pd[x][k] = exit;
          replaced = true;
          break;
        }
    if (!replaced) throw DomainError("arc " + std::to_string(arc) + " is not in the diagram");
  }
  if (under_first)
    pd.push_back(sign > 0 ? PdTuple{arc, exit, loop, loop} : PdTuple{arc, loop, loop, exit});
  else
    pd.push_back(sign > 0 ? PdTuple{loop, loop, exit, arc} : PdTuple{loop, arc, exit, loop});
  return KnotDiagram::from_pd(std::move(pd));
}

}  // namespace polyknot
