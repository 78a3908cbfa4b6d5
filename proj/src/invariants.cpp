#include "polyknot/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "polyknot/error.hpp"

namespace polyknot::detail {
extern const std::string_view kBundledKnotTable;
}

namespace polyknot {

namespace {

struct UnionFind {
  std::vector<int> parent;
  int components;

  explicit UnionFind(int n) : parent(n), components(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int root(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void join(int a, int b) {
    a = root(a);
    b = root(b);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

LaurentInt kauffman_bracket(const KnotDiagram& d, int max_crossings) {
  const int n = static_cast<int>(d.size());
  if (n > max_crossings)
    throw DomainError("diagram has " + std::to_string(n) + " crossings, cap is " +
                      std::to_string(max_crossings));
  if (n == 0) return LaurentInt::one('A');

  // Compact arc labels to 0..2n-1.
  std::map<int, int> index;
  for (const auto& x : d.pd())
    for (int v : x) index.emplace(v, 0);
  int next = 0;
  for (auto& [label, i] : index) i = next++;
  std::vector<std::array<int, 4>> slots;
  for (const auto& x : d.pd())
    slots.push_back({index[x[0]], index[x[1]], index[x[2]], index[x[3]]});

  // (#A - #B, loops) -> number of states.
  std::map<std::pair<int, int>, long long> tally;
  for (unsigned long long state = 0; state < (1ULL << n); ++state) {
    UnionFind uf(next);
    int a_count = 0;
    for (int i = 0; i < n; ++i) {
      const auto& s = slots[i];
      if (state >> i & 1ULL) {
        uf.join(s[0], s[3]);
        uf.join(s[1], s[2]);
      } else {
        uf.join(s[0], s[1]);
        uf.join(s[2], s[3]);
        ++a_count;
      }
    }
    ++tally[{2 * a_count - n, uf.components}];
  }

  LaurentInt sum('A');
  std::map<int, LaurentInt> delta_cache;
  for (const auto& [key, count] : tally) {
    const auto [exponent, loops] = key;
    auto it = delta_cache.find(loops);
    if (it == delta_cache.end()) it = delta_cache.emplace(loops, delta_power(loops - 1)).first;
    sum = sum + LaurentInt::monomial('A', exponent, BigInt(count)) * it->second;
  }
  return sum;
}

LaurentInt normalized_f(const KnotDiagram& d, int max_crossings) {
  const int w = d.writhe();
  const int e = -3 * w;
  const LaurentInt factor = LaurentInt::monomial('A', e, e % 2 == 0 ? 1 : -1);
  return factor * kauffman_bracket(d, max_crossings);
}

LaurentInt jones(const KnotDiagram& d, int max_crossings) {
  const LaurentInt f = normalized_f(d, max_crossings);
  try {
    return substitute_quarter(f);
  } catch (const DomainError& e) {
    throw InternalError(std::string("normalized bracket is not a polynomial in A^4: ") +
                        e.what());
  }
}

KnotTable KnotTable::load(std::string_view text) {
  KnotTable table;
  std::set<std::string> names;
  std::map<std::string, std::string> pd_owner;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = trim(line.substr(0, line.find('#')));
    if (body.empty()) continue;
    const auto semi = body.find(';');
    if (semi == std::string::npos)
      throw DataError("knot table line " + std::to_string(lineno) + ": missing ';'");
    const std::string name = trim(std::string_view(body).substr(0, semi));
    if (name.empty()) throw DataError("knot table line " + std::to_string(lineno) + ": no name");
    if (!names.insert(name).second)
      throw DataError("knot table line " + std::to_string(lineno) + ": duplicate name " + name);
    KnotEntry entry;
    entry.name = name;
    try {
      entry.diagram = KnotDiagram::from_pd(parse_pd(std::string_view(body).substr(semi + 1)));
      entry.jones = jones(entry.diagram);
    } catch (const Error& e) {
      throw DataError("knot table line " + std::to_string(lineno) + " (" + name + "): " + e.what());
    }
    const std::string key = entry.diagram.pd_string();
    if (auto [it, fresh] = pd_owner.emplace(key, name); !fresh)
      throw DataError("knot table: " + name + " repeats the PD code of " + it->second);
    table.entries_.push_back(std::move(entry));
  }

  for (std::size_t i = 0; i < table.entries_.size(); ++i) {
    const KnotEntry& a = table.entries_[i];
    if (a.diagram.size() > 9) continue;
    const LaurentInt a_mirror = mirror_variable(a.jones);
    for (std::size_t j = 0; j < i; ++j) {
      const KnotEntry& b = table.entries_[j];
      if (b.diagram.size() > 9) continue;
      if (b.jones == a.jones || b.jones == a_mirror)
        throw DataError("knot table: " + a.name + " and " + b.name +
                        " have the same Jones polynomial up to mirror");
    }
  }
  return table;
}

const KnotTable& KnotTable::bundled() {
  static const KnotTable table = load(detail::kBundledKnotTable);
  return table;
}

const KnotEntry* KnotTable::find(std::string_view name) const {
  for (const auto& e : entries_)
    if (e.name == name) return &e;
  return nullptr;
}

std::string Identification::describe() const {
  if (!found) return "unknown";
  switch (chirality) {
    case Chirality::AsTabulated: return name + " (as tabulated)";
    case Chirality::Mirror: return name + " (mirror of tabulated)";
    case Chirality::Amphichiral: return name + " (amphichiral)";
  }
  return name;
}

Identification identify(const LaurentInt& v, const KnotTable& table) {
  if (v.variable() != 'q') throw DomainError("identify expects a Jones polynomial in q");
  const LaurentInt vm = mirror_variable(v);
  Identification out;
  for (const auto& e : table.entries()) {
    const bool same = e.jones == v;
    if (!same && e.jones != vm) continue;
    out.found = true;
    out.name = e.name;
    if (e.jones == mirror_variable(e.jones))
      out.chirality = Chirality::Amphichiral;
    else
      out.chirality = same ? Chirality::AsTabulated : Chirality::Mirror;
    break;
  }
  return out;
}

}  // namespace polyknot
