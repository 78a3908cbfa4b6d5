#pragma once

// Kauffman bracket, Jones polynomial and identification against a table of
// small knots.

#include <string>
#include <string_view>
#include <vector>

#include "polyknot/diagram.hpp"
#include "polyknot/laurent.hpp"

namespace polyknot {

inline constexpr int kDefaultCrossingCap = 20;

/// Sum over the 2^n smoothings of A^(#A - #B) (-A^2 - A^-2)^(loops - 1).
/// A-smoothing joins slots (a,b),(c,d); B-smoothing joins (a,d),(b,c).
/// DomainError when the diagram has more than max_crossings crossings.
LaurentInt kauffman_bracket(const KnotDiagram& d, int max_crossings = kDefaultCrossingCap);

/// (-A)^(-3w) <D>.
LaurentInt normalized_f(const KnotDiagram& d, int max_crossings = kDefaultCrossingCap);

/// normalized_f with A^-4 = q. InternalError if some exponent is not a
/// multiple of 4.
LaurentInt jones(const KnotDiagram& d, int max_crossings = kDefaultCrossingCap);

struct KnotEntry {
  std::string name;
  KnotDiagram diagram;
  LaurentInt jones{'q'};
};

class KnotTable {
 public:
  KnotTable() = default;

  /// Parses `name; X(a,b,c,d) ...` records, one per line, '#' comments.
  /// Computes every Jones polynomial and rejects (DataError) malformed lines,
  /// repeated names, repeated PD codes, and Jones polynomials that coincide
  /// up to mirror between entries of at most 9 crossings.
  static KnotTable load(std::string_view text);
  /// The table compiled into the library from data/knot_table.txt.
  static const KnotTable& bundled();

  const std::vector<KnotEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const KnotEntry* find(std::string_view name) const;

 private:
  std::vector<KnotEntry> entries_;
};

enum class Chirality { AsTabulated, Mirror, Amphichiral };

struct Identification {
  bool found = false;
  std::string name;
  Chirality chirality = Chirality::AsTabulated;

  /// "5_2 (mirror of tabulated)", "4_1 (amphichiral)", "unknown", ...
  std::string describe() const;
};

/// Matches v or its mirror against the table.
Identification identify(const LaurentInt& v, const KnotTable& table);

}  // namespace polyknot
