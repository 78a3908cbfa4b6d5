#pragma once

// JSON renderings of library values shared by the CLI commands.

#include <json.hpp>

#include "polyknot/bridges.hpp"
#include "polyknot/diagram.hpp"
#include "polyknot/laurent.hpp"
#include "polyknot/lift.hpp"
#include "polyknot/projection.hpp"

namespace polyknot::app::detail {

using Json = nlohmann::ordered_json;

Json to_json(const RealPoly& p);
Json to_json(const DoublePoint& p);
Json to_json(std::span<const DoublePoint> points);
Json to_json(const RegularityReport& r);
Json to_json(const KnotDiagram& d);
Json to_json(const DirectionSweep& s);
Json to_json(const Realizability& r);
Json to_json(const LiftResult& r);

/// Report block describing the fixed conventions of every computation.
Json conventions();

/// Bracket, normalized f, Jones and identification of a diagram.
Json invariants_json(const KnotDiagram& d);

}  // namespace polyknot::app::detail
