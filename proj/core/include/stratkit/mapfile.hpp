#pragma once

#include <string>

#include "stratkit/polymap.hpp"

namespace stratkit {

struct MapFileOptions {
  MonomialOrder order = MonomialOrder::grevlex();
  // When set, the component count may differ from the variable count
  // (algebra-layer-only mode; the analysis commands reject such maps).
  bool allow_rectangular = false;
};

/// Parses the map-file format:
///
///   # comment
///   name: pasferme          (optional)
///   vars: x1 x2 x3
///   map:
///   x1^3 - x1*x2*x3
///   x2*x3
///   x3*x1
///
/// Identifiers match [a-zA-Z][a-zA-Z0-9_]*, literals are integers or p/q
/// rationals, operators are + - * ^ with parentheses; multiplication is
/// always explicit. Errors carry line and column.
PolyMap parse_map(const std::string& text, const MapFileOptions& opts = {});

/// Parses a single polynomial expression over a known context.
Polynomial parse_polynomial(const std::string& text, const Ctx& ctx);

/// Renders a map back into the file format (reparses to an equal map).
std::string render_map(const PolyMap& map);

}  // namespace stratkit
