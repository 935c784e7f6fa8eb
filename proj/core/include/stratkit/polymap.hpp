#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stratkit/polynomial.hpp"

namespace stratkit {

/// A polynomial mapping F: C^n -> C^m given by one polynomial per target
/// coordinate. The analysis layers require square maps (m = n); the algebra
/// layer does not care.
struct PolyMap {
  Ctx source;
  std::vector<std::string> target_vars;
  std::vector<Polynomial> components;
  std::string name;  // optional, used in reports

  PolyMap(Ctx source_ctx, std::vector<std::string> targets,
          std::vector<Polynomial> comps, std::string map_name = "");

  int source_arity() const { return source->arity(); }
  int target_arity() const { return (int)target_vars.size(); }
  bool is_square() const { return source_arity() == target_arity(); }
  void require_square(const char* where) const;

  /// Context of the target space (the target variable names, grevlex).
  Ctx target_ctx() const;

  /// Exact image of a source point.
  std::vector<Rational> apply(const std::vector<Rational>& point) const;

  std::string str() const;
};

}  // namespace stratkit
