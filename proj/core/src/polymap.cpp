#include "stratkit/polymap.hpp"

#include <sstream>

namespace stratkit {

PolyMap::PolyMap(Ctx source_ctx, std::vector<std::string> targets,
                 std::vector<Polynomial> comps, std::string map_name)
    : source(std::move(source_ctx)),
      target_vars(std::move(targets)),
      components(std::move(comps)),
      name(std::move(map_name)) {
  if (components.size() != target_vars.size())
    throw DomainError("map: component count differs from target arity");
  for (const auto& c : components)
    require_same_ring(source, c.ctx(), "map component");
  for (const auto& t : target_vars)
    if (source->has(t))
      throw DomainError("map: target variable collides with source: " + t);
}

void PolyMap::require_square(const char* where) const {
  if (!is_square())
    throw DomainError(std::string(where) + ": requires a square map");
}

Ctx PolyMap::target_ctx() const {
  return make_context(target_vars, MonomialOrder::grevlex());
}

std::vector<Rational> PolyMap::apply(const std::vector<Rational>& point) const {
  std::vector<Rational> out;
  out.reserve(components.size());
  for (const auto& c : components) out.push_back(c.evaluate(point));
  return out;
}

std::string PolyMap::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < components.size(); ++i) {
    if (i) os << ", ";
    os << components[i].str();
  }
  os << ")";
  return os.str();
}

}  // namespace stratkit
