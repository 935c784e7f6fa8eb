#pragma once

#include <string>
#include <vector>

#include "stratkit/polymap.hpp"

namespace stratkit {

struct Fixture {
  std::string name;
  std::string text;  // map-file source
};

/// The bundled fixture corpus: the running example, the two remark maps, and
/// a handful of small maps covering the degenerate branches, plus two
/// seed-generated degree-2 dominant maps.
const std::vector<Fixture>& corpus_fixtures();

/// Deterministic degree-2 map x_i + q_i(x) with coefficients drawn from the
/// seeded generator.
PolyMap random_degree2_map(uint64_t seed, int arity = 2);

}  // namespace stratkit
