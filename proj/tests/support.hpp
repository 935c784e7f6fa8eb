#pragma once

#include <random>
#include <vector>

#include "stratkit/ideal.hpp"
#include "stratkit/mapfile.hpp"
#include "stratkit/polynomial.hpp"

namespace testsupport {

using namespace stratkit;

inline Polynomial P(const Ctx& ctx, const std::string& text) {
  return parse_polynomial(text, ctx);
}

inline Rational Q(long num, long den = 1) { return Rational(num, den); }

inline Rational random_rational(std::mt19937_64& rng, int span = 6) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, span);
  return Rational(num(rng), den(rng));
}

inline Polynomial random_poly(std::mt19937_64& rng, const Ctx& ctx,
                              int max_deg = 3, int max_terms = 5) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> expo(0, max_deg);
  std::vector<Term> terms;
  int count = nterms(rng);
  for (int t = 0; t < count; ++t) {
    Monomial m(ctx->arity());
    long deg_left = max_deg;
    for (int v = 0; v < ctx->arity(); ++v) {
      int e = expo(rng) % (deg_left + 1);
      m.e[v] = e;
      deg_left -= e;
    }
    Rational c = random_rational(rng);
    if (!c.is_zero()) terms.push_back({m, c});
  }
  return Polynomial::from_terms(ctx, terms);
}

inline std::vector<Rational> random_point(std::mt19937_64& rng, int n,
                                          int span = 6) {
  std::vector<Rational> pt;
  pt.reserve(n);
  for (int i = 0; i < n; ++i) pt.push_back(random_rational(rng, span));
  return pt;
}

// The running example map F = (x1^3 - x1*x2*x3, x2*x3, x3*x1).
inline PolyMap pasferme_map() {
  return parse_map(
      "name: pasferme\n"
      "vars: x1 x2 x3\n"
      "map:\n"
      "x1^3 - x1*x2*x3\n"
      "x2*x3\n"
      "x3*x1\n");
}

}  // namespace testsupport
