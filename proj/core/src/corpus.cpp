#include "stratkit/corpus.hpp"

#include <random>

#include "stratkit/mapfile.hpp"

namespace stratkit {

PolyMap random_degree2_map(uint64_t seed, int arity) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-2, 2);
  std::vector<std::string> names;
  for (int i = 1; i <= arity; ++i) names.push_back("x" + std::to_string(i));
  Ctx ctx = make_context(names);
  std::vector<Polynomial> comps;
  for (int i = 0; i < arity; ++i) {
    Polynomial f = Polynomial::variable(ctx, i);
    for (int a = 0; a < arity; ++a)
      for (int b = a; b < arity; ++b) {
        long c = coeff(rng);
        if (c == 0) continue;
        Monomial m(arity);
        m.e[a] += 1;
        m.e[b] += 1;
        f = f + Polynomial::monomial_term(ctx, m, Rational(c));
      }
    comps.push_back(f);
  }
  std::vector<std::string> targets;
  for (int i = 1; i <= arity; ++i) targets.push_back("y" + std::to_string(i));
  return PolyMap(ctx, targets, comps,
                 "random-deg2-seed" + std::to_string(seed));
}

const std::vector<Fixture>& corpus_fixtures() {
  static const std::vector<Fixture> fixtures = [] {
    std::vector<Fixture> out;
    out.push_back({"pasferme",
                   "name: pasferme\n"
                   "vars: x1 x2 x3\n"
                   "map:\n"
                   "x1^3 - x1*x2*x3\n"
                   "x2*x3\n"
                   "x3*x1\n"});
    out.push_back({"remark-nonsmooth",
                   "name: remark-nonsmooth\n"
                   "vars: x1 x2 x3\n"
                   "map:\n"
                   "x1^3 - x1*x2*x3\n"
                   "x2*x3\n"
                   "x3\n"});
    out.push_back({"remark49",
                   "name: remark49\n"
                   "vars: x1 x2 x3\n"
                   "map:\n"
                   "x1^2 - x2*x3\n"
                   "x2 - x3\n"
                   "x1 - x3\n"});
    out.push_back({"identity",
                   "name: identity\n"
                   "vars: x y\n"
                   "map:\n"
                   "x\n"
                   "y\n"});
    out.push_back({"shear",
                   "name: shear\n"
                   "vars: x y\n"
                   "map:\n"
                   "x\n"
                   "x*y\n"});
    out.push_back({"linear",
                   "name: linear\n"
                   "vars: x y\n"
                   "map:\n"
                   "x + y\n"
                   "x - y\n"});
    out.push_back({"squares",
                   "name: squares\n"
                   "vars: x y\n"
                   "map:\n"
                   "x^2\n"
                   "y^2\n"});
    for (uint64_t seed : {11u, 23u}) {
      PolyMap F = random_degree2_map(seed);
      out.push_back({F.name, render_map(F)});
    }
    return out;
  }();
  return fixtures;
}

}  // namespace stratkit
