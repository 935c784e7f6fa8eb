// Acceptance suite: one criterion per check, one PASS/FAIL line each, with
// the wall-clock bound enforced. Exits nonzero when anything fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "stratkit/corpus.hpp"
#include "stratkit/map_analysis.hpp"
#include "stratkit/mapfile.hpp"
#include "stratkit/matrix.hpp"
#include "stratkit/thom.hpp"

using namespace stratkit;

namespace {

int failures = 0;

void criterion(int id, const char* title, double limit_seconds,
               const std::function<bool()>& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string error;
  try {
    ok = body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  bool in_time = secs <= limit_seconds;
  bool pass = ok && in_time;
  if (!pass) ++failures;
  std::printf("%s criterion %d: %s (%.2fs of %.0fs budget)%s%s\n",
              pass ? "PASS" : "FAIL", id, title, secs, limit_seconds,
              error.empty() ? "" : " error: ", error.c_str());
  std::fflush(stdout);
}

PolyMap fixture_map(const std::string& name) {
  for (const auto& f : corpus_fixtures())
    if (f.name == name) return parse_map(f.text);
  throw DomainError("no fixture named " + name);
}

Rational Q(long n, long d = 1) { return Rational(n, d); }

Polynomial P(const Ctx& ctx, const std::string& s) {
  return parse_polynomial(s, ctx);
}

bool criterion1_jacobian() {
  PolyMap F = fixture_map("pasferme");
  Ctx x = F.source;
  Polynomial det = jacobian(F).determinant();
  return det == P(x, "x1*x3") * P(x, "3*x1^2 - x2*x3");
}

bool criterion2_membership() {
  PolyMap F = fixture_map("pasferme");
  CriticalValues cv = critical_values(F);
  if (!cv.exact_certified) return false;
  bool ok = true;
  ok = ok && contains_point(cv.exact, {Q(0), Q(0), Q(0)});
  ok = ok && !contains_point(cv.exact, {Q(0), Q(0), Q(1)});
  ok = ok && contains_point(cv.exact, {Q(-2), Q(3), Q(1)});
  // points of 27 a1^2 = 4 a2^3 with a3 = 0, a1 != 0: (-2t^3, 3t^2, 0)
  for (long t : {1L, -1L, 2L, 3L}) {
    Rational tt(t);
    ok = ok && !contains_point(
                   cv.exact, {Q(-2) * tt.pow(3), Q(3) * tt.pow(2), Q(0)});
  }
  // the memberships must agree with direct fiber tests
  Ideal sing = singular_locus(F);
  ok = ok && point_in_image(F, sing, {Q(0), Q(0), Q(0)});
  ok = ok && !point_in_image(F, sing, {Q(0), Q(0), Q(1)});
  return ok;
}

bool criterion3_asymptotic() {
  PolyMap F = fixture_map("pasferme");
  Ideal sf = asymptotic_set(F);
  Ctx y = F.target_ctx();
  bool ok = variety_equal(sf, Ideal(y, {P(y, "y1*y3")}));
  ok = ok && dimension(sf) == 2;
  JelonekReport jel = check_jelonek(F);
  ok = ok && jel.dominant && jel.sf_dim == F.source_arity() - 1 &&
       jel.dichotomy_ok;
  return ok;
}

bool criterion4_thom_table() {
  PolyMap F = fixture_map("pasferme");
  auto table = thom_partition(F);
  if (table.size() != 6) return false;
  Ctx y = F.target_ctx();

  std::vector<int> ks;
  for (const auto& st : table) ks.push_back(st.k);
  if (ks != std::vector<int>{2, 1, 1, 0, 0, 0}) return false;

  Ideal cusp(y, {P(y, "27*y1^2 - 4*y2^3")});
  Ideal axis2(y, {P(y, "y1"), P(y, "y3")});
  Ideal axis1(y, {P(y, "y2"), P(y, "y3")});
  Ideal origin(y, {P(y, "y1"), P(y, "y2"), P(y, "y3")});

  bool ok = true;
  ok = ok && table[0].label() == "W^{2,2}_1" &&
       variety_equal(table[0].image_closure, cusp);
  ok = ok && table[1].label() == "W^{2,1}_2" &&
       variety_equal(table[1].image_closure, axis2);
  ok = ok && table[2].label() == "W^{2,1}_3" &&
       variety_equal(table[2].image_closure, axis1);
  ok = ok && table[3].label() == "W^{1,0}_1" &&
       variety_equal(table[3].image_closure, origin);
  ok = ok && table[4].label() == "W^{1,0}_2" &&
       variety_equal(table[4].image_closure, origin);
  ok = ok && table[5].label() == "W^{0,0}_1" &&
       variety_equal(table[5].image_closure, origin);
  return ok;
}

bool criterion5_stratification() {
  PolyMap F = fixture_map("pasferme");
  Stratification s = stratify_union(F);
  Ctx y = F.target_ctx();

  int d2 = 0, d1 = 0, d0 = 0;
  for (const auto& st : s.strata) {
    if (st.dim == 2) ++d2;
    if (st.dim == 1) ++d1;
    if (st.dim == 0) ++d0;
  }
  bool ok = s.strata.size() == 6 && d2 == 3 && d1 == 2 && d0 == 1;

  ok = ok && s.filtration.size() == 3;
  if (ok) {
    Ideal whole = intersect(Ideal(y, {P(y, "y1*y3")}),
                            Ideal(y, {P(y, "27*y1^2 - 4*y2^3")}));
    Ideal axes = intersect(Ideal(y, {P(y, "y1"), P(y, "y3")}),
                           Ideal(y, {P(y, "y2"), P(y, "y3")}));
    Ideal origin(y, {P(y, "y1"), P(y, "y2"), P(y, "y3")});
    ok = ok && variety_equal(s.filtration[0], whole);
    ok = ok && variety_equal(s.filtration[1], axes);
    ok = ok && variety_equal(s.filtration[2], origin);
  }
  ok = ok && s.frontier.ok;

  // the raw critical-value pieces alone must violate the frontier condition
  std::vector<Stratum> raw;
  for (const auto& ts : thom_partition(F))
    for (const auto& piece : ts.image.pieces) {
      Stratum st;
      st.id = ts.label();
      st.piece = piece;
      st.dim = dimension(normalize(piece).closure);
      raw.push_back(std::move(st));
    }
  ok = ok && !frontier_check(raw).ok;
  return ok;
}

bool criterion6_closedness() {
  for (const auto& f : corpus_fixtures()) {
    auto start = std::chrono::steady_clock::now();
    PolyMap F = parse_map(f.text);
    ClosednessReport rep = verify_closedness(F);
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    if (!rep.ok() || secs > 60.0) {
      std::printf("  closedness failed on fixture %s\n", f.name.c_str());
      return false;
    }
  }
  return true;
}

bool criterion7_conjecture() {
  PolyMap F = fixture_map("pasferme");
  ConjectureReport rep = check_conjecture(F);
  bool ok = rep.dominant && rep.purity.pure && rep.purity.dimension == 2;

  // K0 alone is not pure dimensional
  PurityReport alone = is_pure_dimensional(critical_values(F).exact);
  ok = ok && !alone.pure;

  // remark49: verdicts are computed and recorded, not asserted against the
  // paper's claim
  ConjectureReport r49 = check_conjecture(fixture_map("remark49"));
  std::printf("  recorded remark49 verdicts: dominant=%s pure=%s dim=%d\n",
              r49.dominant ? "true" : "false",
              r49.purity.pure ? "true" : "false", r49.purity.dimension);
  return ok;
}

bool criterion8_leading_forms() {
  PolyMap F = fixture_map("pasferme");
  LeadingFormData d = leading_form_data(F);
  return d.generic_rank == 3 && d.rank_condition_ok && d.v_dim == 1 &&
         d.v_dim_bound_ok;
}

bool criterion9_property_suites() {
  // (a) Buchberger postcondition on the bases of every fixture's pipeline
  // ideals
  for (const auto& f : corpus_fixtures()) {
    PolyMap F = parse_map(f.text);
    std::vector<Ideal> ideals = {singular_locus(F), asymptotic_set(F),
                                 critical_values(F).closure};
    for (const auto& I : ideals)
      if (!verify_groebner(I.groebner())) return false;
  }

  // (b) elimination soundness and point-completeness on 50 randomized
  // parametrized varieties (ambient arity 3, degree <= 3)
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<long> coeff(-4, 4);
  std::uniform_int_distribution<int> expo(0, 3);
  Ctx t_ctx = make_context({"t"});
  for (int round = 0; round < 50; ++round) {
    Ctx full = make_context({"t", "p", "q", "r"});
    std::vector<Polynomial> param;
    for (int i = 0; i < 3; ++i) {
      Polynomial f(t_ctx);
      for (int k = 0; k < 3; ++k) {
        long c = coeff(rng);
        if (c == 0) continue;
        Monomial m(1);
        m.e[0] = expo(rng);
        f = f + Polynomial::monomial_term(t_ctx, m, Rational(c));
      }
      param.push_back(f.with_context(full));
    }
    Ideal graph(full, {Polynomial::variable(full, 1) - param[0],
                       Polynomial::variable(full, 2) - param[1],
                       Polynomial::variable(full, 3) - param[2]});
    Ideal E = eliminate(graph, {"t"});
    for (const auto& g : E.generators()) {
      if (g.ctx()->has("t")) return false;
      if (!member(g.with_context(full), graph)) return false;
    }
    for (int s = 0; s < 4; ++s) {
      Rational tv(coeff(rng), 1 + (round % 3));
      std::vector<Rational> pt;
      for (int i = 0; i < 3; ++i)
        pt.push_back(param[i].with_context(t_ctx).evaluate({tv}));
      for (const auto& g : E.generators())
        if (!g.evaluate(pt).is_zero()) return false;
    }
  }

  // (c) rank labels match numeric ranks at sampled points
  {
    PolyMap F = fixture_map("pasferme");
    PolyMatrix J = jacobian(F);
    auto ranks = rank_subdivision(F);
    std::vector<std::vector<Rational>> samples = {
        {Q(0), Q(0), Q(0)}, {Q(0), Q(5), Q(0)}, {Q(1), Q(3), Q(1)},
        {Q(0), Q(3), Q(2)}, {Q(5), Q(1), Q(0)}, {Q(0), Q(0), Q(7)},
        {Q(2), Q(6), Q(2)}, {Q(3), Q(0), Q(0)}, {Q(0), Q(-2), Q(0)},
        {Q(-1), Q(3), Q(1)}};
    int matched = 0;
    for (const auto& pt : samples)
      for (const auto& rp : ranks)
        if (contains_point(rp.piece, pt)) {
          if (rational_rank(J.evaluate(pt)) != rp.rank) return false;
          ++matched;
        }
    if (matched != (int)samples.size()) return false;
  }

  // (d) partition disjointness and union identity on every fixture
  for (const auto& f : corpus_fixtures()) {
    PolyMap F = parse_map(f.text);
    std::vector<SmoothPiece> pieces;
    for (const auto& rp : rank_subdivision(F))
      for (auto& sp : smooth_subdivision(rp)) pieces.push_back(std::move(sp));
    auto refined = refine_partition(std::move(pieces));
    for (size_t i = 0; i < refined.size(); ++i)
      for (size_t j = i + 1; j < refined.size(); ++j)
        if (!is_empty(intersect(refined[i].piece, refined[j].piece)))
          return false;
    Ideal sing = singular_locus(F);
    if (refined.empty()) {
      if (!sing.is_unit_ideal()) return false;
      continue;
    }
    CSet all;
    for (const auto& sp : refined) all.pieces.push_back(sp.piece);
    if (!variety_equal(closure_ideal(all), sing)) return false;
  }
  return true;
}

}  // namespace

int main() {
  std::printf("stratkit acceptance suite\n");
  criterion(1, "Jacobian determinant of the running example", 1.0,
            criterion1_jacobian);
  criterion(2, "critical-value membership", 10.0, criterion2_membership);
  criterion(3, "asymptotic set is the two planes; Jelonek dichotomy", 30.0,
            criterion3_asymptotic);
  criterion(4, "Thom partition table with restricted ranks", 60.0,
            criterion4_thom_table);
  criterion(5, "stratification, filtration and frontier condition", 60.0,
            criterion5_stratification);
  criterion(6, "closedness of K0 union S_F on the whole corpus", 540.0,
            criterion6_closedness);
  criterion(7, "pure-dimensionality conjecture harness", 60.0,
            criterion7_conjecture);
  criterion(8, "leading-form rank and dim V bounds", 10.0,
            criterion8_leading_forms);
  criterion(9, "property suites (bases, elimination, ranks, partitions)",
            180.0, criterion9_property_suites);
  if (failures) {
    std::printf("%d criterion(s) FAILED\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
