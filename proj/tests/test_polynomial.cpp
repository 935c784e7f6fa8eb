#include <doctest.h>

#include "support.hpp"

using namespace stratkit;
using testsupport::P;
using testsupport::Q;

namespace {
const Ctx ctx3 = make_context({"x1", "x2", "x3"});
const Ctx ctx1 = make_context({"x"});
}  // namespace

TEST_CASE("basic arithmetic identities") {
  CHECK(P(ctx1, "x + 1") * P(ctx1, "x - 1") == P(ctx1, "x^2 - 1"));
  Polynomial p = P(ctx3, "x1^3 - x1*x2*x3");
  CHECK(p + Polynomial(ctx3) == p);
  CHECK(p - P(ctx3, "x1^3") == P(ctx3, "-x1*x2*x3"));
  CHECK((p - p).is_zero());
  CHECK_THROWS_AS(P(ctx1, "x") + P(ctx3, "x1"), ContextMismatchError);
}

TEST_CASE("ring axioms on randomized inputs") {
  std::mt19937_64 rng(42);
  for (int round = 0; round < 40; ++round) {
    Polynomial a = testsupport::random_poly(rng, ctx3);
    Polynomial b = testsupport::random_poly(rng, ctx3);
    Polynomial c = testsupport::random_poly(rng, ctx3);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("substitution") {
  Polynomial f1 = P(ctx3, "x1^3 - x1*x2*x3");
  CHECK(f1.evaluate({Q(1), Q(3), Q(1)}) == Q(-2));

  std::map<std::string, Polynomial> id_bindings = {
      {"x1", Polynomial::variable(ctx3, 0)},
      {"x2", Polynomial::variable(ctx3, 1)},
      {"x3", Polynomial::variable(ctx3, 2)}};
  CHECK(f1.substitute(id_bindings) == f1);

  std::map<std::string, Polynomial> zero_sub = {
      {"x1", Polynomial::constant(ctx3, Q(0))},
      {"x3", Polynomial::constant(ctx3, Q(0))}};
  CHECK(P(ctx3, "x2*x3").substitute(zero_sub).is_zero());

  std::map<std::string, Polynomial> bad = {{"z", Polynomial(ctx3)}};
  CHECK_THROWS_AS(f1.substitute(bad), DomainError);
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 20; ++round) {
    Polynomial a = testsupport::random_poly(rng, ctx3);
    Polynomial b = testsupport::random_poly(rng, ctx3);
    std::map<std::string, Polynomial> sub = {
        {"x1", testsupport::random_poly(rng, ctx3, 2, 3)},
        {"x3", testsupport::random_poly(rng, ctx3, 2, 3)}};
    CHECK((a * b).substitute(sub) == a.substitute(sub) * b.substitute(sub));
    CHECK((a + b).substitute(sub) == a.substitute(sub) + b.substitute(sub));
  }
}

TEST_CASE("leading forms") {
  CHECK(P(ctx3, "x1^3 - x1*x2*x3").leading_form() ==
        P(ctx3, "x1^3 - x1*x2*x3"));
  CHECK(P(ctx1, "x^2 + 3*x + 1").leading_form() == P(ctx1, "x^2"));
  // degrees (2,1,1): each component is cut at its own top degree
  CHECK(P(ctx3, "x1^2 - x2*x3").leading_form() == P(ctx3, "x1^2 - x2*x3"));
  CHECK(P(ctx3, "x2 - x3").leading_form() == P(ctx3, "x2 - x3"));
  CHECK_THROWS_AS(Polynomial(ctx1).leading_form(), DomainError);
}

TEST_CASE("leading form against per-term degree filter oracle") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 30; ++round) {
    Polynomial p = testsupport::random_poly(rng, ctx3);
    if (p.is_zero()) continue;
    long d = p.total_degree();
    std::vector<Term> top;
    for (const auto& t : p.terms())
      if (t.m.degree() == d) top.push_back(t);
    CHECK(p.leading_form() == Polynomial::from_terms(ctx3, top));
  }
}

TEST_CASE("leading form is multiplicative") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 30; ++round) {
    Polynomial p = testsupport::random_poly(rng, ctx3);
    Polynomial q = testsupport::random_poly(rng, ctx3);
    if (p.is_zero() || q.is_zero()) continue;
    CHECK((p * q).leading_form() == p.leading_form() * q.leading_form());
  }
}

TEST_CASE("homogenization") {
  Polynomial p = P(ctx1, "x^2 + 3*x + 1");
  Polynomial h = p.homogenize("w");
  Ctx hctx = h.ctx();
  CHECK(h == P(hctx, "x^2 + 3*x*w + w^2"));
  CHECK(h.is_homogeneous());

  Polynomial already = P(ctx3, "x1^2 - x2*x3");
  Polynomial h2 = already.homogenize("w");
  CHECK(h2.is_homogeneous());
  CHECK(h2 == already.with_context(h2.ctx()));

  CHECK_THROWS_AS(P(ctx3, "x1").homogenize("x2"), DomainError);
}

TEST_CASE("dehomogenize inverts homogenize") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 25; ++round) {
    Polynomial p = testsupport::random_poly(rng, ctx3);
    if (p.is_zero()) continue;
    Polynomial h = p.homogenize("w");
    CHECK(h.is_homogeneous());
    std::map<std::string, Polynomial> setw = {
        {"w", Polynomial::constant(h.ctx(), Q(1))}};
    CHECK(h.substitute(setw).with_context(ctx3) == p);
  }
}

TEST_CASE("block homogenization keeps the other block affine") {
  // graph equation y - x2*x3 over (x-block, y), homogenized in x to degree 2
  Ctx g = make_context({"x2", "x3", "y"});
  Polynomial eq = P(g, "y - x2*x3");
  Polynomial h = eq.homogenize_block({0, 1}, "w", 2);
  CHECK(h == P(h.ctx(), "y*w^2 - x2*x3"));
  std::map<std::string, Polynomial> setw = {
      {"w", Polynomial::constant(h.ctx(), Q(1))}};
  CHECK(h.substitute(setw).with_context(g) == eq);
}

TEST_CASE("derivatives") {
  CHECK(P(ctx3, "x1^3 - x1*x2*x3").derivative(0) ==
        P(ctx3, "3*x1^2 - x2*x3"));
  CHECK(P(ctx3, "x2*x3").derivative(0).is_zero());
  CHECK(P(ctx1, "x^4").derivative(0) == P(ctx1, "4*x^3"));
}

TEST_CASE("monomial content") {
  Polynomial det = P(ctx3, "3*x1^3*x3 - x1*x2*x3^2");
  Monomial g = det.monomial_content();
  CHECK(g.e == std::vector<uint32_t>{1, 0, 1});
  CHECK(det.divided_by_monomial(g) == P(ctx3, "3*x1^2 - x2*x3"));
}

TEST_CASE("rendering round-trips through the parser") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 40; ++round) {
    Polynomial p = testsupport::random_poly(rng, ctx3);
    CHECK(parse_polynomial(p.str(), ctx3) == p);
  }
  CHECK(Polynomial(ctx3).str() == "0");
  CHECK(P(ctx3, "x1^2 - 1/3*x2*x3").str() == "x1^2 - 1/3*x2*x3");
}

TEST_CASE("grevlex versus lex ordering of terms") {
  Ctx lexctx = make_context({"x", "y", "z"}, MonomialOrder::lex());
  CHECK(P(lexctx, "y^3 + x").leading_monomial().e ==
        std::vector<uint32_t>{1, 0, 0});
  Ctx grctx = make_context({"x", "y", "z"}, MonomialOrder::grevlex());
  CHECK(P(grctx, "y^3 + x").leading_monomial().e ==
        std::vector<uint32_t>{0, 3, 0});
}
