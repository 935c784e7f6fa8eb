#pragma once

#include <map>
#include <string>
#include <vector>

#include "stratkit/monomial.hpp"
#include "stratkit/rational.hpp"

namespace stratkit {

struct Term {
  Monomial m;
  Rational c;
};

/// Sparse exact multivariate polynomial over Q. Terms are kept strictly
/// descending in the context's monomial order with no zero coefficients; the
/// zero polynomial has no terms. Values are immutable after construction and
/// safe to share across threads.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Ctx ctx) : ctx_(std::move(ctx)) {}

  static Polynomial constant(const Ctx& ctx, const Rational& c);
  static Polynomial variable(const Ctx& ctx, const std::string& name);
  static Polynomial variable(const Ctx& ctx, int index);
  static Polynomial monomial_term(const Ctx& ctx, Monomial m, Rational c);
  static Polynomial from_terms(const Ctx& ctx, std::vector<Term> terms);

  const Ctx& ctx() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
  }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].m.is_one() && terms_[0].c.is_one();
  }
  size_t term_count() const { return terms_.size(); }

  /// Total degree; -1 for the zero polynomial.
  long total_degree() const;
  bool is_homogeneous() const;

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().m; }
  const Rational& leading_coefficient() const { return leading_term().c; }

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial times_term(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  /// Formal partial derivative with respect to variable `var`.
  Polynomial derivative(int var) const;

  /// Image under the substitution homomorphism. Unbound variables pass
  /// through; every bound variable must exist in the context. Bound values
  /// must live in this polynomial's context.
  Polynomial substitute(const std::map<std::string, Polynomial>& bindings) const;

  /// Exact evaluation at a rational point (arity must match).
  Rational evaluate(const std::vector<Rational>& point) const;

  /// Homogeneous component of highest degree. Undefined for zero.
  Polynomial leading_form() const;

  /// Standard homogenization with a fresh variable appended to the context.
  /// The result is homogeneous of degree total_degree(); substituting w = 1
  /// recovers the input.
  Polynomial homogenize(const std::string& fresh_var) const;

  /// Homogenizes only within the variable subset `block` (by index), with a
  /// fresh variable appended, raising every term's block-degree to `degree`.
  /// `degree` must dominate the block-degree of every term.
  Polynomial homogenize_block(const std::vector<int>& block,
                              const std::string& fresh_var, long degree) const;

  /// gcd of all exponent vectors (the largest monomial dividing every term);
  /// the unit monomial for zero.
  Monomial monomial_content() const;
  Polynomial divided_by_monomial(const Monomial& m) const;

  Polynomial monic() const;

  /// Re-homes the polynomial into another context, matching variables by
  /// name. Every variable actually used must exist in the target.
  Polynomial with_context(const Ctx& target) const;

  /// Canonical rendering: terms in the active order, `^` for powers, explicit
  /// `*`. Reparses to an equal polynomial.
  std::string str() const;

 private:
  Ctx ctx_;
  std::vector<Term> terms_;  // strictly descending, no zero coefficients
};

/// Canonicalizes an arbitrary term list (sorts, merges, drops zeros).
std::vector<Term> normalize_terms(const MonomialOrder& order,
                                  std::vector<Term> terms);

}  // namespace stratkit
