#include "stratkit/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace stratkit {

std::vector<Term> normalize_terms(const MonomialOrder& order,
                                  std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return compare(order, a.m, b.m) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().m == t.m) {
      out.back().c += t.c;
      if (out.back().c.is_zero()) out.pop_back();
    } else if (!t.c.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

Polynomial Polynomial::from_terms(const Ctx& ctx, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.m.arity() != ctx->arity())
      throw DomainError("term arity does not match context");
  Polynomial p(ctx);
  p.terms_ = normalize_terms(ctx->order(), std::move(terms));
  return p;
}

Polynomial Polynomial::constant(const Ctx& ctx, const Rational& c) {
  Polynomial p(ctx);
  if (!c.is_zero()) p.terms_.push_back({Monomial(ctx->arity()), c});
  return p;
}

Polynomial Polynomial::variable(const Ctx& ctx, int index) {
  if (index < 0 || index >= ctx->arity())
    throw DomainError("variable index out of range");
  Monomial m(ctx->arity());
  m.e[index] = 1;
  Polynomial p(ctx);
  p.terms_.push_back({std::move(m), Rational(1)});
  return p;
}

Polynomial Polynomial::variable(const Ctx& ctx, const std::string& name) {
  int i = ctx->index_of(name);
  if (i < 0) throw DomainError("unknown variable: " + name);
  return variable(ctx, i);
}

Polynomial Polynomial::monomial_term(const Ctx& ctx, Monomial m, Rational c) {
  return from_terms(ctx, {{std::move(m), std::move(c)}});
}

long Polynomial::total_degree() const {
  long d = -1;
  for (const auto& t : terms_) d = std::max(d, t.m.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  long d = terms_[0].m.degree();
  for (const auto& t : terms_)
    if (t.m.degree() != d) return false;
  return true;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of zero polynomial");
  return terms_.front();
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ctx_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.m, -t.c});
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(ctx_, o.ctx_, "poly add");
  const auto& order = ctx_->order();
  Polynomial r(ctx_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = compare(order, terms_[i].m, o.terms_[j].m);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].c + o.terms_[j].c;
      if (!s.is_zero()) r.terms_.push_back({terms_[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
  if (c.is_zero()) return Polynomial(ctx_);
  Polynomial r(ctx_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.m * m, t.c * c});
  return r;  // multiplying by a fixed monomial preserves the term order
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(ctx_, o.ctx_, "poly mul");
  if (is_zero() || o.is_zero()) return Polynomial(ctx_);
  std::vector<Term> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) acc.push_back({a.m * b.m, a.c * b.c});
  return from_terms(ctx_, std::move(acc));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c.is_zero()) return Polynomial(ctx_);
  Polynomial r(ctx_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.m, t.c * c});
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(ctx_, Rational(1));
  Polynomial base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    if (e >>= 1u) base = base * base;
  }
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ctx_, b.ctx_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].m == b.terms_[i].m && a.terms_[i].c == b.terms_[i].c))
      return false;
  return true;
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || var >= ctx_->arity())
    throw DomainError("derivative variable out of range");
  std::vector<Term> acc;
  for (const auto& t : terms_) {
    if (t.m.e[var] == 0) continue;
    Term d{t.m, t.c * Rational((long)t.m.e[var])};
    d.m.e[var] -= 1;
    acc.push_back(std::move(d));
  }
  return from_terms(ctx_, std::move(acc));
}

Polynomial Polynomial::substitute(
    const std::map<std::string, Polynomial>& bindings) const {
  std::vector<int> bound_index(ctx_->arity(), -1);
  std::vector<Polynomial> values;
  for (const auto& [name, value] : bindings) {
    int i = ctx_->index_of(name);
    if (i < 0) throw DomainError("substitute: unknown variable " + name);
    require_same_ring(ctx_, value.ctx(), "substitute");
    bound_index[i] = (int)values.size();
    values.push_back(value);
  }
  Polynomial result(ctx_);
  for (const auto& t : terms_) {
    Monomial passthrough(ctx_->arity());
    Polynomial factor = constant(ctx_, t.c);
    for (int v = 0; v < ctx_->arity(); ++v) {
      if (t.m.e[v] == 0) continue;
      if (bound_index[v] < 0)
        passthrough.e[v] = t.m.e[v];
      else
        factor = factor * values[bound_index[v]].pow(t.m.e[v]);
    }
    result = result + factor.times_term(passthrough, Rational(1));
  }
  return result;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if ((int)point.size() != ctx_->arity())
    throw DomainError("evaluate: point arity mismatch");
  Rational sum(0);
  for (const auto& t : terms_) {
    Rational v = t.c;
    for (int i = 0; i < ctx_->arity(); ++i)
      if (t.m.e[i]) v *= point[i].pow(t.m.e[i]);
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::leading_form() const {
  if (is_zero()) throw DomainError("leading form of zero polynomial");
  long d = total_degree();
  std::vector<Term> acc;
  for (const auto& t : terms_)
    if (t.m.degree() == d) acc.push_back(t);
  return from_terms(ctx_, std::move(acc));
}

Polynomial Polynomial::homogenize(const std::string& fresh_var) const {
  std::vector<int> block(ctx_->arity());
  for (int i = 0; i < ctx_->arity(); ++i) block[i] = i;
  return homogenize_block(block, fresh_var, std::max(total_degree(), 0L));
}

Polynomial Polynomial::homogenize_block(const std::vector<int>& block,
                                        const std::string& fresh_var,
                                        long degree) const {
  if (ctx_->has(fresh_var))
    throw DomainError("homogenize: variable already present: " + fresh_var);
  std::vector<std::string> names = ctx_->names();
  names.push_back(fresh_var);
  Ctx extended = make_context(std::move(names), ctx_->order());
  std::vector<Term> acc;
  for (const auto& t : terms_) {
    long bdeg = 0;
    for (int v : block) bdeg += t.m.e[v];
    if (bdeg > degree)
      throw DomainError("homogenize: term degree exceeds target degree");
    Monomial m(extended->arity());
    for (int i = 0; i < ctx_->arity(); ++i) m.e[i] = t.m.e[i];
    m.e[ctx_->arity()] = (uint32_t)(degree - bdeg);
    acc.push_back({std::move(m), t.c});
  }
  return from_terms(extended, std::move(acc));
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return Monomial(ctx_->arity());
  Monomial g = terms_[0].m;
  for (size_t i = 1; i < terms_.size(); ++i) g = Monomial::gcd(g, terms_[i].m);
  return g;
}

Polynomial Polynomial::divided_by_monomial(const Monomial& m) const {
  std::vector<Term> acc;
  acc.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!m.divides(t.m))
      throw DomainError("divided_by_monomial: not divisible");
    acc.push_back({t.m.div(m), t.c});
  }
  return from_terms(ctx_, std::move(acc));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(leading_coefficient().inv());
}

Polynomial Polynomial::with_context(const Ctx& target) const {
  std::vector<int> where(ctx_->arity(), -1);
  for (int i = 0; i < ctx_->arity(); ++i)
    where[i] = target->index_of(ctx_->name(i));
  std::vector<Term> acc;
  acc.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->arity());
    for (int i = 0; i < ctx_->arity(); ++i) {
      if (t.m.e[i] == 0) continue;
      if (where[i] < 0)
        throw DomainError("with_context: target ring lacks variable " +
                          ctx_->name(i));
      m.e[where[i]] = t.m.e[i];
    }
    acc.push_back({std::move(m), t.c});
  }
  return from_terms(target, std::move(acc));
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.c;
    if (first) {
      if (c.sign() < 0) {
        out << "-";
        c = -c;
      }
      first = false;
    } else {
      if (c.sign() < 0) {
        out << " - ";
        c = -c;
      } else {
        out << " + ";
      }
    }
    bool coeff_shown = !c.is_one() || t.m.is_one();
    if (coeff_shown) out << c.str();
    bool need_star = coeff_shown;
    for (int v = 0; v < ctx_->arity(); ++v) {
      if (t.m.e[v] == 0) continue;
      if (need_star) out << "*";
      out << ctx_->name(v);
      if (t.m.e[v] > 1) out << "^" << t.m.e[v];
      need_star = true;
    }
  }
  return out.str();
}

}  // namespace stratkit
