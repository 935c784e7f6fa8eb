#include "stratkit/ideal.hpp"

#include <algorithm>
#include <cassert>

#include "stratkit/engine.hpp"

namespace stratkit {

struct Ideal::Cache {
  std::mutex mu;
  std::vector<std::pair<MonomialOrder, std::shared_ptr<const GroebnerBasis>>>
      entries;
};

Ideal::Ideal(Ctx ctx, std::vector<Polynomial> generators)
    : ctx_(std::move(ctx)), cache_(std::make_shared<Cache>()) {
  gens_.reserve(generators.size());
  for (auto& g : generators) {
    if (g.is_zero()) continue;  // the zero polynomial is never a generator
    require_same_ring(ctx_, g.ctx(), "ideal generator");
    bool dup = false;
    for (const auto& h : gens_)
      if (h == g) {
        dup = true;
        break;
      }
    if (!dup) gens_.push_back(std::move(g));
  }
}

const GroebnerBasis& Ideal::groebner() const { return groebner(ctx_->order()); }

const GroebnerBasis& Ideal::groebner(const MonomialOrder& order) const {
  if (!cache_) throw InternalError("ideal without cache");
  std::lock_guard<std::mutex> lock(cache_->mu);
  for (const auto& [o, basis] : cache_->entries)
    if (o == order) return *basis;
  auto basis = std::make_shared<GroebnerBasis>(buchberger(ctx_, gens_, order));
  cache_->entries.emplace_back(order, basis);
  return *cache_->entries.back().second;
}

bool Ideal::is_unit_ideal() const {
  if (gens_.empty()) return false;
  for (const auto& g : gens_)
    if (g.is_constant() && !g.is_zero()) return true;
  return groebner().is_unit();
}

Ideal Ideal::with_context(const Ctx& target) const {
  std::vector<Polynomial> gens;
  gens.reserve(gens_.size());
  for (const auto& g : gens_) gens.push_back(g.with_context(target));
  return Ideal(target, std::move(gens));
}

std::vector<std::string> Ideal::generator_strings() const {
  std::vector<std::string> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.str());
  return out;
}

namespace {

Polynomial spoly(const Polynomial& f, const Polynomial& g) {
  const Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.times_term(l.div(f.leading_monomial()),
                              f.leading_coefficient().inv());
  Polynomial b = g.times_term(l.div(g.leading_monomial()),
                              g.leading_coefficient().inv());
  return a - b;
}

Polynomial drop_leading(const Polynomial& p) {
  std::vector<Term> rest(p.terms().begin() + 1, p.terms().end());
  return Polynomial::from_terms(p.ctx(), std::move(rest));
}

// Positive rational c such that p/c has coprime integer coefficients.
Rational rational_content(const Polynomial& p) {
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& t : p.terms()) {
    num_gcd = gcd(num_gcd, t.c.raw().get_num());
    den_lcm = lcm(den_lcm, t.c.raw().get_den());
  }
  if (num_gcd == 0) return Rational(1);
  return Rational(mpq_class(abs(num_gcd), den_lcm));
}

// Strips the content off h, folding it into the running scalar so callers
// can reconstruct exact values; keeps coefficients from swelling along long
// reduction chains.
void make_primitive(Polynomial& h, Rational& scale) {
  if (h.is_zero()) return;
  Rational c = rational_content(h);
  if (c.is_one()) return;
  h = h.scaled(c.inv());
  scale *= c;
}

// Full normal form; every leading-term cancellation charges one step. The
// working polynomial is kept primitive; `scale` restores exactness when
// terms move to the remainder. Among eligible reducers the sparsest wins
// (deterministic tie-break by basis position).
Polynomial reduce_full(const Polynomial& p,
                       const std::vector<Polynomial>& basis,
                       uint64_t& steps) {
  Polynomial h = p;
  Rational scale(1);
  make_primitive(h, scale);
  Polynomial remainder(p.ctx());
  while (!h.is_zero()) {
    const Polynomial* reducer = nullptr;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (!g.leading_monomial().divides(h.leading_monomial())) continue;
      if (!reducer || g.term_count() < reducer->term_count()) reducer = &g;
    }
    if (reducer) {
      Polynomial scaled = reducer->times_term(
          h.leading_monomial().div(reducer->leading_monomial()),
          h.leading_coefficient() / reducer->leading_coefficient());
      h = h - scaled;
      detail::charge_steps(steps, 1);
      make_primitive(h, scale);
    } else {
      remainder = remainder +
                  Polynomial::monomial_term(p.ctx(), h.leading_monomial(),
                                            scale * h.leading_coefficient());
      h = drop_leading(h);
    }
  }
  return remainder;
}

struct SPair {
  int i, j;
  Monomial lcm;
};

// Gebauer-Moeller update: adds index t, pruning both the new pairs (criteria
// M and F plus the coprimality criterion B) and the surviving old pairs.
void update_pairs(const std::vector<Polynomial>& basis, int t,
                  std::vector<SPair>& pairs) {
  const Monomial& lt = basis[t].leading_monomial();
  std::vector<SPair> fresh;
  fresh.reserve(t);
  for (int i = 0; i < t; ++i)
    fresh.push_back({i, t, Monomial::lcm(basis[i].leading_monomial(), lt)});

  // M: drop (i,t) when another new pair's lcm strictly divides its lcm.
  std::vector<bool> keep(fresh.size(), true);
  for (size_t a = 0; a < fresh.size(); ++a) {
    if (!keep[a]) continue;
    for (size_t b = 0; b < fresh.size(); ++b) {
      if (a == b || !keep[a]) continue;
      if (fresh[b].lcm.divides(fresh[a].lcm) &&
          !(fresh[b].lcm == fresh[a].lcm)) {
        keep[a] = false;
      }
    }
  }
  // F: one representative per lcm value; prefer a coprime pair so that B can
  // retire the whole class.
  for (size_t a = 0; a < fresh.size(); ++a) {
    if (!keep[a]) continue;
    for (size_t b = a + 1; b < fresh.size(); ++b) {
      if (!keep[b] || !(fresh[a].lcm == fresh[b].lcm)) continue;
      bool a_coprime = basis[fresh[a].i].leading_monomial().coprime(lt);
      bool b_coprime = basis[fresh[b].i].leading_monomial().coprime(lt);
      if (b_coprime && !a_coprime)
        keep[a] = false;
      else
        keep[b] = false;
      if (!keep[a]) break;
    }
  }
  // B: coprime leading monomials reduce to zero anyway.
  for (size_t a = 0; a < fresh.size(); ++a) {
    if (!keep[a]) continue;
    if (basis[fresh[a].i].leading_monomial().coprime(lt)) keep[a] = false;
  }

  // Old pairs strictly refined by the newcomer are dropped.
  std::vector<SPair> survivors;
  survivors.reserve(pairs.size());
  for (const auto& p : pairs) {
    bool drop = lt.divides(p.lcm) &&
                !(Monomial::lcm(basis[p.i].leading_monomial(), lt) == p.lcm) &&
                !(Monomial::lcm(basis[p.j].leading_monomial(), lt) == p.lcm);
    if (!drop) survivors.push_back(p);
  }
  for (size_t a = 0; a < fresh.size(); ++a)
    if (keep[a]) survivors.push_back(fresh[a]);
  pairs = std::move(survivors);
}

// Normal selection: smallest lcm in the active order, ties by index.
size_t select_pair(const std::vector<SPair>& pairs,
                   const MonomialOrder& order) {
  size_t best = 0;
  for (size_t k = 1; k < pairs.size(); ++k) {
    int c = compare(order, pairs[k].lcm, pairs[best].lcm);
    if (c < 0 || (c == 0 && (pairs[k].j < pairs[best].j ||
                             (pairs[k].j == pairs[best].j &&
                              pairs[k].i < pairs[best].i))))
      best = k;
  }
  return best;
}

std::vector<Polynomial> minimalize_and_reduce(std::vector<Polynomial> basis,
                                              const MonomialOrder& order,
                                              uint64_t& steps) {
  std::sort(basis.begin(), basis.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return compare(order, a.leading_monomial(),
                             b.leading_monomial()) < 0;
            });
  std::vector<Polynomial> minimal;
  for (auto& g : basis) {
    bool redundant = false;
    for (const auto& h : minimal)
      if (h.leading_monomial().divides(g.leading_monomial())) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(std::move(g));
  }
  // Tail-reduce each element against all the others.
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = reduce_full(minimal[i], others, steps).monic();
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return compare(order, a.leading_monomial(),
                             b.leading_monomial()) < 0;
            });
  return minimal;
}

}  // namespace

GroebnerBasis buchberger(const Ctx& ctx, std::vector<Polynomial> gens,
                         const MonomialOrder& order) {
  uint64_t steps = 0;
  Ctx ring = ctx;
  if (!(ctx->order() == order))
    ring = make_context(ctx->names(), order);

#ifndef NDEBUG
  const std::vector<Polynomial> original = gens;
#endif
  std::vector<Polynomial> basis;
  std::vector<SPair> pairs;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    Polynomial r = reduce_full(g.with_context(ring), basis, steps);
    if (r.is_zero()) continue;
    Rational unit(1);
    make_primitive(r, unit);
    if (r.leading_coefficient().sign() < 0) r = -r;
    basis.push_back(std::move(r));
    update_pairs(basis, (int)basis.size() - 1, pairs);
  }

  while (!pairs.empty()) {
    size_t k = select_pair(pairs, order);
    SPair p = pairs[k];
    pairs.erase(pairs.begin() + k);
    Polynomial r = reduce_full(spoly(basis[p.i], basis[p.j]), basis, steps);
    if (r.is_zero()) continue;
    if (r.is_constant()) {
      // unit ideal: nothing else matters
      basis = {Polynomial::constant(ring, Rational(1))};
      pairs.clear();
      break;
    }
    Rational unit(1);
    make_primitive(r, unit);
    if (r.leading_coefficient().sign() < 0) r = -r;
    basis.push_back(std::move(r));
    update_pairs(basis, (int)basis.size() - 1, pairs);
  }

  GroebnerBasis out;
  out.ctx = ctx;
  out.order = order;
  auto reduced = minimalize_and_reduce(std::move(basis), order, steps);
  out.elements.reserve(reduced.size());
  for (auto& g : reduced) out.elements.push_back(g.with_context(ctx));
#ifndef NDEBUG
  assert(verify_groebner(out));
  for (const auto& g : original)
    assert(normal_form(g.with_context(ctx), out).is_zero());
#endif
  return out;
}

bool verify_groebner(const GroebnerBasis& basis) {
  uint64_t steps = 0;
  Ctx ring = basis.ctx;
  if (!(basis.ctx->order() == basis.order))
    ring = make_context(basis.ctx->names(), basis.order);
  std::vector<Polynomial> elems;
  for (const auto& g : basis.elements) elems.push_back(g.with_context(ring));
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = i + 1; j < elems.size(); ++j)
      if (!reduce_full(spoly(elems[i], elems[j]), elems, steps).is_zero())
        return false;
  return true;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis) {
  require_same_ring(p.ctx(), basis.ctx, "normal_form");
  uint64_t steps = 0;
  Ctx ring = basis.ctx;
  if (!(basis.ctx->order() == basis.order))
    ring = make_context(basis.ctx->names(), basis.order);
  std::vector<Polynomial> elems;
  elems.reserve(basis.elements.size());
  for (const auto& g : basis.elements) elems.push_back(g.with_context(ring));
  return reduce_full(p.with_context(ring), elems, steps)
      .with_context(basis.ctx);
}

bool member(const Polynomial& p, const Ideal& I) {
  require_same_ring(p.ctx(), I.ctx(), "member");
  if (p.is_zero()) return true;
  return normal_form(p, I.groebner()).is_zero();
}

std::string fresh_variable_name(const Ctx& ctx, const std::string& hint) {
  if (!ctx->has(hint)) return hint;
  for (int k = 1;; ++k) {
    std::string cand = hint + std::to_string(k);
    if (!ctx->has(cand)) return cand;
  }
}

bool radical_member(const Polynomial& p, const Ideal& I) {
  require_same_ring(p.ctx(), I.ctx(), "radical_member");
  if (p.is_zero()) return true;
  if (member(p, I)) return true;
  const Ctx& ctx = I.ctx();
  std::string t = fresh_variable_name(ctx, "t_");
  std::vector<std::string> names = ctx->names();
  names.push_back(t);
  Ctx ext = make_context(std::move(names), MonomialOrder::grevlex());
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.with_context(ext));
  gens.push_back(Polynomial::constant(ext, Rational(1)) -
                 Polynomial::variable(ext, t) * p.with_context(ext));
  return buchberger(ext, std::move(gens), ext->order()).is_unit();
}

namespace {

// Shared elimination core: returns the generators of I' = I with the block
// of `drop` variables eliminated, expressed over `keep_ctx`.
std::vector<Polynomial> eliminate_core(const std::vector<Polynomial>& gens,
                                       const std::vector<std::string>& drop,
                                       const Ctx& keep_ctx) {
  std::vector<std::string> permuted = drop;
  for (const auto& n : keep_ctx->names()) permuted.push_back(n);
  Ctx work = make_context(permuted, MonomialOrder::block((int)drop.size()));
  std::vector<Polynomial> moved;
  moved.reserve(gens.size());
  for (const auto& g : gens) moved.push_back(g.with_context(work));
  GroebnerBasis gb = buchberger(work, std::move(moved), work->order());
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements) {
    bool pure = true;
    for (const auto& t : g.terms())
      for (size_t v = 0; v < drop.size() && pure; ++v)
        if (t.m.e[v]) pure = false;
    if (pure) out.push_back(g.with_context(keep_ctx));
  }
  return out;
}

}  // namespace

Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop) {
  const Ctx& ctx = I.ctx();
  for (const auto& d : drop)
    if (!ctx->has(d)) throw DomainError("eliminate: unknown variable " + d);
  if (drop.empty()) return I;
  std::vector<std::string> keep;
  for (const auto& n : ctx->names())
    if (std::find(drop.begin(), drop.end(), n) == drop.end())
      keep.push_back(n);
  MonomialOrder keep_order =
      ctx->order().is_block() ? MonomialOrder::grevlex() : ctx->order();
  Ctx keep_ctx = make_context(keep, keep_order);
  return Ideal(keep_ctx, eliminate_core(I.generators(), drop, keep_ctx));
}

Ideal saturate(const Ideal& I, const Polynomial& f) {
  require_same_ring(I.ctx(), f.ctx(), "saturate");
  if (f.is_zero()) throw DomainError("saturate by zero polynomial");
  if (f.is_constant()) return I;  // units change nothing
  const Ctx& ctx = I.ctx();
  std::string t = fresh_variable_name(ctx, "t_");
  std::vector<std::string> names = ctx->names();
  names.push_back(t);
  Ctx ext = make_context(std::move(names), ctx->order());
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.with_context(ext));
  gens.push_back(Polynomial::constant(ext, Rational(1)) -
                 Polynomial::variable(ext, t) * f.with_context(ext));
  auto out = eliminate_core(gens, {t}, ctx);
  return Ideal(ctx, std::move(out));
}

Ideal saturate_by_ideal(const Ideal& I, const Ideal& E) {
  require_same_ring(I.ctx(), E.ctx(), "saturate_by_ideal");
  if (!E.has_generators()) return Ideal::unit(I.ctx());
  bool first = true;
  Ideal acc;
  for (const auto& g : E.generators()) {
    Ideal s = saturate(I, g);
    acc = first ? s : intersect(acc, s);
    first = false;
  }
  return acc;
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ctx(), J.ctx(), "intersect");
  if (I.is_unit_ideal()) return J;
  if (J.is_unit_ideal()) return I;
  if (!I.has_generators() || !J.has_generators())
    return Ideal::zero(I.ctx());
  const Ctx& ctx = I.ctx();
  std::string t = fresh_variable_name(ctx, "t_");
  std::vector<std::string> names = ctx->names();
  names.push_back(t);
  Ctx ext = make_context(std::move(names), ctx->order());
  Polynomial tv = Polynomial::variable(ext, t);
  Polynomial one_minus_t = Polynomial::constant(ext, Rational(1)) - tv;
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators())
    gens.push_back(tv * g.with_context(ext));
  for (const auto& g : J.generators())
    gens.push_back(one_minus_t * g.with_context(ext));
  auto out = eliminate_core(gens, {t}, ctx);
  return Ideal(ctx, std::move(out));
}

Ideal sum(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ctx(), J.ctx(), "ideal sum");
  std::vector<Polynomial> gens = I.generators();
  for (const auto& g : J.generators()) gens.push_back(g);
  return Ideal(I.ctx(), std::move(gens));
}

Ideal sum(const Ideal& I, const std::vector<Polynomial>& extra) {
  std::vector<Polynomial> gens = I.generators();
  for (const auto& g : extra) gens.push_back(g);
  return Ideal(I.ctx(), std::move(gens));
}

int dimension(const Ideal& I) {
  const int n = I.ctx()->arity();
  const GroebnerBasis& gb = I.groebner();
  if (gb.is_unit()) return -1;
  if (gb.elements.empty()) return n;
  if (n > 20) throw InternalError("dimension: arity too large");
  std::vector<uint32_t> supports;
  supports.reserve(gb.elements.size());
  for (const auto& g : gb.elements) {
    uint32_t s = 0;
    const Monomial& lm = g.leading_monomial();
    for (int v = 0; v < n; ++v)
      if (lm.e[v]) s |= (1u << v);
    supports.push_back(s);
  }
  int best = 0;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool independent = true;
    for (uint32_t s : supports)
      if ((s & mask) == s) {  // leading monomial lives inside the set
        independent = false;
        break;
      }
    if (independent) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

bool ideal_containment(const Ideal& I, const Ideal& J, ContainmentMode mode) {
  require_same_ring(I.ctx(), J.ctx(), "ideal_containment");
  for (const auto& g : I.generators()) {
    bool in = mode == ContainmentMode::exact ? member(g, J)
                                             : radical_member(g, J);
    if (!in) return false;
  }
  return true;
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
  return ideal_containment(I, J, ContainmentMode::exact) &&
         ideal_containment(J, I, ContainmentMode::exact);
}

bool variety_equal(const Ideal& I, const Ideal& J) {
  return variety_subset(I, J) && variety_subset(J, I);
}

Ideal sharpen_monomial_content(const Ideal& I) {
  Ideal cur = I;
  for (int round = 0; round < 16; ++round) {
    const GroebnerBasis& gb = cur.groebner();
    if (gb.is_unit()) return cur;
    std::vector<Polynomial> extra;
    for (const auto& f : gb.elements) {
      Monomial m = f.monomial_content();
      Monomial sq(m.arity());
      bool fat = false;
      for (size_t v = 0; v < m.e.size(); ++v) {
        sq.e[v] = m.e[v] ? 1 : 0;
        if (m.e[v] > 1) fat = true;
      }
      if (!fat) continue;
      Polynomial cand =
          f.divided_by_monomial(m).times_term(sq, Rational(1));
      if (!member(cand, cur)) extra.push_back(std::move(cand));
    }
    if (extra.empty()) return cur;
    std::vector<Polynomial> gens = gb.elements;
    for (auto& g : extra) gens.push_back(std::move(g));
    cur = Ideal(cur.ctx(), std::move(gens));
  }
  return cur;
}

}  // namespace stratkit
