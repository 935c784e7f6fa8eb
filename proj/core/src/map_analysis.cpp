#include "stratkit/map_analysis.hpp"

#include <algorithm>

#include "stratkit/thom.hpp"

namespace stratkit {

Polynomial pullback(const PolyMap& F, const Polynomial& target_poly) {
  const Ctx& tctx = target_poly.ctx();
  Polynomial out(F.source);
  for (const auto& t : target_poly.terms()) {
    Polynomial factor = Polynomial::constant(F.source, t.c);
    for (int v = 0; v < tctx->arity(); ++v) {
      if (t.m.e[v] == 0) continue;
      int which = -1;
      for (size_t i = 0; i < F.target_vars.size(); ++i)
        if (F.target_vars[i] == tctx->name(v)) which = (int)i;
      if (which < 0)
        throw DomainError("pullback: not a target variable: " + tctx->name(v));
      factor = factor * F.components[which].pow(t.m.e[v]);
    }
    out = out + factor;
  }
  return out;
}

Ctx graph_ctx(const PolyMap& F) {
  std::vector<std::string> names = F.source->names();
  for (const auto& t : F.target_vars) names.push_back(t);
  return make_context(std::move(names), MonomialOrder::grevlex());
}

Ideal graph_ideal(const PolyMap& F) {
  Ctx big = graph_ctx(F);
  std::vector<Polynomial> gens;
  for (size_t i = 0; i < F.components.size(); ++i)
    gens.push_back(Polynomial::variable(big, F.target_vars[i]) -
                   F.components[i].with_context(big));
  return Ideal(big, std::move(gens));
}

Ideal singular_locus(const PolyMap& F) {
  F.require_square("singular_locus");
  return Ideal(F.source, {jacobian(F).determinant()});
}

bool point_in_image(const PolyMap& F, const Ideal& constraint,
                    const std::vector<Rational>& a) {
  require_same_ring(F.source, constraint.ctx(), "point_in_image");
  if ((int)a.size() != F.target_arity())
    throw DomainError("point_in_image: point arity mismatch");
  std::vector<Polynomial> gens = constraint.generators();
  for (size_t i = 0; i < F.components.size(); ++i)
    gens.push_back(F.components[i] - Polynomial::constant(F.source, a[i]));
  return !Ideal(F.source, std::move(gens)).is_unit_ideal();
}

// Closure of the image of V(W) under F: eliminate the source block from the
// graph ideal plus W.
Ideal image_closure_of(const PolyMap& F, const Ideal& W) {
  Ideal G = graph_ideal(F);
  Ctx big = G.ctx();
  std::vector<Polynomial> gens = G.generators();
  for (const auto& g : W.generators()) gens.push_back(g.with_context(big));
  Ideal full(big, std::move(gens));
  Ideal elim = eliminate(full, F.source->names());
  return elim.with_context(F.target_ctx());
}

Ideal asymptotic_set_restricted(const PolyMap& F, const Ideal& W) {
  F.require_square("asymptotic_set");
  require_same_ring(F.source, W.ctx(), "asymptotic_set_restricted");
  const int n = F.source_arity();

  // ring [x..., w, y...]
  std::vector<std::string> names = F.source->names();
  std::string w = fresh_variable_name(F.source, "w_h");
  names.push_back(w);
  for (const auto& t : F.target_vars) names.push_back(t);
  Ctx big = make_context(std::move(names), MonomialOrder::grevlex());

  std::vector<int> xblock(n);
  for (int i = 0; i < n; ++i) xblock[i] = i;

  std::vector<Polynomial> gens;
  Polynomial wv = Polynomial::variable(big, w);
  for (size_t i = 0; i < F.components.size(); ++i) {
    long d = std::max(F.components[i].total_degree(), 0L);
    Polynomial fh = F.components[i].is_zero()
                        ? Polynomial(big)
                        : F.components[i]
                              .homogenize_block(xblock, w, d)
                              .with_context(big);
    gens.push_back(Polynomial::variable(big, F.target_vars[i]) *
                       wv.pow((unsigned)d) -
                   fh);
  }
  for (const auto& g : W.generators()) {
    Polynomial gh =
        g.homogenize_block(xblock, w, std::max(g.total_degree(), 0L))
            .with_context(big);
    gens.push_back(gh);
  }

  // projective closure of the graph, then its part at infinity
  Ideal closure = saturate(Ideal(big, std::move(gens)), wv);
  Ideal at_infinity = sum(closure, {wv});

  // remove the irrelevant locus x = 0 of the projective factor
  std::vector<Polynomial> xs;
  for (int i = 0; i < n; ++i) xs.push_back(Polynomial::variable(big, i));
  Ideal cleaned = saturate_by_ideal(at_infinity, Ideal(big, xs));

  std::vector<std::string> drop = F.source->names();
  drop.push_back(w);
  return eliminate(cleaned, drop).with_context(F.target_ctx());
}

Ideal asymptotic_set(const PolyMap& F) {
  return asymptotic_set_restricted(F, Ideal::zero(F.source));
}

bool is_dominant(const PolyMap& F) {
  F.require_square("is_dominant");
  return eliminate(graph_ideal(F), F.source->names()).is_zero_ideal();
}

bool is_proper(const PolyMap& F) { return asymptotic_set(F).is_unit_ideal(); }

JelonekReport check_jelonek(const PolyMap& F) {
  JelonekReport rep;
  rep.dominant = is_dominant(F);
  Ideal sf = asymptotic_set(F);
  rep.proper = sf.is_unit_ideal();
  rep.sf_dim = rep.proper ? -1 : dimension(sf);
  rep.dichotomy_ok =
      !rep.dominant || rep.sf_dim == -1 || rep.sf_dim == F.source_arity() - 1;
  return rep;
}

LeadingFormData leading_form_data(const PolyMap& F) {
  F.require_square("leading_form_data");
  LeadingFormData data;
  for (const auto& c : F.components) {
    if (c.is_zero())
      throw DomainError("leading_form_data: zero component has no degree");
    data.forms.push_back(c.leading_form());
  }
  const int n = F.source_arity();
  PolyMap hat(F.source, F.target_vars, data.forms);
  PolyMatrix D = jacobian(hat);
  data.generic_rank = 0;
  for (int k = n; k >= 1 && data.generic_rank == 0; --k)
    for (const auto& m : D.minors(k))
      if (!m.is_zero()) {
        data.generic_rank = k;
        break;
      }
  data.v_ideal = Ideal(F.source, data.forms);
  data.v_dim = dimension(data.v_ideal);
  data.rank_condition_ok = data.generic_rank >= n - 1;
  data.v_dim_bound_ok = data.v_dim <= 1;
  data.corank_matches = (data.v_dim == n - data.generic_rank);
  return data;
}

namespace {

// Exact constructible images by recursion on target loci: the closure minus
// the escape limits and the boundary image is certainly in the image; the
// rest is the image of a smaller source. Positive-dimensional fibers make
// the escape limits swallow the closure; slice certificates recover
// exactness there.
struct ImageBuilder {
  const PolyMap& F;
  bool certified = true;

  CSet run(const Piece& source, int depth) {
    Piece piece = normalize(source);
    CSet out;
    if (is_empty(piece)) return out;
    if (depth > F.source_arity() + 3) {
      certified = false;
      return out;
    }

    // Group the exception generators by the closure of the subpiece they
    // carve out: the subpiece union per group is V(W) \ V(<gens>).
    struct Group {
      Ideal closure;
      std::vector<Polynomial> gens;
    };
    std::vector<Group> groups;
    for (const auto& g : piece.exceptions.generators()) {
      Ideal W = sharpen_monomial_content(saturate(piece.closure, g));
      if (W.is_unit_ideal()) continue;
      bool placed = false;
      for (auto& grp : groups)
        if (ideal_equal(grp.closure, W)) {
          grp.gens.push_back(g);
          placed = true;
          break;
        }
      if (!placed) groups.push_back({W, {g}});
    }

    for (const auto& grp : groups) {
      CSet part =
          run_subpiece(grp.closure, Ideal(piece.ctx(), grp.gens), depth);
      for (auto& p : part.pieces) out.pieces.push_back(std::move(p));
    }
    return out;
  }

  // Image of V(W) \ V(E); W is the closure of the subpiece.
  CSet run_subpiece(const Ideal& W, const Ideal& E, int depth) {
    CSet out;
    Ideal C = image_closure_of(F, W);
    if (C.is_unit_ideal()) return out;
    if (dimension(C) <= 0) {
      // a finite constructible set equals its closure
      out.pieces.push_back(Piece::closed(C));
      return out;
    }

    Ideal S = asymptotic_set_restricted(F, W);
    Ideal B = image_closure_of(F, sum(W, E));  // image of the removed boundary
    Ideal X = intersect(S, B);

    Piece known(C, X);
    if (!is_empty(known)) {
      out.pieces.push_back(known);
      descend(W, E, X, depth, out);
      return out;
    }

    // Escape limits cover the whole closure. Exclude the boundary image only
    // and certify with slice lower bounds.
    Piece fallback(C, B);
    if (is_empty(fallback)) {
      certified = false;
      return out;
    }
    CSet lower;
    bool covered = false;
    for (int v = 0; v < F.source_arity() && !covered; ++v) {
      for (long cval : {1L, 0L, -1L}) {
        Polynomial slice = Polynomial::variable(F.source, v) -
                           Polynomial::constant(F.source, Rational(cval));
        Ideal Ws =
            sharpen_monomial_content(saturate_by_ideal(sum(W, {slice}), E));
        if (Ws.is_unit_ideal() || variety_equal(Ws, W)) continue;
        CSet sub = run(Piece(Ws, E), depth + 1);
        lower = union_of(lower, sub);
        CSet want;
        want.pieces.push_back(fallback);
        if (cset_subset(want, lower)) {
          covered = true;
          break;
        }
      }
    }
    if (covered) {
      out.pieces.push_back(fallback);
      descend(W, E, B, depth, out);
    } else {
      certified = false;
      for (auto& p : lower.pieces) out.pieces.push_back(std::move(p));
    }
    return out;
  }

  // Recurse into the part of the subpiece mapping into V(X).
  void descend(const Ideal& W, const Ideal& E, const Ideal& X, int depth,
               CSet& out) {
    std::vector<Polynomial> pulled;
    for (const auto& g : X.generators()) pulled.push_back(pullback(F, g));
    Ideal inner =
        sharpen_monomial_content(saturate_by_ideal(sum(W, pulled), E));
    if (inner.is_unit_ideal()) return;
    if (variety_equal(inner, W)) {
      certified = false;  // no progress; leave the rest unclaimed
      return;
    }
    CSet sub = run(Piece(inner, E), depth + 1);
    for (auto& p : sub.pieces) out.pieces.push_back(std::move(p));
  }
};

}  // namespace

ImageComputation constructible_image(const PolyMap& F, const Piece& source) {
  F.require_square("constructible_image");
  ImageBuilder builder{F};
  ImageComputation result;
  result.image = builder.run(source, 0);
  result.certified = builder.certified;
  return result;
}

CriticalValues critical_values(const PolyMap& F) {
  F.require_square("critical_values");
  CriticalValues cv;
  cv.closure = image_closure_of(F, singular_locus(F));
  for (const auto& stratum : thom_partition(F)) {
    cv.exact = union_of(cv.exact, stratum.image);
    cv.exact_certified = cv.exact_certified && stratum.image_certified;
  }
  return cv;
}

MapReport analyze(const PolyMap& F) {
  F.require_square("analyze");
  MapReport rep(F);
  rep.sing = singular_locus(F);
  CriticalValues cv = critical_values(F);
  rep.k0_closure = cv.closure;
  rep.k0 = cv.exact;
  rep.k0_certified = cv.exact_certified;
  rep.sf = asymptotic_set(F);
  JelonekReport jel = check_jelonek(F);
  rep.dominant = jel.dominant;
  rep.proper = jel.proper;
  rep.jelonek_ok = jel.dichotomy_ok;
  rep.leading = leading_form_data(F);
  return rep;
}

}  // namespace stratkit
