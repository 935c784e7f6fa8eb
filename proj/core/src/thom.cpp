#include "stratkit/thom.hpp"

#include <algorithm>

#include "stratkit/map_analysis.hpp"
#include "stratkit/matrix.hpp"

namespace stratkit {

std::string origin_name(StratumOrigin o) {
  switch (o) {
    case StratumOrigin::thom: return "thom";
    case StratumOrigin::sf: return "sf";
    case StratumOrigin::intersection: return "intersection";
  }
  return "?";
}

std::vector<RankPiece> rank_subdivision(const PolyMap& F) {
  F.require_square("rank_subdivision");
  const int n = F.source_arity();
  PolyMatrix J = jacobian(F);
  std::vector<RankPiece> out;
  Ideal below = Ideal::unit(F.source);  // minors of size 0
  for (int i = 0; i < n; ++i) {
    Ideal here(F.source, J.minors(i + 1));
    Piece piece = normalize(Piece(here, below));
    if (!is_empty(piece)) out.push_back({i, piece});
    below = here;
  }
  return out;
}

namespace {

std::vector<Piece> smooth_rec(const Piece& raw, int depth) {
  Piece p = normalize(raw);
  if (is_empty(p)) return {};
  const Ctx& ctx = p.ctx();
  const int n = ctx->arity();
  if (depth > n + 3)
    throw InternalError(
        "smooth subdivision: recursion exceeded the ambient dimension");

  int d = dimension(p.closure);
  if (d <= 0) return {p};  // finite point sets are smooth
  if (d == n) return {p};  // the whole space

  const auto& gb = p.closure.groebner().elements;

  // Principal closures: peel off the coordinate-hyperplane components given
  // by the monomial content, so reducible hypersurfaces separate. Only worth
  // doing when it is a genuine decomposition (a single bare variable would
  // just reproduce the piece).
  if (gb.size() == 1) {
    const Polynomial& f = gb.front();
    Monomial content = f.monomial_content();
    Polynomial g = f.divided_by_monomial(content);
    int content_vars = 0;
    for (int v = 0; v < n; ++v)
      if (content.e[v]) ++content_vars;
    bool splits = content.degree() > 0 &&
                  (!g.is_constant() || content_vars >= 2);
    if (splits) {
      std::vector<Piece> out;
      for (int v = 0; v < n; ++v) {
        if (content.e[v] == 0) continue;
        Piece axis(Ideal(ctx, {Polynomial::variable(ctx, v)}), p.exceptions);
        for (auto& q : smooth_rec(axis, depth + 1)) out.push_back(std::move(q));
      }
      if (!g.is_constant()) {
        Piece rest(Ideal(ctx, {g}), p.exceptions);
        for (auto& q : smooth_rec(rest, depth + 1)) out.push_back(std::move(q));
      }
      return out;
    }
  }

  // Jacobian criterion on the closure.
  const int c = n - d;
  PolyMatrix Jac((int)gb.size(), n, ctx);
  for (size_t i = 0; i < gb.size(); ++i)
    for (int v = 0; v < n; ++v) Jac.set((int)i, v, gb[i].derivative(v));
  Ideal sing = sum(p.closure, Jac.minors(std::min(c, (int)gb.size())));

  Piece singular_piece(sing, p.exceptions);
  if (is_empty(singular_piece)) return {p};  // already smooth

  Piece singular_norm = normalize(singular_piece);
  if (!is_empty(singular_norm) && dimension(singular_norm.closure) >= d)
    throw InternalError(
        "smooth subdivision: singular locus did not drop dimension "
        "(non-radical closure)");

  std::vector<Piece> out;
  Piece smooth_part = difference(p, sing);
  if (!is_empty(smooth_part)) out.push_back(normalize(smooth_part));
  for (auto& q : smooth_rec(singular_piece, depth + 1))
    out.push_back(std::move(q));
  return out;
}

std::vector<std::string> sort_key(const Piece& p) {
  return p.closure.generator_strings();
}

bool piece_before(const SmoothPiece& a, const SmoothPiece& b) {
  if (a.dim != b.dim) return a.dim > b.dim;
  return sort_key(a.piece) < sort_key(b.piece);
}

void assign_indices(std::vector<SmoothPiece>& pieces) {
  std::stable_sort(pieces.begin(), pieces.end(), piece_before);
  int current_dim = -2, counter = 0;
  for (auto& sp : pieces) {
    if (sp.dim != current_dim) {
      current_dim = sp.dim;
      counter = 0;
    }
    sp.index = ++counter;
  }
}

}  // namespace

std::vector<SmoothPiece> smooth_subdivision(const RankPiece& rp) {
  std::vector<SmoothPiece> out;
  for (auto& piece : smooth_rec(rp.piece, 0)) {
    SmoothPiece sp;
    sp.dim = dimension(piece.closure);
    sp.piece = std::move(piece);
    sp.source_rank = rp.rank;
    out.push_back(std::move(sp));
  }
  return out;
}

std::vector<SmoothPiece> refine_partition(std::vector<SmoothPiece> pieces) {
  std::vector<SmoothPiece> queue;
  for (auto& sp : pieces) {
    if (is_empty(sp.piece)) continue;
    sp.piece = normalize(sp.piece);
    sp.dim = dimension(sp.piece.closure);
    queue.push_back(std::move(sp));
  }

  std::vector<SmoothPiece> out;
  int guard = 0;
  while (!queue.empty()) {
    if (++guard > 500)
      throw InternalError("refine_partition did not stabilize");
    std::stable_sort(queue.begin(), queue.end(), piece_before);
    SmoothPiece cur = std::move(queue.front());
    queue.erase(queue.begin());
    cur.piece = normalize(cur.piece);
    if (is_empty(cur.piece)) continue;
    cur.dim = dimension(cur.piece.closure);

    bool died = false;
    for (size_t qi = 0; qi < out.size() && !died; ++qi) {
      Piece overlap = normalize(intersect(cur.piece, out[qi].piece));
      if (is_empty(overlap)) continue;

      // keep the parts of each parent that sit inside the overlap's closure
      // but are excluded from the overlap by its exceptions
      for (const SmoothPiece* parent : {&cur, &out[qi]}) {
        Piece rem(sum(sum(parent->piece.closure, overlap.closure),
                      overlap.exceptions.generators()),
                  parent->piece.exceptions);
        if (!is_empty(rem)) {
          SmoothPiece r = *parent;
          r.piece = normalize(rem);
          r.dim = dimension(r.piece.closure);
          queue.push_back(std::move(r));
        }
      }

      // the overlap becomes its own piece at its own dimension
      SmoothPiece o;
      o.piece = overlap;
      o.dim = dimension(overlap.closure);
      o.source_rank = out[qi].source_rank;
      o.origin = StratumOrigin::intersection;
      queue.push_back(std::move(o));

      // and both parents lose its closure
      cur.piece = normalize(difference(cur.piece, overlap.closure));
      out[qi].piece = normalize(difference(out[qi].piece, overlap.closure));
      out[qi].dim = dimension(out[qi].piece.closure);
      if (is_empty(cur.piece)) died = true;
    }

    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const SmoothPiece& sp) {
                               return is_empty(sp.piece);
                             }),
              out.end());
    if (!died) {
      cur.dim = dimension(cur.piece.closure);
      out.push_back(std::move(cur));
    }
  }
  assign_indices(out);
  return out;
}

int restricted_rank(const SmoothPiece& sp, const PolyMap& F) {
  if (is_empty(sp.piece))
    throw DomainError("restricted_rank of an empty piece");
  return dimension(image_closure_of(F, normalize(sp.piece).closure));
}

std::vector<ImageStratum> thom_partition(const PolyMap& F) {
  F.require_square("thom_partition");
  std::vector<SmoothPiece> pieces;
  for (const auto& rp : rank_subdivision(F))
    for (auto& sp : smooth_subdivision(rp)) pieces.push_back(std::move(sp));
  std::vector<SmoothPiece> refined = refine_partition(std::move(pieces));

  std::vector<ImageStratum> out;
  for (auto& sp : refined) {
    ImageStratum st;
    st.image_closure = image_closure_of(F, sp.piece.closure);
    st.k = dimension(st.image_closure);
    ImageComputation img = constructible_image(F, sp.piece);
    st.image = std::move(img.image);
    st.image_certified = img.certified;
    st.source = std::move(sp);
    out.push_back(std::move(st));
  }

  // table order: dimension first, then restricted rank
  std::stable_sort(out.begin(), out.end(),
                   [](const ImageStratum& a, const ImageStratum& b) {
                     if (a.source.dim != b.source.dim)
                       return a.source.dim > b.source.dim;
                     if (a.k != b.k) return a.k > b.k;
                     return sort_key(a.source.piece) < sort_key(b.source.piece);
                   });
  int current_dim = -2, counter = 0;
  for (auto& st : out) {
    if (st.source.dim != current_dim) {
      current_dim = st.source.dim;
      counter = 0;
    }
    st.source.index = ++counter;
  }
  return out;
}

std::vector<SmoothPiece> sf_stratification(const PolyMap& F) {
  Ideal sf = asymptotic_set(F);
  if (sf.is_unit_ideal()) return {};
  std::vector<SmoothPiece> pieces;
  for (auto& piece : smooth_rec(Piece::closed(sf), 0)) {
    SmoothPiece sp;
    sp.dim = dimension(piece.closure);
    sp.piece = std::move(piece);
    sp.origin = StratumOrigin::sf;
    pieces.push_back(std::move(sp));
  }
  auto refined = refine_partition(std::move(pieces));
  for (auto& sp : refined) sp.origin = StratumOrigin::sf;
  return refined;
}

FrontierReport frontier_check(const std::vector<Stratum>& strata) {
  FrontierReport rep;
  CSet all;
  for (const auto& s : strata) all.pieces.push_back(s.piece);
  for (const auto& s : strata) {
    CSet leftover = difference(Piece::closed(s.piece.closure), all);
    for (const auto& piece : leftover.pieces) {
      if (is_empty(piece)) continue;
      rep.ok = false;
      Piece shown = normalize(piece);
      std::string what = "closure(" + s.id + ") exits the strata near V(";
      for (size_t i = 0; i < shown.closure.generators().size(); ++i) {
        if (i) what += ", ";
        what += shown.closure.generators()[i].str();
      }
      what += ")";
      rep.violations.push_back(what);
    }
  }
  return rep;
}

namespace {

std::vector<Stratum> make_strata(std::vector<SmoothPiece> refined) {
  std::vector<Stratum> out;
  for (auto& sp : refined) {
    Stratum s;
    s.id = "S" + std::to_string(sp.dim) + "_" + std::to_string(sp.index);
    s.piece = sp.piece;
    s.dim = sp.dim;
    s.origin = sp.origin;
    out.push_back(std::move(s));
  }
  return out;
}

TransversalityReport transversality_impl(
    const PolyMap& F, const std::vector<ImageStratum>& thom,
    const std::vector<SmoothPiece>& sfs, const Ideal& sf) {
  TransversalityReport rep;
  const int n = F.source_arity();
  for (const auto& ts : thom) {
    // a Thom closure inside the asymptotic set meets its strata by
    // containment, not transversally; reported as its own category
    bool k_in_sf =
        !sf.is_unit_ideal() &&
        variety_subset(ts.image_closure, sf.with_context(ts.image_closure.ctx()));
    for (const auto& s : sfs) {
      TransversalityPair pair;
      pair.thom_label = ts.label();
      pair.sf_label = s.label();
      pair.dim_thom = ts.k;
      pair.dim_sf = s.dim;
      Piece inter(sum(ts.image_closure, s.piece.closure),
                  s.piece.exceptions);
      if (is_empty(inter)) {
        pair.kind = TransversalityPair::Kind::empty;
      } else {
        Piece norm = normalize(inter);
        pair.dim_intersection = dimension(norm.closure);
        bool k_in_s = variety_subset(ts.image_closure, s.piece.closure);
        bool s_in_k = variety_subset(s.piece.closure, ts.image_closure);
        if (k_in_sf || k_in_s || s_in_k) {
          pair.kind = TransversalityPair::Kind::containment;
        } else if (pair.dim_intersection <= pair.dim_thom + pair.dim_sf - n) {
          pair.kind = TransversalityPair::Kind::transverse;
        } else {
          pair.kind = TransversalityPair::Kind::violation;
          rep.ok = false;
        }
      }
      rep.pairs.push_back(std::move(pair));
    }
  }
  return rep;
}

ClosednessReport closedness_impl(const std::vector<ImageStratum>& thom,
                                 const Ideal& sf) {
  ClosednessReport rep;
  CSet k0;
  for (const auto& ts : thom) k0 = union_of(k0, ts.image);
  if (k0.pieces.empty()) return rep;  // empty critical values: vacuous

  Ideal closure = closure_ideal(k0);
  CSet boundary = difference(Piece::closed(closure), k0);
  for (const auto& piece : boundary.pieces) {
    if (is_empty(piece)) continue;
    Piece norm = normalize(piece);
    bool inside = true;
    for (const auto& g : sf.generators())
      if (!radical_member(g, norm.closure)) inside = false;
    if (sf.is_unit_ideal()) inside = false;  // S_F empty but boundary is not
    if (!inside) {
      rep.boundary_in_sf = false;
      rep.witnesses.push_back("boundary piece V(" +
                              norm.closure.generators()[0].str() + ", ...)");
    }
    // the same piece decides the two-set equality
    Piece off_sf = difference(norm, sf);
    if (!is_empty(off_sf)) rep.union_equality = false;
  }
  return rep;
}

}  // namespace

TransversalityReport transversality_check(const PolyMap& F) {
  return transversality_impl(F, thom_partition(F), sf_stratification(F),
                             asymptotic_set(F));
}

ClosednessReport verify_closedness(const PolyMap& F) {
  return closedness_impl(thom_partition(F), asymptotic_set(F));
}

Stratification stratify_union(const PolyMap& F) {
  F.require_square("stratify_union");
  Stratification out;
  out.ambient_dim = F.source_arity();

  std::vector<ImageStratum> thom = thom_partition(F);
  std::vector<SmoothPiece> sfs = sf_stratification(F);
  Ideal sf = asymptotic_set(F);

  CSet thom_pieces;
  for (const auto& ts : thom)
    for (const auto& p : ts.image.pieces) thom_pieces.pieces.push_back(p);

  std::vector<SmoothPiece> candidates;
  for (const auto& ts : thom) {
    for (const auto& p : ts.image.pieces) {
      // Thom stratum off the asymptotic set
      SmoothPiece off;
      off.piece = difference(p, sf);
      off.origin = StratumOrigin::thom;
      off.source_rank = ts.k;
      candidates.push_back(std::move(off));
      // intersections with the S_F strata
      for (const auto& s : sfs) {
        SmoothPiece inter;
        inter.piece = intersect(p, s.piece);
        inter.origin = StratumOrigin::intersection;
        candidates.push_back(std::move(inter));
      }
    }
  }
  for (const auto& s : sfs) {
    for (const auto& piece : difference(s.piece, thom_pieces).pieces) {
      SmoothPiece rest;
      rest.piece = piece;
      rest.origin = StratumOrigin::sf;
      candidates.push_back(std::move(rest));
    }
  }

  std::vector<SmoothPiece> refined = refine_partition(std::move(candidates));
  out.strata = make_strata(std::move(refined));

  // descending dimension filtration
  int maxdim = -1;
  for (const auto& s : out.strata) maxdim = std::max(maxdim, s.dim);
  for (int level = maxdim; level >= 0; --level) {
    CSet le;
    for (const auto& s : out.strata)
      if (s.dim <= level) le.pieces.push_back(s.piece);
    if (le.pieces.empty()) break;
    out.filtration.push_back(closure_ideal(le));
  }

  for (size_t i = 0; i < out.strata.size(); ++i)
    for (size_t j = 0; j < out.strata.size(); ++j) {
      if (i == j || out.strata[i].dim >= out.strata[j].dim) continue;
      if (variety_subset(out.strata[i].piece.closure,
                         out.strata[j].piece.closure))
        out.incidence.emplace_back((int)i, (int)j);
    }

  out.frontier = frontier_check(out.strata);
  out.transversality = transversality_impl(F, thom, sfs, sf);
  out.closedness = closedness_impl(thom, sf);
  out.conjecture.dominant = is_dominant(F);
  CSet everything;
  everything.disjoint = true;  // refine_partition output
  for (const auto& s : out.strata) everything.pieces.push_back(s.piece);
  out.conjecture.purity = is_pure_dimensional(everything);
  return out;
}

ConjectureReport check_conjecture(const PolyMap& F) {
  return stratify_union(F).conjecture;
}

}  // namespace stratkit
