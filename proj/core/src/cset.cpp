#include "stratkit/cset.hpp"

#include <algorithm>

namespace stratkit {

namespace {

// Combines exception ideals: V(result) = V(A) union V(B). Small inputs use
// generator-wise products (no basis computation); larger ones the ideal
// intersection, whose canonical generators stay compact along chains of
// piece operations.
Ideal exception_product(const Ideal& A, const Ideal& B) {
  if (!A.has_generators() || !B.has_generators())
    return Ideal::zero(A.ctx());
  if (A.generators().size() * B.generators().size() > 10)
    return intersect(A, B);
  std::vector<Polynomial> gens;
  gens.reserve(A.generators().size() * B.generators().size());
  for (const auto& a : A.generators())
    for (const auto& b : B.generators()) gens.push_back(a * b);
  return Ideal(A.ctx(), std::move(gens));
}

}  // namespace

Piece normalize(const Piece& p) {
  Ideal closed = saturate_by_ideal(p.closure, p.exceptions);
  return Piece(sharpen_monomial_content(closed), p.exceptions);
}

bool is_empty(const Piece& p) {
  if (p.closure.is_unit_ideal()) return true;
  if (!p.exceptions.has_generators()) return true;  // V(E) is everything
  for (const auto& e : p.exceptions.generators())
    if (!radical_member(e, p.closure)) return false;
  return true;
}

bool contains_point(const Piece& p, const std::vector<Rational>& pt) {
  if ((int)pt.size() != p.ctx()->arity())
    throw DomainError("contains_point: arity mismatch");
  for (const auto& g : p.closure.generators())
    if (!g.evaluate(pt).is_zero()) return false;
  for (const auto& e : p.exceptions.generators())
    if (!e.evaluate(pt).is_zero()) return true;
  return false;
}

bool contains_point(const CSet& c, const std::vector<Rational>& pt) {
  for (const auto& p : c.pieces)
    if (contains_point(p, pt)) return true;
  return false;
}

Piece difference(const Piece& a, const Ideal& b) {
  require_same_ring(a.ctx(), b.ctx(), "difference");
  return Piece(a.closure, exception_product(a.exceptions, b));
}

CSet difference(const Piece& a, const Piece& b) {
  require_same_ring(a.ctx(), b.ctx(), "difference");
  CSet out;
  if (is_empty(intersect(a, b))) {  // nothing to remove
    out.pieces.push_back(a);
    return out;
  }
  // part of a off the closure of b
  Piece off = difference(a, b.closure);
  if (!is_empty(off)) out.pieces.push_back(normalize(off));
  // part of a inside closure(b) but excluded from b by b's exceptions
  Piece in(sum(sum(a.closure, b.closure), b.exceptions.generators()),
           a.exceptions);
  if (!is_empty(in)) out.pieces.push_back(normalize(in));
  return out;
}

CSet difference(const Piece& a, const CSet& b) {
  CSet cur;
  cur.pieces.push_back(a);
  for (const auto& q : b.pieces) {
    CSet next;
    for (const auto& p : cur.pieces) {
      CSet d = difference(p, q);
      for (auto& r : d.pieces) next.pieces.push_back(std::move(r));
    }
    cur = std::move(next);
    if (cur.pieces.empty()) break;
  }
  return cur;
}

Piece intersect(const Piece& a, const Piece& b) {
  require_same_ring(a.ctx(), b.ctx(), "intersect");
  return Piece(sum(a.closure, b.closure),
               exception_product(a.exceptions, b.exceptions));
}

CSet union_of(const CSet& a, const CSet& b) {
  CSet out;
  out.pieces = a.pieces;
  for (const auto& p : b.pieces) out.pieces.push_back(p);
  return out;
}

CSet prepared(const CSet& c) {
  CSet out;
  out.disjoint = c.disjoint;
  for (const auto& p : c.pieces) {
    if (is_empty(p)) continue;
    out.pieces.push_back(normalize(p));
  }
  return out;
}

Ideal closure_ideal(const CSet& c) {
  CSet ready = prepared(c);
  if (ready.pieces.empty()) {
    if (c.pieces.empty())
      throw DomainError("closure of a set with unknown ring");
    return Ideal::unit(c.pieces.front().ctx());
  }
  Ideal acc = ready.pieces.front().closure;
  for (size_t i = 1; i < ready.pieces.size(); ++i)
    acc = intersect(acc, ready.pieces[i].closure);
  return acc;
}

bool cset_subset(const CSet& a, const CSet& b) {
  for (const auto& p : a.pieces) {
    CSet rest = difference(p, b);
    for (const auto& r : rest.pieces)
      if (!is_empty(r)) return false;
  }
  return true;
}

int dimension(const CSet& c) {
  int best = -1;
  for (const auto& p : prepared(c).pieces)
    best = std::max(best, stratkit::dimension(p.closure));
  return best;
}

PurityReport is_pure_dimensional(const CSet& c) {
  PurityReport rep;
  rep.note =
      "decided on the pipeline's pieces via containment-maximal closures; a "
      "single piece with a mixed-dimensional closure would be misjudged";
  CSet ready = prepared(c);
  if (ready.pieces.empty()) {
    rep.pure = true;  // vacuous
    return rep;
  }
  std::vector<int> dims;
  dims.reserve(ready.pieces.size());
  for (const auto& p : ready.pieces)
    dims.push_back(stratkit::dimension(p.closure));
  rep.piece_dims = dims;
  rep.dimension = *std::max_element(dims.begin(), dims.end());
  for (size_t i = 0; i < ready.pieces.size(); ++i) {
    bool maximal = true;
    for (size_t j = 0; j < ready.pieces.size() && maximal; ++j) {
      if (i == j) continue;
      bool i_in_j =
          variety_subset(ready.pieces[i].closure, ready.pieces[j].closure);
      bool j_in_i =
          variety_subset(ready.pieces[j].closure, ready.pieces[i].closure);
      if (i_in_j && !j_in_i) maximal = false;        // strictly smaller
      if (i_in_j && j_in_i && j < i) maximal = false;  // duplicate closure
    }
    if (maximal) rep.maximal_piece_dims.push_back(dims[i]);
  }
  for (int d : rep.maximal_piece_dims)
    if (d != rep.maximal_piece_dims.front()) rep.pure = false;
  return rep;
}

}  // namespace stratkit
