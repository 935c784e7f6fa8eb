#pragma once

#include <string>
#include <vector>

#include "stratkit/ideal.hpp"

namespace stratkit {

/// Locally closed set V(I) \ V(E). A closed piece carries the unit ideal as
/// its exception ideal (V(<1>) is empty, so nothing is removed).
struct Piece {
  Ideal closure;     // I
  Ideal exceptions;  // E

  Piece() = default;
  Piece(Ideal I, Ideal E) : closure(std::move(I)), exceptions(std::move(E)) {
    require_same_ring(closure.ctx(), exceptions.ctx(), "piece");
  }

  static Piece closed(Ideal I) {
    Ctx ctx = I.ctx();
    return Piece(std::move(I), Ideal::unit(ctx));
  }

  const Ctx& ctx() const { return closure.ctx(); }
};

/// Finite union of pieces; the empty list is the empty set. `disjoint` is a
/// bookkeeping flag set by refinement passes.
struct CSet {
  std::vector<Piece> pieces;
  bool disjoint = false;

  CSet() = default;
  explicit CSet(std::vector<Piece> ps) : pieces(std::move(ps)) {}

  bool is_empty_union() const { return pieces.empty(); }
};

/// Replaces the closure ideal with the ideal of the piece's Zariski closure:
/// intersection of the per-generator saturations by E, with squarefree
/// sharpening of monomial content. The point set is unchanged.
Piece normalize(const Piece& p);

/// True iff the piece has no points: V(I) inside V(E).
bool is_empty(const Piece& p);

/// Membership by exact evaluation: all closure generators vanish and not all
/// exception generators do.
bool contains_point(const Piece& p, const std::vector<Rational>& pt);
bool contains_point(const CSet& c, const std::vector<Rational>& pt);

/// (V(I) \ V(E)) \ V(B): exception ideal extended by generator-wise products.
Piece difference(const Piece& a, const Ideal& b);

/// Set difference of two pieces, as up to two pieces.
CSet difference(const Piece& a, const Piece& b);

/// Set difference of a piece and a finite union.
CSet difference(const Piece& a, const CSet& b);

Piece intersect(const Piece& a, const Piece& b);

CSet union_of(const CSet& a, const CSet& b);

/// Drops empty pieces and normalizes the rest.
CSet prepared(const CSet& c);

/// Ideal of the Zariski closure of the union (intersection of the normalized
/// closure ideals; the unit ideal for the empty set).
Ideal closure_ideal(const CSet& c);

/// True iff a is a subset of b (piecewise exact decision).
bool cset_subset(const CSet& a, const CSet& b);

int dimension(const CSet& c);

struct PurityReport {
  bool pure = true;
  int dimension = -1;
  std::vector<int> piece_dims;          // per normalized piece
  std::vector<int> maximal_piece_dims;  // dims of containment-maximal closures
  std::string note;
};

/// Pure-dimensionality by the maximal-piece rule: pieces whose closures are
/// maximal under radical containment must all share one dimension. The note
/// records the method's scope (decided on the pieces the pipeline produced,
/// not on irreducible components).
PurityReport is_pure_dimensional(const CSet& c);

}  // namespace stratkit
