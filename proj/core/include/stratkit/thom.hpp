#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stratkit/cset.hpp"
#include "stratkit/polymap.hpp"

namespace stratkit {

/// Locus of Jacobian rank exactly `rank` inside the singular set:
/// V(minors_{rank+1}) \ V(minors_rank).
struct RankPiece {
  int rank = 0;
  Piece piece;
};

enum class StratumOrigin { thom, sf, intersection };
std::string origin_name(StratumOrigin o);

/// A smooth locally closed piece of the partition. `dim` is the dimension of
/// its closure and doubles as the piece's label (the subdivision relabels the
/// pieces that arise as intersections by dimension).
struct SmoothPiece {
  Piece piece;
  int dim = -1;
  int index = 0;         // 1-based within the dimension class
  int source_rank = -1;  // rank label of the originating rank locus
  StratumOrigin origin = StratumOrigin::thom;

  std::string label() const {
    return "V'" + std::to_string(dim) + "_" + std::to_string(index);
  }
};

/// Step 1: subdivision of Sing F by exact Jacobian rank (empty loci dropped).
std::vector<RankPiece> rank_subdivision(const PolyMap& F);

/// Step 2: subdivision of one rank locus into smooth pieces by iterated
/// singular loci (Jacobian criterion), splitting principal closures along
/// their monomial-content components so reducible hypersurfaces separate.
std::vector<SmoothPiece> smooth_subdivision(const RankPiece& rp);

/// Step 3: refinement to pairwise disjoint pieces with the same union.
/// Overlaps are removed from both parents and re-emitted at their own
/// dimension.
std::vector<SmoothPiece> refine_partition(std::vector<SmoothPiece> pieces);

/// Step 4: generic rank of the differential restricted to the piece,
/// computed as the dimension of the closure of the piece's image.
int restricted_rank(const SmoothPiece& sp, const PolyMap& F);

/// Step 5 output: one Thom stratum W^{dim,k}_index of the critical values.
struct ImageStratum {
  SmoothPiece source;
  int k = -1;              // restricted rank = dim of the image closure
  Ideal image_closure;     // in the target ring
  CSet image;              // exact constructible image
  bool image_certified = true;

  std::string label() const {
    return "W^{" + std::to_string(source.dim) + "," + std::to_string(k) +
           "}_" + std::to_string(source.index);
  }
};

/// Steps 1-5 for a square map.
std::vector<ImageStratum> thom_partition(const PolyMap& F);

/// Smooth locally closed partition of the asymptotic set by iterated
/// singular loci (stands in for the cited stratification of S_F; reports
/// label these pieces "facons-substitute").
std::vector<SmoothPiece> sf_stratification(const PolyMap& F);

struct Stratum {
  std::string id;
  Piece piece;
  int dim = -1;
  StratumOrigin origin = StratumOrigin::thom;
};

struct FrontierReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Frontier condition as coverage: for every stratum, the closure minus the
/// stratum must lie inside the union of the strata. Exact piecewise check.
FrontierReport frontier_check(const std::vector<Stratum>& strata);

struct TransversalityPair {
  std::string thom_label;
  std::string sf_label;
  int dim_thom = -1;
  int dim_sf = -1;
  int dim_intersection = -1;  // -1 when empty
  enum class Kind { empty, transverse, containment, violation } kind =
      Kind::empty;
};
struct TransversalityReport {
  bool ok = true;  // no violations; containments are reported, not failures
  std::vector<TransversalityPair> pairs;
};
TransversalityReport transversality_check(const PolyMap& F);

struct ClosednessReport {
  bool boundary_in_sf = true;  // closure(K0) \ K0 lies in S_F
  bool union_equality = true;  // K0 union S_F = closure(K0) union S_F
  std::vector<std::string> witnesses;
  bool ok() const { return boundary_in_sf && union_equality; }
};
ClosednessReport verify_closedness(const PolyMap& F);

struct ConjectureReport {
  bool dominant = false;
  PurityReport purity;
};
ConjectureReport check_conjecture(const PolyMap& F);

struct Stratification {
  int ambient_dim = 0;
  std::vector<Stratum> strata;           // sorted by dimension, descending
  std::vector<Ideal> filtration;         // level d ideal, d = maxdim..0
  std::vector<std::pair<int, int>> incidence;  // (lower index, upper index)
  FrontierReport frontier;
  TransversalityReport transversality;
  ClosednessReport closedness;
  ConjectureReport conjecture;
};

/// Stratification of K0(F) union S_F compatible with the Thom pieces and the
/// S_F strata: Thom images off S_F, S_F strata off the images, their
/// intersections, refined to disjointness, with the verifier verdicts
/// embedded.
Stratification stratify_union(const PolyMap& F);

}  // namespace stratkit
