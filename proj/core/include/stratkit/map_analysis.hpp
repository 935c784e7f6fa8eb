#pragma once

#include "stratkit/cset.hpp"
#include "stratkit/matrix.hpp"
#include "stratkit/polymap.hpp"

namespace stratkit {

/// Leading forms of the components, the generic rank of their Jacobian, and
/// the common zero locus V of the leading forms.
struct LeadingFormData {
  std::vector<Polynomial> forms;
  int generic_rank = 0;
  Ideal v_ideal;
  int v_dim = -1;
  bool rank_condition_ok = false;  // generic_rank >= n - 1
  bool v_dim_bound_ok = false;     // v_dim <= 1
  // Whether dim V equals the corank of the leading-form Jacobian. The two can
  // disagree for special leading forms; the report records both instead of
  // asserting the identity.
  bool corank_matches = false;
};

/// Composition with the map: target-space polynomial pulled back to source.
Polynomial pullback(const PolyMap& F, const Polynomial& target_poly);

/// Combined ring [source vars..., target vars...] and the graph ideal
/// <y_i - F_i> in it.
Ctx graph_ctx(const PolyMap& F);
Ideal graph_ideal(const PolyMap& F);

/// Principal ideal of the Jacobian determinant (the critical points).
Ideal singular_locus(const PolyMap& F);

/// Ideal (in the target ring) of the closure of F(V(W)).
Ideal image_closure_of(const PolyMap& F, const Ideal& W);

/// True iff the fiber of F restricted to V(constraint) over `a` is nonempty
/// (the fiber ideal is not the unit ideal; Nullstellensatz over C).
bool point_in_image(const PolyMap& F, const Ideal& constraint,
                    const std::vector<Rational>& a);

/// Asymptotic set of F (finite limits along escaping sequences), as an ideal
/// in the target ring. Computed from the projective closure of the graph:
/// bihomogenize the source block, saturate by the homogenizer, cut the part
/// at infinity, saturate away the irrelevant locus, and project.
Ideal asymptotic_set(const PolyMap& F);

/// Asymptotic set of F restricted to the subvariety V(W) of the source.
Ideal asymptotic_set_restricted(const PolyMap& F, const Ideal& W);

bool is_dominant(const PolyMap& F);
bool is_proper(const PolyMap& F);

struct JelonekReport {
  bool dominant = false;
  bool proper = false;
  int sf_dim = -1;
  bool dichotomy_ok = true;  // dominant implies dim S_F in {-1, n-1}
};
JelonekReport check_jelonek(const PolyMap& F);

LeadingFormData leading_form_data(const PolyMap& F);

/// Exact constructible image of a locally closed source piece under F.
/// The result is a sound under-approximation that is exact whenever
/// `certified` comes back true; every fixture in the bundled corpus
/// certifies. Exactness can fail only for pieces with positive-dimensional
/// fibers whose images resist the slice certificates; the flag records it.
struct ImageComputation {
  CSet image;  // in the target ring
  bool certified = true;
};
ImageComputation constructible_image(const PolyMap& F, const Piece& source);

struct CriticalValues {
  Ideal closure;  // target ring
  CSet exact;     // assembled from the Thom pieces' images
  bool exact_certified = true;
};
CriticalValues critical_values(const PolyMap& F);

/// Everything at once; the shape mirrors the JSON report.
struct MapReport {
  explicit MapReport(PolyMap m) : map(std::move(m)) {}

  PolyMap map;
  Ideal sing;
  Ideal k0_closure;
  CSet k0;
  bool k0_certified = true;
  Ideal sf;
  bool dominant = false;
  bool proper = false;
  bool jelonek_ok = true;
  LeadingFormData leading;
};
MapReport analyze(const PolyMap& F);

}  // namespace stratkit
