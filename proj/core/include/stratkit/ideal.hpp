#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "stratkit/polynomial.hpp"

namespace stratkit {

/// Reduced Groebner basis: elements monic, inter-reduced, sorted by leading
/// monomial. Canonical for a fixed ideal and order.
struct GroebnerBasis {
  Ctx ctx;
  MonomialOrder order;
  std::vector<Polynomial> elements;

  bool is_unit() const {
    return elements.size() == 1 && elements[0].is_one();
  }
};

/// Finitely generated ideal. Immutable; the basis cache is write-once per
/// order, so concurrent queries compute each basis at most once.
class Ideal {
 public:
  Ideal() = default;
  Ideal(Ctx ctx, std::vector<Polynomial> generators);

  static Ideal zero(const Ctx& ctx) { return Ideal(ctx, {}); }
  static Ideal unit(const Ctx& ctx) {
    return Ideal(ctx, {Polynomial::constant(ctx, Rational(1))});
  }

  const Ctx& ctx() const { return ctx_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool has_generators() const { return !gens_.empty(); }

  const GroebnerBasis& groebner() const;  // under the context's order
  const GroebnerBasis& groebner(const MonomialOrder& order) const;

  bool is_zero_ideal() const { return gens_.empty(); }
  bool is_unit_ideal() const;

  /// Re-homes generators into a structurally different context by name.
  Ideal with_context(const Ctx& target) const;

  std::vector<std::string> generator_strings() const;

 private:
  struct Cache;
  Ctx ctx_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Computes the reduced Groebner basis of `gens` under `order` (Buchberger
/// with the Gebauer-Moeller pair criteria and normal selection).
GroebnerBasis buchberger(const Ctx& ctx, std::vector<Polynomial> gens,
                         const MonomialOrder& order);

/// Checks that every S-polynomial of basis elements reduces to zero.
bool verify_groebner(const GroebnerBasis& basis);

/// Unique remainder of p modulo the basis (fully tail-reduced).
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis);

bool member(const Polynomial& p, const Ideal& I);

/// True iff p vanishes on V(I) (Rabinowitsch trick over the extended ring).
bool radical_member(const Polynomial& p, const Ideal& I);

/// Generators of I intersected with the subring without `drop` variables.
/// The result lives in the context of the remaining variables.
Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop);

/// I : f^infinity, in the same context.
Ideal saturate(const Ideal& I, const Polynomial& f);

/// Intersection of the per-generator saturations I : g^infinity over the
/// generators g of E; the ideal of the closure of V(I) \ V(E).
Ideal saturate_by_ideal(const Ideal& I, const Ideal& E);

Ideal intersect(const Ideal& I, const Ideal& J);
Ideal sum(const Ideal& I, const Ideal& J);
Ideal sum(const Ideal& I, const std::vector<Polynomial>& extra);

/// Krull dimension of V(I): max independent variable set modulo the leading
/// term ideal. -1 for the empty variety, arity for the zero ideal.
int dimension(const Ideal& I);

enum class ContainmentMode { exact, up_to_radical };

/// exact: I subset of J (generator membership). up_to_radical: I subset of
/// sqrt(J), which decides V(J) subset of V(I).
bool ideal_containment(const Ideal& I, const Ideal& J, ContainmentMode mode);

/// V(inner) subset of V(outer), decided up to radical.
inline bool variety_subset(const Ideal& inner, const Ideal& outer) {
  return ideal_containment(outer, inner, ContainmentMode::up_to_radical);
}

/// Same ideal, exactly (mutual generator membership).
bool ideal_equal(const Ideal& I, const Ideal& J);

/// Same variety (mutual radical containment).
bool variety_equal(const Ideal& I, const Ideal& J);

/// Sound radical sharpening: for every basis element m*g with non-trivial
/// monomial content m, the squarefree version sqf(m)*g vanishes on V(I) and
/// is adjoined. Repeated to a fixpoint. Returns an ideal with the same
/// variety whose monomial generators are squarefree.
Ideal sharpen_monomial_content(const Ideal& I);

/// Picks a variable name based on `hint` that does not occur in `ctx`.
std::string fresh_variable_name(const Ctx& ctx, const std::string& hint);

}  // namespace stratkit
