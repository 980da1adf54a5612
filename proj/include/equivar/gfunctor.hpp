#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "equivar/gaction.hpp"
#include "equivar/lincat.hpp"

namespace equivar {

using GActionPtr = std::shared_ptr<const GAction>;

bool action_equal(const GAction& a, const GAction& b);

enum class LaxSide { Right, Left };

/// A functor between two G-categories together with comparison
/// transformations, one per group element:
///   Right: delta_g : rho_g F => F rho_g
///   Left:  delta_g : F rho_g => rho_g F
/// where rho on the left of F acts on the target and on the right of F on
/// the source.  It is weak when every comparison is an isomorphism.
struct LaxGFunctor {
    LaxSide side = LaxSide::Right;
    GActionPtr src_action;
    GActionPtr tgt_action;
    LinFunctor functor;
    std::vector<NatTransf> comparisons;
};

/// Identity functor with identity comparisons over a shared action.
LaxGFunctor identity_lax(GActionPtr a, LaxSide side = LaxSide::Right);

/// First pair (g,h) violating the pentagon axiom, in lexicographic order.
std::optional<std::pair<int, int>> pentagon_check(const LaxGFunctor& l);

struct WeaknessReport {
    bool delta1_iso = false;
    bool identity_axiom = false;
    bool all_iso = false;
    bool all() const { return delta1_iso && identity_axiom && all_iso; }
};

/// Evaluates the three equivalent weakness conditions independently and
/// raises InconsistentLemma if they ever disagree.  When delta_1 is
/// invertible, additionally verifies the idempotent
///   eps = F phi_1 . delta_1 . (phi_1 F)^{-1} : F => F,
/// both directly (eps two = eps, eps = id) and by composing the three
/// lax functors over the trivial group whose pentagon encodes eps^2 = eps.
WeaknessReport weakness_criteria(const LaxGFunctor& l);

/// Flips a weak structure to the opposite side by inverting every
/// comparison.
LaxGFunctor invert_side(const LaxGFunctor& l);

/// compose_lax(l1 : C -> D, l2 : D -> E) is the lax structure on the
/// composite functor (l2 after l1), comparisons whiskered per side.
LaxGFunctor compose_lax(const LaxGFunctor& l1, const LaxGFunctor& l2);

/// First group element where mu fails the compatibility square with the two
/// lax structures.
std::optional<int> g_natural_check(const NatTransf& mu, const LaxGFunctor& l1,
                                   const LaxGFunctor& l2);

/// Adjunction left -| right with unit : Id => right.left and
/// counit : left.right => Id.
struct AdjunctionData {
    LinFunctor left;  // X -> Y
    LinFunctor right; // Y -> X
    NatTransf unit;   // Id_X => right . left
    NatTransf counit; // left . right => Id_Y
};

/// Validates endpoints and both triangle identities.
std::optional<Violation> triangle_check(const AdjunctionData& adj);

/// Unit and counit are G-natural against the composite lax structures (with
/// the canonical identity structures on the identity functors).
std::optional<Violation> g_adjoint_check(const AdjunctionData& adj, const LaxGFunctor& lax_left,
                                         const LaxGFunctor& lax_right);

/// Comparison structure induced on an adjoint of a weak right lax G-functor.
/// When adj.right is the given functor (so adj.left is its left adjoint) the
/// output is the left lax structure
///   delta'_g = eta rho_g Psi . Psi delta_g Psi . Psi rho_g eps;
/// when adj.left is the given functor the right adjoint inherits a right lax
/// structure through the inverted comparisons.  Pentagon, identity axiom and
/// G-adjointness of the result are verified before returning.
LaxGFunctor mate(const LaxGFunctor& lf, const AdjunctionData& adj);

/// Underlying functor fully faithful and essentially surjective (checked on
/// the encoded data; nothing is assumed).
std::optional<Violation> weak_equivalence_check(const LaxGFunctor& l, const SearchLimits& limits = {});

/// Functor between skeletal equivariant categories plus, per object, the
/// witnessing isomorphism from the raw image onto the canonical
/// representative it was normalized to.
struct DescendedFunctor {
    LinFunctor functor;
    std::vector<Vec> wit;     // wit[x] : F(base(x)) -> base(functor(x)) in the target category
    std::vector<Vec> wit_inv;
};

/// Image of (c, theta) is (F c, dir_g . F theta_g) re-normalized into the
/// target skeleton; requires an invertible comparison in the needed
/// direction, hence a weak structure.
DescendedFunctor descend_functor(const LaxGFunctor& l, const EquivCat& src, const EquivCat& tgt,
                                 const SearchLimits& limits = {});

DescendedFunctor descended_identity(const EquivCat& e);

/// Composite of two descended functors with compositional witnesses, so the
/// result can serve as the codomain data of descended transformations.
/// outer_base / inner_base are the underlying functors at category level;
/// src, mid, tgt the equivariant categories along the composite.
DescendedFunctor compose_descended(const DescendedFunctor& outer, const LinFunctor& outer_base,
                                   const DescendedFunctor& inner, const LinFunctor& inner_base,
                                   const EquivCat& src, const EquivCat& mid, const EquivCat& tgt);

/// Components of mu at base objects, conjugated through the stored witnesses
/// and re-expressed in the equivariant hom bases.
NatTransf descend_nat(const NatTransf& mu, const DescendedFunctor& d1, const DescendedFunctor& d2,
                      const EquivCat& src, const EquivCat& tgt);

struct DescendedAdjunction {
    AdjunctionData adj;
    DescendedFunctor left;
    DescendedFunctor right;
};

/// Descends a G-adjoint pair to the equivariant skeleta and re-verifies the
/// triangle identities there.
DescendedAdjunction descend_adjunction(const AdjunctionData& adj, const LaxGFunctor& lax_left,
                                       const LaxGFunctor& lax_right, const EquivCat& ex,
                                       const EquivCat& ey, const SearchLimits& limits = {});

} // namespace equivar
