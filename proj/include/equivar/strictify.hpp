#pragma once

#include "equivar/gaction.hpp"
#include "equivar/gfunctor.hpp"

namespace equivar {

/// The category with one object per group element, scalar endomorphisms and
/// no morphisms between distinct objects.
LinCatPtr omega_cat(const FinGroup& g, u32 p);

/// Left-translation action on omega_cat(G, p); strict by construction.
GAction omega_translation_action(const FinGroup& g, u32 p);

/// The canonical family g -> rho_g(c) of an action, packaged as a weak
/// G-functor from the translation action on Omega(G); its pentagon is the
/// associativity axiom of the action.
LaxGFunctor family_lax_functor(GActionPtr a, int base);

/// True iff every comparison isomorphism is an identity and the functors
/// compose strictly as data (object maps and hom matrices).
bool strict_check(const GAction& a);

/// Output of the strictification: the category of shifted canonical
/// families, its strict action, and the evaluation-at-identity functor with
/// its weak structure.
struct Strictified {
    LinCatPtr cprime;
    GAction strict_action;                 // on cprime
    LaxGFunctor phi;                       // cprime -> C, weak G-equivalence
    std::vector<std::pair<int, int>> objs; // (skeleton rep of C, shift) per cprime object
};

/// Builds C' on pairs (c, h) with Hom((c,h),(d,h')) = Hom_C(rho_h c, rho_h' d),
/// equips it with the shift action (verified strict) and the weak equivalence
/// down to C (pentagon and equivalence verified).
Strictified strictify(const GAction& a, const SearchLimits& limits = {});

} // namespace equivar
