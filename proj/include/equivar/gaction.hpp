#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equivar/cohomology.hpp"
#include "equivar/group.hpp"
#include "equivar/lincat.hpp"

namespace equivar {

/// Action of a finite group on a LinCat: one autoequivalence per element and
/// one comparison isomorphism per pair, subject to the associativity axiom
/// (checked by action_check, never assumed).
struct GAction {
    FinGroup group;
    LinCatPtr cat;
    std::vector<LinFunctor> functors;    // functors[g], an autoequivalence
    std::vector<NatTransf> compose_isos; // (g,h) -> iso functors[g] functors[h] => functors[gh]

    const LinFunctor& rho(int g) const { return functors[g]; }
    const NatTransf& phi(int g, int h) const {
        return compose_isos[size_t(g) * group.order + h];
    }
};

/// All three invariant families: each rho_g is an equivalence, each phi is a
/// natural isomorphism with the right endpoints, and the associativity square
/// commutes for every triple.  Reports the first failure in lexicographic
/// order.
std::optional<Violation> action_check(const GAction& a, const SearchLimits& limits = {});

GAction trivial_action(const FinGroup& g, LinCatPtr c);

/// Action on vect_cat(p, max_dim) with identity functors and scalar
/// comparison isomorphisms r^phi(g,h).  The grid is not validated here;
/// action_check fails exactly where cocycle_check does.
GAction action_from_cocycle(u32 p, int max_dim, const FinGroup& g, const TwoCocycle& phi);

/// The unit isomorphism rho_1 => Id determined by phi_{1,1}, solved per
/// object through the bijective hom maps of rho_1.  Also verifies the two
/// derived identities phi_{g,1} = rho_g phi_1 and phi_{1,g} = phi_1 rho_g.
NatTransf derive_phi1(const GAction& a);

/// An object c with a linearization: invertible theta_g : c -> rho_g(c)
/// compatible with the comparison isomorphisms.
struct EquivariantObject {
    int base = 0;
    std::vector<Vec> lin; // lin[g] in Hom(base, rho_g(base))
};

/// theta_{gh} = phi_{g,h}(c) . rho_g(theta_h) . theta_g for all pairs.
bool equivariant_relation_holds(const GAction& a, const EquivariantObject& o);

/// Basis (as matrix columns) of the morphisms f : base1 -> base2 commuting
/// with both linearizations.
FpMatrix equivariant_hom_basis(const GAction& a, const EquivariantObject& o1,
                               const EquivariantObject& o2);

/// The category of equivariant objects, realized skeletally: one canonical
/// (lexicographically first) representative per isomorphism class, hom-spaces
/// encoded as subspaces of the underlying hom-spaces.
struct EquivCat {
    GAction action;
    LinCatPtr skeleton;
    std::vector<EquivariantObject> objs; // parallel to skeleton objects
    std::vector<FpMatrix> hom_bases;     // per pair, dim_C(c,d) x dim_skel(X,Y)
    LinFunctor forget;                   // skeleton -> C, drops the linearization
    IsoClasses base_classes;             // iso classes of the underlying category
    bool char_warning = false;           // p divides |G|

    const FpMatrix& hom_basis(int x, int y) const {
        return hom_bases[size_t(x) * objs.size() + y];
    }
    int size() const { return static_cast<int>(objs.size()); }
};

/// Enumerates linearizations over a skeleton of C: free choices on a
/// generating sequence of G, the rest propagated through the compatibility
/// relation, inconsistent assignments rejected.
EquivCat equivariantize(const GAction& a, const SearchLimits& limits = {});

/// Position of an arbitrary equivariant object in the skeleton, with the
/// witnessing isomorphism (underlying morphism and its inverse).
struct Located {
    int index = -1;
    Vec iso;     // in Hom_C(base(o), base(skeleton object))
    Vec iso_inv; // in Hom_C(base(skeleton object), base(o))
};

Located locate_in_skeleton(const EquivCat& e, const EquivariantObject& o,
                           const SearchLimits& limits = {});

/// Composition of action_from_cocycle and equivariantize.
EquivCat twisted_rep_classify(u32 p, int max_dim, const FinGroup& g, const TwoCocycle& phi,
                              const SearchLimits& limits = {});

/// Number of skeleton classes whose base has each vect_cat dimension; only
/// meaningful when the underlying category is a vect_cat.
std::vector<int> classes_per_dimension(const EquivCat& e, int max_dim);

} // namespace equivar
