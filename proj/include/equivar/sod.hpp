#pragma once

#include "equivar/gaction.hpp"
#include "equivar/gfunctor.hpp"

namespace equivar {

/// A full subcategory, both as a member list inside the parent and as a
/// standalone LinCat with its inclusion functor.
struct FullSubcat {
    LinCatPtr parent;
    std::vector<int> members; // ascending parent object indices
    LinCatPtr sub;
    LinFunctor inclusion; // sub -> parent, identity hom matrices
};

FullSubcat make_full_subcat(LinCatPtr parent, std::vector<int> members);

/// Membership is closed under isomorphism in the parent.
std::optional<Violation> subcat_closure_check(const FullSubcat& s, const SearchLimits& limits = {});

/// First pair (b, a) in B x A with Hom(b, a) != 0, else ok.
std::optional<std::pair<int, int>> semiortho_check(const LinCat& c, const FullSubcat& a,
                                                   const FullSubcat& b);

/// Desk-scale category of representations V1 -> V2 of the two-vertex quiver
/// over F_p.  Objects are the direct sums a S1 + b S2 + c P1 in normal form;
/// the structure map of the P1 block carries an explicit sign so that
/// negating the map stays inside the object set.  Hom-spaces are the
/// constrained pairs (alpha, beta) with f' alpha = beta f.
struct A2Object {
    int s1 = 0, s2 = 0, p1 = 0;
    int sign = 1; // sign of the P1 block; +1 when p1 == 0
    friend bool operator==(const A2Object&, const A2Object&) = default;
};

struct RepA2 {
    LinCatPtr cat;
    std::vector<A2Object> objs;
    std::vector<int> dim1, dim2;      // dim V1, dim V2 per object
    std::vector<FpMatrix> st_map;     // structure matrix V1 -> V2 per object
    std::vector<FpMatrix> pair_basis; // per object pair: raw (alpha,beta) basis, columns

    int index_of(const A2Object& o) const;
    const FpMatrix& basis(int x, int y) const {
        return pair_basis[size_t(x) * objs.size() + y];
    }
};

RepA2 rep_a2_cat(u32 p, int max_dim);

/// The bundled Z/2 instance: the sign involution on rep_a2_cat(p, 2), the
/// vertex-1 and vertex-2 slots, and the projection adjunction p -| i.
struct A2Bundle {
    RepA2 rep;
    GActionPtr action;
    FullSubcat a_part; // vertex-1 slot
    FullSubcat b_part; // vertex-2 slot
    AdjunctionData adj; // left = projection C -> A, right = inclusion
};

A2Bundle bundled_a2_sod(u32 p);

/// Same data with the roles of A and B swapped and the mirrored projection;
/// its only natural unit candidate is zero, so the instance fails the
/// triangle identities (used to pin down the ordering convention).
A2Bundle bundled_a2_sod_swapped(u32 p);

struct SODInstance {
    GActionPtr action;
    FullSubcat a_part;
    FullSubcat b_part;
    AdjunctionData adj; // left = p : C -> A.sub, right = inclusion i
};

/// All SODInstance invariants in order: subcategory closure, rho-stability
/// of both parts, hom-orthogonality, and the adjunction (functor validity,
/// unit/counit naturality, triangle identities).
std::optional<Violation> sod_instance_check(const SODInstance& s, const SearchLimits& limits = {});

/// The action restricted to a stable full subcategory, transported through
/// the witnessing isomorphisms, plus the inclusion with its weak structure
/// delta_g = witness.  Both are re-validated after construction.
struct RestrictedAction {
    GActionPtr action; // on the subcategory
    LaxGFunctor inclusion_lax;
};

RestrictedAction restrict_action(const GActionPtr& a, const FullSubcat& s,
                                 const SearchLimits& limits = {});

/// The descent package: C^G and A^G, the equivariant parts of A and B inside
/// C^G, the descended adjunction, and the recorded checks.
struct DescendedSOD {
    EquivCat cg;
    EquivCat ag;
    std::vector<int> a_classes; // cg skeleton objects with base in A
    std::vector<int> b_classes;
    DescendedAdjunction adj;    // p^G -| i^G between cg and ag
    bool stability_ok = false;
    std::optional<std::pair<int, int>> ortho_failure; // Hom(B^G, A^G) = 0
    bool perp_left_ok = false;  // B^G = {x : Hom(x, A^G) = 0}
    bool perp_right_ok = false; // A^G = {x : Hom(B^G, x) = 0}
    bool counit_iso = false;    // p^G i^G naturally isomorphic to id on A^G
    bool all_ok() const {
        return stability_ok && !ortho_failure && perp_left_ok && perp_right_ok && counit_iso;
    }
};

DescendedSOD descend_sod(const SODInstance& s, const SearchLimits& limits = {});

} // namespace equivar
