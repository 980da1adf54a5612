#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "equivar/fp.hpp"

namespace equivar {

/// Caps shared by every brute-force search.
struct SearchLimits {
    u64 max_enumeration = 1000000;
};

/// A finite k-linear category: finitely many objects, based hom-spaces over
/// F_p, composition given by structure tensors.  Hom-spaces are abstract
/// based vector spaces, so subspaces (equivariant homs) and transported homs
/// reuse the same machinery unchanged.
struct LinCat {
    u32 p = 2;
    std::vector<std::string> objects;
    std::vector<int> hom_dims;  // n*n, row-major over (x, y)
    std::vector<FpMatrix> comp; // n^3 tensors; see comp_tensor for the layout
    std::vector<Vec> ids;       // coordinates of id_x in Hom(x, x)

    int size() const { return static_cast<int>(objects.size()); }
    int hom_dim(int x, int y) const { return hom_dims[size_t(x) * objects.size() + y]; }

    /// Tensor of composition Hom(y,z) x Hom(x,y) -> Hom(x,z);
    /// rows = dim(x,z), column index = k * dim(x,y) + j for basis pair (k, j).
    const FpMatrix& comp_tensor(int x, int y, int z) const {
        size_t n = objects.size();
        return comp[(size_t(x) * n + y) * n + z];
    }

    /// Coordinates of (g : y -> z) composed with (f : x -> y).
    Vec compose(int x, int y, int z, const Vec& g, const Vec& f) const;

    const Vec& identity(int x) const { return ids[x]; }

    friend bool operator==(const LinCat&, const LinCat&) = default;
};

using LinCatPtr = std::shared_ptr<const LinCat>;

/// Builds the category with consistent (but unchecked) shape; run validate
/// for the category laws.
LinCat make_lincat(u32 p, std::vector<std::string> objects, std::vector<int> hom_dims,
                   std::vector<FpMatrix> comp, std::vector<Vec> ids);

/// Truncated category of F_p vector spaces: objects are the dimensions
/// 0..max_dim, Hom(m,n) is the space of n-by-m matrices with the elementary
/// matrices as basis (row-major), composition is matrix multiplication.
LinCatPtr vect_cat(u32 p, int max_dim);

/// Full subcategory on the given objects, hom data restricted verbatim.
LinCat full_subcategory(const LinCat& c, const std::vector<int>& members);

/// A k-linear functor as strict data: object map plus one matrix per
/// hom-space.
struct LinFunctor {
    LinCatPtr source;
    LinCatPtr target;
    std::vector<int> obj_map;
    std::vector<FpMatrix> hom_maps; // indexed x * n_src + y

    int operator()(int x) const { return obj_map[x]; }
    const FpMatrix& hom_map(int x, int y) const {
        return hom_maps[size_t(x) * obj_map.size() + y];
    }
    Vec apply(int x, int y, const Vec& f) const { return mat_apply(hom_map(x, y), f); }
};

bool same_category(const LinCatPtr& a, const LinCatPtr& b);
bool functor_equal(const LinFunctor& a, const LinFunctor& b);

LinFunctor identity_functor(LinCatPtr c);
/// compose_functors(F, G) applies G first: the result is F after G.
LinFunctor compose_functors(const LinFunctor& outer, const LinFunctor& inner);

/// Natural transformation between parallel functors, one component per
/// source object.
struct NatTransf {
    LinFunctor from;
    LinFunctor to;
    std::vector<Vec> components; // components[x] in Hom_target(from(x), to(x))
};

bool nat_equal(const NatTransf& a, const NatTransf& b);

NatTransf identity_nat(const LinFunctor& f);
/// vcompose(later, earlier) is the vertical composite (earlier first).
NatTransf vcompose(const NatTransf& later, const NatTransf& earlier);
/// whisker_left(F, mu) has components F(mu_x)   (written F mu).
NatTransf whisker_left(const LinFunctor& f, const NatTransf& mu);
/// whisker_right(mu, F) has components mu_{F(x)} (written mu F).
NatTransf whisker_right(const NatTransf& mu, const LinFunctor& f);

/// True iff every component has a two-sided inverse in its hom-algebra.
bool is_nat_iso(const NatTransf& mu);
/// The inverse transformation, when every component is invertible.
std::optional<NatTransf> nat_inverse(const NatTransf& mu);

struct Violation {
    std::string location;
};

std::optional<Violation> validate(const LinCat& c);
std::optional<Violation> validate(const LinFunctor& f);
std::optional<Violation> validate(const NatTransf& t);

/// Invertibility of a single morphism u : x -> y, solving the linear system
/// for a two-sided inverse; the inverse is written to *inverse_out if given.
bool morphism_invertible(const LinCat& c, int x, int y, const Vec& u, Vec* inverse_out = nullptr);

struct InvertibleHit {
    Vec coords;  // coefficients over the subspace basis
    Vec value;   // the morphism itself, in Hom(x, y) coordinates
    Vec inverse; // two-sided inverse, in Hom(y, x) coordinates
};

/// First invertible element (coefficients in lexicographic order) of the
/// subspace of Hom(x,y) spanned by the columns of basis.
std::optional<InvertibleHit> find_invertible_in_subspace(const LinCat& c, int x, int y,
                                                         const FpMatrix& basis,
                                                         const SearchLimits& limits);

/// Partition of objects into isomorphism classes, with witnessing mutually
/// inverse morphisms to the (lexicographically first) representative.
struct IsoClasses {
    std::vector<int> class_of;
    std::vector<int> reps;
    std::vector<Vec> to_rep;   // iso x -> rep(x); identity coords when x is the rep
    std::vector<Vec> from_rep; // its inverse
};

IsoClasses iso_classes(const LinCat& c, const SearchLimits& limits = {});

} // namespace equivar
