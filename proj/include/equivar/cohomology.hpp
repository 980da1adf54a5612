#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "equivar/fp.hpp"
#include "equivar/group.hpp"

namespace equivar {

/// Cyclic coefficient group A = Z/m with trivial G-action, optionally
/// identified with the unit group of a prime field via a discrete logarithm
/// (value k corresponds to root^k in F_p^*).
struct CyclicCoeff {
    u32 m = 1;
    struct FieldLink {
        u32 p;
        u32 root;
        friend bool operator==(const FieldLink&, const FieldLink&) = default;
    };
    std::optional<FieldLink> field_link;

    friend bool operator==(const CyclicCoeff&, const CyclicCoeff&) = default;
};

CyclicCoeff cyclic_coeff(u32 m);

/// Coefficients F_p^* in additive form (m = p-1).  When no root is supplied
/// the smallest primitive root mod p is used.
CyclicCoeff field_unit_coeff(u32 p, std::optional<u32> root = std::nullopt);

/// Function G x G -> Z/m, written additively.
struct TwoCocycle {
    FinGroup group;
    CyclicCoeff coeff;
    std::vector<u32> values; // |G|^2, row-major over (g,h)

    u32 at(int g, int h) const { return values[size_t(g) * group.order + h]; }
    u32& at(int g, int h) { return values[size_t(g) * group.order + h]; }

    friend bool operator==(const TwoCocycle&, const TwoCocycle&) = default;
};

/// Function G -> Z/m; its coboundary is always a cocycle.
struct OneCochain {
    FinGroup group;
    CyclicCoeff coeff;
    std::vector<u32> values; // |G|

    friend bool operator==(const OneCochain&, const OneCochain&) = default;
};

TwoCocycle zero_cocycle(const FinGroup& g, const CyclicCoeff& a);
TwoCocycle cocycle_from_values(const FinGroup& g, const CyclicCoeff& a, std::vector<u32> values);
OneCochain cochain_from_values(const FinGroup& g, const CyclicCoeff& a, std::vector<u32> values);

/// First failing triple (g,h,k) of the cocycle law
///   phi(g,h) + phi(gh,k) = phi(h,k) + phi(g,hk)
/// in lexicographic order, or nullopt when the law holds everywhere.
std::optional<std::array<int, 3>> cocycle_check(const TwoCocycle& phi);

/// (d delta)(g,h) = delta(g) + delta(h) - delta(gh).
TwoCocycle coboundary(const OneCochain& delta);

TwoCocycle cocycle_add(const TwoCocycle& a, const TwoCocycle& b);
TwoCocycle cocycle_sub(const TwoCocycle& a, const TwoCocycle& b);

/// phi(1,g) = phi(g,1) = 0 for all g.
bool is_normalized(const TwoCocycle& phi);

/// Subtracts the constant coboundary that cancels phi(1,1); for a valid
/// cocycle the result is normalized and cohomologous to the input.
TwoCocycle normalize_cocycle(const TwoCocycle& phi);

struct H2Result {
    /// Invariant factors > 1 of H^2(G, Z/m), in divisibility order.
    std::vector<u64> invariant_factors;
    /// One normalized cocycle per invariant factor, generating that factor.
    std::vector<TwoCocycle> representatives;

    u64 class_count() const {
        u64 c = 1;
        for (u64 f : invariant_factors) c *= f;
        return c;
    }
};

/// H^2(G, Z/m) with trivial action, computed over the integers: the cocycle
/// law gives a kernel lattice, coboundaries plus m-multiples give the
/// sublattice, and the quotient's Smith form yields the factors.
H2Result h2_group(const FinGroup& g, const CyclicCoeff& a);

/// All |H^2| class representatives, as the combinations of the generators
/// (coefficient vectors in lexicographic order, zero class first).
std::vector<TwoCocycle> all_class_representatives(const FinGroup& g, const CyclicCoeff& a,
                                                  const H2Result& h2);

/// A 1-cochain delta with coboundary(delta) + phi = phi', or nullopt when the
/// two cocycles are not cohomologous.
std::optional<OneCochain> cohomologous(const TwoCocycle& phi, const TwoCocycle& phi_prime);

} // namespace equivar
