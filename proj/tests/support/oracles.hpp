#pragma once

// Test-side oracles, kept independent of the library's computation paths:
// everything here is direct enumeration.

#include <cstdint>
#include <vector>

#include "equivar/cohomology.hpp"
#include "equivar/fp.hpp"
#include "equivar/group.hpp"

namespace equivar::oracles {

/// Number of normalized 2-cocycles G x G -> Z/m, counted by backtracking
/// over the free entries with incremental checking of the cocycle law.
u64 count_normalized_cocycles(const FinGroup& g, u32 m);

/// Number of normalized coboundaries (coboundaries of cochains with
/// delta(1) = 0), by direct enumeration of the cochains.
u64 count_normalized_coboundaries(const FinGroup& g, u32 m);

/// |H^2(G, Z/m)| via the two counts above.
u64 brute_h2_size(const FinGroup& g, u32 m);

/// All invertible n-by-n matrices over F_p, in lexicographic entry order.
std::vector<FpMatrix> all_invertible_matrices(u32 p, int n);

/// Partition of the given matrices into GL_n(F_p)-conjugacy classes; returns
/// the class sizes keyed by the first representative's index.
std::vector<std::vector<int>> conjugacy_classes(const std::vector<FpMatrix>& mats,
                                                const std::vector<FpMatrix>& group_elements);

/// Solutions theta: V4 -> GL_dim(F_p) of theta_{gh} = r^{phi(g,h)} theta_h theta_g,
/// counted up to simultaneous conjugation.  Exhaustive over the generator
/// images.
u64 twisted_v4_classes(u32 p, int dim, const TwoCocycle& phi);

} // namespace equivar::oracles
