#pragma once

#include <string>
#include <vector>

#include "equivar/errors.hpp"

namespace equivar {

/// A finite group given by its full multiplication table.  Elements are the
/// dense indices 0..order-1 and index 0 is always the identity.
struct FinGroup {
    int order = 1;
    std::vector<int> table;   // order*order, table[g*order + h] = g*h
    std::vector<int> inverse; // inverse[g]
    std::string name = "trivial";

    int mul(int g, int h) const { return table[size_t(g) * order + h]; }
    int inv(int g) const { return inverse[g]; }

    // the name is presentation metadata; equality is structural
    friend bool operator==(const FinGroup& a, const FinGroup& b) {
        return a.order == b.order && a.table == b.table;
    }
};

/// Validates the table (associativity, identity laws, inverses) and fills in
/// the inverse array.  Throws NotAGroup naming the first failing law.
FinGroup group_from_table(int order, std::vector<int> table, std::string name = "table");

FinGroup cyclic_group(int n);
FinGroup product_group(const FinGroup& a, const FinGroup& b);
FinGroup dihedral_group(int n);  // order 2n
FinGroup symmetric_group(int n); // n <= 4

/// Smallest k >= 1 with g^k = identity.
int element_order(const FinGroup& g, int element);

bool is_abelian(const FinGroup& g);

/// Greedy minimal generating sequence: repeatedly adjoin the smallest element
/// outside the subgroup generated so far.  Empty for the trivial group.
std::vector<int> generating_sequence(const FinGroup& g);

/// Closure of a subset under multiplication (always contains the identity).
std::vector<int> generated_subgroup(const FinGroup& g, const std::vector<int>& gens);

} // namespace equivar
