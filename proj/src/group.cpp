#include "equivar/group.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace equivar {

FinGroup group_from_table(int order, std::vector<int> table, std::string name) {
    if (order <= 0) throw NotAGroup("order must be positive");
    if (table.size() != size_t(order) * order) throw NotAGroup("table size must be order^2");
    for (int x : table)
        if (x < 0 || x >= order) throw NotAGroup("table entry out of range");

    auto mul = [&](int g, int h) { return table[size_t(g) * order + h]; };

    // locate the identity, then relabel it to index 0 if needed
    int e = -1;
    for (int cand = 0; cand < order; ++cand) {
        bool ok = true;
        for (int g = 0; g < order && ok; ++g)
            ok = mul(cand, g) == g && mul(g, cand) == g;
        if (ok) {
            e = cand;
            break;
        }
    }
    if (e < 0) throw NotAGroup("no identity element");
    if (e != 0) {
        std::vector<int> relab(order);
        std::iota(relab.begin(), relab.end(), 0);
        std::swap(relab[0], relab[e]);
        std::vector<int> t2(table.size());
        for (int g = 0; g < order; ++g)
            for (int h = 0; h < order; ++h)
                t2[size_t(relab[g]) * order + relab[h]] = relab[mul(g, h)];
        table = std::move(t2);
    }

    for (int g = 0; g < order; ++g)
        for (int h = 0; h < order; ++h)
            for (int k = 0; k < order; ++k)
                if (mul(mul(g, h), k) != mul(g, mul(h, k)))
                    throw NotAGroup("associativity fails at triple (" + std::to_string(g) + "," +
                                    std::to_string(h) + "," + std::to_string(k) + ")");

    std::vector<int> inverse(order, -1);
    for (int g = 0; g < order; ++g) {
        for (int h = 0; h < order; ++h)
            if (mul(g, h) == 0 && mul(h, g) == 0) {
                inverse[g] = h;
                break;
            }
        if (inverse[g] < 0) throw NotAGroup("element " + std::to_string(g) + " has no inverse");
    }

    FinGroup out;
    out.order = order;
    out.table = std::move(table);
    out.inverse = std::move(inverse);
    out.name = std::move(name);
    return out;
}

FinGroup cyclic_group(int n) {
    if (n <= 0) throw NotAGroup("cyclic group order must be positive");
    std::vector<int> table(size_t(n) * n);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) table[size_t(g) * n + h] = (g + h) % n;
    return group_from_table(n, std::move(table), "C" + std::to_string(n));
}

FinGroup product_group(const FinGroup& a, const FinGroup& b) {
    int n = a.order * b.order;
    // (x, y) encoded as x*b.order + y, so (0,0) stays at index 0
    std::vector<int> table(size_t(n) * n);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            int gx = g / b.order, gy = g % b.order;
            int hx = h / b.order, hy = h % b.order;
            table[size_t(g) * n + h] = a.mul(gx, hx) * b.order + b.mul(gy, hy);
        }
    return group_from_table(n, std::move(table), a.name + "x" + b.name);
}

FinGroup dihedral_group(int n) {
    if (n <= 0) throw NotAGroup("dihedral parameter must be positive");
    int order = 2 * n;
    // element i<n is rotation r^i, element n+i is reflection s r^i
    auto enc = [&](int flip, int rot) { return flip * n + ((rot % n) + n) % n; };
    std::vector<int> table(size_t(order) * order);
    for (int g = 0; g < order; ++g)
        for (int h = 0; h < order; ++h) {
            int gf = g / n, gr = g % n;
            int hf = h / n, hr = h % n;
            int rot = gf == 0 ? gr + hr : gr - hr;
            table[size_t(g) * order + h] = enc(gf ^ hf, rot);
        }
    return group_from_table(order, std::move(table), "D" + std::to_string(n));
}

FinGroup symmetric_group(int n) {
    if (n < 1 || n > 4) throw LimitExceeded("symmetric_group supports n <= 4");
    std::vector<std::array<int, 4>> perms;
    std::array<int, 4> base = {0, 1, 2, 3};
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    do {
        std::array<int, 4> p = base;
        for (int i = 0; i < n; ++i) p[i] = idx[i];
        perms.push_back(p);
    } while (std::next_permutation(idx.begin(), idx.end()));
    int order = static_cast<int>(perms.size());
    auto find = [&](const std::array<int, 4>& p) {
        for (int i = 0; i < order; ++i)
            if (perms[i] == p) return i;
        return -1;
    };
    std::vector<int> table(size_t(order) * order);
    for (int g = 0; g < order; ++g)
        for (int h = 0; h < order; ++h) {
            std::array<int, 4> comp = base;
            for (int i = 0; i < 4; ++i) comp[i] = perms[g][perms[h][i]];
            table[size_t(g) * order + h] = find(comp);
        }
    return group_from_table(order, std::move(table), "S" + std::to_string(n));
}

int element_order(const FinGroup& g, int element) {
    if (element < 0 || element >= g.order) throw PreconditionFailed("element index out of range");
    int k = 1, acc = element;
    while (acc != 0) {
        acc = g.mul(acc, element);
        ++k;
    }
    return k;
}

bool is_abelian(const FinGroup& g) {
    for (int a = 0; a < g.order; ++a)
        for (int b = a + 1; b < g.order; ++b)
            if (g.mul(a, b) != g.mul(b, a)) return false;
    return true;
}

std::vector<int> generated_subgroup(const FinGroup& g, const std::vector<int>& gens) {
    std::vector<bool> in(g.order, false);
    in[0] = true;
    std::vector<int> members = {0};
    for (int x : gens)
        if (!in[x]) {
            in[x] = true;
            members.push_back(x);
        }
    bool grew = true;
    while (grew) {
        grew = false;
        for (size_t i = 0; i < members.size(); ++i)
            for (size_t j = 0; j < members.size(); ++j) {
                int prod = g.mul(members[i], members[j]);
                if (!in[prod]) {
                    in[prod] = true;
                    members.push_back(prod);
                    grew = true;
                }
            }
    }
    std::sort(members.begin(), members.end());
    return members;
}

std::vector<int> generating_sequence(const FinGroup& g) {
    std::vector<int> gens;
    std::vector<int> closure = generated_subgroup(g, gens);
    while (int(closure.size()) < g.order) {
        int next = -1;
        for (int x = 0; x < g.order; ++x)
            if (!std::binary_search(closure.begin(), closure.end(), x)) {
                next = x;
                break;
            }
        gens.push_back(next);
        closure = generated_subgroup(g, gens);
    }
    return gens;
}

} // namespace equivar
