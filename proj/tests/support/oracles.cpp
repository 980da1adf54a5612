#include "support/oracles.hpp"

#include <functional>

namespace equivar::oracles {

namespace {

// Free positions of a normalized cocycle grid: pairs (g,h) with g,h != 1.
// Checks every law triple all of whose grid entries are already assigned.
struct CocycleCounter {
    const FinGroup& g;
    u32 m;
    std::vector<int> value;   // -1 = unassigned, else residue
    std::vector<std::array<int, 3>> triples;
    u64 count = 0;

    CocycleCounter(const FinGroup& grp, u32 mod) : g(grp), m(mod) {
        int n = g.order;
        value.assign(size_t(n) * n, -1);
        for (int x = 0; x < n; ++x) {
            value[size_t(0) * n + x] = 0;
            value[size_t(x) * n + 0] = 0;
        }
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) triples.push_back({x, y, z});
    }

    bool triple_ready_and_bad(const std::array<int, 3>& t) const {
        int n = g.order;
        int a = value[size_t(t[0]) * n + t[1]];
        int b = value[size_t(g.mul(t[0], t[1])) * n + t[2]];
        int c = value[size_t(t[1]) * n + t[2]];
        int d = value[size_t(t[0]) * n + g.mul(t[1], t[2])];
        if (a < 0 || b < 0 || c < 0 || d < 0) return false;
        return (u32(a + b) % m) != (u32(c + d) % m);
    }

    void fill(size_t pos, const std::vector<int>& free_slots) {
        if (pos == free_slots.size()) {
            ++count;
            return;
        }
        int slot = free_slots[pos];
        for (u32 v = 0; v < m; ++v) {
            value[slot] = int(v);
            bool ok = true;
            for (const auto& t : triples) {
                // only triples that touch this slot can newly fail
                int n = g.order;
                bool touches = (size_t(t[0]) * n + t[1]) == size_t(slot) ||
                               (size_t(g.mul(t[0], t[1])) * n + t[2]) == size_t(slot) ||
                               (size_t(t[1]) * n + t[2]) == size_t(slot) ||
                               (size_t(t[0]) * n + g.mul(t[1], t[2])) == size_t(slot);
                if (touches && triple_ready_and_bad(t)) {
                    ok = false;
                    break;
                }
            }
            if (ok) fill(pos + 1, free_slots);
        }
        value[slot] = -1;
    }
};

} // namespace

u64 count_normalized_cocycles(const FinGroup& g, u32 m) {
    CocycleCounter counter(g, m);
    std::vector<int> free_slots;
    int n = g.order;
    for (int x = 1; x < n; ++x)
        for (int y = 1; y < n; ++y) free_slots.push_back(x * n + y);
    counter.fill(0, free_slots);
    return counter.count;
}

u64 count_normalized_coboundaries(const FinGroup& g, u32 m) {
    int n = g.order;
    std::vector<std::vector<u32>> seen;
    std::vector<u32> delta(n, 0); // delta[0] pinned to 0
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            std::vector<u32> grid(size_t(n) * n);
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    grid[size_t(x) * n + y] = (delta[x] + delta[y] + m - delta[g.mul(x, y)] % m) % m;
            for (const auto& s : seen)
                if (s == grid) return;
            seen.push_back(std::move(grid));
            return;
        }
        for (u32 v = 0; v < m; ++v) {
            delta[pos] = v;
            rec(pos + 1);
        }
        delta[pos] = 0;
    };
    rec(1);
    return seen.size();
}

u64 brute_h2_size(const FinGroup& g, u32 m) {
    return count_normalized_cocycles(g, m) / count_normalized_coboundaries(g, m);
}

std::vector<FpMatrix> all_invertible_matrices(u32 p, int n) {
    std::vector<FpMatrix> out;
    Vec entries(size_t(n) * n, 0);
    do {
        FpMatrix m(p, n, n);
        m.entries = entries;
        if (mat_is_invertible(m)) out.push_back(std::move(m));
    } while (lex_next(entries, p));
    return out;
}

std::vector<std::vector<int>> conjugacy_classes(const std::vector<FpMatrix>& mats,
                                                const std::vector<FpMatrix>& group_elements) {
    std::vector<int> cls(mats.size(), -1);
    std::vector<std::vector<int>> classes;
    auto find = [&](const FpMatrix& m) -> int {
        for (size_t i = 0; i < mats.size(); ++i)
            if (mats[i] == m) return int(i);
        return -1;
    };
    for (size_t i = 0; i < mats.size(); ++i) {
        if (cls[i] >= 0) continue;
        int id = static_cast<int>(classes.size());
        classes.emplace_back();
        for (const FpMatrix& u : group_elements) {
            FpMatrix conj = mat_mul(mat_mul(u, mats[i]), *mat_inverse(u));
            int j = find(conj);
            if (j >= 0 && cls[j] < 0) {
                cls[j] = id;
                classes[id].push_back(j);
            }
        }
    }
    return classes;
}

u64 twisted_v4_classes(u32 p, int dim, const TwoCocycle& phi) {
    const FinGroup& g = phi.group;
    u32 root = phi.coeff.field_link->root;
    auto scalar = [&](int x, int y) { return pow_mod(root, phi.at(x, y), p); };
    std::vector<FpMatrix> gl = all_invertible_matrices(p, dim);

    // elements of V4 in product encoding: 0 = e, 1 = b, 2 = a, 3 = ab
    std::vector<std::vector<FpMatrix>> found;
    for (const FpMatrix& ta : gl)
        for (const FpMatrix& tb : gl) {
            // theta_{gh} = scalar(g,h) theta_h theta_g with theta_e forced
            std::vector<FpMatrix> theta(4, FpMatrix::identity(p, dim));
            // theta_e: relation at (e,e) gives theta_e = scalar(e,e) theta_e theta_e
            theta[2] = ta;
            theta[1] = tb;
            theta[3] = mat_scale(scalar(2, 1), mat_mul(theta[1], theta[2]));
            theta[0] = FpMatrix::identity(p, dim);
            // require phi normalized so theta_e = id; then check all pairs
            bool ok = true;
            for (int x = 0; x < 4 && ok; ++x)
                for (int y = 0; y < 4; ++y) {
                    FpMatrix rhs = mat_scale(scalar(x, y), mat_mul(theta[y], theta[x]));
                    if (!(rhs == theta[g.mul(x, y)])) {
                        ok = false;
                        break;
                    }
                }
            if (ok) found.push_back(std::move(theta));
        }

    // classify up to simultaneous conjugation
    std::vector<bool> used(found.size(), false);
    u64 classes = 0;
    for (size_t i = 0; i < found.size(); ++i) {
        if (used[i]) continue;
        ++classes;
        for (const FpMatrix& u : gl) {
            FpMatrix uinv = *mat_inverse(u);
            std::vector<FpMatrix> conj(4, FpMatrix(p, dim, dim));
            for (int x = 0; x < 4; ++x) conj[x] = mat_mul(mat_mul(u, found[i][x]), uinv);
            for (size_t j = 0; j < found.size(); ++j)
                if (!used[j] && found[j] == conj) used[j] = true;
        }
    }
    return classes;
}

} // namespace equivar::oracles
