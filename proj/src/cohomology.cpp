#include "equivar/cohomology.hpp"

#include <algorithm>
#include <set>

#include "equivar/intmat.hpp"

namespace equivar {

CyclicCoeff cyclic_coeff(u32 m) {
    if (m == 0) throw PreconditionFailed("coefficient order must be positive");
    return CyclicCoeff{m, std::nullopt};
}

static bool generates_units(u32 r, u32 p) {
    u32 seen = 1, acc = r % p;
    while (acc != 1) {
        acc = mul_mod(acc, r, p);
        ++seen;
    }
    return seen == p - 1;
}

CyclicCoeff field_unit_coeff(u32 p, std::optional<u32> root) {
    if (!is_prime(p)) throw PreconditionFailed("field_unit_coeff: p must be prime");
    u32 r;
    if (root) {
        r = *root % p;
        if (r == 0 || !generates_units(r, p))
            throw PreconditionFailed("field_unit_coeff: given root does not generate F_p^*");
    } else {
        r = 0;
        for (u32 cand = 2; cand < p; ++cand)
            if (generates_units(cand, p)) {
                r = cand;
                break;
            }
        if (p == 2) r = 1;
        if (r == 0) throw WorkbenchError("no primitive root found");
    }
    CyclicCoeff a{p - 1, CyclicCoeff::FieldLink{p, r}};
    return a;
}

TwoCocycle zero_cocycle(const FinGroup& g, const CyclicCoeff& a) {
    return TwoCocycle{g, a, std::vector<u32>(size_t(g.order) * g.order, 0)};
}

TwoCocycle cocycle_from_values(const FinGroup& g, const CyclicCoeff& a, std::vector<u32> values) {
    if (values.size() != size_t(g.order) * g.order)
        throw ShapeMismatch("cocycle values must form a |G| x |G| grid");
    for (u32& v : values) v %= a.m;
    return TwoCocycle{g, a, std::move(values)};
}

OneCochain cochain_from_values(const FinGroup& g, const CyclicCoeff& a, std::vector<u32> values) {
    if (values.size() != size_t(g.order)) throw ShapeMismatch("cochain values must have length |G|");
    for (u32& v : values) v %= a.m;
    return OneCochain{g, a, std::move(values)};
}

std::optional<std::array<int, 3>> cocycle_check(const TwoCocycle& phi) {
    const FinGroup& g = phi.group;
    u32 m = phi.coeff.m;
    if (phi.values.size() != size_t(g.order) * g.order)
        throw ShapeMismatch("cocycle_check: wrong grid shape");
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y)
            for (int z = 0; z < g.order; ++z) {
                u32 lhs = add_mod(phi.at(x, y), phi.at(g.mul(x, y), z), m);
                u32 rhs = add_mod(phi.at(y, z), phi.at(x, g.mul(y, z)), m);
                if (lhs != rhs) return std::array<int, 3>{x, y, z};
            }
    return std::nullopt;
}

TwoCocycle coboundary(const OneCochain& delta) {
    const FinGroup& g = delta.group;
    u32 m = delta.coeff.m;
    TwoCocycle out = zero_cocycle(g, delta.coeff);
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y)
            out.at(x, y) =
                sub_mod(add_mod(delta.values[x], delta.values[y], m), delta.values[g.mul(x, y)], m);
    return out;
}

static void check_compatible(const TwoCocycle& a, const TwoCocycle& b, const char* who) {
    if (!(a.group == b.group) || !(a.coeff == b.coeff))
        throw ShapeMismatch(std::string(who) + ": cocycles live over different (G, A)");
}

TwoCocycle cocycle_add(const TwoCocycle& a, const TwoCocycle& b) {
    check_compatible(a, b, "cocycle_add");
    TwoCocycle out = a;
    for (size_t i = 0; i < out.values.size(); ++i)
        out.values[i] = add_mod(a.values[i], b.values[i], a.coeff.m);
    return out;
}

TwoCocycle cocycle_sub(const TwoCocycle& a, const TwoCocycle& b) {
    check_compatible(a, b, "cocycle_sub");
    TwoCocycle out = a;
    for (size_t i = 0; i < out.values.size(); ++i)
        out.values[i] = sub_mod(a.values[i], b.values[i], a.coeff.m);
    return out;
}

bool is_normalized(const TwoCocycle& phi) {
    for (int g = 0; g < phi.group.order; ++g)
        if (phi.at(0, g) != 0 || phi.at(g, 0) != 0) return false;
    return true;
}

TwoCocycle normalize_cocycle(const TwoCocycle& phi) {
    u32 c = phi.at(0, 0);
    TwoCocycle out = phi;
    for (u32& v : out.values) v = sub_mod(v, c, phi.coeff.m);
    return out;
}

namespace {

mpz_class exact_div(const mpz_class& num, const mpz_class& den) {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw WorkbenchError("h2_group: sublattice not contained in kernel lattice (encoding bug)");
    return q;
}

// Integer matrix of the coboundary map C^1 -> C^2 (trivial coefficients).
IntMatrix coboundary_matrix(const FinGroup& g) {
    int n = g.order;
    IntMatrix d1(n * n, n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int row = x * n + y;
            d1.at(row, x) += 1;
            d1.at(row, y) += 1;
            d1.at(row, g.mul(x, y)) -= 1;
        }
    return d1;
}

// Integer matrix of the cocycle-law map C^2 -> C^3, with duplicate and zero
// rows removed (the kernel is unchanged and the Smith reduction gets cheaper).
IntMatrix cocycle_law_matrix(const FinGroup& g) {
    int n = g.order;
    std::set<std::vector<long>> rows;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                std::vector<long> row(size_t(n) * n, 0);
                row[size_t(y) * n + z] += 1;
                row[size_t(g.mul(x, y)) * n + z] -= 1;
                row[size_t(x) * n + g.mul(y, z)] += 1;
                row[size_t(x) * n + y] -= 1;
                if (std::all_of(row.begin(), row.end(), [](long v) { return v == 0; })) continue;
                rows.insert(std::move(row));
            }
    IntMatrix d2(static_cast<int>(rows.size()), n * n);
    int r = 0;
    for (const auto& row : rows) {
        for (int c = 0; c < n * n; ++c) d2.at(r, c) = row[c];
        ++r;
    }
    return d2;
}

} // namespace

H2Result h2_group(const FinGroup& g, const CyclicCoeff& a) {
    if (g.order > 24) throw LimitExceeded("h2_group supports |G| <= 24");
    int n = g.order;
    int n2 = n * n;
    mpz_class m = a.m;

    // Lattice L of integer grids whose cocycle defect vanishes mod m:
    // columns of V2 scaled by s_i = m / gcd(diag_i, m).
    IntMatrix d2 = cocycle_law_matrix(g);
    SnfCore c2 = snf_core(d2, SnfWant{.u = false, .uinv = false, .v = true, .vinv = true});
    std::vector<mpz_class> scale(n2, 1);
    for (size_t i = 0; i < c2.diag.size(); ++i) {
        mpz_class gcd;
        mpz_gcd(gcd.get_mpz_t(), c2.diag[i].get_mpz_t(), m.get_mpz_t());
        scale[i] = m / gcd;
    }

    // Sublattice M = im(coboundary) + m Z^{n2}, expressed in L-coordinates.
    IntMatrix gens(n2, n + n2);
    {
        IntMatrix d1 = coboundary_matrix(g);
        for (int i = 0; i < n2; ++i) {
            for (int j = 0; j < n; ++j) gens.at(i, j) = d1.at(i, j);
            gens.at(i, n + i) = m;
        }
    }
    IntMatrix b = int_mul(*c2.vinv, gens);
    for (int i = 0; i < n2; ++i)
        for (int j = 0; j < n + n2; ++j) b.at(i, j) = exact_div(b.at(i, j), scale[i]);

    SnfCore cb = snf_core(b, SnfWant{.u = false, .uinv = true, .v = false, .vinv = false});
    if (int(cb.diag.size()) != n2)
        throw WorkbenchError("h2_group: quotient unexpectedly infinite (encoding bug)");

    H2Result out;
    for (int i = 0; i < n2; ++i) {
        const mpz_class& f = cb.diag[i];
        if (f == 1) continue;
        out.invariant_factors.push_back(f.get_ui());
        // generator of this factor, back in cocycle coordinates
        std::vector<mpz_class> lcoords(n2);
        for (int r = 0; r < n2; ++r) lcoords[r] = cb.uinv->at(r, i) * scale[r];
        std::vector<mpz_class> grid = int_apply(*c2.v, lcoords);
        std::vector<u32> values(n2);
        for (int r = 0; r < n2; ++r) {
            mpz_class red = grid[r] % m;
            if (red < 0) red += m;
            values[r] = static_cast<u32>(red.get_ui());
        }
        TwoCocycle rep = normalize_cocycle(cocycle_from_values(g, a, std::move(values)));
        if (cocycle_check(rep))
            throw WorkbenchError("h2_group: representative fails the cocycle law (encoding bug)");
        out.representatives.push_back(std::move(rep));
    }
    return out;
}

std::vector<TwoCocycle> all_class_representatives(const FinGroup& g, const CyclicCoeff& a,
                                                  const H2Result& h2) {
    std::vector<TwoCocycle> out;
    Vec coeffs(h2.invariant_factors.size(), 0);
    while (true) {
        TwoCocycle rep = zero_cocycle(g, a);
        for (size_t i = 0; i < coeffs.size(); ++i)
            for (u32 k = 0; k < coeffs[i]; ++k) rep = cocycle_add(rep, h2.representatives[i]);
        out.push_back(std::move(rep));
        // odometer over the factor orders
        size_t i = coeffs.size();
        while (i-- > 0) {
            if (u64(coeffs[i]) + 1 < h2.invariant_factors[i]) {
                ++coeffs[i];
                for (size_t j = i + 1; j < coeffs.size(); ++j) coeffs[j] = 0;
                break;
            }
            if (i == 0) return out;
        }
        if (coeffs.empty()) return out;
    }
}

std::optional<OneCochain> cohomologous(const TwoCocycle& phi, const TwoCocycle& phi_prime) {
    check_compatible(phi, phi_prime, "cohomologous");
    const FinGroup& g = phi.group;
    int n = g.order;
    int n2 = n * n;
    // d1 * delta + m * k = phi' - phi, solved over the integers
    IntMatrix stacked(n2, n + n2);
    IntMatrix d1 = coboundary_matrix(g);
    for (int i = 0; i < n2; ++i) {
        for (int j = 0; j < n; ++j) stacked.at(i, j) = d1.at(i, j);
        stacked.at(i, n + i) = phi.coeff.m;
    }
    TwoCocycle diff = cocycle_sub(phi_prime, phi);
    std::vector<mpz_class> rhs(n2);
    for (int i = 0; i < n2; ++i) rhs[i] = diff.values[i];
    auto sol = solve_integer(stacked, rhs);
    if (!sol) return std::nullopt;
    std::vector<u32> delta(n);
    for (int i = 0; i < n; ++i) {
        mpz_class red = (*sol)[i] % phi.coeff.m;
        if (red < 0) red += phi.coeff.m;
        delta[i] = static_cast<u32>(red.get_ui());
    }
    OneCochain out = cochain_from_values(g, phi.coeff, std::move(delta));
    if (!(cocycle_add(coboundary(out), phi) == phi_prime))
        throw WorkbenchError("cohomologous: solver returned a non-solution (encoding bug)");
    return out;
}

} // namespace equivar
