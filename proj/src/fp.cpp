#include "equivar/fp.hpp"

#include <string>

namespace equivar {

bool is_prime(u32 n) {
    if (n < 2) return false;
    for (u32 d = 2; u64(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

u32 pow_mod(u32 a, u64 e, u32 p) {
    u64 base = a % p, acc = 1;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<u32>(acc);
}

u32 inv_mod(u32 a, u32 p) {
    a %= p;
    if (a == 0) throw WorkbenchError("inv_mod: zero is not invertible mod " + std::to_string(p));
    return pow_mod(a, p - 2, p);
}

static void check_same_p(u32 a, u32 b, const char* who) {
    if (a != b)
        throw ModulusMismatch(std::string(who) + ": moduli differ (" + std::to_string(a) + " vs " +
                              std::to_string(b) + ")");
}

FpScalar operator+(FpScalar a, FpScalar b) {
    check_same_p(a.p, b.p, "FpScalar+");
    return {add_mod(a.value, b.value, a.p), a.p};
}
FpScalar operator-(FpScalar a, FpScalar b) {
    check_same_p(a.p, b.p, "FpScalar-");
    return {sub_mod(a.value, b.value, a.p), a.p};
}
FpScalar operator*(FpScalar a, FpScalar b) {
    check_same_p(a.p, b.p, "FpScalar*");
    return {mul_mod(a.value, b.value, a.p), a.p};
}
FpScalar inverse(FpScalar a) { return {inv_mod(a.value, a.p), a.p}; }

Vec vec_add(const Vec& a, const Vec& b, u32 p) {
    if (a.size() != b.size()) throw ShapeMismatch("vec_add: length mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = add_mod(a[i], b[i], p);
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b, u32 p) {
    if (a.size() != b.size()) throw ShapeMismatch("vec_sub: length mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = sub_mod(a[i], b[i], p);
    return r;
}

Vec vec_scale(u32 c, const Vec& a, u32 p) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = mul_mod(c, a[i], p);
    return r;
}

bool vec_is_zero(const Vec& a) {
    for (u32 x : a)
        if (x) return false;
    return true;
}

FpMatrix FpMatrix::identity(u32 p, int n) {
    FpMatrix m(p, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1 % p;
    return m;
}

FpMatrix FpMatrix::zero(u32 p, int rows, int cols) { return FpMatrix(p, rows, cols); }

FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b) {
    check_same_p(a.p, b.p, "mat_mul");
    if (a.cols != b.rows) throw ShapeMismatch("mat_mul: inner dimensions differ");
    FpMatrix r(a.p, a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            u64 aik = a.at(i, k);
            if (!aik) continue;
            for (int j = 0; j < b.cols; ++j)
                r.at(i, j) = static_cast<u32>((r.at(i, j) + aik * b.at(k, j)) % a.p);
        }
    return r;
}

FpMatrix mat_add(const FpMatrix& a, const FpMatrix& b) {
    check_same_p(a.p, b.p, "mat_add");
    if (a.rows != b.rows || a.cols != b.cols) throw ShapeMismatch("mat_add: shape mismatch");
    FpMatrix r = a;
    for (size_t i = 0; i < r.entries.size(); ++i) r.entries[i] = add_mod(a.entries[i], b.entries[i], a.p);
    return r;
}

FpMatrix mat_sub(const FpMatrix& a, const FpMatrix& b) {
    check_same_p(a.p, b.p, "mat_sub");
    if (a.rows != b.rows || a.cols != b.cols) throw ShapeMismatch("mat_sub: shape mismatch");
    FpMatrix r = a;
    for (size_t i = 0; i < r.entries.size(); ++i) r.entries[i] = sub_mod(a.entries[i], b.entries[i], a.p);
    return r;
}

FpMatrix mat_scale(u32 c, const FpMatrix& a) {
    FpMatrix r = a;
    for (u32& x : r.entries) x = mul_mod(c, x, a.p);
    return r;
}

Vec mat_apply(const FpMatrix& a, const Vec& v) {
    if (size_t(a.cols) != v.size()) throw ShapeMismatch("mat_apply: size mismatch");
    Vec r(a.rows, 0);
    for (int i = 0; i < a.rows; ++i) {
        u64 acc = 0;
        for (int j = 0; j < a.cols; ++j) acc += u64(a.at(i, j)) * v[j] % a.p;
        r[i] = static_cast<u32>(acc % a.p);
    }
    return r;
}

FpMatrix mat_transpose(const FpMatrix& a) {
    FpMatrix r(a.p, a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) r.at(j, i) = a.at(i, j);
    return r;
}

FpMatrix hstack(const FpMatrix& a, const FpMatrix& b) {
    check_same_p(a.p, b.p, "hstack");
    if (a.rows != b.rows) throw ShapeMismatch("hstack: row mismatch");
    FpMatrix r(a.p, a.rows, a.cols + b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols; ++j) r.at(i, a.cols + j) = b.at(i, j);
    }
    return r;
}

FpMatrix vstack(const FpMatrix& a, const FpMatrix& b) {
    check_same_p(a.p, b.p, "vstack");
    if (a.cols != b.cols) throw ShapeMismatch("vstack: column mismatch");
    FpMatrix r(a.p, a.rows + b.rows, a.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < a.cols; ++j) r.at(a.rows + i, j) = b.at(i, j);
    return r;
}

std::vector<int> rref(FpMatrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pr = -1;
        for (int i = row; i < m.rows; ++i)
            if (m.at(i, col)) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(row, j));
        u32 inv = inv_mod(m.at(row, col), m.p);
        for (int j = 0; j < m.cols; ++j) m.at(row, j) = mul_mod(inv, m.at(row, j), m.p);
        for (int i = 0; i < m.rows; ++i) {
            if (i == row) continue;
            u32 f = m.at(i, col);
            if (!f) continue;
            for (int j = 0; j < m.cols; ++j)
                m.at(i, j) = sub_mod(m.at(i, j), mul_mod(f, m.at(row, j), m.p), m.p);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(FpMatrix m) { return static_cast<int>(rref(m).size()); }

std::vector<Vec> kernel_basis(FpMatrix m) {
    int n = m.cols;
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vec v(n, 0);
        v[free] = 1 % m.p;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = sub_mod(0, m.at(int(r), free), m.p);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<FpMatrix> mat_inverse(const FpMatrix& m) {
    if (m.rows != m.cols) return std::nullopt;
    FpMatrix aug = hstack(m, FpMatrix::identity(m.p, m.rows));
    std::vector<int> pivots = rref(aug);
    if (int(pivots.size()) != m.rows) return std::nullopt;
    for (int i = 0; i < m.rows; ++i)
        if (pivots[i] != i) return std::nullopt;
    FpMatrix inv(m.p, m.rows, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.rows; ++j) inv.at(i, j) = aug.at(i, m.rows + j);
    return inv;
}

bool mat_is_invertible(const FpMatrix& m) { return m.rows == m.cols && rank(m) == m.rows; }

std::optional<LinearSolution> solve_mod_p(const FpMatrix& a, const Vec& b) {
    if (size_t(a.rows) != b.size()) throw ShapeMismatch("solve_mod_p: rhs length mismatch");
    FpMatrix aug(a.p, a.rows, a.cols + 1);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j) % a.p;
        aug.at(i, a.cols) = b[i] % a.p;
    }
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols) return std::nullopt; // 0 = 1 row
    Vec particular(a.cols, 0);
    for (size_t r = 0; r < pivots.size(); ++r) particular[pivots[r]] = aug.at(int(r), a.cols);
    FpMatrix coeff(a.p, a.rows, a.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) coeff.at(i, j) = a.at(i, j) % a.p;
    return LinearSolution{std::move(particular), kernel_basis(std::move(coeff))};
}

std::optional<LinearSolution> solve_mod_p(const FpMatrix& a, const std::vector<FpScalar>& b) {
    Vec raw(b.size());
    for (size_t i = 0; i < b.size(); ++i) {
        check_same_p(a.p, b[i].p, "solve_mod_p");
        raw[i] = b[i].value;
    }
    return solve_mod_p(a, raw);
}

std::optional<Vec> express_in_basis(const FpMatrix& basis, const Vec& b) {
    auto sol = solve_mod_p(basis, b);
    if (!sol) return std::nullopt;
    return sol->particular;
}

bool lex_next(Vec& v, u32 p) {
    for (size_t i = v.size(); i-- > 0;) {
        if (v[i] + 1 < p) {
            ++v[i];
            for (size_t j = i + 1; j < v.size(); ++j) v[j] = 0;
            return true;
        }
    }
    return false;
}

u64 search_space_size(u32 p, int dim, u64 cap) {
    u64 total = 1;
    for (int i = 0; i < dim; ++i) {
        if (total > cap / p + 1) throw SearchSpaceTooLarge("search space exceeds cap of " + std::to_string(cap));
        total *= p;
        if (total > cap) throw SearchSpaceTooLarge("search space exceeds cap of " + std::to_string(cap));
    }
    return total;
}

void for_each_invertible(const std::vector<FpMatrix>& basis, u64 cap,
                         const std::function<void(const Vec&)>& fn) {
    if (basis.empty()) return;
    u32 p = basis.front().p;
    int n = basis.front().rows;
    for (const FpMatrix& b : basis) {
        check_same_p(b.p, p, "for_each_invertible");
        if (b.rows != n || b.cols != n) throw ShapeMismatch("for_each_invertible: basis must be n-by-n");
    }
    search_space_size(p, int(basis.size()), cap);
    Vec coords(basis.size(), 0);
    do {
        FpMatrix m(p, n, n);
        for (size_t k = 0; k < basis.size(); ++k)
            if (coords[k]) m = mat_add(m, mat_scale(coords[k], basis[k]));
        if (mat_is_invertible(m)) fn(coords);
    } while (lex_next(coords, p));
}

std::vector<Vec> invertible_elements(const std::vector<FpMatrix>& basis, u64 cap) {
    std::vector<Vec> out;
    for_each_invertible(basis, cap, [&](const Vec& v) { out.push_back(v); });
    return out;
}

} // namespace equivar
