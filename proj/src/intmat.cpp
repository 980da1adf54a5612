#include "equivar/intmat.hpp"

#include <algorithm>
#include <cstdlib>

namespace equivar {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw ShapeMismatch("int_mul: inner dimensions differ");
    IntMatrix r(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const mpz_class& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

std::vector<mpz_class> int_apply(const IntMatrix& a, const std::vector<mpz_class>& v) {
    if (size_t(a.cols) != v.size()) throw ShapeMismatch("int_apply: size mismatch");
    std::vector<mpz_class> r(a.rows, 0);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) r[i] += a.at(i, j) * v[j];
    return r;
}

mpz_class int_determinant(IntMatrix m) {
    if (m.rows != m.cols) throw ShapeMismatch("int_determinant: matrix not square");
    int n = m.rows;
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                mpz_class num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                m.at(i, j) = q;
            }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

namespace {

struct Accum {
    IntMatrix* u = nullptr;
    IntMatrix* uinv = nullptr;
    IntMatrix* v = nullptr;
    IntMatrix* vinv = nullptr;

    void swap_rows(IntMatrix& d, int i, int j) {
        if (i == j) return;
        for (int c = 0; c < d.cols; ++c) std::swap(d.at(i, c), d.at(j, c));
        if (u)
            for (int c = 0; c < u->cols; ++c) std::swap(u->at(i, c), u->at(j, c));
        if (uinv)
            for (int r = 0; r < uinv->rows; ++r) std::swap(uinv->at(r, i), uinv->at(r, j));
    }
    void swap_cols(IntMatrix& d, int i, int j) {
        if (i == j) return;
        for (int r = 0; r < d.rows; ++r) std::swap(d.at(r, i), d.at(r, j));
        if (v)
            for (int r = 0; r < v->rows; ++r) std::swap(v->at(r, i), v->at(r, j));
        if (vinv)
            for (int c = 0; c < vinv->cols; ++c) std::swap(vinv->at(i, c), vinv->at(j, c));
    }
    // row[dst] += f * row[src]
    void add_row(IntMatrix& d, int dst, int src, const mpz_class& f) {
        if (f == 0) return;
        for (int c = 0; c < d.cols; ++c) d.at(dst, c) += f * d.at(src, c);
        if (u)
            for (int c = 0; c < u->cols; ++c) u->at(dst, c) += f * u->at(src, c);
        if (uinv)
            for (int r = 0; r < uinv->rows; ++r) uinv->at(r, src) -= f * uinv->at(r, dst);
    }
    // col[dst] += f * col[src]
    void add_col(IntMatrix& d, int dst, int src, const mpz_class& f) {
        if (f == 0) return;
        for (int r = 0; r < d.rows; ++r) d.at(r, dst) += f * d.at(r, src);
        if (v)
            for (int r = 0; r < v->rows; ++r) v->at(r, dst) += f * v->at(r, src);
        if (vinv)
            for (int c = 0; c < vinv->cols; ++c) vinv->at(src, c) -= f * vinv->at(dst, c);
    }
    void negate_row(IntMatrix& d, int i) {
        for (int c = 0; c < d.cols; ++c) d.at(i, c) = -d.at(i, c);
        if (u)
            for (int c = 0; c < u->cols; ++c) u->at(i, c) = -u->at(i, c);
        if (uinv)
            for (int r = 0; r < uinv->rows; ++r) uinv->at(r, i) = -uinv->at(r, i);
    }
};

bool find_min_pivot(const IntMatrix& d, int s, int& pr, int& pc) {
    bool found = false;
    mpz_class best;
    for (int i = s; i < d.rows; ++i)
        for (int j = s; j < d.cols; ++j) {
            const mpz_class& x = d.at(i, j);
            if (x == 0) continue;
            mpz_class a = abs(x);
            if (!found || a < best) {
                found = true;
                best = a;
                pr = i;
                pc = j;
            }
        }
    return found;
}

bool is_lone(const IntMatrix& d, int s) {
    for (int i = s + 1; i < d.rows; ++i)
        if (d.at(i, s) != 0) return false;
    for (int j = s + 1; j < d.cols; ++j)
        if (d.at(s, j) != 0) return false;
    return true;
}

} // namespace

SnfCore snf_core(IntMatrix m, SnfWant want) {
    SnfCore out;
    if (want.u) out.u = IntMatrix::identity(m.rows);
    if (want.uinv) out.uinv = IntMatrix::identity(m.rows);
    if (want.v) out.v = IntMatrix::identity(m.cols);
    if (want.vinv) out.vinv = IntMatrix::identity(m.cols);
    Accum acc;
    if (out.u) acc.u = &*out.u;
    if (out.uinv) acc.uinv = &*out.uinv;
    if (out.v) acc.v = &*out.v;
    if (out.vinv) acc.vinv = &*out.vinv;

    IntMatrix& d = m;
    int nmin = std::min(d.rows, d.cols);
    for (int s = 0; s < nmin; ++s) {
        int pr = 0, pc = 0;
        if (!find_min_pivot(d, s, pr, pc)) break;
        acc.swap_rows(d, s, pr);
        acc.swap_cols(d, s, pc);
        while (true) {
            // clear column s below and row s to the right
            for (int i = s + 1; i < d.rows; ++i) {
                if (d.at(i, s) == 0) continue;
                mpz_class q = d.at(i, s) / d.at(s, s);
                acc.add_row(d, i, s, -q);
            }
            for (int j = s + 1; j < d.cols; ++j) {
                if (d.at(s, j) == 0) continue;
                mpz_class q = d.at(s, j) / d.at(s, s);
                acc.add_col(d, j, s, -q);
            }
            if (!is_lone(d, s)) {
                if (!find_min_pivot(d, s, pr, pc)) break;
                acc.swap_rows(d, s, pr);
                acc.swap_cols(d, s, pc);
                continue;
            }
            // enforce the divisibility chain before moving on
            bool divides_all = true;
            for (int i = s + 1; i < d.rows && divides_all; ++i)
                for (int j = s + 1; j < d.cols; ++j)
                    if (d.at(i, j) % d.at(s, s) != 0) {
                        acc.add_row(d, s, i, 1);
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
        if (d.at(s, s) < 0) acc.negate_row(d, s);
        if (d.at(s, s) != 0) out.diag.push_back(d.at(s, s));
    }
    out.d = std::move(m);
    return out;
}

SmithResult smith_normal_form(const IntMatrix& m) {
    SnfCore core = snf_core(m, SnfWant{.u = true, .uinv = false, .v = true, .vinv = false});
    return SmithResult{std::move(*core.u), std::move(core.d), std::move(*core.v)};
}

std::optional<std::vector<mpz_class>> solve_integer(const IntMatrix& a,
                                                    const std::vector<mpz_class>& b) {
    if (size_t(a.rows) != b.size()) throw ShapeMismatch("solve_integer: rhs length mismatch");
    SnfCore core = snf_core(a, SnfWant{.u = true, .uinv = false, .v = true, .vinv = false});
    std::vector<mpz_class> c = int_apply(*core.u, b);
    std::vector<mpz_class> y(a.cols, 0);
    int r = static_cast<int>(core.diag.size());
    for (int i = 0; i < a.rows; ++i) {
        if (i < r) {
            if (c[i] % core.diag[i] != 0) return std::nullopt;
            if (i < a.cols) y[i] = c[i] / core.diag[i];
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return int_apply(*core.v, y);
}

} // namespace equivar
