#include "equivar/lincat.hpp"

#include <algorithm>

namespace equivar {

Vec LinCat::compose(int x, int y, int z, const Vec& g, const Vec& f) const {
    const FpMatrix& t = comp_tensor(x, y, z);
    int df = hom_dim(x, y);
    if (int(g.size()) != hom_dim(y, z) || int(f.size()) != df)
        throw ShapeMismatch("compose: coordinate lengths do not match hom dimensions");
    Vec out(hom_dim(x, z), 0);
    for (int k = 0; k < int(g.size()); ++k) {
        if (!g[k]) continue;
        for (int j = 0; j < df; ++j) {
            if (!f[j]) continue;
            u32 c = mul_mod(g[k], f[j], p);
            for (int i = 0; i < int(out.size()); ++i)
                out[i] = add_mod(out[i], mul_mod(c, t.at(i, k * df + j), p), p);
        }
    }
    return out;
}

LinCat make_lincat(u32 p, std::vector<std::string> objects, std::vector<int> hom_dims,
                   std::vector<FpMatrix> comp, std::vector<Vec> ids) {
    size_t n = objects.size();
    if (hom_dims.size() != n * n) throw ShapeMismatch("make_lincat: hom_dims must be n^2");
    if (comp.size() != n * n * n) throw ShapeMismatch("make_lincat: comp must hold n^3 tensors");
    if (ids.size() != n) throw ShapeMismatch("make_lincat: one identity per object");
    LinCat c;
    c.p = p;
    c.objects = std::move(objects);
    c.hom_dims = std::move(hom_dims);
    c.comp = std::move(comp);
    c.ids = std::move(ids);
    for (int x = 0; x < c.size(); ++x) {
        if (int(c.ids[x].size()) != c.hom_dim(x, x))
            throw ShapeMismatch("make_lincat: identity coordinates have wrong length");
        for (int y = 0; y < c.size(); ++y)
            for (int z = 0; z < c.size(); ++z) {
                const FpMatrix& t = c.comp_tensor(x, y, z);
                if (t.rows != c.hom_dim(x, z) || t.cols != c.hom_dim(y, z) * c.hom_dim(x, y))
                    throw ShapeMismatch("make_lincat: composition tensor shape mismatch");
                if (t.p != p) throw ModulusMismatch("make_lincat: tensor modulus mismatch");
            }
    }
    return c;
}

LinCatPtr vect_cat(u32 p, int max_dim) {
    if (!is_prime(p)) throw PreconditionFailed("vect_cat: p must be prime");
    if (max_dim < 0 || max_dim > 3) throw LimitExceeded("vect_cat supports max_dim <= 3");
    int n = max_dim + 1;
    std::vector<std::string> objects(n);
    std::vector<int> dims(size_t(n) * n);
    for (int x = 0; x < n; ++x) {
        objects[x] = "V" + std::to_string(x);
        for (int y = 0; y < n; ++y) dims[size_t(x) * n + y] = x * y;
    }
    std::vector<FpMatrix> comp;
    comp.reserve(size_t(n) * n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                FpMatrix t(p, x * z, y * z * x * y);
                // E_ab (z-by-y) * E_cd (y-by-x) = [b == c] E_ad (z-by-x)
                for (int a = 0; a < z; ++a)
                    for (int b = 0; b < y; ++b)
                        for (int d = 0; d < x; ++d)
                            t.at(a * x + d, (a * y + b) * (x * y) + (b * x + d)) = 1 % p;
                comp.push_back(std::move(t));
            }
    std::vector<Vec> ids;
    for (int x = 0; x < n; ++x) {
        Vec id(size_t(x) * x, 0);
        for (int i = 0; i < x; ++i) id[size_t(i) * x + i] = 1 % p;
        ids.push_back(std::move(id));
    }
    return std::make_shared<const LinCat>(
        make_lincat(p, std::move(objects), std::move(dims), std::move(comp), std::move(ids)));
}

LinCat full_subcategory(const LinCat& c, const std::vector<int>& members) {
    int n = static_cast<int>(members.size());
    std::vector<std::string> objects(n);
    std::vector<int> dims(size_t(n) * n);
    std::vector<FpMatrix> comp(size_t(n) * n * n);
    std::vector<Vec> ids(n);
    for (int i = 0; i < n; ++i) {
        objects[i] = c.objects[members[i]];
        ids[i] = c.identity(members[i]);
        for (int j = 0; j < n; ++j) dims[size_t(i) * n + j] = c.hom_dim(members[i], members[j]);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                comp[(size_t(i) * n + j) * n + k] = c.comp_tensor(members[i], members[j], members[k]);
    return make_lincat(c.p, std::move(objects), std::move(dims), std::move(comp), std::move(ids));
}

bool same_category(const LinCatPtr& a, const LinCatPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

bool functor_equal(const LinFunctor& a, const LinFunctor& b) {
    return same_category(a.source, b.source) && same_category(a.target, b.target) &&
           a.obj_map == b.obj_map && a.hom_maps == b.hom_maps;
}

LinFunctor identity_functor(LinCatPtr c) {
    LinFunctor f;
    f.source = c;
    f.target = c;
    int n = c->size();
    f.obj_map.resize(n);
    f.hom_maps.reserve(size_t(n) * n);
    for (int x = 0; x < n; ++x) f.obj_map[x] = x;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            f.hom_maps.push_back(FpMatrix::identity(c->p, c->hom_dim(x, y)));
    return f;
}

LinFunctor compose_functors(const LinFunctor& outer, const LinFunctor& inner) {
    if (!same_category(inner.target, outer.source))
        throw ShapeMismatch("compose_functors: middle categories differ");
    LinFunctor f;
    f.source = inner.source;
    f.target = outer.target;
    int n = inner.source->size();
    f.obj_map.resize(n);
    for (int x = 0; x < n; ++x) f.obj_map[x] = outer.obj_map[inner.obj_map[x]];
    f.hom_maps.reserve(size_t(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            f.hom_maps.push_back(
                mat_mul(outer.hom_map(inner(x), inner(y)), inner.hom_map(x, y)));
    return f;
}

bool nat_equal(const NatTransf& a, const NatTransf& b) {
    return functor_equal(a.from, b.from) && functor_equal(a.to, b.to) &&
           a.components == b.components;
}

NatTransf identity_nat(const LinFunctor& f) {
    NatTransf t;
    t.from = f;
    t.to = f;
    int n = f.source->size();
    t.components.reserve(n);
    for (int x = 0; x < n; ++x) t.components.push_back(f.target->identity(f(x)));
    return t;
}

NatTransf vcompose(const NatTransf& later, const NatTransf& earlier) {
    if (!functor_equal(later.from, earlier.to))
        throw ShapeMismatch("vcompose: middle functors differ");
    NatTransf t;
    t.from = earlier.from;
    t.to = later.to;
    const LinCat& d = *later.to.target;
    int n = t.from.source->size();
    t.components.reserve(n);
    for (int x = 0; x < n; ++x)
        t.components.push_back(d.compose(earlier.from(x), earlier.to(x), later.to(x),
                                         later.components[x], earlier.components[x]));
    return t;
}

NatTransf whisker_left(const LinFunctor& f, const NatTransf& mu) {
    if (!same_category(mu.from.target, f.source))
        throw ShapeMismatch("whisker_left: functor does not start where mu lands");
    NatTransf t;
    t.from = compose_functors(f, mu.from);
    t.to = compose_functors(f, mu.to);
    int n = mu.from.source->size();
    t.components.reserve(n);
    for (int x = 0; x < n; ++x)
        t.components.push_back(f.apply(mu.from(x), mu.to(x), mu.components[x]));
    return t;
}

NatTransf whisker_right(const NatTransf& mu, const LinFunctor& f) {
    if (!same_category(f.target, mu.from.source))
        throw ShapeMismatch("whisker_right: functor does not land where mu starts");
    NatTransf t;
    t.from = compose_functors(mu.from, f);
    t.to = compose_functors(mu.to, f);
    int n = f.source->size();
    t.components.reserve(n);
    for (int x = 0; x < n; ++x) t.components.push_back(mu.components[f(x)]);
    return t;
}

bool morphism_invertible(const LinCat& c, int x, int y, const Vec& u, Vec* inverse_out) {
    int dxy = c.hom_dim(x, y), dyx = c.hom_dim(y, x);
    int dxx = c.hom_dim(x, x), dyy = c.hom_dim(y, y);
    if (int(u.size()) != dxy) throw ShapeMismatch("morphism_invertible: wrong coordinate length");
    // v * u = id_x and u * v = id_y, linear in v
    FpMatrix sys(c.p, dxx + dyy, dyx);
    for (int j = 0; j < dyx; ++j) {
        Vec e(dyx, 0);
        e[j] = 1;
        Vec c1 = c.compose(x, y, x, e, u);
        Vec c2 = c.compose(y, x, y, u, e);
        for (int i = 0; i < dxx; ++i) sys.at(i, j) = c1[i];
        for (int i = 0; i < dyy; ++i) sys.at(dxx + i, j) = c2[i];
    }
    Vec rhs(dxx + dyy, 0);
    for (int i = 0; i < dxx; ++i) rhs[i] = c.identity(x)[i];
    for (int i = 0; i < dyy; ++i) rhs[dxx + i] = c.identity(y)[i];
    auto sol = solve_mod_p(sys, rhs);
    if (!sol) return false;
    if (inverse_out) *inverse_out = sol->particular;
    return true;
}

bool is_nat_iso(const NatTransf& mu) {
    const LinCat& d = *mu.from.target;
    int n = mu.from.source->size();
    for (int x = 0; x < n; ++x)
        if (!morphism_invertible(d, mu.from(x), mu.to(x), mu.components[x])) return false;
    return true;
}

std::optional<NatTransf> nat_inverse(const NatTransf& mu) {
    const LinCat& d = *mu.from.target;
    NatTransf inv;
    inv.from = mu.to;
    inv.to = mu.from;
    int n = mu.from.source->size();
    inv.components.resize(n);
    for (int x = 0; x < n; ++x)
        if (!morphism_invertible(d, mu.from(x), mu.to(x), mu.components[x], &inv.components[x]))
            return std::nullopt;
    return inv;
}

std::optional<Violation> validate(const LinCat& c) {
    int n = c.size();
    if (c.hom_dims.size() != size_t(n) * n || c.comp.size() != size_t(n) * n * n ||
        c.ids.size() != size_t(n))
        return Violation{"category shape arrays inconsistent"};
    for (int x = 0; x < n; ++x)
        if (int(c.ids[x].size()) != c.hom_dim(x, x))
            return Violation{"identity coordinates at object " + c.objects[x]};
    // identity laws
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int d = c.hom_dim(x, y);
            for (int j = 0; j < d; ++j) {
                Vec e(d, 0);
                e[j] = 1;
                if (c.compose(x, y, y, c.identity(y), e) != e)
                    return Violation{"left identity law at Hom(" + c.objects[x] + "," +
                                     c.objects[y] + ") basis " + std::to_string(j)};
                if (c.compose(x, x, y, e, c.identity(x)) != e)
                    return Violation{"right identity law at Hom(" + c.objects[x] + "," +
                                     c.objects[y] + ") basis " + std::to_string(j)};
            }
        }
    // associativity on all basis triples
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int w = 0; w < n; ++w) {
                    int df = c.hom_dim(x, y), dg = c.hom_dim(y, z), dh = c.hom_dim(z, w);
                    for (int jf = 0; jf < df; ++jf)
                        for (int jg = 0; jg < dg; ++jg)
                            for (int jh = 0; jh < dh; ++jh) {
                                Vec f(df, 0), g(dg, 0), h(dh, 0);
                                f[jf] = 1;
                                g[jg] = 1;
                                h[jh] = 1;
                                Vec lhs = c.compose(x, z, w, h, c.compose(x, y, z, g, f));
                                Vec rhs = c.compose(x, y, w, c.compose(y, z, w, h, g), f);
                                if (lhs != rhs)
                                    return Violation{"associativity at objects (" + c.objects[x] +
                                                     "," + c.objects[y] + "," + c.objects[z] + "," +
                                                     c.objects[w] + ") basis (" +
                                                     std::to_string(jf) + "," + std::to_string(jg) +
                                                     "," + std::to_string(jh) + ")"};
                            }
                }
    return std::nullopt;
}

std::optional<Violation> validate(const LinFunctor& f) {
    const LinCat& src = *f.source;
    const LinCat& tgt = *f.target;
    int n = src.size();
    if (int(f.obj_map.size()) != n || f.hom_maps.size() != size_t(n) * n)
        return Violation{"functor shape arrays inconsistent"};
    for (int x = 0; x < n; ++x)
        if (f(x) < 0 || f(x) >= tgt.size()) return Violation{"object map out of range"};
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const FpMatrix& m = f.hom_map(x, y);
            if (m.rows != tgt.hom_dim(f(x), f(y)) || m.cols != src.hom_dim(x, y))
                return Violation{"hom matrix shape at (" + src.objects[x] + "," + src.objects[y] +
                                 ")"};
        }
    for (int x = 0; x < n; ++x)
        if (f.apply(x, x, src.identity(x)) != tgt.identity(f(x)))
            return Violation{"functor does not preserve id at " + src.objects[x]};
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int df = src.hom_dim(x, y), dg = src.hom_dim(y, z);
                for (int jf = 0; jf < df; ++jf)
                    for (int jg = 0; jg < dg; ++jg) {
                        Vec f1(df, 0), g1(dg, 0);
                        f1[jf] = 1;
                        g1[jg] = 1;
                        Vec lhs = f.apply(x, z, src.compose(x, y, z, g1, f1));
                        Vec rhs = tgt.compose(f(x), f(y), f(z), f.apply(y, z, g1), f.apply(x, y, f1));
                        if (lhs != rhs)
                            return Violation{"functor breaks composition at (" + src.objects[x] +
                                             "," + src.objects[y] + "," + src.objects[z] +
                                             ") basis (" + std::to_string(jf) + "," +
                                             std::to_string(jg) + ")"};
                    }
            }
    return std::nullopt;
}

std::optional<Violation> validate(const NatTransf& t) {
    if (!same_category(t.from.source, t.to.source) || !same_category(t.from.target, t.to.target))
        return Violation{"transformation endpoints are not parallel functors"};
    const LinCat& src = *t.from.source;
    const LinCat& tgt = *t.from.target;
    int n = src.size();
    if (int(t.components.size()) != n) return Violation{"one component per object required"};
    for (int x = 0; x < n; ++x)
        if (int(t.components[x].size()) != tgt.hom_dim(t.from(x), t.to(x)))
            return Violation{"component length at " + src.objects[x]};
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int d = src.hom_dim(x, y);
            for (int j = 0; j < d; ++j) {
                Vec f(d, 0);
                f[j] = 1;
                Vec lhs = tgt.compose(t.from(x), t.to(x), t.to(y),
                                      t.to.apply(x, y, f), t.components[x]);
                Vec rhs = tgt.compose(t.from(x), t.from(y), t.to(y),
                                      t.components[y], t.from.apply(x, y, f));
                if (lhs != rhs)
                    return Violation{"naturality square at (" + src.objects[x] + "," +
                                     src.objects[y] + ") basis " + std::to_string(j)};
            }
        }
    return std::nullopt;
}

std::optional<InvertibleHit> find_invertible_in_subspace(const LinCat& c, int x, int y,
                                                         const FpMatrix& basis,
                                                         const SearchLimits& limits) {
    if (basis.rows != c.hom_dim(x, y))
        throw ShapeMismatch("find_invertible_in_subspace: basis rows mismatch");
    search_space_size(c.p, basis.cols, limits.max_enumeration);
    Vec coords(basis.cols, 0);
    do {
        Vec u = mat_apply(basis, coords);
        Vec v;
        if (morphism_invertible(c, x, y, u, &v)) return InvertibleHit{coords, std::move(u), std::move(v)};
    } while (lex_next(coords, c.p));
    return std::nullopt;
}

IsoClasses iso_classes(const LinCat& c, const SearchLimits& limits) {
    int n = c.size();
    IsoClasses out;
    out.class_of.assign(n, -1);
    out.to_rep.resize(n);
    out.from_rep.resize(n);
    auto profile_match = [&](int a, int b) {
        for (int z = 0; z < n; ++z)
            if (c.hom_dim(a, z) != c.hom_dim(b, z) || c.hom_dim(z, a) != c.hom_dim(z, b))
                return false;
        return true;
    };
    for (int x = 0; x < n; ++x) {
        for (size_t cls = 0; cls < out.reps.size(); ++cls) {
            int r = out.reps[cls];
            if (!profile_match(x, r)) continue;
            auto hit = find_invertible_in_subspace(c, x, r, FpMatrix::identity(c.p, c.hom_dim(x, r)),
                                                   limits);
            if (hit) {
                out.class_of[x] = static_cast<int>(cls);
                out.to_rep[x] = hit->value;
                out.from_rep[x] = hit->inverse;
                break;
            }
        }
        if (out.class_of[x] < 0) {
            out.class_of[x] = static_cast<int>(out.reps.size());
            out.reps.push_back(x);
            out.to_rep[x] = c.identity(x);
            out.from_rep[x] = c.identity(x);
        }
    }
    return out;
}

} // namespace equivar
