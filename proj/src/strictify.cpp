#include "equivar/strictify.hpp"

namespace equivar {

LinCatPtr omega_cat(const FinGroup& g, u32 p) {
    int n = g.order;
    std::vector<std::string> objects(n);
    std::vector<int> dims(size_t(n) * n, 0);
    for (int x = 0; x < n; ++x) {
        objects[x] = "w" + std::to_string(x);
        dims[size_t(x) * n + x] = 1;
    }
    std::vector<FpMatrix> comp(size_t(n) * n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int rows = dims[size_t(x) * n + z];
                int cols = dims[size_t(y) * n + z] * dims[size_t(x) * n + y];
                FpMatrix t(p, rows, cols);
                if (x == y && y == z) t.at(0, 0) = 1 % p;
                comp[(size_t(x) * n + y) * n + z] = std::move(t);
            }
    std::vector<Vec> ids(n, Vec{1 % p});
    return std::make_shared<const LinCat>(
        make_lincat(p, std::move(objects), std::move(dims), std::move(comp), std::move(ids)));
}

GAction omega_translation_action(const FinGroup& g, u32 p) {
    GAction a;
    a.group = g;
    a.cat = omega_cat(g, p);
    int n = g.order;
    for (int h = 0; h < n; ++h) {
        LinFunctor f;
        f.source = a.cat;
        f.target = a.cat;
        f.obj_map.resize(n);
        for (int x = 0; x < n; ++x) f.obj_map[x] = g.mul(h, x);
        f.hom_maps.reserve(size_t(n) * n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                f.hom_maps.push_back(FpMatrix::identity(p, a.cat->hom_dim(x, y)));
        a.functors.push_back(std::move(f));
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            NatTransf t = identity_nat(a.functors[g.mul(x, y)]);
            t.from = compose_functors(a.functors[x], a.functors[y]);
            a.compose_isos.push_back(std::move(t));
        }
    return a;
}

LaxGFunctor family_lax_functor(GActionPtr a, int base) {
    const LinCat& c = *a->cat;
    const FinGroup& grp = a->group;
    int n = grp.order;
    auto omega = std::make_shared<GAction>(omega_translation_action(grp, c.p));

    LinFunctor f;
    f.source = omega->cat;
    f.target = a->cat;
    f.obj_map.resize(n);
    for (int g = 0; g < n; ++g) f.obj_map[g] = a->functors[g](base);
    f.hom_maps.reserve(size_t(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int rows = c.hom_dim(f.obj_map[x], f.obj_map[y]);
            FpMatrix m(c.p, rows, omega->cat->hom_dim(x, y));
            if (x == y)
                for (int i = 0; i < rows; ++i) m.at(i, 0) = c.identity(f.obj_map[x])[i];
            f.hom_maps.push_back(std::move(m));
        }

    LaxGFunctor l;
    l.side = LaxSide::Right;
    l.src_action = omega;
    l.tgt_action = a;
    l.functor = f;
    l.comparisons.reserve(n);
    for (int h = 0; h < n; ++h) {
        NatTransf t;
        t.from = compose_functors(a->functors[h], f);
        t.to = compose_functors(f, omega->functors[h]);
        t.components.resize(n);
        for (int g = 0; g < n; ++g) t.components[g] = a->phi(h, g).components[base];
        l.comparisons.push_back(std::move(t));
    }
    return l;
}

bool strict_check(const GAction& a) {
    int n = a.group.order;
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            if (!functor_equal(compose_functors(a.functors[g], a.functors[h]),
                               a.functors[a.group.mul(g, h)]))
                return false;
            const NatTransf& phi = a.phi(g, h);
            NatTransf id = identity_nat(a.functors[a.group.mul(g, h)]);
            if (phi.components != id.components) return false;
        }
    return true;
}

Strictified strictify(const GAction& a, const SearchLimits& limits) {
    const LinCat& c = *a.cat;
    const FinGroup& grp = a.group;
    int n = grp.order;
    IsoClasses classes = iso_classes(c, limits);

    Strictified out;
    std::vector<std::pair<int, int>>& objs = out.objs;
    for (int rep : classes.reps)
        for (int h = 0; h < n; ++h) objs.emplace_back(rep, h);
    int m = static_cast<int>(objs.size());
    auto image = [&](int i) { return a.functors[objs[i].second](objs[i].first); };

    std::vector<std::string> labels(m);
    std::vector<int> dims(size_t(m) * m);
    for (int i = 0; i < m; ++i) {
        labels[i] = c.objects[objs[i].first] + "@" + std::to_string(objs[i].second);
        for (int j = 0; j < m; ++j) dims[size_t(i) * m + j] = c.hom_dim(image(i), image(j));
    }
    std::vector<FpMatrix> comp(size_t(m) * m * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                comp[(size_t(i) * m + j) * m + k] = c.comp_tensor(image(i), image(j), image(k));
    std::vector<Vec> ids(m);
    for (int i = 0; i < m; ++i) ids[i] = c.identity(image(i));

    out.cprime = std::make_shared<const LinCat>(
        make_lincat(c.p, std::move(labels), std::move(dims), std::move(comp), std::move(ids)));

    // shift action: (c, h) -> (c, g h); morphisms conjugated through phi
    GAction& act = out.strict_action;
    act.group = grp;
    act.cat = out.cprime;
    std::vector<int> index_of(size_t(classes.reps.size()) * n);
    for (int i = 0; i < m; ++i)
        index_of[size_t(classes.class_of[objs[i].first]) * n + objs[i].second] = i;

    for (int g = 0; g < n; ++g) {
        LinFunctor f;
        f.source = out.cprime;
        f.target = out.cprime;
        f.obj_map.resize(m);
        for (int i = 0; i < m; ++i)
            f.obj_map[i] =
                index_of[size_t(classes.class_of[objs[i].first]) * n + grp.mul(g, objs[i].second)];
        f.hom_maps.reserve(size_t(m) * m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                int d = out.cprime->hom_dim(i, j);
                int di = image(i), dj = image(j); // rho_h c, rho_h* d in C
                int gi = a.functors[g](di), gj = a.functors[g](dj);
                int si = image(f.obj_map[i]), sj = image(f.obj_map[j]); // rho_{gh} objects
                // f |-> phi_{g,h*}(d) . rho_g(f) . phi_{g,h}(c)^{-1}
                Vec phi_i_inv;
                if (!morphism_invertible(c, gi, si, a.phi(g, objs[i].second).components[objs[i].first],
                                         &phi_i_inv))
                    throw WorkbenchError("strictify: comparison iso not invertible (invalid action)");
                const Vec& phi_j = a.phi(g, objs[j].second).components[objs[j].first];
                FpMatrix mmap(c.p, out.cprime->hom_dim(f.obj_map[i], f.obj_map[j]), d);
                for (int col = 0; col < d; ++col) {
                    Vec e(d, 0);
                    e[col] = 1;
                    Vec step = c.compose(si, gi, gj, a.functors[g].apply(di, dj, e), phi_i_inv);
                    Vec res = c.compose(si, gj, sj, phi_j, step);
                    for (int r = 0; r < int(res.size()); ++r) mmap.at(r, col) = res[r];
                }
                f.hom_maps.push_back(std::move(mmap));
            }
        act.functors.push_back(std::move(f));
    }
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            NatTransf t = identity_nat(act.functors[grp.mul(g, h)]);
            t.from = compose_functors(act.functors[g], act.functors[h]);
            act.compose_isos.push_back(std::move(t));
        }

    if (!strict_check(act))
        throw WorkbenchError("strictify: shift action is not strict (invalid input action)");
    if (auto v = action_check(act, limits))
        throw WorkbenchError("strictify: shift action invalid: " + v->location);

    // evaluation functor (c,h) -> rho_h(c), identity on hom data
    LaxGFunctor& phi = out.phi;
    phi.side = LaxSide::Right;
    phi.src_action = std::make_shared<const GAction>(act);
    phi.tgt_action = std::make_shared<const GAction>(a);
    phi.functor.source = out.cprime;
    phi.functor.target = a.cat;
    phi.functor.obj_map.resize(m);
    for (int i = 0; i < m; ++i) phi.functor.obj_map[i] = image(i);
    phi.functor.hom_maps.reserve(size_t(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            phi.functor.hom_maps.push_back(FpMatrix::identity(c.p, out.cprime->hom_dim(i, j)));
    phi.comparisons.reserve(n);
    for (int g = 0; g < n; ++g) {
        NatTransf t;
        t.from = compose_functors(a.functors[g], phi.functor);
        t.to = compose_functors(phi.functor, act.functors[g]);
        t.components.resize(m);
        for (int i = 0; i < m; ++i)
            t.components[i] = a.phi(g, objs[i].second).components[objs[i].first];
        phi.comparisons.push_back(std::move(t));
    }

    if (auto bad = pentagon_check(phi))
        throw WorkbenchError("strictify: evaluation functor fails pentagon at (" +
                             std::to_string(bad->first) + "," + std::to_string(bad->second) + ")");
    if (auto v = weak_equivalence_check(phi, limits))
        throw WorkbenchError("strictify: evaluation functor not a weak equivalence: " + v->location);
    return out;
}

} // namespace equivar
