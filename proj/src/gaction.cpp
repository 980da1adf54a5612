#include "equivar/gaction.hpp"

#include <algorithm>

namespace equivar {

std::optional<Violation> action_check(const GAction& a, const SearchLimits& limits) {
    const FinGroup& g = a.group;
    int n = g.order;
    if (int(a.functors.size()) != n || a.compose_isos.size() != size_t(n) * n)
        return Violation{"action arrays must hold |G| functors and |G|^2 isomorphisms"};

    IsoClasses classes = iso_classes(*a.cat, limits);
    for (int x = 0; x < n; ++x) {
        const LinFunctor& rho = a.functors[x];
        if (!same_category(rho.source, a.cat) || !same_category(rho.target, a.cat))
            return Violation{"rho_" + std::to_string(x) + " is not an endofunctor of C"};
        if (auto v = validate(rho))
            return Violation{"rho_" + std::to_string(x) + ": " + v->location};
        for (int o1 = 0; o1 < a.cat->size(); ++o1)
            for (int o2 = 0; o2 < a.cat->size(); ++o2) {
                const FpMatrix& m = rho.hom_map(o1, o2);
                if (m.rows != m.cols || !mat_is_invertible(m))
                    return Violation{"rho_" + std::to_string(x) + " not fully faithful at Hom(" +
                                     a.cat->objects[o1] + "," + a.cat->objects[o2] + ")"};
            }
        std::vector<bool> hit(classes.reps.size(), false);
        for (int o = 0; o < a.cat->size(); ++o) hit[classes.class_of[rho(o)]] = true;
        for (size_t cl = 0; cl < hit.size(); ++cl)
            if (!hit[cl])
                return Violation{"rho_" + std::to_string(x) +
                                 " not essentially surjective: class of " +
                                 a.cat->objects[classes.reps[cl]] + " missed"};
    }

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const NatTransf& phi = a.phi(x, y);
            std::string where = "phi_(" + std::to_string(x) + "," + std::to_string(y) + ")";
            if (!functor_equal(phi.from, compose_functors(a.functors[x], a.functors[y])))
                return Violation{where + " does not start at rho_g rho_h"};
            if (!functor_equal(phi.to, a.functors[g.mul(x, y)]))
                return Violation{where + " does not end at rho_gh"};
            if (auto v = validate(phi)) return Violation{where + ": " + v->location};
            if (!is_nat_iso(phi)) return Violation{where + " is not an isomorphism"};
        }

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                NatTransf lhs = vcompose(a.phi(x, g.mul(y, z)), whisker_left(a.functors[x], a.phi(y, z)));
                NatTransf rhs = vcompose(a.phi(g.mul(x, y), z), whisker_right(a.phi(x, y), a.functors[z]));
                if (!nat_equal(lhs, rhs))
                    return Violation{"associativity square fails at triple (" + std::to_string(x) +
                                     "," + std::to_string(y) + "," + std::to_string(z) + ")"};
            }
    return std::nullopt;
}

GAction trivial_action(const FinGroup& g, LinCatPtr c) {
    GAction a;
    a.group = g;
    a.cat = c;
    LinFunctor id = identity_functor(c);
    a.functors.assign(g.order, id);
    NatTransf idt = identity_nat(id);
    // endpoints of phi must be the literal composite Id . Id
    NatTransf phi = idt;
    phi.from = compose_functors(id, id);
    a.compose_isos.assign(size_t(g.order) * g.order, phi);
    return a;
}

GAction action_from_cocycle(u32 p, int max_dim, const FinGroup& g, const TwoCocycle& phi) {
    if (!phi.coeff.field_link || phi.coeff.field_link->p != p)
        throw PreconditionFailed("action_from_cocycle: cocycle not linked to F_p^*");
    if (!(phi.group == g)) throw PreconditionFailed("action_from_cocycle: group mismatch");
    u32 root = phi.coeff.field_link->root;
    GAction a;
    a.group = g;
    a.cat = vect_cat(p, max_dim);
    LinFunctor id = identity_functor(a.cat);
    a.functors.assign(g.order, id);
    a.compose_isos.reserve(size_t(g.order) * g.order);
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y) {
            NatTransf t = identity_nat(id);
            t.from = compose_functors(id, id);
            u32 scalar = pow_mod(root, phi.at(x, y), p);
            for (Vec& comp : t.components) comp = vec_scale(scalar, comp, p);
            a.compose_isos.push_back(std::move(t));
        }
    return a;
}

NatTransf derive_phi1(const GAction& a) {
    const LinCat& c = *a.cat;
    const LinFunctor& rho1 = a.functors[0];
    const NatTransf& phi11 = a.phi(0, 0);
    NatTransf phi1;
    phi1.from = rho1;
    phi1.to = identity_functor(a.cat);
    phi1.components.resize(c.size());
    for (int x = 0; x < c.size(); ++x) {
        // solve rho_1(phi1_x) = phi_{1,1}(x) through the bijective hom map
        const FpMatrix& m = rho1.hom_map(rho1(x), x);
        auto sol = solve_mod_p(m, phi11.components[x]);
        if (!sol || !sol->kernel.empty())
            throw NotSolvable("derive_phi1: rho_1 hom map not bijective at " + c.objects[x]);
        phi1.components[x] = sol->particular;
    }
    if (auto v = validate(phi1)) throw NotSolvable("derive_phi1: unit iso not natural: " + v->location);
    if (!is_nat_iso(phi1)) throw NotSolvable("derive_phi1: unit transformation not invertible");
    for (int g = 0; g < a.group.order; ++g) {
        NatTransf left = whisker_left(a.functors[g], phi1);
        if (a.phi(g, 0).components != left.components)
            throw NotSolvable("derive_phi1: phi_(g,1) = rho_g phi_1 fails at g = " + std::to_string(g));
        NatTransf right = whisker_right(phi1, a.functors[g]);
        if (a.phi(0, g).components != right.components)
            throw NotSolvable("derive_phi1: phi_(1,g) = phi_1 rho_g fails at g = " + std::to_string(g));
    }
    return phi1;
}

bool equivariant_relation_holds(const GAction& a, const EquivariantObject& o) {
    const LinCat& c = *a.cat;
    int n = a.group.order;
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            int gh = a.group.mul(g, h);
            int rg = a.functors[g](o.base);
            int rh = a.functors[h](o.base);
            int rgh = a.functors[g](rh);
            Vec step = c.compose(o.base, rg, rgh,
                                 a.functors[g].apply(o.base, rh, o.lin[h]), o.lin[g]);
            Vec rhs = c.compose(o.base, rgh, a.functors[gh](o.base),
                                a.phi(g, h).components[o.base], step);
            if (rhs != o.lin[gh]) return false;
        }
    return true;
}

FpMatrix equivariant_hom_basis(const GAction& a, const EquivariantObject& o1,
                               const EquivariantObject& o2) {
    const LinCat& c = *a.cat;
    int n = a.group.order;
    int d = c.hom_dim(o1.base, o2.base);
    int rows = 0;
    for (int g = 0; g < n; ++g) rows += c.hom_dim(o1.base, a.functors[g](o2.base));
    FpMatrix sys(c.p, rows, d);
    for (int j = 0; j < d; ++j) {
        Vec f(d, 0);
        f[j] = 1;
        int r0 = 0;
        for (int g = 0; g < n; ++g) {
            int rg1 = a.functors[g](o1.base);
            int rg2 = a.functors[g](o2.base);
            Vec lhs = c.compose(o1.base, o2.base, rg2, o2.lin[g], f);
            Vec rhs = c.compose(o1.base, rg1, rg2, a.functors[g].apply(o1.base, o2.base, f), o1.lin[g]);
            Vec diff = vec_sub(lhs, rhs, c.p);
            for (int i = 0; i < int(diff.size()); ++i) sys.at(r0 + i, j) = diff[i];
            r0 += int(diff.size());
        }
    }
    std::vector<Vec> kernel = kernel_basis(std::move(sys));
    FpMatrix basis(c.p, d, static_cast<int>(kernel.size()));
    for (int j = 0; j < int(kernel.size()); ++j)
        for (int i = 0; i < d; ++i) basis.at(i, j) = kernel[j][i];
    return basis;
}

namespace {

// All linearizations over the given base, in lexicographic search order.
std::vector<EquivariantObject> enumerate_linearizations(const GAction& a, const NatTransf& phi1,
                                                        int base, const SearchLimits& limits) {
    const LinCat& c = *a.cat;
    const FinGroup& grp = a.group;
    int n = grp.order;

    Vec theta1;
    if (!morphism_invertible(c, a.functors[0](base), base, phi1.components[base], &theta1))
        throw WorkbenchError("enumerate_linearizations: phi_1 component not invertible");

    std::vector<int> gens = generating_sequence(grp);

    // per-generator lists of invertible candidates
    std::vector<std::vector<Vec>> candidates(gens.size());
    for (size_t s = 0; s < gens.size(); ++s) {
        int target = a.functors[gens[s]](base);
        int d = c.hom_dim(base, target);
        search_space_size(c.p, d, limits.max_enumeration);
        Vec coords(d, 0);
        do {
            if (morphism_invertible(c, base, target, coords)) candidates[s].push_back(coords);
        } while (lex_next(coords, c.p));
    }
    u64 combos = 1;
    for (const auto& list : candidates) {
        if (list.empty()) return {};
        combos *= list.size();
        if (combos > limits.max_enumeration)
            throw SearchSpaceTooLarge("linearization search exceeds cap at object " +
                                      c.objects[base]);
    }

    std::vector<EquivariantObject> found;
    std::vector<size_t> pick(gens.size(), 0);
    while (true) {
        std::vector<Vec> theta(n);
        std::vector<bool> known(n, false);
        theta[0] = theta1;
        known[0] = true;
        bool consistent = true;
        for (size_t s = 0; s < gens.size() && consistent; ++s) {
            if (known[gens[s]]) {
                consistent = theta[gens[s]] == candidates[s][pick[s]];
            } else {
                theta[gens[s]] = candidates[s][pick[s]];
                known[gens[s]] = true;
            }
        }
        // close under products
        bool grew = consistent;
        while (grew) {
            grew = false;
            for (int g = 0; g < n && consistent; ++g) {
                if (!known[g]) continue;
                for (int h = 0; h < n; ++h) {
                    if (!known[h]) continue;
                    int gh = grp.mul(g, h);
                    int rg = a.functors[g](base);
                    int rh = a.functors[h](base);
                    int rgh = a.functors[g](rh);
                    Vec step = c.compose(base, rg, rgh, a.functors[g].apply(base, rh, theta[h]),
                                         theta[g]);
                    Vec prod = c.compose(base, rgh, a.functors[grp.mul(g, h)](base),
                                         a.phi(g, h).components[base], step);
                    if (known[gh]) {
                        if (theta[gh] != prod) {
                            consistent = false;
                            break;
                        }
                    } else {
                        theta[gh] = std::move(prod);
                        known[gh] = true;
                        grew = true;
                    }
                }
            }
        }
        if (consistent) {
            EquivariantObject o{base, std::move(theta)};
            if (equivariant_relation_holds(a, o)) found.push_back(std::move(o));
        }
        // odometer over candidate picks, last generator fastest
        size_t i = pick.size();
        bool advanced = false;
        while (i-- > 0) {
            if (pick[i] + 1 < candidates[i].size()) {
                ++pick[i];
                for (size_t j = i + 1; j < pick.size(); ++j) pick[j] = 0;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return found;
}

std::optional<Vec> equivariant_iso(const GAction& a, const EquivariantObject& o1,
                                   const EquivariantObject& o2, const SearchLimits& limits,
                                   Vec* inverse_out) {
    FpMatrix basis = equivariant_hom_basis(a, o1, o2);
    if (basis.cols == 0 && a.cat->hom_dim(o1.base, o2.base) > 0) return std::nullopt;
    auto hit = find_invertible_in_subspace(*a.cat, o1.base, o2.base, basis, limits);
    if (!hit) return std::nullopt;
    if (inverse_out) *inverse_out = hit->inverse;
    return hit->value;
}

} // namespace

EquivCat equivariantize(const GAction& a, const SearchLimits& limits) {
    const LinCat& c = *a.cat;
    NatTransf phi1 = derive_phi1(a);

    EquivCat e;
    e.action = a;
    e.base_classes = iso_classes(c, limits);
    e.char_warning = (u32(a.group.order) % c.p) == 0;

    // enumerate linearizations per class representative, keep one object per
    // equivariant isomorphism class (the lexicographically first found)
    for (int rep : e.base_classes.reps) {
        std::vector<EquivariantObject> all = enumerate_linearizations(a, phi1, rep, limits);
        std::vector<EquivariantObject> reps_here;
        for (EquivariantObject& o : all) {
            bool fresh = true;
            for (const EquivariantObject& r : reps_here)
                if (equivariant_iso(a, o, r, limits, nullptr)) {
                    fresh = false;
                    break;
                }
            if (fresh) reps_here.push_back(std::move(o));
        }
        for (EquivariantObject& o : reps_here) e.objs.push_back(std::move(o));
    }

    int m = static_cast<int>(e.objs.size());
    std::vector<std::string> labels(m);
    {
        std::vector<int> seen(c.size(), 0);
        for (int i = 0; i < m; ++i)
            labels[i] = c.objects[e.objs[i].base] + "#" + std::to_string(seen[e.objs[i].base]++);
    }
    e.hom_bases.resize(size_t(m) * m);
    std::vector<int> dims(size_t(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            e.hom_bases[size_t(i) * m + j] = equivariant_hom_basis(a, e.objs[i], e.objs[j]);
            dims[size_t(i) * m + j] = e.hom_bases[size_t(i) * m + j].cols;
        }

    auto express = [&](int i, int j, const Vec& raw) {
        auto coords = express_in_basis(e.hom_bases[size_t(i) * m + j], raw);
        if (!coords)
            throw WorkbenchError("equivariantize: morphism left the equivariant subspace (bug)");
        return *coords;
    };

    std::vector<FpMatrix> comp(size_t(m) * m * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                int dij = dims[size_t(i) * m + j], djk = dims[size_t(j) * m + k];
                int dik = dims[size_t(i) * m + k];
                FpMatrix t(c.p, dik, djk * dij);
                for (int bg = 0; bg < djk; ++bg)
                    for (int bf = 0; bf < dij; ++bf) {
                        Vec g(djk, 0), f(dij, 0);
                        g[bg] = 1;
                        f[bf] = 1;
                        Vec raw = c.compose(e.objs[i].base, e.objs[j].base, e.objs[k].base,
                                            mat_apply(e.hom_bases[size_t(j) * m + k], g),
                                            mat_apply(e.hom_bases[size_t(i) * m + j], f));
                        Vec coords = express(i, k, raw);
                        for (int r = 0; r < dik; ++r) t.at(r, bg * dij + bf) = coords[r];
                    }
                comp[(size_t(i) * m + j) * m + k] = std::move(t);
            }
    std::vector<Vec> ids(m);
    for (int i = 0; i < m; ++i) ids[i] = express(i, i, c.identity(e.objs[i].base));

    e.skeleton = std::make_shared<const LinCat>(
        make_lincat(c.p, std::move(labels), std::move(dims), std::move(comp), std::move(ids)));

    e.forget.source = e.skeleton;
    e.forget.target = a.cat;
    e.forget.obj_map.resize(m);
    for (int i = 0; i < m; ++i) e.forget.obj_map[i] = e.objs[i].base;
    e.forget.hom_maps = e.hom_bases;

    if (auto v = validate(*e.skeleton))
        throw WorkbenchError("equivariantize: skeleton fails category laws: " + v->location);
    if (auto v = validate(e.forget))
        throw WorkbenchError("equivariantize: forgetful functor invalid: " + v->location);
    return e;
}

Located locate_in_skeleton(const EquivCat& e, const EquivariantObject& o,
                           const SearchLimits& limits) {
    const GAction& a = e.action;
    const LinCat& c = *a.cat;
    int rep = e.base_classes.reps[e.base_classes.class_of[o.base]];
    const Vec& u = e.base_classes.to_rep[o.base];
    const Vec& uinv = e.base_classes.from_rep[o.base];

    EquivariantObject moved;
    moved.base = rep;
    moved.lin.resize(a.group.order);
    for (int g = 0; g < a.group.order; ++g) {
        int rg_old = a.functors[g](o.base);
        int rg_new = a.functors[g](rep);
        Vec step = c.compose(rep, o.base, rg_old, o.lin[g], uinv);
        moved.lin[g] = c.compose(rep, rg_old, rg_new, a.functors[g].apply(o.base, rep, u), step);
    }

    // exact matches first, so canonical objects carry identity witnesses
    for (int i = 0; i < e.size(); ++i)
        if (e.objs[i].base == rep && e.objs[i].lin == moved.lin)
            return Located{i, u, uinv};
    for (int i = 0; i < e.size(); ++i) {
        if (e.objs[i].base != rep) continue;
        Vec vinv;
        auto v = equivariant_iso(a, moved, e.objs[i], limits, &vinv);
        if (v) {
            Located loc;
            loc.index = i;
            loc.iso = c.compose(o.base, rep, rep, *v, u);
            loc.iso_inv = c.compose(rep, rep, o.base, uinv, vinv);
            return loc;
        }
    }
    throw WorkbenchError("locate_in_skeleton: object missing from skeleton (bug or truncated search)");
}

EquivCat twisted_rep_classify(u32 p, int max_dim, const FinGroup& g, const TwoCocycle& phi,
                              const SearchLimits& limits) {
    GAction a = action_from_cocycle(p, max_dim, g, phi);
    if (auto bad = cocycle_check(phi))
        throw PreconditionFailed("twisted_rep_classify: grid fails the cocycle law at (" +
                                 std::to_string((*bad)[0]) + "," + std::to_string((*bad)[1]) + "," +
                                 std::to_string((*bad)[2]) + ")");
    return equivariantize(a, limits);
}

std::vector<int> classes_per_dimension(const EquivCat& e, int max_dim) {
    std::vector<int> counts(max_dim + 1, 0);
    for (const EquivariantObject& o : e.objs)
        if (o.base <= max_dim) ++counts[o.base];
    return counts;
}

} // namespace equivar
