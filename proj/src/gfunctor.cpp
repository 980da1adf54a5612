#include "equivar/gfunctor.hpp"

#include <string>

namespace equivar {

bool action_equal(const GAction& a, const GAction& b) {
    if (!(a.group == b.group) || !same_category(a.cat, b.cat)) return false;
    if (a.functors.size() != b.functors.size() || a.compose_isos.size() != b.compose_isos.size())
        return false;
    for (size_t i = 0; i < a.functors.size(); ++i)
        if (!functor_equal(a.functors[i], b.functors[i])) return false;
    for (size_t i = 0; i < a.compose_isos.size(); ++i)
        if (!nat_equal(a.compose_isos[i], b.compose_isos[i])) return false;
    return true;
}

LaxGFunctor identity_lax(GActionPtr a, LaxSide side) {
    LaxGFunctor l;
    l.side = side;
    l.src_action = a;
    l.tgt_action = a;
    l.functor = identity_functor(a->cat);
    int n = a->group.order;
    l.comparisons.reserve(n);
    for (int g = 0; g < n; ++g) {
        NatTransf t = identity_nat(a->functors[g]);
        if (side == LaxSide::Right) {
            t.from = compose_functors(a->functors[g], l.functor);
            t.to = compose_functors(l.functor, a->functors[g]);
        } else {
            t.from = compose_functors(l.functor, a->functors[g]);
            t.to = compose_functors(a->functors[g], l.functor);
        }
        l.comparisons.push_back(std::move(t));
    }
    return l;
}

static void check_lax_shapes(const LaxGFunctor& l) {
    int n = l.src_action->group.order;
    if (!(l.src_action->group == l.tgt_action->group))
        throw ShapeMismatch("lax functor: source and target actions have different groups");
    if (int(l.comparisons.size()) != n)
        throw ShapeMismatch("lax functor: one comparison per group element required");
    if (!same_category(l.functor.source, l.src_action->cat) ||
        !same_category(l.functor.target, l.tgt_action->cat))
        throw ShapeMismatch("lax functor: functor endpoints do not match the actions");
}

std::optional<std::pair<int, int>> pentagon_check(const LaxGFunctor& l) {
    check_lax_shapes(l);
    const GAction& s = *l.src_action;
    const GAction& t = *l.tgt_action;
    const FinGroup& grp = s.group;
    for (int g = 0; g < grp.order; ++g)
        for (int h = 0; h < grp.order; ++h) {
            int gh = grp.mul(g, h);
            NatTransf lhs, rhs;
            if (l.side == LaxSide::Right) {
                lhs = vcompose(l.comparisons[gh], whisker_right(t.phi(g, h), l.functor));
                rhs = vcompose(whisker_left(l.functor, s.phi(g, h)),
                               vcompose(whisker_right(l.comparisons[g], s.functors[h]),
                                        whisker_left(t.functors[g], l.comparisons[h])));
            } else {
                lhs = vcompose(l.comparisons[gh], whisker_left(l.functor, s.phi(g, h)));
                rhs = vcompose(whisker_right(t.phi(g, h), l.functor),
                               vcompose(whisker_left(t.functors[g], l.comparisons[h]),
                                        whisker_right(l.comparisons[g], s.functors[h])));
            }
            if (!nat_equal(lhs, rhs)) return std::make_pair(g, h);
        }
    return std::nullopt;
}

LaxGFunctor invert_side(const LaxGFunctor& l) {
    LaxGFunctor out = l;
    out.side = l.side == LaxSide::Right ? LaxSide::Left : LaxSide::Right;
    for (size_t g = 0; g < l.comparisons.size(); ++g) {
        auto inv = nat_inverse(l.comparisons[g]);
        if (!inv)
            throw PreconditionFailed("invert_side: comparison at g = " + std::to_string(g) +
                                     " is not invertible");
        out.comparisons[g] = std::move(*inv);
    }
    return out;
}

LaxGFunctor compose_lax(const LaxGFunctor& l1, const LaxGFunctor& l2) {
    if (l1.side != l2.side) throw SideMismatch("compose_lax: sides differ");
    if (!action_equal(*l1.tgt_action, *l2.src_action))
        throw ShapeMismatch("compose_lax: middle actions differ");
    LaxGFunctor out;
    out.side = l1.side;
    out.src_action = l1.src_action;
    out.tgt_action = l2.tgt_action;
    out.functor = compose_functors(l2.functor, l1.functor);
    int n = l1.src_action->group.order;
    out.comparisons.reserve(n);
    for (int g = 0; g < n; ++g) {
        if (out.side == LaxSide::Right)
            out.comparisons.push_back(vcompose(whisker_left(l2.functor, l1.comparisons[g]),
                                               whisker_right(l2.comparisons[g], l1.functor)));
        else
            out.comparisons.push_back(vcompose(whisker_right(l2.comparisons[g], l1.functor),
                                               whisker_left(l2.functor, l1.comparisons[g])));
    }
    if (auto bad = pentagon_check(out))
        throw WorkbenchError("compose_lax: composite fails the pentagon at (" +
                             std::to_string(bad->first) + "," + std::to_string(bad->second) + ")");
    return out;
}

namespace {

// Action of the trivial group where the single functor is rho_1 of a and the
// single comparison is phi_{1,1}.
GActionPtr unit_slice_action(const GAction& a) {
    auto out = std::make_shared<GAction>();
    out->group = cyclic_group(1);
    out->cat = a.cat;
    out->functors = {a.functors[0]};
    out->compose_isos = {a.phi(0, 0)};
    return out;
}

GActionPtr trivial_slice_action(LinCatPtr cat) {
    return std::make_shared<GAction>(trivial_action(cyclic_group(1), cat));
}

} // namespace

WeaknessReport weakness_criteria(const LaxGFunctor& l) {
    if (auto bad = pentagon_check(l))
        throw PreconditionFailed("weakness_criteria: pentagon fails at (" +
                                 std::to_string(bad->first) + "," + std::to_string(bad->second) +
                                 ")");
    NatTransf phi1_src = derive_phi1(*l.src_action);
    NatTransf phi1_tgt = derive_phi1(*l.tgt_action);

    WeaknessReport rep;
    rep.delta1_iso = is_nat_iso(l.comparisons[0]);
    if (l.side == LaxSide::Right) {
        NatTransf lhs = vcompose(whisker_left(l.functor, phi1_src), l.comparisons[0]);
        NatTransf rhs = whisker_right(phi1_tgt, l.functor);
        rep.identity_axiom = lhs.components == rhs.components;
    } else {
        NatTransf lhs = vcompose(whisker_right(phi1_tgt, l.functor), l.comparisons[0]);
        NatTransf rhs = whisker_left(l.functor, phi1_src);
        rep.identity_axiom = lhs.components == rhs.components;
    }
    rep.all_iso = true;
    for (const NatTransf& d : l.comparisons)
        if (!is_nat_iso(d)) {
            rep.all_iso = false;
            break;
        }

    if (rep.delta1_iso != rep.identity_axiom || rep.identity_axiom != rep.all_iso)
        throw InconsistentLemma("weakness_criteria: the three equivalent conditions disagree");

    if (rep.delta1_iso) {
        // idempotent eps : F => F, checked directly ...
        NatTransf eps;
        if (l.side == LaxSide::Right) {
            NatTransf start = *nat_inverse(whisker_right(phi1_tgt, l.functor));
            eps = vcompose(whisker_left(l.functor, phi1_src), vcompose(l.comparisons[0], start));
        } else {
            NatTransf start = *nat_inverse(whisker_left(l.functor, phi1_src));
            eps = vcompose(whisker_right(phi1_tgt, l.functor), vcompose(l.comparisons[0], start));
        }
        NatTransf eps2 = vcompose(eps, eps);
        if (eps2.components != eps.components)
            throw InconsistentLemma("weakness_criteria: eps fails eps.eps = eps");
        if (eps.components != identity_nat(l.functor).components)
            throw InconsistentLemma("weakness_criteria: eps is not the identity");

        // ... and through the composite of the three lax functors over the
        // trivial group, whose pentagon is exactly eps^2 = eps.
        GActionPtr src_id = trivial_slice_action(l.src_action->cat);
        GActionPtr src_rho = unit_slice_action(*l.src_action);
        GActionPtr tgt_rho = unit_slice_action(*l.tgt_action);
        GActionPtr tgt_id = trivial_slice_action(l.tgt_action->cat);

        LaxGFunctor f1, f2, f3;
        f1.side = f2.side = f3.side = l.side;
        f2.src_action = src_rho;
        f2.tgt_action = tgt_rho;
        f2.functor = l.functor;
        f2.comparisons = {l.comparisons[0]};
        if (l.side == LaxSide::Right) {
            f1.src_action = src_id;
            f1.tgt_action = src_rho;
            f1.functor = identity_functor(l.src_action->cat);
            f1.comparisons = {phi1_src};
            f3.src_action = tgt_rho;
            f3.tgt_action = tgt_id;
            f3.functor = identity_functor(l.tgt_action->cat);
            f3.comparisons = {*nat_inverse(phi1_tgt)};
        } else {
            f1.src_action = src_id;
            f1.tgt_action = src_rho;
            f1.functor = identity_functor(l.src_action->cat);
            f1.comparisons = {*nat_inverse(phi1_src)};
            f3.src_action = tgt_rho;
            f3.tgt_action = tgt_id;
            f3.functor = identity_functor(l.tgt_action->cat);
            f3.comparisons = {phi1_tgt};
        }
        LaxGFunctor through = compose_lax(compose_lax(f1, f2), f3); // pentagon asserted inside
        if (through.comparisons[0].components != eps.components)
            throw InconsistentLemma(
                "weakness_criteria: composite route disagrees with the direct idempotent");
    }
    return rep;
}

std::optional<int> g_natural_check(const NatTransf& mu, const LaxGFunctor& l1,
                                   const LaxGFunctor& l2) {
    if (l1.side != l2.side) throw SideMismatch("g_natural_check: sides differ");
    if (!functor_equal(mu.from, l1.functor) || !functor_equal(mu.to, l2.functor))
        throw ShapeMismatch("g_natural_check: mu does not run between the two lax functors");
    if (!action_equal(*l1.src_action, *l2.src_action) ||
        !action_equal(*l1.tgt_action, *l2.tgt_action))
        throw ShapeMismatch("g_natural_check: lax functors live over different actions");
    const GAction& s = *l1.src_action;
    const GAction& t = *l1.tgt_action;
    for (int g = 0; g < s.group.order; ++g) {
        NatTransf lhs, rhs;
        if (l1.side == LaxSide::Right) {
            lhs = vcompose(l2.comparisons[g], whisker_left(t.functors[g], mu));
            rhs = vcompose(whisker_right(mu, s.functors[g]), l1.comparisons[g]);
        } else {
            lhs = vcompose(l2.comparisons[g], whisker_right(mu, s.functors[g]));
            rhs = vcompose(whisker_left(t.functors[g], mu), l1.comparisons[g]);
        }
        if (lhs.components != rhs.components) return g;
    }
    return std::nullopt;
}

std::optional<Violation> triangle_check(const AdjunctionData& adj) {
    if (!same_category(adj.left.target, adj.right.source) ||
        !same_category(adj.right.target, adj.left.source))
        return Violation{"adjunction endpoints do not match"};
    if (auto v = validate(adj.left)) return Violation{"left adjoint: " + v->location};
    if (auto v = validate(adj.right)) return Violation{"right adjoint: " + v->location};
    LinFunctor id_x = identity_functor(adj.left.source);
    LinFunctor id_y = identity_functor(adj.left.target);
    if (!functor_equal(adj.unit.from, id_x) ||
        !functor_equal(adj.unit.to, compose_functors(adj.right, adj.left)))
        return Violation{"unit endpoints"};
    if (!functor_equal(adj.counit.from, compose_functors(adj.left, adj.right)) ||
        !functor_equal(adj.counit.to, id_y))
        return Violation{"counit endpoints"};
    if (auto v = validate(adj.unit)) return Violation{"unit: " + v->location};
    if (auto v = validate(adj.counit)) return Violation{"counit: " + v->location};
    NatTransf t1 = vcompose(whisker_left(adj.right, adj.counit), whisker_right(adj.unit, adj.right));
    if (t1.components != identity_nat(adj.right).components)
        return Violation{"triangle identity on the right adjoint fails"};
    NatTransf t2 = vcompose(whisker_right(adj.counit, adj.left), whisker_left(adj.left, adj.unit));
    if (t2.components != identity_nat(adj.left).components)
        return Violation{"triangle identity on the left adjoint fails"};
    return std::nullopt;
}

std::optional<Violation> g_adjoint_check(const AdjunctionData& adj, const LaxGFunctor& lax_left,
                                         const LaxGFunctor& lax_right) {
    if (auto v = triangle_check(adj)) return v;
    if (!functor_equal(lax_left.functor, adj.left) || !functor_equal(lax_right.functor, adj.right))
        return Violation{"lax structures are not carried by the adjoint pair"};
    LaxGFunctor ll = lax_left.side == LaxSide::Right ? lax_left : invert_side(lax_left);
    LaxGFunctor lr = lax_right.side == LaxSide::Right ? lax_right : invert_side(lax_right);
    LaxGFunctor rl = compose_lax(ll, lr); // right.left : X -> X
    LaxGFunctor lr2 = compose_lax(lr, ll); // left.right : Y -> Y
    if (auto g = g_natural_check(adj.unit, identity_lax(ll.src_action), rl))
        return Violation{"unit is not G-natural at g = " + std::to_string(*g)};
    if (auto g = g_natural_check(adj.counit, lr2, identity_lax(lr.src_action)))
        return Violation{"counit is not G-natural at g = " + std::to_string(*g)};
    return std::nullopt;
}

LaxGFunctor mate(const LaxGFunctor& lf, const AdjunctionData& adj) {
    if (lf.side != LaxSide::Right)
        throw SideMismatch("mate: input must carry a right lax structure");
    if (!weakness_criteria(lf).all())
        throw PreconditionFailed("mate: input must be a weak G-functor");
    if (auto v = triangle_check(adj)) throw PreconditionFailed("mate: " + v->location);

    const GAction& src = *lf.src_action; // C
    const GAction& tgt = *lf.tgt_action; // D
    int n = src.group.order;
    LaxGFunctor out;

    if (functor_equal(adj.right, lf.functor)) {
        // Psi = adj.left : D -> C is a left adjoint of Phi = lf.functor
        const LinFunctor& psi = adj.left;
        out.side = LaxSide::Left;
        out.src_action = lf.tgt_action;
        out.tgt_action = lf.src_action;
        out.functor = psi;
        out.comparisons.reserve(n);
        for (int g = 0; g < n; ++g) {
            NatTransf s1 = whisker_left(compose_functors(psi, tgt.functors[g]), adj.unit);
            NatTransf s2 = whisker_left(psi, whisker_right(lf.comparisons[g], psi));
            NatTransf s3 = whisker_right(adj.counit, compose_functors(src.functors[g], psi));
            out.comparisons.push_back(vcompose(s3, vcompose(s2, s1)));
        }
    } else if (functor_equal(adj.left, lf.functor)) {
        // Psi = adj.right : D -> C is a right adjoint of Phi = lf.functor
        const LinFunctor& psi = adj.right;
        out.side = LaxSide::Right;
        out.src_action = lf.tgt_action;
        out.tgt_action = lf.src_action;
        out.functor = psi;
        out.comparisons.reserve(n);
        for (int g = 0; g < n; ++g) {
            NatTransf dinv = *nat_inverse(lf.comparisons[g]);
            NatTransf s1 = whisker_right(adj.unit, compose_functors(src.functors[g], psi));
            NatTransf s2 = whisker_left(psi, whisker_right(dinv, psi));
            NatTransf s3 = whisker_left(compose_functors(psi, tgt.functors[g]), adj.counit);
            out.comparisons.push_back(vcompose(s3, vcompose(s2, s1)));
        }
    } else {
        throw ShapeMismatch("mate: the adjunction does not involve the given functor");
    }

    if (auto bad = pentagon_check(out))
        throw WorkbenchError("mate: output fails the pentagon at (" + std::to_string(bad->first) +
                             "," + std::to_string(bad->second) + ")");
    if (!weakness_criteria(out).all())
        throw WorkbenchError("mate: output is not weak");
    std::optional<Violation> gv;
    if (functor_equal(adj.right, lf.functor))
        gv = g_adjoint_check(adj, out, lf);
    else
        gv = g_adjoint_check(adj, lf, out);
    if (gv) throw WorkbenchError("mate: adjunction not G-adjoint afterwards: " + gv->location);
    return out;
}

std::optional<Violation> weak_equivalence_check(const LaxGFunctor& l, const SearchLimits& limits) {
    if (!weakness_criteria(l).all()) return Violation{"not a weak G-functor"};
    const LinCat& src = *l.functor.source;
    const LinCat& tgt = *l.functor.target;
    for (int x = 0; x < src.size(); ++x)
        for (int y = 0; y < src.size(); ++y) {
            const FpMatrix& m = l.functor.hom_map(x, y);
            if (m.rows != m.cols || !mat_is_invertible(m))
                return Violation{"not fully faithful at Hom(" + src.objects[x] + "," +
                                 src.objects[y] + ")"};
        }
    IsoClasses classes = iso_classes(tgt, limits);
    std::vector<bool> hit(classes.reps.size(), false);
    for (int x = 0; x < src.size(); ++x) hit[classes.class_of[l.functor(x)]] = true;
    for (size_t c = 0; c < hit.size(); ++c)
        if (!hit[c])
            return Violation{"not essentially surjective: class of " +
                             tgt.objects[classes.reps[c]] + " missed"};
    return std::nullopt;
}

DescendedFunctor descend_functor(const LaxGFunctor& l, const EquivCat& src, const EquivCat& tgt,
                                 const SearchLimits& limits) {
    if (!action_equal(*l.src_action, src.action) || !action_equal(*l.tgt_action, tgt.action))
        throw ShapeMismatch("descend_functor: equivariant categories do not match the lax functor");
    const GAction& ta = tgt.action;
    const LinCat& d = *ta.cat;
    int n = src.action.group.order;
    int m = src.size();

    DescendedFunctor out;
    out.functor.source = src.skeleton;
    out.functor.target = tgt.skeleton;
    out.functor.obj_map.resize(m);
    out.wit.resize(m);
    out.wit_inv.resize(m);

    for (int x = 0; x < m; ++x) {
        const EquivariantObject& o = src.objs[x];
        EquivariantObject img;
        img.base = l.functor(o.base);
        img.lin.resize(n);
        for (int g = 0; g < n; ++g) {
            int src_rg = src.action.functors[g](o.base);
            Vec ftheta = l.functor.apply(o.base, src_rg, o.lin[g]); // F c -> F rho_g c
            // direction map F rho_g c -> rho_g F c
            Vec dir;
            if (l.side == LaxSide::Left) {
                dir = l.comparisons[g].components[o.base];
            } else {
                if (!morphism_invertible(d, ta.functors[g](img.base), l.functor(src_rg),
                                         l.comparisons[g].components[o.base], &dir))
                    throw PreconditionFailed(
                        "descend_functor: right comparison not invertible; weak structure needed");
            }
            img.lin[g] = d.compose(img.base, l.functor(src_rg), ta.functors[g](img.base), dir, ftheta);
        }
        if (!equivariant_relation_holds(ta, img))
            throw WorkbenchError("descend_functor: image linearization violates the relation (bug)");
        Located loc = locate_in_skeleton(tgt, img, limits);
        out.functor.obj_map[x] = loc.index;
        out.wit[x] = std::move(loc.iso);
        out.wit_inv[x] = std::move(loc.iso_inv);
    }

    out.functor.hom_maps.resize(size_t(m) * m);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            const FpMatrix& bsrc = src.hom_basis(x, y);
            int yx = out.functor.obj_map[x], yy = out.functor.obj_map[y];
            const FpMatrix& btgt = tgt.hom_basis(yx, yy);
            FpMatrix mmap(d.p, btgt.cols, bsrc.cols);
            int cx = src.objs[x].base, cy = src.objs[y].base;
            int fx = l.functor(cx), fy = l.functor(cy);
            int bx = tgt.objs[yx].base, by = tgt.objs[yy].base;
            for (int j = 0; j < bsrc.cols; ++j) {
                Vec raw(bsrc.rows);
                for (int i = 0; i < bsrc.rows; ++i) raw[i] = bsrc.at(i, j);
                Vec ff = l.functor.apply(cx, cy, raw);
                Vec step = d.compose(bx, fx, fy, ff, out.wit_inv[x]);
                Vec conj = d.compose(bx, fy, by, out.wit[y], step);
                auto coords = express_in_basis(btgt, conj);
                if (!coords)
                    throw WorkbenchError("descend_functor: image left the equivariant subspace (bug)");
                for (int i = 0; i < btgt.cols; ++i) mmap.at(i, j) = (*coords)[i];
            }
            out.functor.hom_maps[size_t(x) * m + y] = std::move(mmap);
        }

    if (auto v = validate(out.functor))
        throw WorkbenchError("descend_functor: descended functor invalid: " + v->location);
    return out;
}

DescendedFunctor descended_identity(const EquivCat& e) {
    DescendedFunctor out;
    out.functor = identity_functor(e.skeleton);
    int m = e.size();
    out.wit.resize(m);
    out.wit_inv.resize(m);
    for (int x = 0; x < m; ++x) {
        out.wit[x] = e.action.cat->identity(e.objs[x].base);
        out.wit_inv[x] = out.wit[x];
    }
    return out;
}

DescendedFunctor compose_descended(const DescendedFunctor& outer, const LinFunctor& outer_base,
                                   const DescendedFunctor& inner, const LinFunctor& inner_base,
                                   const EquivCat& src, const EquivCat& mid, const EquivCat& tgt) {
    DescendedFunctor out;
    out.functor = compose_functors(outer.functor, inner.functor);
    const LinCat& t = *tgt.action.cat;
    int m = src.size();
    out.wit.resize(m);
    out.wit_inv.resize(m);
    for (int x = 0; x < m; ++x) {
        int cx = src.objs[x].base;
        int fi_cx = inner_base(cx);
        int y = inner.functor(x);
        int cy = mid.objs[y].base;
        int z = outer.functor(y);
        int cz = tgt.objs[z].base;
        // FO(FI c_x) -> FO(c_y) -> c_z
        Vec lifted = outer_base.apply(fi_cx, cy, inner.wit[x]);
        out.wit[x] = t.compose(outer_base(fi_cx), outer_base(cy), cz, outer.wit[y], lifted);
        Vec lifted_inv = outer_base.apply(cy, fi_cx, inner.wit_inv[x]);
        out.wit_inv[x] =
            t.compose(cz, outer_base(cy), outer_base(fi_cx), lifted_inv, outer.wit_inv[y]);
    }
    return out;
}

NatTransf descend_nat(const NatTransf& mu, const DescendedFunctor& d1, const DescendedFunctor& d2,
                      const EquivCat& src, const EquivCat& tgt) {
    const LinCat& t = *tgt.action.cat;
    int m = src.size();
    NatTransf out;
    out.from = d1.functor;
    out.to = d2.functor;
    out.components.resize(m);
    for (int x = 0; x < m; ++x) {
        int c = src.objs[x].base;
        int y1 = d1.functor(x), y2 = d2.functor(x);
        int b1 = tgt.objs[y1].base, b2 = tgt.objs[y2].base;
        Vec step = t.compose(b1, mu.from(c), mu.to(c), mu.components[c], d1.wit_inv[x]);
        Vec conj = t.compose(b1, mu.to(c), b2, d2.wit[x], step);
        auto coords = express_in_basis(tgt.hom_basis(y1, y2), conj);
        if (!coords)
            throw WorkbenchError("descend_nat: component not equivariant (mu is not G-natural?)");
        out.components[x] = std::move(*coords);
    }
    if (auto v = validate(out))
        throw WorkbenchError("descend_nat: descended transformation invalid: " + v->location);
    return out;
}

DescendedAdjunction descend_adjunction(const AdjunctionData& adj, const LaxGFunctor& lax_left,
                                       const LaxGFunctor& lax_right, const EquivCat& ex,
                                       const EquivCat& ey, const SearchLimits& limits) {
    if (auto v = g_adjoint_check(adj, lax_left, lax_right))
        throw PreconditionFailed("descend_adjunction: " + v->location);
    DescendedAdjunction out;
    out.left = descend_functor(lax_left, ex, ey, limits);
    out.right = descend_functor(lax_right, ey, ex, limits);
    DescendedFunctor rl = compose_descended(out.right, adj.right, out.left, adj.left, ex, ey, ex);
    DescendedFunctor lr = compose_descended(out.left, adj.left, out.right, adj.right, ey, ex, ey);
    out.adj.left = out.left.functor;
    out.adj.right = out.right.functor;
    out.adj.unit = descend_nat(adj.unit, descended_identity(ex), rl, ex, ex);
    out.adj.counit = descend_nat(adj.counit, lr, descended_identity(ey), ey, ey);
    if (auto v = triangle_check(out.adj))
        throw WorkbenchError("descend_adjunction: descended triangles fail: " + v->location);
    return out;
}

} // namespace equivar
