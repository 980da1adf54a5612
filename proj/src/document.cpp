#include "equivar/document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "equivar/strictify.hpp"

namespace equivar {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

json need(const json& j, const char* key) {
    if (!j.contains(key)) fail(std::string("missing key '") + key + "'");
    return j.at(key);
}

std::vector<u32> u32_list(const json& j) {
    std::vector<u32> out;
    for (const auto& v : j) out.push_back(v.get<u32>());
    return out;
}

FinGroup parse_group(const json& j) {
    std::string kind = need(j, "kind").get<std::string>();
    if (kind == "cyclic") return cyclic_group(need(j, "n").get<int>());
    if (kind == "dihedral") return dihedral_group(need(j, "n").get<int>());
    if (kind == "symmetric") return symmetric_group(need(j, "n").get<int>());
    if (kind == "product") {
        const json& factors = need(j, "factors");
        if (factors.size() < 2) fail("product group needs at least two factors");
        FinGroup g = parse_group(factors[0]);
        for (size_t i = 1; i < factors.size(); ++i) g = product_group(g, parse_group(factors[i]));
        return g;
    }
    if (kind == "table") {
        std::vector<int> table;
        for (const auto& v : need(j, "table")) table.push_back(v.get<int>());
        return group_from_table(need(j, "order").get<int>(), std::move(table));
    }
    fail("unknown group kind '" + kind + "'");
}

json group_to_json(const FinGroup& g) {
    json j;
    j["kind"] = "table";
    j["order"] = g.order;
    j["table"] = g.table;
    return j;
}

CyclicCoeff parse_coeff(const json& j) {
    if (j.contains("field")) {
        const json& f = j.at("field");
        u32 p = need(f, "p").get<u32>();
        std::optional<u32> root;
        if (f.contains("root")) root = f.at("root").get<u32>();
        CyclicCoeff c = field_unit_coeff(p, root);
        if (j.contains("m") && j.at("m").get<u32>() != c.m)
            fail("coefficient order disagrees with the field link");
        return c;
    }
    return cyclic_coeff(need(j, "m").get<u32>());
}

json coeff_to_json(const CyclicCoeff& c) {
    json j;
    j["m"] = c.m;
    if (c.field_link) j["field"] = {{"p", c.field_link->p}, {"root", c.field_link->root}};
    return j;
}

LinCatPtr parse_category(const json& j, const std::optional<FinGroup>& group) {
    std::string kind = need(j, "kind").get<std::string>();
    if (kind == "vect") return vect_cat(need(j, "p").get<u32>(), need(j, "max_dim").get<int>());
    if (kind == "rep_a2")
        return rep_a2_cat(need(j, "p").get<u32>(), need(j, "max_dim").get<int>()).cat;
    if (kind == "omega") {
        if (!group) fail("omega category requires a group section");
        return omega_cat(*group, need(j, "p").get<u32>());
    }
    if (kind == "explicit") {
        u32 p = need(j, "p").get<u32>();
        std::vector<std::string> objects;
        for (const auto& v : need(j, "objects")) objects.push_back(v.get<std::string>());
        int n = static_cast<int>(objects.size());
        std::vector<int> dims;
        for (const auto& row : need(j, "hom_dims"))
            for (const auto& v : row) dims.push_back(v.get<int>());
        if (int(dims.size()) != n * n) fail("hom_dims must be an n x n grid");
        auto dim = [&](int x, int y) { return dims[size_t(x) * n + y]; };
        std::vector<FpMatrix> comp(size_t(n) * n * n);
        const json& craw = need(j, "comp");
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    FpMatrix t(p, dim(x, z), dim(y, z) * dim(x, y));
                    std::string key = std::to_string(x) + "," + std::to_string(y) + "," +
                                      std::to_string(z);
                    if (craw.contains(key)) {
                        std::vector<u32> flat = u32_list(craw.at(key));
                        if (flat.size() != t.entries.size())
                            fail("comp tensor '" + key + "' has wrong size");
                        for (size_t i = 0; i < flat.size(); ++i) t.entries[i] = flat[i] % p;
                    } else if (!t.entries.empty()) {
                        fail("comp tensor '" + key + "' missing");
                    }
                    comp[(size_t(x) * n + y) * n + z] = std::move(t);
                }
        std::vector<Vec> ids;
        for (const auto& row : need(j, "ids")) ids.push_back(u32_list(row));
        return std::make_shared<const LinCat>(
            make_lincat(p, std::move(objects), std::move(dims), std::move(comp), std::move(ids)));
    }
    fail("unknown category kind '" + kind + "'");
}

json category_to_json(const LinCat& c) {
    json j;
    j["kind"] = "explicit";
    j["p"] = c.p;
    j["objects"] = c.objects;
    json dims = json::array();
    for (int x = 0; x < c.size(); ++x) {
        json row = json::array();
        for (int y = 0; y < c.size(); ++y) row.push_back(c.hom_dim(x, y));
        dims.push_back(row);
    }
    j["hom_dims"] = dims;
    json comp = json::object();
    for (int x = 0; x < c.size(); ++x)
        for (int y = 0; y < c.size(); ++y)
            for (int z = 0; z < c.size(); ++z) {
                const FpMatrix& t = c.comp_tensor(x, y, z);
                if (t.entries.empty()) continue;
                comp[std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z)] =
                    t.entries;
            }
    j["comp"] = comp;
    json ids = json::array();
    for (int x = 0; x < c.size(); ++x) ids.push_back(c.ids[x]);
    j["ids"] = ids;
    return j;
}

} // namespace

SODInstance WorkbenchDocument::sod_instance() const {
    if (!sod) throw ParseError("document has no sod section");
    SODInstance s;
    if (!action) throw ParseError("sod section requires an action");
    s.action = action;
    auto a = subcategories.find(sod->a);
    auto b = subcategories.find(sod->b);
    auto adj = adjunctions.find(sod->adjunction);
    if (a == subcategories.end() || b == subcategories.end() || adj == adjunctions.end())
        throw ParseError("sod section references unknown names");
    s.a_part = a->second;
    s.b_part = b->second;
    s.adj = adj->second;
    return s;
}

WorkbenchDocument parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        fail(std::string("not valid document syntax: ") + e.what());
    }
    WorkbenchDocument doc;
    if (j.contains("format_version")) doc.format_version = j.at("format_version").get<int>();
    if (doc.format_version != 1) fail("unsupported format_version");

    if (j.contains("group")) doc.group = parse_group(j.at("group"));
    if (j.contains("coefficients")) doc.coeff = parse_coeff(j.at("coefficients"));
    if (j.contains("cocycle")) {
        if (!doc.group || !doc.coeff) fail("cocycle requires group and coefficients sections");
        std::vector<u32> values;
        for (const auto& row : need(j.at("cocycle"), "values"))
            for (const auto& v : row) values.push_back(v.get<u32>());
        doc.cocycle = cocycle_from_values(*doc.group, *doc.coeff, std::move(values));
    }
    if (j.contains("category")) doc.category = parse_category(j.at("category"), doc.group);

    if (j.contains("subcategories")) {
        if (!doc.category) fail("subcategories require a category");
        for (const auto& [name, sj] : j.at("subcategories").items()) {
            std::vector<int> members;
            for (const auto& v : need(sj, "members")) members.push_back(v.get<int>());
            doc.subcategories.emplace(name, make_full_subcat(doc.category, std::move(members)));
        }
    }

    auto resolve_cat = [&](const std::string& name) -> LinCatPtr {
        if (name == "C") {
            if (!doc.category) fail("no category section");
            return doc.category;
        }
        auto it = doc.subcategories.find(name);
        if (it == doc.subcategories.end()) fail("unknown category reference '" + name + "'");
        return it->second.sub;
    };

    if (j.contains("functors")) {
        for (const auto& [name, fj] : j.at("functors").items()) {
            LinFunctor f;
            f.source = resolve_cat(fj.contains("source") ? fj.at("source").get<std::string>() : "C");
            f.target = resolve_cat(fj.contains("target") ? fj.at("target").get<std::string>() : "C");
            for (const auto& v : need(fj, "obj_map")) f.obj_map.push_back(v.get<int>());
            int n = f.source->size();
            if (int(f.obj_map.size()) != n) fail("functor '" + name + "': obj_map length");
            const json& hm = need(fj, "hom_maps");
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    if (f.obj_map[x] < 0 || f.obj_map[x] >= f.target->size())
                        fail("functor '" + name + "': object map out of range");
                    FpMatrix m(f.source->p, f.target->hom_dim(f.obj_map[x], f.obj_map[y]),
                               f.source->hom_dim(x, y));
                    std::string key = std::to_string(x) + "," + std::to_string(y);
                    if (hm.contains(key)) {
                        std::vector<u32> flat = u32_list(hm.at(key));
                        if (flat.size() != m.entries.size())
                            fail("functor '" + name + "': hom map '" + key + "' has wrong size");
                        for (size_t i = 0; i < flat.size(); ++i)
                            m.entries[i] = flat[i] % f.source->p;
                    } else if (!m.entries.empty()) {
                        fail("functor '" + name + "': hom map '" + key + "' missing");
                    }
                    f.hom_maps.push_back(std::move(m));
                }
            doc.functors.emplace(name, std::move(f));
        }
    }

    auto resolve_functor = [&](const json& ref, const std::string& who) -> LinFunctor {
        if (ref.is_string()) {
            std::string name = ref.get<std::string>();
            if (name == "Id") return identity_functor(resolve_cat("C"));
            if (name.rfind("Id:", 0) == 0)
                return identity_functor(resolve_cat(name.substr(3)));
            auto it = doc.functors.find(name);
            if (it == doc.functors.end()) fail(who + ": unknown functor '" + name + "'");
            return it->second;
        }
        if (ref.is_array() && !ref.empty()) {
            // composition chain, leftmost outermost
            std::vector<LinFunctor> parts;
            for (const auto& r : ref) {
                std::string name = r.get<std::string>();
                auto it = doc.functors.find(name);
                if (it == doc.functors.end()) fail(who + ": unknown functor '" + name + "'");
                parts.push_back(it->second);
            }
            LinFunctor f = parts.back();
            for (size_t i = parts.size() - 1; i-- > 0;) f = compose_functors(parts[i], f);
            return f;
        }
        fail(who + ": bad functor reference");
    };

    if (j.contains("transformations")) {
        for (const auto& [name, tj] : j.at("transformations").items()) {
            NatTransf t;
            t.from = resolve_functor(need(tj, "from"), "transformation '" + name + "'");
            t.to = resolve_functor(need(tj, "to"), "transformation '" + name + "'");
            for (const auto& row : need(tj, "components")) t.components.push_back(u32_list(row));
            int n = t.from.source->size();
            if (int(t.components.size()) != n)
                fail("transformation '" + name + "': one component per object required");
            for (int x = 0; x < n; ++x) {
                for (u32& v : t.components[x]) v %= t.from.target->p;
                if (int(t.components[x].size()) != t.from.target->hom_dim(t.from(x), t.to(x)))
                    fail("transformation '" + name + "': component length at object " +
                         std::to_string(x));
            }
            doc.transformations.emplace(name, std::move(t));
        }
    }

    auto resolve_nat = [&](const std::string& name, const std::string& who) -> NatTransf {
        auto it = doc.transformations.find(name);
        if (it == doc.transformations.end()) fail(who + ": unknown transformation '" + name + "'");
        return it->second;
    };

    if (j.contains("action")) {
        const json& aj = j.at("action");
        if (!doc.group) fail("action requires a group section");
        std::string kind = need(aj, "kind").get<std::string>();
        if (kind == "trivial") {
            if (!doc.category) fail("trivial action requires a category");
            doc.action = std::make_shared<const GAction>(trivial_action(*doc.group, doc.category));
        } else if (kind == "cocycle_vect") {
            if (!doc.cocycle || !doc.cocycle->coeff.field_link)
                fail("cocycle_vect action requires a field-linked cocycle");
            int max_dim = need(aj, "max_dim").get<int>();
            doc.action = std::make_shared<const GAction>(action_from_cocycle(
                doc.cocycle->coeff.field_link->p, max_dim, *doc.group, *doc.cocycle));
            doc.category = doc.action->cat;
        } else if (kind == "omega_translation") {
            u32 p = need(aj, "p").get<u32>();
            doc.action =
                std::make_shared<const GAction>(omega_translation_action(*doc.group, p));
            doc.category = doc.action->cat;
        } else if (kind == "a2_sign") {
            A2Bundle bundle = bundled_a2_sod(need(aj, "p").get<u32>());
            doc.action = bundle.action;
            doc.category = bundle.action->cat;
        } else if (kind == "explicit") {
            if (!doc.category) fail("explicit action requires a category");
            GAction a;
            a.group = *doc.group;
            a.cat = doc.category;
            for (const auto& r : need(aj, "rho"))
                a.functors.push_back(resolve_functor(r, "action rho"));
            if (int(a.functors.size()) != doc.group->order)
                fail("action: one functor per group element required");
            for (const auto& row : need(aj, "phi"))
                for (const auto& r : row)
                    a.compose_isos.push_back(resolve_nat(r.get<std::string>(), "action phi"));
            if (a.compose_isos.size() != size_t(doc.group->order) * doc.group->order)
                fail("action: |G|^2 comparison isomorphisms required");
            doc.action = std::make_shared<const GAction>(std::move(a));
        } else {
            fail("unknown action kind '" + kind + "'");
        }
    }

    if (j.contains("lax_functors")) {
        if (!doc.action) fail("lax_functors require an action");
        for (const auto& [name, lj] : j.at("lax_functors").items()) {
            LaxGFunctor l;
            std::string side = need(lj, "side").get<std::string>();
            if (side != "right" && side != "left") fail("lax functor '" + name + "': bad side");
            l.side = side == "right" ? LaxSide::Right : LaxSide::Left;
            l.src_action = doc.action;
            l.tgt_action = doc.action;
            l.functor = resolve_functor(need(lj, "functor"), "lax functor '" + name + "'");
            for (const auto& r : need(lj, "comparisons"))
                l.comparisons.push_back(resolve_nat(r.get<std::string>(), "lax functor '" + name + "'"));
            if (int(l.comparisons.size()) != doc.group->order)
                fail("lax functor '" + name + "': one comparison per group element");
            doc.lax_functors.emplace(name, std::move(l));
        }
    }

    if (j.contains("adjunctions")) {
        for (const auto& [name, aj] : j.at("adjunctions").items()) {
            AdjunctionData adj;
            adj.left = resolve_functor(need(aj, "left"), "adjunction '" + name + "'");
            adj.right = resolve_functor(need(aj, "right"), "adjunction '" + name + "'");
            adj.unit = resolve_nat(need(aj, "unit").get<std::string>(), "adjunction '" + name + "'");
            adj.counit =
                resolve_nat(need(aj, "counit").get<std::string>(), "adjunction '" + name + "'");
            doc.adjunctions.emplace(name, std::move(adj));
        }
    }

    if (j.contains("sod")) {
        const json& sj = j.at("sod");
        WorkbenchDocument::SodRef ref;
        ref.a = need(sj, "a").get<std::string>();
        ref.b = need(sj, "b").get<std::string>();
        ref.adjunction = need(sj, "adjunction").get<std::string>();
        if (!doc.subcategories.count(ref.a) || !doc.subcategories.count(ref.b) ||
            !doc.adjunctions.count(ref.adjunction))
            fail("sod section references unknown names");
        doc.sod = ref;
    }
    return doc;
}

WorkbenchDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open document '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

namespace {

json functor_to_json(const WorkbenchDocument& doc, const LinFunctor& f) {
    json j;
    auto catname = [&](const LinCatPtr& c) -> std::string {
        if (same_category(c, doc.category)) return "C";
        for (const auto& [name, s] : doc.subcategories)
            if (same_category(c, s.sub)) return name;
        throw ParseError("serialize: functor endpoint is not a named category");
    };
    j["source"] = catname(f.source);
    j["target"] = catname(f.target);
    j["obj_map"] = f.obj_map;
    json hm = json::object();
    int n = f.source->size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const FpMatrix& m = f.hom_map(x, y);
            if (m.entries.empty()) continue;
            hm[std::to_string(x) + "," + std::to_string(y)] = m.entries;
        }
    j["hom_maps"] = hm;
    return j;
}

} // namespace

std::string serialize_document(const WorkbenchDocument& doc) {
    json j;
    j["format_version"] = doc.format_version;
    if (doc.group) j["group"] = group_to_json(*doc.group);
    if (doc.coeff) j["coefficients"] = coeff_to_json(*doc.coeff);
    if (doc.cocycle) {
        json rows = json::array();
        int n = doc.cocycle->group.order;
        for (int g = 0; g < n; ++g) {
            json row = json::array();
            for (int h = 0; h < n; ++h) row.push_back(doc.cocycle->at(g, h));
            rows.push_back(row);
        }
        j["cocycle"] = {{"values", rows}};
    }
    if (doc.category) j["category"] = category_to_json(*doc.category);
    if (!doc.subcategories.empty()) {
        json subs = json::object();
        for (const auto& [name, s] : doc.subcategories) subs[name] = {{"members", s.members}};
        j["subcategories"] = subs;
    }
    // named functors first, then action functors/transformations inline
    std::map<std::string, LinFunctor> functors = doc.functors;
    std::map<std::string, NatTransf> transformations = doc.transformations;
    GActionPtr action = doc.action;
    if (action) {
        json aj;
        aj["kind"] = "explicit";
        json rho = json::array();
        for (int g = 0; g < action->group.order; ++g) {
            std::string name = "rho_" + std::to_string(g);
            functors[name] = action->functors[g];
            rho.push_back(name);
        }
        json phi = json::array();
        for (int g = 0; g < action->group.order; ++g) {
            json row = json::array();
            for (int h = 0; h < action->group.order; ++h) {
                std::string name = "phi_" + std::to_string(g) + "_" + std::to_string(h);
                transformations[name] = action->phi(g, h);
                row.push_back(name);
            }
            phi.push_back(row);
        }
        aj["rho"] = rho;
        aj["phi"] = phi;
        j["action"] = aj;
    }
    if (!functors.empty()) {
        json fj = json::object();
        for (const auto& [name, f] : functors) fj[name] = functor_to_json(doc, f);
        j["functors"] = fj;
    }
    // transformation endpoints are stored as (chains of) named functors
    auto chain = [&](const LinFunctor& f) -> json {
        for (const auto& [fname, g] : functors)
            if (functor_equal(f, g)) return fname;
        if (doc.category && functor_equal(f, identity_functor(doc.category))) return "Id";
        for (const auto& [sname, s] : doc.subcategories)
            if (functor_equal(f, identity_functor(s.sub))) return "Id:" + sname;
        for (const auto& [n1, f1] : functors)
            for (const auto& [n2, f2] : functors)
                if (same_category(f1.target, f2.source) &&
                    functor_equal(f, compose_functors(f2, f1)))
                    return json::array({n2, n1});
        throw ParseError("serialize: transformation endpoint is not expressible");
    };
    auto nat_to_json = [&](const NatTransf& t) {
        json one;
        one["from"] = chain(t.from);
        one["to"] = chain(t.to);
        json comps = json::array();
        for (const Vec& c : t.components) comps.push_back(c);
        one["components"] = comps;
        return one;
    };
    std::map<std::string, json> all_transformations;
    for (const auto& [name, t] : transformations) all_transformations[name] = nat_to_json(t);
    auto named_nat = [&](const NatTransf& t) -> std::optional<std::string> {
        for (const auto& [tname, existing] : transformations)
            if (existing.components == t.components && functor_equal(existing.from, t.from) &&
                functor_equal(existing.to, t.to))
                return tname;
        return std::nullopt;
    };
    auto emit_nat = [&](const NatTransf& t, const std::string& fresh) -> std::string {
        if (auto existing = named_nat(t)) return *existing;
        all_transformations[fresh] = nat_to_json(t);
        return fresh;
    };

    json lax_block = json::object();
    for (const auto& [name, l] : doc.lax_functors) {
        json one;
        one["side"] = l.side == LaxSide::Right ? "right" : "left";
        one["functor"] = chain(l.functor);
        json comps = json::array();
        for (size_t g = 0; g < l.comparisons.size(); ++g)
            comps.push_back(emit_nat(l.comparisons[g], "lax_" + name + "_" + std::to_string(g)));
        one["comparisons"] = comps;
        lax_block[name] = one;
    }
    json adj_block = json::object();
    for (const auto& [name, adj] : doc.adjunctions) {
        json one;
        one["left"] = chain(adj.left);
        one["right"] = chain(adj.right);
        one["unit"] = emit_nat(adj.unit, "adj_" + name + "_unit");
        one["counit"] = emit_nat(adj.counit, "adj_" + name + "_counit");
        adj_block[name] = one;
    }

    if (!all_transformations.empty()) {
        json tj = json::object();
        for (const auto& [name, t] : all_transformations) tj[name] = t;
        j["transformations"] = tj;
    }
    if (!lax_block.empty()) j["lax_functors"] = lax_block;
    if (!adj_block.empty()) j["adjunctions"] = adj_block;
    if (doc.sod)
        j["sod"] = {{"a", doc.sod->a}, {"b", doc.sod->b}, {"adjunction", doc.sod->adjunction}};
    return j.dump(2) + "\n";
}

bool document_equal(const WorkbenchDocument& a, const WorkbenchDocument& b) {
    // semantic sections must agree
    if (a.format_version != b.format_version) return false;
    if (a.group.has_value() != b.group.has_value()) return false;
    if (a.group && !(*a.group == *b.group)) return false;
    if (a.coeff != b.coeff) return false;
    if (a.cocycle.has_value() != b.cocycle.has_value()) return false;
    if (a.cocycle && !(*a.cocycle == *b.cocycle)) return false;
    if ((a.category != nullptr) != (b.category != nullptr)) return false;
    if (a.category && !same_category(a.category, b.category)) return false;
    if ((a.action != nullptr) != (b.action != nullptr)) return false;
    if (a.action && !action_equal(*a.action, *b.action)) return false;
    // named pieces are compared through the canonical form, since the
    // serializer names previously inline action data
    return serialize_document(a) == serialize_document(b);
}

std::vector<SectionCheck> document_validate(const WorkbenchDocument& doc,
                                            const SearchLimits& limits) {
    std::vector<SectionCheck> out;
    auto add = [&](const std::string& name, bool ok, const std::string& witness = "") {
        out.push_back(SectionCheck{name, ok, ok ? "" : witness});
    };
    if (doc.group) add("group", true); // axioms enforced at construction
    if (doc.cocycle) {
        auto bad = cocycle_check(*doc.cocycle);
        add("cocycle", !bad,
            bad ? "cocycle law fails at (" + std::to_string((*bad)[0]) + "," +
                      std::to_string((*bad)[1]) + "," + std::to_string((*bad)[2]) + ")"
                : "");
    }
    if (doc.category) {
        auto v = validate(*doc.category);
        add("category", !v, v ? v->location : "");
    }
    for (const auto& [name, s] : doc.subcategories) {
        auto v = subcat_closure_check(s, limits);
        add("subcategory " + name, !v, v ? v->location : "");
    }
    for (const auto& [name, f] : doc.functors) {
        auto v = validate(f);
        add("functor " + name, !v, v ? v->location : "");
    }
    for (const auto& [name, t] : doc.transformations) {
        auto v = validate(t);
        add("transformation " + name, !v, v ? v->location : "");
    }
    if (doc.action) {
        auto v = action_check(*doc.action, limits);
        add("action", !v, v ? v->location : "");
    }
    for (const auto& [name, l] : doc.lax_functors) {
        auto bad = pentagon_check(l);
        add("lax functor " + name, !bad,
            bad ? "pentagon fails at (" + std::to_string(bad->first) + "," +
                      std::to_string(bad->second) + ")"
                : "");
    }
    for (const auto& [name, adj] : doc.adjunctions) {
        auto v = triangle_check(adj);
        add("adjunction " + name, !v, v ? v->location : "");
    }
    return out;
}

FinGroup parse_group_spec(const std::string& spec) {
    if (spec == "klein4") return product_group(cyclic_group(2), cyclic_group(2));
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        std::string kind = spec.substr(0, colon);
        int n = 0;
        try {
            n = std::stoi(spec.substr(colon + 1));
        } catch (...) {
            throw ParseError("bad group spec '" + spec + "'");
        }
        if (kind == "cyclic") return cyclic_group(n);
        if (kind == "dihedral") return dihedral_group(n);
        if (kind == "symmetric") return symmetric_group(n);
    }
    throw ParseError("bad group spec '" + spec + "' (use cyclic:N, dihedral:N, symmetric:N, klein4)");
}

} // namespace equivar
