#include <CLI11.hpp>

#include <array>
#include <iostream>
#include <string>

#include "equivar/document.hpp"
#include "equivar/report.hpp"

using namespace equivar;

namespace {

int emit(const Report& report, bool as_json) {
    std::cout << (as_json ? report.to_json() : report.to_text());
    return report.all_ok() ? 0 : 1;
}

std::string triple_str(const std::array<int, 3>& t) {
    return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) +
           ")";
}

int cmd_validate(const std::string& path, bool as_json, const SearchLimits& limits) {
    WorkbenchDocument doc = load_document(path);
    Report rep;
    rep.command = "validate";
    rep.inputs["document"] = path;
    for (const SectionCheck& c : document_validate(doc, limits)) rep.check(c.name, c.ok, c.witness);
    // round-trip sanity on the canonical serialization
    WorkbenchDocument again = parse_document(serialize_document(doc));
    rep.check("serialization round-trip", document_equal(doc, again));
    return emit(rep, as_json);
}

int cmd_check_action(const std::string& path, bool as_json, const SearchLimits& limits) {
    WorkbenchDocument doc = load_document(path);
    if (!doc.action) throw ParseError("document defines no action");
    Report rep;
    rep.command = "check-action";
    rep.inputs["document"] = path;
    rep.inputs["group_order"] = doc.action->group.order;
    auto v = action_check(*doc.action, limits);
    rep.check("action axioms", !v, v ? v->location : "");
    if (!v) {
        NatTransf phi1 = derive_phi1(*doc.action);
        bool strict_unit =
            phi1.components == identity_nat(identity_functor(doc.action->cat)).components;
        rep.tables["phi1_is_identity"] = strict_unit;
        rep.tables["strict"] = strict_check(*doc.action);
    }
    return emit(rep, as_json);
}

int cmd_cohomology(const std::string& group_spec, u32 m, u32 field_p, u32 root, bool as_json) {
    FinGroup g = parse_group_spec(group_spec);
    CyclicCoeff coeff;
    if (field_p != 0)
        coeff = field_unit_coeff(field_p, root == 0 ? std::optional<u32>{} : std::optional<u32>{root});
    else
        coeff = cyclic_coeff(m);
    Report rep;
    rep.command = "cohomology";
    rep.inputs["group"] = group_spec;
    rep.inputs["coefficient_order"] = coeff.m;
    if (coeff.field_link) rep.inputs["field"] = coeff.field_link->p;
    H2Result h2 = h2_group(g, coeff);
    for (size_t i = 0; i < h2.representatives.size(); ++i) {
        auto bad = cocycle_check(h2.representatives[i]);
        rep.check("representative " + std::to_string(i) + " cocycle law", !bad,
                  bad ? "fails at " + triple_str(*bad) : "");
    }
    rep.tables = h2_tables(h2);
    return emit(rep, as_json);
}

int cmd_equivariantize(const std::string& path, bool as_json, const SearchLimits& limits) {
    WorkbenchDocument doc = load_document(path);
    if (!doc.action) throw ParseError("document defines no action");
    Report rep;
    rep.command = "equivariantize";
    rep.inputs["document"] = path;
    auto v = action_check(*doc.action, limits);
    rep.check("action axioms", !v, v ? v->location : "");
    if (v) return emit(rep, as_json);
    EquivCat e = equivariantize(*doc.action, limits);
    rep.check("skeleton category laws", true);
    rep.check("forgetful functor faithful", true);
    rep.tables = equiv_tables(e);
    return emit(rep, as_json);
}

int cmd_classify(const std::string& group_spec, u32 p, int max_dim, int klass, bool as_json,
                 const SearchLimits& limits) {
    FinGroup g = parse_group_spec(group_spec);
    CyclicCoeff coeff = field_unit_coeff(p);
    Report rep;
    rep.command = "classify-twisted";
    rep.inputs["group"] = group_spec;
    rep.inputs["p"] = p;
    rep.inputs["max_dim"] = max_dim;
    TwoCocycle phi = zero_cocycle(g, coeff);
    if (klass > 0) {
        H2Result h2 = h2_group(g, coeff);
        std::vector<TwoCocycle> reps = all_class_representatives(g, coeff, h2);
        if (klass >= int(reps.size()))
            throw LimitExceeded("cocycle class index out of range (H^2 has " +
                                std::to_string(reps.size()) + " classes)");
        phi = reps[klass];
    }
    rep.inputs["cocycle_class"] = klass;
    auto bad = cocycle_check(phi);
    rep.check("cocycle law", !bad, bad ? "fails at " + triple_str(*bad) : "");
    if (bad) return emit(rep, as_json);
    EquivCat e = twisted_rep_classify(p, max_dim, g, phi, limits);
    nlohmann::ordered_json tables = equiv_tables(e);
    std::vector<int> per_dim = classes_per_dimension(e, max_dim);
    tables["classes_per_dimension"] = per_dim;
    rep.tables = tables;
    return emit(rep, as_json);
}

int cmd_strictify(const std::string& path, bool as_json, const SearchLimits& limits) {
    WorkbenchDocument doc = load_document(path);
    if (!doc.action) throw ParseError("document defines no action");
    Report rep;
    rep.command = "strictify";
    rep.inputs["document"] = path;
    auto v = action_check(*doc.action, limits);
    rep.check("action axioms", !v, v ? v->location : "");
    if (v) return emit(rep, as_json);
    Strictified s = strictify(*doc.action, limits);
    rep.check("shift action strict", strict_check(s.strict_action));
    auto pv = pentagon_check(s.phi);
    rep.check("evaluation pentagon", !pv);
    auto wv = weak_equivalence_check(s.phi, limits);
    rep.check("weak equivalence", !wv, wv ? wv->location : "");
    rep.tables = strictify_tables(s);
    return emit(rep, as_json);
}

int cmd_mate_a2(u32 p, bool as_json, const SearchLimits& limits) {
    A2Bundle bundle = bundled_a2_sod(p);
    Report rep;
    rep.command = "mate";
    rep.inputs["instance"] = "a2";
    rep.inputs["p"] = p;
    RestrictedAction ra = restrict_action(bundle.action, bundle.a_part, limits);
    LaxGFunctor m = mate(ra.inclusion_lax, bundle.adj);
    rep.check("pentagon", !pentagon_check(m).has_value());
    rep.check("weakness criteria", weakness_criteria(m).all());
    rep.check("G-adjoint pair", !g_adjoint_check(bundle.adj, m, ra.inclusion_lax).has_value());
    nlohmann::ordered_json table = nlohmann::ordered_json::array();
    for (size_t g = 0; g < m.comparisons.size(); ++g) {
        nlohmann::ordered_json one;
        one["g"] = g;
        nlohmann::ordered_json comps = nlohmann::ordered_json::array();
        for (const Vec& c : m.comparisons[g].components) comps.push_back(c);
        one["components"] = comps;
        table.push_back(one);
    }
    rep.tables["mate_comparisons"] = table;
    return emit(rep, as_json);
}

int cmd_mate_doc(const std::string& path, const std::string& lax_name, const std::string& adj_name,
                 bool as_json, const SearchLimits& limits) {
    WorkbenchDocument doc = load_document(path);
    auto lit = doc.lax_functors.find(lax_name);
    auto ait = doc.adjunctions.find(adj_name);
    if (lit == doc.lax_functors.end()) throw ParseError("no lax functor named '" + lax_name + "'");
    if (ait == doc.adjunctions.end()) throw ParseError("no adjunction named '" + adj_name + "'");
    Report rep;
    rep.command = "mate";
    rep.inputs["document"] = path;
    rep.inputs["lax_functor"] = lax_name;
    rep.inputs["adjunction"] = adj_name;
    auto v = action_check(*doc.action, limits);
    rep.check("action axioms", !v, v ? v->location : "");
    if (v) return emit(rep, as_json);
    LaxGFunctor m = mate(lit->second, ait->second);
    rep.check("pentagon", !pentagon_check(m).has_value());
    rep.check("weakness criteria", weakness_criteria(m).all());
    nlohmann::ordered_json table = nlohmann::ordered_json::array();
    for (size_t g = 0; g < m.comparisons.size(); ++g) {
        nlohmann::ordered_json one;
        one["g"] = g;
        nlohmann::ordered_json comps = nlohmann::ordered_json::array();
        for (const Vec& c : m.comparisons[g].components) comps.push_back(c);
        one["components"] = comps;
        table.push_back(one);
    }
    rep.tables["mate_comparisons"] = table;
    return emit(rep, as_json);
}

int run_descend(const SODInstance& inst, Report rep, bool as_json, bool a2,
                const SearchLimits& limits) {
    auto v = sod_instance_check(inst, limits);
    rep.check("sod instance invariants", !v, v ? v->location : "");
    if (v) return emit(rep, as_json);
    DescendedSOD d = descend_sod(inst, limits);
    rep.check("stability transport", d.stability_ok);
    rep.check("Hom(B^G, A^G) = 0", !d.ortho_failure,
              d.ortho_failure ? "nonzero at (" + d.cg.skeleton->objects[d.ortho_failure->first] +
                                    ", " + d.cg.skeleton->objects[d.ortho_failure->second] + ")"
                              : "");
    rep.check("descended triangle identities", true); // verified inside descend_adjunction
    rep.check("B^G is the left perpendicular of A^G", d.perp_left_ok);
    rep.check("A^G is the right perpendicular of B^G", d.perp_right_ok);
    rep.check("p^G i^G isomorphic to identity", d.counit_iso);
    rep.tables = sod_tables(d);
    if (a2) {
        int count = 0;
        for (int x = 0; x < d.cg.size(); ++x) {
            const std::string& base = d.cg.action.cat->objects[d.cg.objs[x].base];
            if (base == "S1" || base == "S2" || base == "P+" || base == "P-") ++count;
        }
        rep.tables["indecomposable_type_classes"] = count;
    }
    return emit(rep, as_json);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"equivar: exact workbench for finite group actions on finite k-linear categories"};
    app.require_subcommand(1);
    bool as_json = false;
    u64 max_search = 1000000;
    app.add_flag("--json", as_json, "emit the machine-readable report");
    app.add_option("--max-search", max_search, "enumeration cap for brute-force searches");

    std::string doc_path, group_spec, lax_name, adj_name, sod_arg1, sod_arg2, mate_arg1, mate_arg2;
    u32 coeff_m = 0, field_p = 0, field_root = 0, prime = 0;
    int max_dim = 1, klass = 0;

    CLI::App* validate = app.add_subcommand("validate", "validate every section of a document");
    validate->add_option("document", doc_path)->required();

    CLI::App* check = app.add_subcommand("check-action", "check the action axioms of a document");
    check->add_option("document", doc_path)->required();

    CLI::App* coh = app.add_subcommand("cohomology", "invariant factors and representatives of H^2");
    coh->add_option("--group", group_spec)->required();
    coh->add_option("--coeff", coeff_m);
    coh->add_option("--field", field_p);
    coh->add_option("--root", field_root);

    CLI::App* equiv = app.add_subcommand("equivariantize", "category of equivariant objects");
    equiv->add_option("document", doc_path)->required();

    CLI::App* classify = app.add_subcommand("classify-twisted", "twisted representation classes");
    classify->add_option("--group", group_spec)->required();
    classify->add_option("--prime", prime)->required();
    classify->add_option("--max-dim", max_dim)->required();
    classify->add_option("--class", klass);

    CLI::App* strict = app.add_subcommand("strictify", "strictification of a document's action");
    strict->add_option("document", doc_path)->required();

    CLI::App* mate_cmd = app.add_subcommand("mate", "weak structure induced on an adjoint");
    mate_cmd->add_option("target", mate_arg1, "'a2' or a document path")->required();
    mate_cmd->add_option("arg", mate_arg2, "prime for 'a2'");
    mate_cmd->add_option("--lax", lax_name, "lax functor name (document mode)");
    mate_cmd->add_option("--adjunction", adj_name, "adjunction name (document mode)");

    CLI::App* dsod = app.add_subcommand("descend-sod", "descend a semiorthogonal decomposition");
    dsod->add_option("target", sod_arg1, "'a2' or a document path")->required();
    dsod->add_option("arg", sod_arg2, "prime for 'a2'");

    for (CLI::App* sub : {validate, check, coh, equiv, classify, strict, mate_cmd, dsod})
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);
    SearchLimits limits{max_search};

    try {
        if (app.got_subcommand(validate)) return cmd_validate(doc_path, as_json, limits);
        if (app.got_subcommand(check)) return cmd_check_action(doc_path, as_json, limits);
        if (app.got_subcommand(coh)) {
            if (field_p == 0 && coeff_m == 0)
                throw ParseError("cohomology needs --coeff M or --field P");
            return cmd_cohomology(group_spec, coeff_m, field_p, field_root, as_json);
        }
        if (app.got_subcommand(equiv)) return cmd_equivariantize(doc_path, as_json, limits);
        if (app.got_subcommand(classify))
            return cmd_classify(group_spec, prime, max_dim, klass, as_json, limits);
        if (app.got_subcommand(strict)) return cmd_strictify(doc_path, as_json, limits);
        if (app.got_subcommand(mate_cmd)) {
            if (mate_arg1 == "a2") {
                if (mate_arg2.empty()) throw ParseError("mate a2 needs a prime argument");
                return cmd_mate_a2(static_cast<u32>(std::stoul(mate_arg2)), as_json, limits);
            }
            if (lax_name.empty() || adj_name.empty())
                throw ParseError("mate on a document needs --lax and --adjunction");
            return cmd_mate_doc(mate_arg1, lax_name, adj_name, as_json, limits);
        }
        if (app.got_subcommand(dsod)) {
            Report rep;
            rep.command = "descend-sod";
            if (sod_arg1 == "a2") {
                if (sod_arg2.empty()) throw ParseError("descend-sod a2 needs a prime argument");
                u32 p = static_cast<u32>(std::stoul(sod_arg2));
                A2Bundle bundle = bundled_a2_sod(p);
                rep.inputs["instance"] = "a2";
                rep.inputs["p"] = p;
                SODInstance inst{bundle.action, bundle.a_part, bundle.b_part, bundle.adj};
                return run_descend(inst, std::move(rep), as_json, true, limits);
            }
            WorkbenchDocument doc = load_document(sod_arg1);
            rep.inputs["document"] = sod_arg1;
            return run_descend(doc.sod_instance(), std::move(rep), as_json, false, limits);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const LimitExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SearchSpaceTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotAGroup& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const WorkbenchError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
