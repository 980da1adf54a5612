#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "equivar/document.hpp"
#include "equivar/report.hpp"

namespace py = pybind11;
using namespace equivar;

namespace {

TwoCocycle class_representative(const FinGroup& g, const CyclicCoeff& coeff, int klass) {
    if (klass == 0) return zero_cocycle(g, coeff);
    H2Result h2 = h2_group(g, coeff);
    std::vector<TwoCocycle> reps = all_class_representatives(g, coeff, h2);
    if (klass < 0 || klass >= int(reps.size()))
        throw LimitExceeded("cocycle class index out of range");
    return reps[klass];
}

py::dict equiv_summary(const EquivCat& e, int max_dim) {
    py::dict out;
    out["class_count"] = e.size();
    py::list labels;
    for (const std::string& label : e.skeleton->objects) labels.append(label);
    out["labels"] = labels;
    if (max_dim >= 0) out["classes_per_dimension"] = classes_per_dimension(e, max_dim);
    py::list dims;
    for (int x = 0; x < e.size(); ++x) {
        py::list row;
        for (int y = 0; y < e.size(); ++y) row.append(e.skeleton->hom_dim(x, y));
        dims.append(row);
    }
    out["hom_dims"] = dims;
    out["characteristic_warning"] = e.char_warning;
    return out;
}

} // namespace

PYBIND11_MODULE(equivar, m) {
    m.doc() = "Exact workbench for finite group actions on finite k-linear categories";

    py::register_exception<WorkbenchError>(m, "WorkbenchError");

    m.def("group_order", [](const std::string& spec) { return parse_group_spec(spec).order; },
          py::arg("group"));

    m.def(
        "element_orders",
        [](const std::string& spec) {
            FinGroup g = parse_group_spec(spec);
            std::vector<int> out(g.order);
            for (int x = 0; x < g.order; ++x) out[x] = element_order(g, x);
            return out;
        },
        py::arg("group"));

    m.def(
        "h2",
        [](const std::string& spec, u32 m_coeff, u32 field_p) {
            FinGroup g = parse_group_spec(spec);
            CyclicCoeff coeff = field_p ? field_unit_coeff(field_p) : cyclic_coeff(m_coeff);
            H2Result h2 = h2_group(g, coeff);
            py::dict out;
            out["invariant_factors"] = h2.invariant_factors;
            out["class_count"] = h2.class_count();
            py::list reps;
            for (const TwoCocycle& rep : h2.representatives) {
                py::list grid;
                int n = g.order;
                for (int x = 0; x < n; ++x) {
                    py::list row;
                    for (int y = 0; y < n; ++y) row.append(rep.at(x, y));
                    grid.append(row);
                }
                reps.append(grid);
            }
            out["representatives"] = reps;
            return out;
        },
        py::arg("group"), py::arg("m") = 0, py::arg("field") = 0,
        "Invariant factors and representative cocycles of H^2(G, Z/m)");

    m.def(
        "cocycle_first_failure",
        [](const std::string& spec, u32 m_coeff,
           const std::vector<std::vector<u32>>& values) -> py::object {
            FinGroup g = parse_group_spec(spec);
            std::vector<u32> flat;
            for (const auto& row : values) flat.insert(flat.end(), row.begin(), row.end());
            TwoCocycle phi = cocycle_from_values(g, cyclic_coeff(m_coeff), flat);
            auto bad = cocycle_check(phi);
            if (!bad) return py::none();
            return py::make_tuple((*bad)[0], (*bad)[1], (*bad)[2]);
        },
        py::arg("group"), py::arg("m"), py::arg("values"),
        "First failing triple of the cocycle law, or None");

    m.def(
        "classify_twisted",
        [](const std::string& spec, u32 p, int max_dim, int klass) {
            FinGroup g = parse_group_spec(spec);
            TwoCocycle phi = class_representative(g, field_unit_coeff(p), klass);
            EquivCat e = twisted_rep_classify(p, max_dim, g, phi);
            return equiv_summary(e, max_dim);
        },
        py::arg("group"), py::arg("p"), py::arg("max_dim"), py::arg("cocycle_class") = 0,
        "Isomorphism classes of twisted representations per dimension");

    m.def(
        "equivariantize_trivial",
        [](const std::string& spec, u32 p, int max_dim) {
            FinGroup g = parse_group_spec(spec);
            GAction a = trivial_action(g, vect_cat(p, max_dim));
            return equiv_summary(equivariantize(a), max_dim);
        },
        py::arg("group"), py::arg("p"), py::arg("max_dim"),
        "Equivariant classes of the trivial action on the vector-space category");

    m.def(
        "strictify_cocycle",
        [](const std::string& spec, u32 p, int max_dim, int klass) {
            FinGroup g = parse_group_spec(spec);
            TwoCocycle phi = class_representative(g, field_unit_coeff(p), klass);
            GAction a = action_from_cocycle(p, max_dim, g, phi);
            if (auto v = action_check(a)) throw WorkbenchError(v->location);
            Strictified s = strictify(a);
            EquivCat before = equivariantize(a);
            EquivCat after = equivariantize(s.strict_action);
            py::dict out;
            out["object_count"] = s.cprime->size();
            out["strict"] = strict_check(s.strict_action);
            out["weak_equivalence"] = !weak_equivalence_check(s.phi).has_value();
            out["equivariant_class_count"] = before.size();
            out["class_counts_match"] = before.size() == after.size();
            return out;
        },
        py::arg("group"), py::arg("p"), py::arg("max_dim"), py::arg("cocycle_class") = 0,
        "Strictification summary of a cocycle action");

    m.def(
        "descend_a2",
        [](u32 p) {
            A2Bundle b = bundled_a2_sod(p);
            SODInstance inst{b.action, b.a_part, b.b_part, b.adj};
            DescendedSOD d = descend_sod(inst);
            py::dict out;
            out["orthogonal"] = !d.ortho_failure.has_value();
            out["perpendicular_left"] = d.perp_left_ok;
            out["perpendicular_right"] = d.perp_right_ok;
            out["stability"] = d.stability_ok;
            out["counit_iso"] = d.counit_iso;
            out["class_count"] = d.cg.size();
            int indecomposable = 0;
            for (int x = 0; x < d.cg.size(); ++x) {
                const std::string& base = d.cg.action.cat->objects[d.cg.objs[x].base];
                if (base == "S1" || base == "S2" || base == "P+" || base == "P-") ++indecomposable;
            }
            out["indecomposable_type_classes"] = indecomposable;
            return out;
        },
        py::arg("p"), "Elagin descent report for the bundled quiver instance");

    m.def(
        "mate_a2",
        [](u32 p) {
            A2Bundle b = bundled_a2_sod(p);
            RestrictedAction ra = restrict_action(b.action, b.a_part);
            LaxGFunctor lax = mate(ra.inclusion_lax, b.adj);
            py::dict out;
            out["pentagon"] = !pentagon_check(lax).has_value();
            out["weak"] = weakness_criteria(lax).all();
            out["g_adjoint"] = !g_adjoint_check(b.adj, lax, ra.inclusion_lax).has_value();
            return out;
        },
        py::arg("p"), "Mate of the slot inclusion in the bundled quiver instance");

    m.def(
        "validate_document",
        [](const std::string& text) {
            WorkbenchDocument doc = parse_document(text);
            py::list out;
            for (const SectionCheck& c : document_validate(doc))
                out.append(py::make_tuple(c.name, c.ok, c.witness));
            return out;
        },
        py::arg("text"), "Section-by-section validation of a workbench document");

    m.def(
        "canonicalize_document",
        [](const std::string& text) { return serialize_document(parse_document(text)); },
        py::arg("text"), "Canonical serialization of a workbench document");
}
