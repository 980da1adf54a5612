#include "equivar/report.hpp"

#include <sstream>

namespace equivar {

using json = nlohmann::ordered_json;

void Report::check(const std::string& name, bool ok, const std::string& witness) {
    checks.push_back(Check{name, ok, witness});
}

bool Report::all_ok() const {
    for (const Check& c : checks)
        if (!c.ok) return false;
    return true;
}

std::string Report::to_json() const {
    json j;
    j["command"] = command;
    j["inputs"] = inputs;
    json cj = json::array();
    for (const Check& c : checks) {
        json one;
        one["name"] = c.name;
        one["status"] = c.ok ? "ok" : "fail";
        if (!c.witness.empty()) one["witness"] = c.witness;
        cj.push_back(one);
    }
    j["checks"] = cj;
    j["tables"] = tables;
    return j.dump(2) + "\n";
}

namespace {

void render_value(std::ostream& os, const json& v, const std::string& indent) {
    if (v.is_object()) {
        os << "\n";
        for (const auto& [k, val] : v.items()) {
            os << indent << k << ":";
            render_value(os, val, indent + "  ");
        }
    } else if (v.is_array()) {
        bool scalars = true;
        for (const auto& e : v)
            if (e.is_object() || e.is_array()) scalars = false;
        if (scalars) {
            os << " [";
            bool first = true;
            for (const auto& e : v) {
                if (!first) os << " ";
                first = false;
                os << e.dump();
            }
            os << "]\n";
        } else {
            os << "\n";
            for (size_t i = 0; i < v.size(); ++i) {
                os << indent << "- ";
                if (v[i].is_object()) {
                    bool first = true;
                    std::ostringstream inner;
                    for (const auto& [k, val] : v[i].items()) {
                        if (!first) inner << indent << "  ";
                        first = false;
                        inner << k << ":";
                        render_value(inner, val, indent + "    ");
                    }
                    os << inner.str();
                } else {
                    render_value(os, v[i], indent + "  ");
                }
            }
        }
    } else {
        os << " " << v.dump() << "\n";
    }
}

} // namespace

std::string Report::to_text() const {
    std::ostringstream os;
    os << "command: " << command << "\n";
    for (const auto& [k, v] : inputs.items()) os << "input " << k << ": " << v.dump() << "\n";
    for (const Check& c : checks) {
        os << "check " << c.name << ": " << (c.ok ? "ok" : "FAIL");
        if (!c.witness.empty()) os << " (" << c.witness << ")";
        os << "\n";
    }
    for (const auto& [k, v] : tables.items()) {
        os << k << ":";
        render_value(os, v, "  ");
    }
    return os.str();
}

json equiv_tables(const EquivCat& e) {
    json t;
    const LinCat& c = *e.action.cat;
    t["class_count"] = e.size();
    json classes = json::array();
    for (int x = 0; x < e.size(); ++x) {
        json one;
        one["label"] = e.skeleton->objects[x];
        one["base"] = c.objects[e.objs[x].base];
        json lin = json::array();
        for (const Vec& v : e.objs[x].lin) lin.push_back(v);
        one["theta"] = lin;
        classes.push_back(one);
    }
    t["classes"] = classes;
    json dims = json::array();
    for (int x = 0; x < e.size(); ++x) {
        json row = json::array();
        for (int y = 0; y < e.size(); ++y) row.push_back(e.skeleton->hom_dim(x, y));
        dims.push_back(row);
    }
    t["hom_dims"] = dims;
    if (e.char_warning) t["characteristic_warning"] = "p divides |G|";
    return t;
}

json h2_tables(const H2Result& h2) {
    json t;
    t["invariant_factors"] = h2.invariant_factors;
    t["class_count"] = h2.class_count();
    json reps = json::array();
    for (const TwoCocycle& rep : h2.representatives) {
        int n = rep.group.order;
        json grid = json::array();
        for (int g = 0; g < n; ++g) {
            json row = json::array();
            for (int h = 0; h < n; ++h) row.push_back(rep.at(g, h));
            grid.push_back(row);
        }
        reps.push_back(grid);
    }
    t["representatives"] = reps;
    return t;
}

json sod_tables(const DescendedSOD& d) {
    json t;
    t["equivariant_tables"] = equiv_tables(d.cg);
    json a = json::array(), b = json::array();
    for (int x : d.a_classes) a.push_back(d.cg.skeleton->objects[x]);
    for (int x : d.b_classes) b.push_back(d.cg.skeleton->objects[x]);
    t["a_classes"] = a;
    t["b_classes"] = b;
    json proj = json::array();
    for (int x = 0; x < d.cg.size(); ++x) {
        json one;
        one["class"] = d.cg.skeleton->objects[x];
        one["projection"] = d.ag.skeleton->objects[d.adj.left.functor(x)];
        proj.push_back(one);
    }
    t["projection_images"] = proj;
    return t;
}

json strictify_tables(const Strictified& s) {
    json t;
    t["object_count"] = s.cprime->size();
    json objs = json::array();
    for (const std::string& label : s.cprime->objects) objs.push_back(label);
    t["objects"] = objs;
    return t;
}

} // namespace equivar
