#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "equivar/gaction.hpp"
#include "equivar/sod.hpp"
#include "equivar/strictify.hpp"

namespace equivar {

/// Deterministic report carrier shared by all CLI subcommands; renders to
/// plain text or to the fixed JSON schema
/// {command, inputs, checks: [{name, status, witness?}], tables}.
struct Report {
    std::string command;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    struct Check {
        std::string name;
        bool ok;
        std::string witness;
    };
    std::vector<Check> checks;
    nlohmann::ordered_json tables = nlohmann::ordered_json::object();

    void check(const std::string& name, bool ok, const std::string& witness = "");
    bool all_ok() const;
    std::string to_text() const;
    std::string to_json() const;
};

/// Class table of an equivariant category: classes with their base objects
/// and linearization coordinates, plus the hom dimension grid.
nlohmann::ordered_json equiv_tables(const EquivCat& e);

nlohmann::ordered_json h2_tables(const H2Result& h2);

nlohmann::ordered_json sod_tables(const DescendedSOD& d);

nlohmann::ordered_json strictify_tables(const Strictified& s);

} // namespace equivar
