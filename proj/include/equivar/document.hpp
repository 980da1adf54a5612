#pragma once

#include <map>
#include <optional>
#include <string>

#include "equivar/gfunctor.hpp"
#include "equivar/sod.hpp"

namespace equivar {

/// Parsed workbench document.  One category and at most one action per
/// document; named functors, transformations, lax structures, adjunctions
/// and subcategories all refer to it.
struct WorkbenchDocument {
    int format_version = 1;
    std::optional<FinGroup> group;
    std::optional<CyclicCoeff> coeff;
    std::optional<TwoCocycle> cocycle;
    LinCatPtr category;
    GActionPtr action;
    std::map<std::string, FullSubcat> subcategories;
    std::map<std::string, LinFunctor> functors;
    std::map<std::string, NatTransf> transformations;
    std::map<std::string, LaxGFunctor> lax_functors;
    std::map<std::string, AdjunctionData> adjunctions;
    struct SodRef {
        std::string a, b, adjunction;
    };
    std::optional<SodRef> sod;

    SODInstance sod_instance() const;
};

/// Parses the structured text format; shape or reference errors raise
/// ParseError.  Mathematical laws are checked by document_validate and the
/// individual commands, not here.
WorkbenchDocument parse_document(const std::string& text);
WorkbenchDocument load_document(const std::string& path);

/// Canonical serialization (always explicit tables); parsing it back yields
/// equal data.
std::string serialize_document(const WorkbenchDocument& doc);

bool document_equal(const WorkbenchDocument& a, const WorkbenchDocument& b);

struct SectionCheck {
    std::string name;
    bool ok;
    std::string witness; // empty when ok
};

/// Runs every section's validator (group axioms via reconstruction, cocycle
/// law, category/functor/transformation laws, pentagon where applicable).
std::vector<SectionCheck> document_validate(const WorkbenchDocument& doc,
                                            const SearchLimits& limits = {});

/// Group description strings used by the CLI: "cyclic:N", "dihedral:N",
/// "symmetric:N", "klein4".
FinGroup parse_group_spec(const std::string& spec);

} // namespace equivar
