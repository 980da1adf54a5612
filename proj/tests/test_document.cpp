#include <doctest.h>

#include "equivar/document.hpp"

using namespace equivar;

namespace {

const char* kTrivialDoc = R"({
  "format_version": 1,
  "group": {"kind": "cyclic", "n": 2},
  "category": {"kind": "vect", "p": 3, "max_dim": 2},
  "action": {"kind": "trivial"}
})";

const char* kCocycleDoc = R"({
  "format_version": 1,
  "group": {"kind": "cyclic", "n": 2},
  "coefficients": {"m": 4, "field": {"p": 5, "root": 2}},
  "cocycle": {"values": [[0, 0], [0, 2]]},
  "action": {"kind": "cocycle_vect", "max_dim": 1}
})";

const char* kSodDoc = R"({
  "format_version": 1,
  "group": {"kind": "cyclic", "n": 1},
  "category": {"kind": "vect", "p": 3, "max_dim": 1},
  "action": {"kind": "trivial"},
  "subcategories": {
    "A": {"members": [0, 1]},
    "B": {"members": [0]}
  },
  "functors": {
    "p": {"source": "C", "target": "A", "obj_map": [0, 1], "hom_maps": {"1,1": [1]}},
    "i": {"source": "A", "target": "C", "obj_map": [0, 1], "hom_maps": {"1,1": [1]}}
  },
  "transformations": {
    "unit": {"from": "Id", "to": ["i", "p"], "components": [[], [1]]},
    "counit": {"from": ["p", "i"], "to": "Id:A", "components": [[], [1]]}
  },
  "adjunctions": {
    "adj": {"left": "p", "right": "i", "unit": "unit", "counit": "counit"}
  },
  "sod": {"a": "A", "b": "B", "adjunction": "adj"}
})";

} // namespace

TEST_CASE("parse and validate a trivial action document") {
    WorkbenchDocument doc = parse_document(kTrivialDoc);
    REQUIRE(doc.group);
    CHECK(doc.group->order == 2);
    REQUIRE(doc.action);
    for (const SectionCheck& c : document_validate(doc)) CHECK(c.ok);
}

TEST_CASE("parse a cocycle action document") {
    WorkbenchDocument doc = parse_document(kCocycleDoc);
    REQUIRE(doc.cocycle);
    CHECK(doc.cocycle->at(1, 1) == 2);
    REQUIRE(doc.action);
    CHECK_FALSE(action_check(*doc.action).has_value());
}

TEST_CASE("round-trip: parse, serialize, re-parse equal data") {
    for (const char* text : {kTrivialDoc, kCocycleDoc, kSodDoc}) {
        WorkbenchDocument doc = parse_document(text);
        std::string canon = serialize_document(doc);
        WorkbenchDocument again = parse_document(canon);
        CHECK(document_equal(doc, again));
        // canonical form is a fixed point
        CHECK(serialize_document(again) == canon);
    }
}

TEST_CASE("sod document builds a checkable instance") {
    WorkbenchDocument doc = parse_document(kSodDoc);
    for (const SectionCheck& c : document_validate(doc)) CHECK(c.ok);
    SODInstance inst = doc.sod_instance();
    CHECK_FALSE(sod_instance_check(inst).has_value());
    DescendedSOD d = descend_sod(inst);
    CHECK(d.all_ok());
    CHECK(d.cg.size() == 2);
}

TEST_CASE("parse errors carry useful messages") {
    CHECK_THROWS_AS((void)parse_document("{"), ParseError);
    CHECK_THROWS_AS((void)parse_document(R"({"format_version": 7})"), ParseError);
    CHECK_THROWS_AS((void)parse_document(R"({
        "format_version": 1,
        "group": {"kind": "cyclic", "n": 2},
        "cocycle": {"values": [[0,0],[0,1]]}
    })"),
                    ParseError); // cocycle without coefficients
    CHECK_THROWS_AS((void)parse_document(R"({
        "format_version": 1,
        "group": {"kind": "table", "order": 2, "table": [0, 1, 1, 1]}
    })"),
                    NotAGroup);
}

TEST_CASE("validate reports the failing section on a bad cocycle") {
    WorkbenchDocument doc = parse_document(R"({
        "format_version": 1,
        "group": {"kind": "cyclic", "n": 2},
        "coefficients": {"m": 4},
        "cocycle": {"values": [[0, 1], [0, 0]]}
    })");
    bool cocycle_failed = false;
    for (const SectionCheck& c : document_validate(doc))
        if (c.name == "cocycle" && !c.ok) cocycle_failed = true;
    CHECK(cocycle_failed);
}

TEST_CASE("group specs") {
    CHECK(parse_group_spec("cyclic:4").order == 4);
    CHECK(parse_group_spec("dihedral:3").order == 6);
    CHECK(parse_group_spec("symmetric:3").order == 6);
    CHECK(parse_group_spec("klein4").order == 4);
    CHECK_THROWS_AS((void)parse_group_spec("frobenius:20"), ParseError);
}
