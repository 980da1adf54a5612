#include <doctest.h>

#include "equivar/group.hpp"

using namespace equivar;

static void check_axioms(const FinGroup& g) {
    for (int a = 0; a < g.order; ++a) {
        CHECK(g.mul(0, a) == a);
        CHECK(g.mul(a, 0) == a);
        CHECK(g.mul(a, g.inv(a)) == 0);
        CHECK(g.mul(g.inv(a), a) == 0);
    }
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            for (int c = 0; c < g.order; ++c)
                CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
}

TEST_CASE("bundled groups satisfy the axioms exhaustively") {
    check_axioms(cyclic_group(1));
    check_axioms(cyclic_group(6));
    check_axioms(product_group(cyclic_group(2), cyclic_group(2)));
    check_axioms(dihedral_group(4));
    check_axioms(symmetric_group(3));
    check_axioms(symmetric_group(4)); // order 24
}

TEST_CASE("trivial group") {
    FinGroup g = cyclic_group(1);
    CHECK(g.order == 1);
    CHECK(element_order(g, 0) == 1);
}

TEST_CASE("klein four group has exponent 2") {
    FinGroup g = product_group(cyclic_group(2), cyclic_group(2));
    CHECK(g.order == 4);
    for (int a = 0; a < 4; ++a) CHECK(g.inv(a) == a);
    CHECK(is_abelian(g));
}

TEST_CASE("symmetric group on 3 letters is non-abelian of order 6") {
    FinGroup g = symmetric_group(3);
    CHECK(g.order == 6);
    bool found = false;
    for (int a = 0; a < 6 && !found; ++a)
        for (int b = 0; b < 6; ++b)
            if (g.mul(a, b) != g.mul(b, a)) {
                found = true;
                break;
            }
    CHECK(found);
}

TEST_CASE("element orders") {
    FinGroup c6 = cyclic_group(6);
    CHECK(element_order(c6, 0) == 1);
    CHECK(element_order(c6, 1) == 6);
    CHECK(element_order(c6, 2) == 3);
    FinGroup s3 = symmetric_group(3);
    int transpositions = 0;
    for (int a = 1; a < 6; ++a)
        if (element_order(s3, a) == 2) ++transpositions;
    CHECK(transpositions == 3);
}

TEST_CASE("element order divides group order for all bundled groups") {
    for (const FinGroup& g : {cyclic_group(5), dihedral_group(6), symmetric_group(4),
                              product_group(cyclic_group(2), cyclic_group(3))})
        for (int a = 0; a < g.order; ++a) CHECK(g.order % element_order(g, a) == 0);
}

TEST_CASE("group_from_table validates and relabels the identity to 0") {
    // C2 written with the identity at index 1
    FinGroup g = group_from_table(2, {1, 0, 0, 1});
    CHECK(g.mul(0, 0) == 0);
    CHECK(g.mul(1, 1) == 0);

    CHECK_THROWS_AS((void)group_from_table(2, {0, 1, 1, 1}), NotAGroup);
    CHECK_THROWS_AS((void)group_from_table(3, {0, 1, 2, 1, 2, 0, 2, 1, 0}), NotAGroup);
}

TEST_CASE("generating sequences generate") {
    for (const FinGroup& g : {cyclic_group(8), symmetric_group(4),
                              product_group(cyclic_group(2), cyclic_group(2))}) {
        std::vector<int> gens = generating_sequence(g);
        CHECK(int(generated_subgroup(g, gens).size()) == g.order);
    }
    CHECK(generating_sequence(cyclic_group(1)).empty());
    CHECK(generating_sequence(product_group(cyclic_group(2), cyclic_group(2))).size() == 2);
}
