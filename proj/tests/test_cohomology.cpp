#include <doctest.h>

#include <numeric>
#include <random>

#include "equivar/cohomology.hpp"
#include "support/oracles.hpp"

using namespace equivar;

TEST_CASE("cocycle_check accepts the zero grid") {
    FinGroup g = symmetric_group(3);
    CHECK_FALSE(cocycle_check(zero_cocycle(g, cyclic_coeff(4))).has_value());
}

TEST_CASE("the bilinear grid on the klein group is a cocycle; a perturbation is not") {
    FinGroup v4 = product_group(cyclic_group(2), cyclic_group(2));
    CyclicCoeff a = cyclic_coeff(2);
    // phi((a1,a2),(b1,b2)) = a2 * b1 with (x, y) encoded as 2x + y
    std::vector<u32> values(16);
    for (int g = 0; g < 4; ++g)
        for (int h = 0; h < 4; ++h) values[g * 4 + h] = u32((g % 2) * (h / 2)) % 2;
    TwoCocycle phi = cocycle_from_values(v4, a, values);
    CHECK_FALSE(cocycle_check(phi).has_value());

    TwoCocycle bad = phi;
    bad.at(1, 2) = (bad.at(1, 2) + 1) % 2;
    auto witness = cocycle_check(bad);
    REQUIRE(witness.has_value());
    // the reported triple indeed fails, rechecked by hand
    auto [x, y, z] = *witness;
    u32 lhs = (bad.at(x, y) + bad.at(v4.mul(x, y), z)) % 2;
    u32 rhs = (bad.at(y, z) + bad.at(x, v4.mul(y, z))) % 2;
    CHECK(lhs != rhs);
}

TEST_CASE("coboundary formula") {
    FinGroup z2 = cyclic_group(2);
    CyclicCoeff a = cyclic_coeff(4);

    CHECK(coboundary(cochain_from_values(z2, a, {0, 0})) == zero_cocycle(z2, a));

    // constant cochain c gives the constant grid c
    TwoCocycle constant = coboundary(cochain_from_values(z2, a, {3, 3}));
    for (u32 v : constant.values) CHECK(v == 3);

    // delta = (0, 1): only phi(s, s) = 2 survives
    TwoCocycle d = coboundary(cochain_from_values(z2, a, {0, 1}));
    CHECK(d.at(0, 0) == 0);
    CHECK(d.at(0, 1) == 0);
    CHECK(d.at(1, 0) == 0);
    CHECK(d.at(1, 1) == 2);
}

TEST_CASE("coboundaries always satisfy the cocycle law") {
    std::mt19937 rng(4242);
    for (const FinGroup& g : {cyclic_group(4), symmetric_group(3),
                              product_group(cyclic_group(2), cyclic_group(2))})
        for (u32 m : {2u, 3u, 6u}) {
            for (int trial = 0; trial < 25; ++trial) {
                std::vector<u32> delta(g.order);
                for (u32& v : delta) v = rng() % m;
                TwoCocycle d = coboundary(cochain_from_values(g, cyclic_coeff(m), delta));
                CHECK_FALSE(cocycle_check(d).has_value());
            }
        }
}

TEST_CASE("H^2 of the trivial group is trivial") {
    H2Result h2 = h2_group(cyclic_group(1), cyclic_coeff(6));
    CHECK(h2.invariant_factors.empty());
    CHECK(h2.class_count() == 1);
}

TEST_CASE("H^2(Z/n, Z/m) = Z/gcd(n,m), checked against brute force for nm <= 12") {
    for (int n = 1; n <= 6; ++n)
        for (u32 m = 1; m <= 6; ++m) {
            FinGroup g = cyclic_group(n);
            H2Result h2 = h2_group(g, cyclic_coeff(m));
            u64 expect = std::gcd(u64(n), u64(m));
            CHECK(h2.class_count() == expect);
            if (expect > 1) {
                REQUIRE(h2.invariant_factors.size() == 1);
                CHECK(h2.invariant_factors[0] == expect);
            }
            if (u64(n) * m <= 12) CHECK(oracles::brute_h2_size(g, m) == expect);
        }
}

TEST_CASE("H^2 of the klein group with Z/2 coefficients has 8 classes") {
    FinGroup v4 = product_group(cyclic_group(2), cyclic_group(2));
    H2Result h2 = h2_group(v4, cyclic_coeff(2));
    CHECK(h2.class_count() == 8);
    CHECK(oracles::brute_h2_size(v4, 2) == 8);
}

TEST_CASE("h2_group matches brute-force class counting for |G| <= 4, m <= 4") {
    std::vector<FinGroup> groups = {cyclic_group(1), cyclic_group(2), cyclic_group(3),
                                    cyclic_group(4),
                                    product_group(cyclic_group(2), cyclic_group(2))};
    for (const FinGroup& g : groups)
        for (u32 m = 1; m <= 4; ++m)
            CHECK(h2_group(g, cyclic_coeff(m)).class_count() == oracles::brute_h2_size(g, m));
}

TEST_CASE("representatives are normalized, satisfy the law, and generate distinct classes") {
    FinGroup v4 = product_group(cyclic_group(2), cyclic_group(2));
    CyclicCoeff a = field_unit_coeff(5); // Z/4 linked to F_5^*
    H2Result h2 = h2_group(v4, a);
    CHECK(h2.class_count() == 8);
    for (const TwoCocycle& rep : h2.representatives) {
        CHECK(is_normalized(rep));
        CHECK_FALSE(cocycle_check(rep).has_value());
        CHECK_FALSE(cohomologous(rep, zero_cocycle(v4, a)).has_value());
    }
    std::vector<TwoCocycle> all = all_class_representatives(v4, a, h2);
    CHECK(all.size() == 8);
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j)
            CHECK_FALSE(cohomologous(all[i], all[j]).has_value());
}

TEST_CASE("cohomologous finds an explicit cochain when one exists") {
    FinGroup v4 = product_group(cyclic_group(2), cyclic_group(2));
    CyclicCoeff a = cyclic_coeff(4);
    TwoCocycle zero = zero_cocycle(v4, a);

    auto self = cohomologous(zero, zero);
    REQUIRE(self);
    CHECK(coboundary(*self) == zero);

    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<u32> delta(4);
        for (u32& v : delta) v = rng() % 4;
        TwoCocycle d = coboundary(cochain_from_values(v4, a, delta));
        auto found = cohomologous(zero, d);
        REQUIRE(found);
        CHECK(coboundary(*found) == d);
    }
}

TEST_CASE("a nontrivial class is not cohomologous to zero, confirmed by full cochain scan") {
    FinGroup z2 = cyclic_group(2);
    CyclicCoeff a = field_unit_coeff(5);
    H2Result h2 = h2_group(z2, a);
    REQUIRE(h2.invariant_factors == std::vector<u64>{2});
    const TwoCocycle& rep = h2.representatives[0];
    CHECK_FALSE(cohomologous(rep, zero_cocycle(z2, a)).has_value());
    // exhaustive scan over all m^|G| cochains
    bool any = false;
    Vec delta(2, 0);
    do {
        TwoCocycle d = coboundary(cochain_from_values(z2, a, {delta[0], delta[1]}));
        if (cocycle_add(d, rep) == zero_cocycle(z2, a)) any = true;
    } while (lex_next(delta, 4));
    CHECK_FALSE(any);
}

TEST_CASE("cohomologous agrees with the class structure of h2_group") {
    FinGroup g = cyclic_group(4);
    CyclicCoeff a = cyclic_coeff(4);
    H2Result h2 = h2_group(g, a);
    std::vector<TwoCocycle> reps = all_class_representatives(g, a, h2);
    std::mt19937 rng(5150);
    for (const TwoCocycle& rep : reps) {
        std::vector<u32> delta(4);
        for (u32& v : delta) v = rng() % 4;
        TwoCocycle shifted = cocycle_add(rep, coboundary(cochain_from_values(g, a, delta)));
        auto back = cohomologous(rep, shifted);
        REQUIRE(back);
        CHECK(cocycle_add(coboundary(*back), rep) == shifted);
        for (const TwoCocycle& other : reps)
            if (!(other == rep)) CHECK_FALSE(cohomologous(other, shifted).has_value());
    }
}

TEST_CASE("h2_group matches brute force on non-abelian groups") {
    FinGroup s3 = symmetric_group(3);
    FinGroup d4 = dihedral_group(4);
    for (u32 m : {2u, 3u}) {
        CHECK(h2_group(s3, cyclic_coeff(m)).class_count() == oracles::brute_h2_size(s3, m));
        CHECK(h2_group(d4, cyclic_coeff(m)).class_count() == oracles::brute_h2_size(d4, m));
    }
    // sanity against the known orders
    CHECK(h2_group(s3, cyclic_coeff(2)).class_count() == 2);
    CHECK(h2_group(s3, cyclic_coeff(3)).class_count() == 1);
}

TEST_CASE("h2_group rejects groups beyond the desk-scale cap") {
    CHECK_THROWS_AS((void)h2_group(cyclic_group(25), cyclic_coeff(2)), LimitExceeded);
}

TEST_CASE("field_unit_coeff picks a primitive root") {
    CyclicCoeff c5 = field_unit_coeff(5);
    REQUIRE(c5.field_link);
    CHECK(c5.m == 4);
    CHECK(c5.field_link->root == 2);
    CHECK(field_unit_coeff(7).field_link->root == 3);
    CHECK_THROWS_AS((void)field_unit_coeff(5, 4), PreconditionFailed); // 4 has order 2
}
