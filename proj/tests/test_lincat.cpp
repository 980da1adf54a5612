#include <doctest.h>

#include <random>

#include "equivar/lincat.hpp"

using namespace equivar;

TEST_CASE("vect_cat dimensions and identities") {
    LinCatPtr c = vect_cat(3, 3);
    REQUIRE(c->size() == 4);
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 3; ++n) CHECK(c->hom_dim(m, n) == m * n);
    for (int n = 0; n <= 3; ++n) {
        const Vec& id = c->identity(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) CHECK(id[size_t(i) * n + j] == u32(i == j ? 1 : 0));
    }
    CHECK_FALSE(validate(*c).has_value());
}

TEST_CASE("vect_cat composition reproduces matrix products on elementary matrices") {
    LinCatPtr c = vect_cat(5, 2);
    // E_ab in Hom(2,2) times E_cd in Hom(2,2) = [b==c] E_ad
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int cc = 0; cc < 2; ++cc)
                for (int d = 0; d < 2; ++d) {
                    Vec g(4, 0), f(4, 0);
                    g[a * 2 + b] = 1;
                    f[cc * 2 + d] = 1;
                    Vec prod = c->compose(2, 2, 2, g, f);
                    Vec expect(4, 0);
                    if (b == cc) expect[a * 2 + d] = 1;
                    CHECK(prod == expect);
                }
}

TEST_CASE("validate pinpoints a corrupted composition tensor") {
    LinCat c = *vect_cat(3, 2);
    FpMatrix& t = c.comp[(size_t(2) * 3 + 2) * 3 + 2];
    t.at(0, 0) = (t.at(0, 0) + 1) % 3;
    auto v = validate(c);
    REQUIRE(v.has_value());
    // corrupting a tensor breaks either an identity law or associativity
    CHECK((v->location.find("associativity") != std::string::npos ||
           v->location.find("identity") != std::string::npos));
}

TEST_CASE("identity functor validates; functor equality is data equality") {
    LinCatPtr c = vect_cat(3, 2);
    LinFunctor id = identity_functor(c);
    CHECK_FALSE(validate(id).has_value());
    CHECK(functor_equal(id, compose_functors(id, id)));
}

TEST_CASE("natural transformation calculus on scalar transformations") {
    LinCatPtr c = vect_cat(5, 2);
    LinFunctor id = identity_functor(c);
    NatTransf one = identity_nat(id);
    CHECK_FALSE(validate(one).has_value());
    CHECK(is_nat_iso(one));

    NatTransf two = one;
    for (Vec& comp : two.components) comp = vec_scale(2, comp, 5);
    CHECK_FALSE(validate(two).has_value());
    CHECK(is_nat_iso(two));
    auto inv = nat_inverse(two);
    REQUIRE(inv);
    CHECK(vcompose(*inv, two).components == one.components);
    CHECK_FALSE(validate(*inv).has_value()); // naturality of the inverse, checked not assumed

    NatTransf zero = one;
    for (Vec& comp : zero.components) comp.assign(comp.size(), 0);
    CHECK_FALSE(is_nat_iso(zero));

    CHECK(vcompose(one, one).components == one.components);
    CHECK(nat_equal(whisker_left(id, two), two));
    CHECK(nat_equal(whisker_right(two, id), two));
}

TEST_CASE("interchange law on random scalar-diagonal transformations") {
    LinCatPtr c = vect_cat(7, 2);
    LinFunctor id = identity_functor(c);
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        auto random_scalar_nat = [&]() {
            NatTransf t = identity_nat(id);
            u32 s = 1 + rng() % 6;
            for (Vec& comp : t.components) comp = vec_scale(s, comp, 7);
            return t;
        };
        NatTransf mu = random_scalar_nat(), nu = random_scalar_nat();
        // (mu . nu) whiskered equals whiskered composites
        NatTransf lhs = whisker_left(id, vcompose(mu, nu));
        NatTransf rhs = vcompose(whisker_left(id, mu), whisker_left(id, nu));
        CHECK(lhs.components == rhs.components);
    }
}

TEST_CASE("morphism invertibility in hom-algebras") {
    LinCatPtr c = vect_cat(5, 2);
    // the 2x2 matrix [[1,1],[0,1]] as a morphism 2 -> 2
    Vec u{1, 1, 0, 1};
    Vec inv;
    REQUIRE(morphism_invertible(*c, 2, 2, u, &inv));
    CHECK(c->compose(2, 2, 2, inv, u) == c->identity(2));
    CHECK(c->compose(2, 2, 2, u, inv) == c->identity(2));
    CHECK_FALSE(morphism_invertible(*c, 2, 2, Vec{1, 0, 0, 0}, nullptr));
    // no isomorphism between spaces of different dimension
    CHECK_FALSE(morphism_invertible(*c, 1, 2, Vec{1, 0}, nullptr));
}

TEST_CASE("iso classes of vect_cat are singletons") {
    LinCatPtr c = vect_cat(2, 2);
    IsoClasses cls = iso_classes(*c);
    CHECK(cls.reps.size() == 3);
    for (int x = 0; x < 3; ++x) CHECK(cls.class_of[x] == x);
}

TEST_CASE("iso classes merge explicitly isomorphic objects") {
    // two objects, Hom = k both ways, composition = multiplication
    u32 p = 3;
    std::vector<std::string> objects{"x", "y"};
    std::vector<int> dims{1, 1, 1, 1};
    std::vector<FpMatrix> comp;
    for (int i = 0; i < 8; ++i) {
        FpMatrix t(p, 1, 1);
        t.at(0, 0) = 1;
        comp.push_back(t);
    }
    std::vector<Vec> ids{{1}, {1}};
    LinCat c = make_lincat(p, objects, dims, comp, ids);
    REQUIRE_FALSE(validate(c).has_value());
    IsoClasses cls = iso_classes(c);
    CHECK(cls.reps.size() == 1);
    CHECK(cls.class_of[1] == 0);
    // witnesses are mutually inverse
    CHECK(c.compose(1, 0, 1, cls.from_rep[1], cls.to_rep[1]) == c.identity(1));

    // empty-hom variant: two classes
    std::vector<int> dims2{1, 0, 0, 1};
    std::vector<FpMatrix> comp2;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z) {
                int rows = dims2[x * 2 + z], cols = dims2[y * 2 + z] * dims2[x * 2 + y];
                FpMatrix t(p, rows, cols);
                if (x == y && y == z) t.at(0, 0) = 1;
                comp2.push_back(t);
            }
    LinCat c2 = make_lincat(p, objects, dims2, comp2, ids);
    REQUIRE_FALSE(validate(c2).has_value());
    CHECK(iso_classes(c2).reps.size() == 2);
}

TEST_CASE("full subcategory restricts hom data verbatim") {
    LinCatPtr c = vect_cat(3, 2);
    LinCat sub = full_subcategory(*c, {0, 2});
    CHECK(sub.size() == 2);
    CHECK(sub.hom_dim(1, 1) == 4);
    CHECK_FALSE(validate(sub).has_value());
}

TEST_CASE("find_invertible_in_subspace returns the lexicographically first hit") {
    LinCatPtr c = vect_cat(5, 1);
    FpMatrix basis = FpMatrix::identity(5, 1);
    auto hit = find_invertible_in_subspace(*c, 1, 1, basis, {});
    REQUIRE(hit);
    CHECK(hit->coords == Vec{1});
    CHECK(hit->value == Vec{1});
}

TEST_CASE("desk-scale caps raise LimitExceeded") {
    CHECK_THROWS_AS((void)vect_cat(3, 4), LimitExceeded);
    CHECK_THROWS_AS((void)vect_cat(4, 2), PreconditionFailed); // 4 is not prime
}

TEST_CASE("zero-dimensional hom spaces behave (zero object)") {
    LinCatPtr c = vect_cat(5, 1);
    // the zero object: Hom(0,0) has dimension 0, identity is the empty vector
    CHECK(c->hom_dim(0, 0) == 0);
    CHECK(morphism_invertible(*c, 0, 0, Vec{}, nullptr));
    CHECK_FALSE(morphism_invertible(*c, 0, 1, Vec{}, nullptr));
}
