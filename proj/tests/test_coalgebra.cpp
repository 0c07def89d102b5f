#include <catch2/catch_amalgamated.hpp>

#include <coflag/catalog.hpp>

using namespace coflag;

static const FieldSpec F5 = FieldSpec::prime(5);
static const FieldSpec Q = FieldSpec::rationals();

TEST_CASE("coalgebra validation") {
    CHECK(validate_coalgebra(dualize_algebra(catalog_algebra("cyclic-group:2", F5))).empty());
    CHECK(validate_coalgebra(catalog_example_coalgebra(F5)).empty());
    CHECK(validate_coalgebra(catalog_example_coalgebra(Q)).empty());
    CHECK(validate_coalgebra(dualize_algebra(catalog_algebra("matrix:2", F5))).empty());

    Coalgebra broken = catalog_example_coalgebra(F5);
    broken.d(2, 1, 2) += Scalar::one(F5);
    auto rep = validate_coalgebra(broken);
    bool coassoc = false;
    for (const auto& issue : rep) coassoc = coassoc || issue.axiom == "coassociativity";
    CHECK(coassoc);
}

TEST_CASE("dualizing the base field gives the grouplike line") {
    Coalgebra c = dualize_algebra(catalog_field(F5));
    CHECK(c.dim == 1);
    CHECK(c.d(0, 0, 0) == Scalar::one(F5));
    CHECK(grouplikes(c).size() == 1);
}

TEST_CASE("the example coalgebra is the dual of the noncommutative 3-dim algebra") {
    Coalgebra c = catalog_example_coalgebra(F5);
    // Delta(f1) = f1 x f1 + f2 x f2
    CHECK(c.d(0, 0, 0) == Scalar::one(F5));
    CHECK(c.d(0, 1, 1) == Scalar::one(F5));
    CHECK(c.d(0, 0, 1).is_zero());
    // Delta(f2) = f1 x f2 + f2 x f1
    CHECK(c.d(1, 0, 1) == Scalar::one(F5));
    CHECK(c.d(1, 1, 0) == Scalar::one(F5));
    // Delta(f3) = f1 x f3 + f3 x f1 + f2 x f3 - f3 x f2
    CHECK(c.d(2, 0, 2) == Scalar::one(F5));
    CHECK(c.d(2, 2, 0) == Scalar::one(F5));
    CHECK(c.d(2, 1, 2) == Scalar::one(F5));
    CHECK(c.d(2, 2, 1) == -Scalar::one(F5));
    // counit is the functional dual to f1
    CHECK(c.counit[0] == Scalar::one(F5));
    CHECK(c.counit[1].is_zero());
}

TEST_CASE("double dual is the identity on structure constants") {
    for (const auto& f : {F5, Q})
        for (const auto& name : {"field", "dual-numbers", "cyclic-group:2", "triangular:2",
                                 "coflag3:3", "matrix:2", "cyclic-group:4"}) {
            Algebra a = catalog_algebra(name, f);
            Algebra back = convolution_algebra(dualize_algebra(a));
            INFO(name << " over " << f.str());
            CHECK(back.mult == a.mult);
            CHECK(back.unit == a.unit);
        }
}

TEST_CASE("convolution of the example coalgebra is the noncommutative 3-dim algebra") {
    Algebra conv = convolution_algebra(catalog_example_coalgebra(F5));
    Algebra a21 = catalog_algebra("coflag3:3", F5);
    CHECK(conv.mult == a21.mult);
    CHECK(conv.unit == a21.unit);
}

TEST_CASE("convolution of the dual of k[C_2] is isomorphic to k[C_2]") {
    Algebra c2 = catalog_algebra("cyclic-group:2", F5);
    Algebra conv = convolution_algebra(dualize_algebra(c2));
    auto iso = find_algebra_isomorphism(conv, c2);
    REQUIRE(iso);
    CHECK(is_algebra_isomorphism(conv, c2, *iso));
}

TEST_CASE("grouplikes of a dual coalgebra match the characters of the algebra") {
    for (const auto& name : {"field", "dual-numbers", "cyclic-group:2", "cyclic-group:4",
                             "triangular:2", "matrix:2", "coflag3:6"}) {
        Algebra a = catalog_algebra(name, F5);
        INFO(name);
        CHECK(grouplikes(dualize_algebra(a)).size() == characters(a).size());
    }
}

TEST_CASE("grouplikes of the example coalgebra") {
    auto gs = grouplikes(catalog_example_coalgebra(F5));
    REQUIRE(gs.size() == 2);
    // canonical order puts f1 - f2 before f1 + f2 (balanced residues)
    CHECK(gs[0] == Vec{Scalar::one(F5), Scalar::of(F5, 4), Scalar::zero(F5)});
    CHECK(gs[1] == Vec{Scalar::one(F5), Scalar::one(F5), Scalar::zero(F5)});
}

TEST_CASE("supersolvable chain of the example coalgebra") {
    Coalgebra c = catalog_example_coalgebra(F5);
    auto chain = supersolvable_chain(c);
    REQUIRE(chain);
    REQUIRE(chain->subspaces.size() == 3);
    // C_1 = span{f1 - f2}
    REQUIRE(chain->subspaces[0].size() == 1);
    CHECK(chain->subspaces[0][0] == Vec{Scalar::one(F5), Scalar::of(F5, 4), Scalar::zero(F5)});
    // C_2 = span{f1, f2}
    REQUIRE(chain->subspaces[1].size() == 2);
    CHECK(chain->subspaces[1][0] == Vec{Scalar::one(F5), Scalar::zero(F5), Scalar::zero(F5)});
    CHECK(chain->subspaces[1][1] == Vec{Scalar::zero(F5), Scalar::one(F5), Scalar::zero(F5)});
    // every link is a subcoalgebra
    for (const auto& level : chain->subspaces) CHECK(is_subcoalgebra(c, level));
}

TEST_CASE("dual of the matrix algebra is not supersolvable") {
    CHECK_FALSE(supersolvable_chain(dualize_algebra(catalog_algebra("matrix:2", F5))));
}

TEST_CASE("one-dimensional coalgebras have the length-1 chain") {
    auto chain = supersolvable_chain(dualize_algebra(catalog_field(F5)));
    REQUIRE(chain);
    CHECK(chain->subspaces.size() == 1);
}

TEST_CASE("chain search agrees with co-flag detection on the convolution algebra") {
    // the equivalence is enforced internally (supersolvable_chain throws on
    // disagreement); spot-check both outcomes on duals of known algebras
    for (const auto& name : {"coflag3:1", "coflag3:3", "coflag3:5", "dual-numbers"}) {
        Coalgebra c = dualize_algebra(catalog_algebra(name, F5));
        CHECK(supersolvable_chain(c));
        CHECK(is_coflag_algebra(convolution_algebra(c)));
    }
    Coalgebra m2 = dualize_algebra(catalog_algebra("matrix:2", F5));
    CHECK_FALSE(supersolvable_chain(m2));
    CHECK_FALSE(is_coflag_algebra(convolution_algebra(m2)));
}
