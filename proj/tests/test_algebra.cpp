#include <catch2/catch_amalgamated.hpp>

#include <coflag/catalog.hpp>

#include <random>

using namespace coflag;

static const FieldSpec F5 = FieldSpec::prime(5);
static const FieldSpec F7 = FieldSpec::prime(7);
static const FieldSpec Q = FieldSpec::rationals();

TEST_CASE("catalog algebras validate over Q, F_5 and F_7") {
    std::vector<std::string> names = {"field",     "matrix:2",     "triangular:2", "triangular:3",
                                      "cyclic-group:2", "dual-numbers", "coflag3:1",    "coflag3:2",
                                      "coflag3:3", "coflag3:4",    "coflag3:5",    "coflag3:6",
                                      "product(matrix:2,field)"};
    for (const auto& f : {Q, F5, F7})
        for (const auto& name : names) {
            Algebra a = catalog_algebra(name, f);
            INFO(name << " over " << f.str());
            CHECK(validate_algebra(a).empty());
        }
    // cyclic-group:4 needs 4 invertible
    CHECK(validate_algebra(catalog_algebra("cyclic-group:4", F5)).empty());
    CHECK_THROWS_AS(catalog_algebra("cyclic-group:5", F5), usage_error);
}

TEST_CASE("validation reports name the broken quadruple") {
    Algebra a = catalog_algebra("matrix:2", F5);
    REQUIRE(validate_algebra(a).empty());
    a.c(0, 1, 2) += Scalar::one(F5);
    ValidationReport rep = validate_algebra(a);
    bool has_assoc = false;
    for (const auto& issue : rep)
        if (issue.axiom == "associativity") {
            has_assoc = true;
            CHECK(issue.where.size() == 4);
        }
    CHECK(has_assoc);
}

TEST_CASE("character counts match the known lists") {
    CHECK(characters(catalog_algebra("triangular:2", F5)).size() == 2);
    CHECK(characters(catalog_algebra("triangular:3", F5)).size() == 3);
    CHECK(characters(catalog_algebra("triangular:2", F7)).size() == 2);
    CHECK(characters(catalog_algebra("triangular:3", F7)).size() == 3);
    CHECK(characters(catalog_algebra("matrix:2", F5)).empty());
    CHECK(characters(catalog_algebra("matrix:2", F7)).empty());

    auto c2 = characters(catalog_algebra("cyclic-group:2", F5));
    REQUIRE(c2.size() == 2);
    // d maps to -1 and +1; balanced order puts -1 first
    CHECK(c2[0].values[1] == Scalar::of(F5, 4));
    CHECK(c2[1].values[1] == Scalar::of(F5, 1));

    CHECK(characters(catalog_algebra("cyclic-group:4", F5)).size() == 4);
}

TEST_CASE("search agrees with the registered closed forms") {
    for (const auto& name :
         {"triangular:2", "matrix:2", "cyclic-group:2", "dual-numbers", "coflag3:2", "coflag3:6"}) {
        Algebra a = catalog_algebra(name, F5);
        auto found = characters(a);
        REQUIRE(a.known_characters);
        CHECK(found.size() == a.known_characters->size());
        for (const auto& chi : found) CHECK(is_character(a, chi.values));
    }
}

TEST_CASE("characters over Q need a registered list") {
    Algebra a = catalog_algebra("triangular:2", Q);
    CHECK(characters(a).size() == 2);
    Algebra blank = a;
    blank.known_characters.reset();
    CHECK_THROWS_AS(characters(blank), usage_error);
}

TEST_CASE("characters are multiplicative on full bilinear extensions") {
    std::mt19937_64 rng(7);
    for (const auto& name : {"triangular:3", "cyclic-group:4", "coflag3:3"}) {
        Algebra a = catalog_algebra(name, F5);
        for (const auto& chi : characters(a)) {
            for (int t = 0; t < 20; ++t) {
                Vec x = zero_vec(F5, a.dim), y = zero_vec(F5, a.dim);
                for (auto& s : x) s = Scalar::of(F5, static_cast<std::int64_t>(rng() % 5));
                for (auto& s : y) s = Scalar::of(F5, static_cast<std::int64_t>(rng() % 5));
                CHECK(chi(a.mul(x, y)) == chi(x) * chi(y));
            }
        }
    }
}

TEST_CASE("brute automorphism groups of small algebras") {
    CHECK(automorphisms_brute(catalog_algebra("field", F5)).size() == 1);

    // x -> cx for c in F_5^*
    auto dn = automorphisms_brute(catalog_algebra("dual-numbers", F5));
    CHECK(dn.size() == 4);

    // identity and d -> -d
    auto c2 = automorphisms_brute(catalog_algebra("cyclic-group:2", F5));
    CHECK(c2.size() == 2);

    CHECK_THROWS_AS(automorphisms_brute(catalog_algebra("matrix:2", F5), 1000), budget_error);
}

TEST_CASE("automorphism sets are groups and match catalog registrations") {
    for (const auto& name : {"triangular:2", "dual-numbers", "coflag3:1"}) {
        Algebra a = catalog_algebra(name, F5);
        auto brute = automorphisms_brute(a);
        REQUIRE(a.known_automorphisms);
        auto reg = *a.known_automorphisms;
        CHECK(brute.size() == reg.size());
        for (const Matrix& m : reg)
            CHECK(std::find(brute.begin(), brute.end(), m) != brute.end());
        // closure, identity, inverses
        Matrix id = Matrix::identity(F5, a.dim);
        CHECK(std::find(brute.begin(), brute.end(), id) != brute.end());
        for (const Matrix& g : brute) {
            bool has_inverse = false;
            for (const Matrix& h : brute) {
                CHECK(std::find(brute.begin(), brute.end(), g * h) != brute.end());
                if (g * h == id) has_inverse = true;
            }
            CHECK(has_inverse);
        }
    }
    // inner automorphisms of T_2(F_5): units modulo centre
    CHECK(automorphisms_brute(catalog_algebra("triangular:2", F5)).size() == 20);
    // registered Aut(M_2(F_5)) = PGL_2(F_5)
    CHECK(catalog_algebra("matrix:2", F5).known_automorphisms->size() == 120);
}

TEST_CASE("direct products") {
    Algebra kk = direct_product(catalog_algebra("field", F5), catalog_algebra("field", F5));
    REQUIRE(validate_algebra(kk).empty());
    // two orthogonal idempotents
    CHECK(kk.basis_mul(0, 0) == kk.basis_vec(0));
    CHECK(kk.basis_mul(1, 1) == kk.basis_vec(1));
    CHECK(is_zero_vec(kk.basis_mul(0, 1)));

    Algebra m2k = catalog_algebra("product(matrix:2,field)", F5);
    REQUIRE(validate_algebra(m2k).empty());
    CHECK(characters(m2k).size() == 1);

    // every character of A x B kills exactly one factor's unit
    for (const auto& pair : {std::pair<std::string, std::string>{"triangular:2", "field"},
                             {"cyclic-group:2", "dual-numbers"}}) {
        Algebra a = catalog_algebra(pair.first, F5);
        Algebra b = catalog_algebra(pair.second, F5);
        Algebra p = direct_product(a, b);
        auto chars = characters(p);
        CHECK(chars.size() == characters(a).size() + characters(b).size());
        Vec unit_a = zero_vec(F5, p.dim), unit_b = zero_vec(F5, p.dim);
        for (int i = 0; i < a.dim; ++i) unit_a[i] = a.unit[i];
        for (int i = 0; i < b.dim; ++i) unit_b[a.dim + i] = b.unit[i];
        for (const auto& chi : chars) {
            Scalar va = chi(unit_a), vb = chi(unit_b);
            CHECK(((va.is_one() && vb.is_zero()) || (va.is_zero() && vb.is_one())));
        }
    }
    CHECK_THROWS_AS(direct_product(catalog_algebra("field", F5), catalog_algebra("field", F7)),
                    usage_error);
}

TEST_CASE("proper two-sided ideals") {
    CHECK(proper_two_sided_ideals(catalog_algebra("matrix:2", F5)).empty());

    Algebra t2 = catalog_algebra("triangular:2", F5);
    auto ideals = proper_two_sided_ideals(t2);
    // span{e12} must appear
    Vec e12 = t2.basis_vec(1);
    bool found = false;
    for (const auto& basis : ideals)
        if (basis.size() == 1 && basis[0] == e12) found = true;
    CHECK(found);

    Algebra dn = catalog_algebra("dual-numbers", F5);
    auto dn_ideals = proper_two_sided_ideals(dn);
    REQUIRE(dn_ideals.size() == 1);
    CHECK(dn_ideals[0][0] == dn.basis_vec(1));
}

TEST_CASE("quotients by ideals") {
    Algebra t2 = catalog_algebra("triangular:2", F5);
    QuotientData q = quotient_by_ideal(t2, {t2.basis_vec(1)});
    CHECK(q.quotient.dim == 2);
    CHECK(validate_algebra(q.quotient).empty());
    // T_2 / span{e12} is k x k: two orthogonal idempotents
    CHECK(q.quotient.basis_mul(0, 0) == q.quotient.basis_vec(0));
    CHECK(is_zero_vec(q.quotient.basis_mul(0, 1)));
    // projection is an algebra morphism
    CHECK(is_algebra_morphism(t2, q.quotient, q.projection));
}

TEST_CASE("co-flag detection") {
    CHECK(is_coflag_algebra(catalog_algebra("triangular:2", F5)));
    CHECK(is_coflag_algebra(catalog_algebra("coflag3:4", F5)));
    CHECK_FALSE(is_coflag_algebra(catalog_algebra("matrix:2", F5)));
}

TEST_CASE("isomorphism search with witnesses") {
    // cyclic-group:2 and k x k are isomorphic over F_5 (char != 2)
    Algebra c2 = catalog_algebra("cyclic-group:2", F5);
    Algebra kk = catalog_algebra("product(field,field)", F5);
    auto iso = find_algebra_isomorphism(c2, kk);
    REQUIRE(iso);
    CHECK(is_algebra_isomorphism(c2, kk, *iso));

    // distinct co-flag algebras of dimension 3 are not isomorphic
    CHECK_FALSE(find_algebra_isomorphism(catalog_algebra("coflag3:4", F5),
                                         catalog_algebra("coflag3:5", F5)));
    CHECK_FALSE(find_algebra_isomorphism(catalog_algebra("coflag3:2", F5),
                                         catalog_algebra("coflag3:3", F5)));
}
