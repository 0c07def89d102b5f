#include <catch2/catch_amalgamated.hpp>

#include <coflag/linalg.hpp>

#include <random>
#include <set>

using namespace coflag;

namespace {

Matrix mat(const FieldSpec& f, int r, int c, std::initializer_list<std::int64_t> vals) {
    Matrix m(f, r, c);
    auto it = vals.begin();
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = Scalar::of(f, *it++);
    return m;
}

Vec vec(const FieldSpec& f, std::initializer_list<std::int64_t> vals) {
    Vec v;
    for (auto x : vals) v.push_back(Scalar::of(f, x));
    return v;
}

}  // namespace

TEST_CASE("scalar canonical forms") {
    Scalar q = Scalar::rational(6, -4);
    CHECK(q == Scalar::rational(-3, 2));
    CHECK(q.str() == "-3/2");

    FieldSpec f5 = FieldSpec::prime(5);
    CHECK(Scalar::of(f5, -1) == Scalar::of(f5, 4));
    CHECK(Scalar::of(f5, 2).inverse() == Scalar::of(f5, 3));
    CHECK(Scalar::of(f5, 4).balanced() == -1);
    // balanced order: -1 < 1 over every field
    CHECK(Scalar::of(f5, 4) < Scalar::of(f5, 1));
    CHECK(Scalar::rational(-1) < Scalar::rational(1));
    CHECK_THROWS_AS(FieldSpec::prime(4), usage_error);
}

TEST_CASE("rank and kernel: identity and zero") {
    FieldSpec q = FieldSpec::rationals();
    RankKernel rk = rank_kernel(Matrix::identity(q, 3));
    CHECK(rk.rank == 3);
    CHECK(rk.kernel.empty());

    RankKernel z = rank_kernel(Matrix(q, 2, 3));
    CHECK(z.rank == 0);
    CHECK(z.kernel.size() == 3);
}

TEST_CASE("rank and kernel over F_5: dependent rows") {
    FieldSpec f5 = FieldSpec::prime(5);
    Matrix m = mat(f5, 2, 2, {1, 2, 2, 4});
    RankKernel rk = rank_kernel(m);
    CHECK(rk.rank == 1);
    REQUIRE(rk.kernel.size() == 1);
    CHECK(rk.kernel[0] == vec(f5, {3, 1}));
}

TEST_CASE("solve_affine basics") {
    FieldSpec f5 = FieldSpec::prime(5);
    SECTION("identity") {
        Vec b = vec(f5, {2, 3});
        auto sol = solve_affine(Matrix::identity(f5, 2), b);
        REQUIRE(sol);
        CHECK(sol->particular == b);
        CHECK(sol->kernel.empty());
    }
    SECTION("zero matrix, nonzero rhs") {
        CHECK_FALSE(solve_affine(Matrix(f5, 2, 2), vec(f5, {1, 0})));
    }
    SECTION("rank-deficient") {
        Matrix m = mat(f5, 2, 2, {1, 2, 2, 4});
        auto sol = solve_affine(m, vec(f5, {1, 2}));
        REQUIRE(sol);
        CHECK(sol->particular == vec(f5, {1, 0}));
        REQUIRE(sol->kernel.size() == 1);
        CHECK(sol->kernel[0] == vec(f5, {3, 1}));
    }
}

TEST_CASE("rank-nullity and exact resubstitution on random F_5 matrices") {
    FieldSpec f5 = FieldSpec::prime(5);
    std::mt19937_64 rng(20240517);
    for (int trial = 0; trial < 200; ++trial) {
        int r = 1 + static_cast<int>(rng() % 6);
        int c = 1 + static_cast<int>(rng() % 6);
        Matrix m(f5, r, c);
        for (auto& x : m.a) x = Scalar::of(f5, static_cast<std::int64_t>(rng() % 5));
        RankKernel rk = rank_kernel(m);
        CHECK(rk.rank + static_cast<int>(rk.kernel.size()) == c);
        for (const Vec& v : rk.kernel) CHECK(is_zero_vec(m.apply(v)));

        Vec x0(c, Scalar::zero(f5));
        for (auto& x : x0) x = Scalar::of(f5, static_cast<std::int64_t>(rng() % 5));
        Vec b = m.apply(x0);
        auto sol = solve_affine(m, b);
        REQUIRE(sol);
        CHECK(m.apply(sol->particular) == b);
    }
}

TEST_CASE("coset representatives") {
    FieldSpec f5 = FieldSpec::prime(5);
    std::vector<Vec> ambient = {vec(f5, {1, 0}), vec(f5, {0, 1})};
    std::vector<Vec> sub = {vec(f5, {1, 0})};
    auto reps = coset_representatives(f5, ambient, sub, 2);
    CHECK(reps.size() == 5);

    auto one = coset_representatives(f5, ambient, ambient, 2);
    REQUIRE(one.size() == 1);
    CHECK(is_zero_vec(one[0]));

    CHECK_THROWS_AS(coset_representatives(FieldSpec::rationals(), ambient, sub, 2), usage_error);
}

TEST_CASE("coset representatives are pairwise non-congruent (F_3^3, dim-1 subspace)") {
    FieldSpec f3 = FieldSpec::prime(3);
    std::vector<Vec> ambient = {vec(f3, {1, 0, 0}), vec(f3, {0, 1, 0}), vec(f3, {0, 0, 1})};
    std::vector<Vec> small = {vec(f3, {1, 2, 0})};
    auto reps = coset_representatives(f3, ambient, small, 3);
    REQUIRE(reps.size() == 9);
    auto sub_basis = span_rref(f3, small, 3);
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j)
            CHECK_FALSE(in_span(f3, sub_basis, sub(reps[i], reps[j]), 3));
}

TEST_CASE("span helpers use canonical echelon bases") {
    FieldSpec f7 = FieldSpec::prime(7);
    std::vector<Vec> a = {vec(f7, {2, 4, 0}), vec(f7, {1, 2, 1})};
    std::vector<Vec> b = {vec(f7, {1, 2, 0}), vec(f7, {0, 0, 1})};
    CHECK(spans_equal(f7, a, b, 3));
    CHECK(span_rref(f7, a, 3) == span_rref(f7, b, 3));
    CHECK(in_span(f7, span_rref(f7, a, 3), vec(f7, {3, 6, 2}), 3));
    CHECK_FALSE(in_span(f7, span_rref(f7, a, 3), vec(f7, {0, 1, 0}), 3));
}
