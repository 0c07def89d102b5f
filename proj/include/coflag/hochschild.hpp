// Hochschild systems and products.
//
// A system couples an algebra A with a vector space V through four bilinear
// maps: two actions (left and right), a cocycle A x A -> V and a
// multiplication on V. The product algebra lives on A x V with
//
//   (a, x) * (b, y) = (ab, cocycle(a,b) + a |> y + x <| b + x . y)
//
// and exists precisely when the nine compatibility axioms H0..H8 hold.

#ifndef COFLAG_HOCHSCHILD_HPP
#define COFLAG_HOCHSCHILD_HPP

#include "algebra.hpp"

#include <optional>

namespace coflag {

struct HochschildData {
    Algebra A;
    int v_dim = 0;
    std::vector<Scalar> act_left;   // [(i*m + x)*m + y]  e_i |> v_x = sum_y . v_y
    std::vector<Scalar> act_right;  // [(x*n + i)*m + y]  v_x <| e_i = sum_y . v_y
    std::vector<Scalar> cocycle;    // [(i*n + j)*m + x]  theta(e_i, e_j) = sum_x . v_x
    std::vector<Scalar> v_mult;     // [(x*m + y)*m + z]  v_x . v_y = sum_z . v_z

    HochschildData() = default;
    HochschildData(Algebra a, int m) : A(std::move(a)), v_dim(m) {
        const auto z = Scalar::zero(A.field);
        act_left.assign(static_cast<std::size_t>(A.dim) * m * m, z);
        act_right.assign(static_cast<std::size_t>(m) * A.dim * m, z);
        cocycle.assign(static_cast<std::size_t>(A.dim) * A.dim * m, z);
        v_mult.assign(static_cast<std::size_t>(m) * m * m, z);
    }

    Scalar& al(int i, int x, int y) { return act_left[(static_cast<std::size_t>(i) * v_dim + x) * v_dim + y]; }
    const Scalar& al(int i, int x, int y) const { return act_left[(static_cast<std::size_t>(i) * v_dim + x) * v_dim + y]; }
    Scalar& ar(int x, int i, int y) { return act_right[(static_cast<std::size_t>(x) * A.dim + i) * v_dim + y]; }
    const Scalar& ar(int x, int i, int y) const { return act_right[(static_cast<std::size_t>(x) * A.dim + i) * v_dim + y]; }
    Scalar& th(int i, int j, int x) { return cocycle[(static_cast<std::size_t>(i) * A.dim + j) * v_dim + x]; }
    const Scalar& th(int i, int j, int x) const { return cocycle[(static_cast<std::size_t>(i) * A.dim + j) * v_dim + x]; }
    Scalar& vm(int x, int y, int z) { return v_mult[(static_cast<std::size_t>(x) * v_dim + y) * v_dim + z]; }
    const Scalar& vm(int x, int y, int z) const { return v_mult[(static_cast<std::size_t>(x) * v_dim + y) * v_dim + z]; }

    // bilinear extensions
    Vec act_l(const Vec& a, const Vec& x) const {
        Vec r = zero_vec(A.field, v_dim);
        for (int i = 0; i < A.dim; ++i) {
            if (a[i].is_zero()) continue;
            for (int xx = 0; xx < v_dim; ++xx) {
                if (x[xx].is_zero()) continue;
                Scalar c = a[i] * x[xx];
                for (int y = 0; y < v_dim; ++y)
                    if (!al(i, xx, y).is_zero()) r[y] += c * al(i, xx, y);
            }
        }
        return r;
    }
    Vec act_r(const Vec& x, const Vec& a) const {
        Vec r = zero_vec(A.field, v_dim);
        for (int xx = 0; xx < v_dim; ++xx) {
            if (x[xx].is_zero()) continue;
            for (int i = 0; i < A.dim; ++i) {
                if (a[i].is_zero()) continue;
                Scalar c = x[xx] * a[i];
                for (int y = 0; y < v_dim; ++y)
                    if (!ar(xx, i, y).is_zero()) r[y] += c * ar(xx, i, y);
            }
        }
        return r;
    }
    Vec coc(const Vec& a, const Vec& b) const {
        Vec r = zero_vec(A.field, v_dim);
        for (int i = 0; i < A.dim; ++i) {
            if (a[i].is_zero()) continue;
            for (int j = 0; j < A.dim; ++j) {
                if (b[j].is_zero()) continue;
                Scalar c = a[i] * b[j];
                for (int x = 0; x < v_dim; ++x)
                    if (!th(i, j, x).is_zero()) r[x] += c * th(i, j, x);
            }
        }
        return r;
    }
    Vec v_mul(const Vec& x, const Vec& y) const {
        Vec r = zero_vec(A.field, v_dim);
        for (int xx = 0; xx < v_dim; ++xx) {
            if (x[xx].is_zero()) continue;
            for (int yy = 0; yy < v_dim; ++yy) {
                if (y[yy].is_zero()) continue;
                Scalar c = x[xx] * y[yy];
                for (int z = 0; z < v_dim; ++z)
                    if (!vm(xx, yy, z).is_zero()) r[z] += c * vm(xx, yy, z);
            }
        }
        return r;
    }

    bool shapes_ok() const {
        std::size_t n = A.dim, m = v_dim;
        return act_left.size() == n * m * m && act_right.size() == m * n * m &&
               cocycle.size() == n * n * m && v_mult.size() == m * m * m;
    }
};

// Axioms H0..H8; an empty report makes the data a Hochschild system.
inline ValidationReport validate_system(const HochschildData& d) {
    if (!d.shapes_ok()) throw usage_error("hochschild data: tensor shape mismatch");
    ValidationReport rep;
    const Algebra& A = d.A;
    const int n = A.dim, m = d.v_dim;
    const Vec& one = A.unit;
    auto vb = [&](int x) {
        Vec v = zero_vec(A.field, m);
        v[x] = Scalar::one(A.field);
        return v;
    };

    for (int i = 0; i < n; ++i) {
        if (!is_zero_vec(d.coc(A.basis_vec(i), one))) rep.push_back({"H0", {i}, "theta(a,1) != 0"});
        if (!is_zero_vec(d.coc(one, A.basis_vec(i)))) rep.push_back({"H0", {i}, "theta(1,a) != 0"});
    }
    for (int x = 0; x < m; ++x) {
        if (d.act_r(vb(x), one) != vb(x)) rep.push_back({"H0", {x}, "x <| 1 != x"});
        if (d.act_l(one, vb(x)) != vb(x)) rep.push_back({"H0", {x}, "1 |> x != x"});
    }
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            for (int i = 0; i < n; ++i) {
                Vec a = A.basis_vec(i);
                if (d.act_r(d.v_mul(vb(x), vb(y)), a) != d.v_mul(vb(x), d.act_r(vb(y), a)))
                    rep.push_back({"H1", {x, y, i}, "(x.y) <| a != x.(y <| a)"});
                if (d.v_mul(d.act_r(vb(x), a), vb(y)) != d.v_mul(vb(x), d.act_l(a, vb(y))))
                    rep.push_back({"H2", {x, i, y}, "(x <| a).y != x.(a |> y)"});
                if (d.act_l(a, d.v_mul(vb(x), vb(y))) != d.v_mul(d.act_l(a, vb(x)), vb(y)))
                    rep.push_back({"H3", {i, x, y}, "a |> (x.y) != (a |> x).y"});
            }
    for (int i = 0; i < n; ++i)
        for (int x = 0; x < m; ++x)
            for (int j = 0; j < n; ++j) {
                Vec a = A.basis_vec(i), b = A.basis_vec(j);
                if (d.act_r(d.act_l(a, vb(x)), b) != d.act_l(a, d.act_r(vb(x), b)))
                    rep.push_back({"H4", {i, x, j}, "(a |> x) <| b != a |> (x <| b)"});
            }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec a = A.basis_vec(i), b = A.basis_vec(j);
            Vec ab = A.basis_mul(i, j);
            for (int k = 0; k < n; ++k) {
                Vec c = A.basis_vec(k);
                Vec lhs = sub(d.coc(a, A.basis_mul(j, k)), d.coc(ab, c));
                Vec rhs = sub(d.act_r(d.coc(a, b), c), d.act_l(a, d.coc(b, c)));
                if (lhs != rhs) rep.push_back({"H5", {i, j, k}, "cocycle identity fails"});
            }
            for (int x = 0; x < m; ++x) {
                Vec lhs6 = d.act_l(ab, vb(x));
                Vec rhs6 = sub(d.act_l(a, d.act_l(b, vb(x))), d.v_mul(d.coc(a, b), vb(x)));
                if (lhs6 != rhs6) rep.push_back({"H6", {i, j, x}, "(ab) |> x fails"});
                Vec lhs7 = d.act_r(vb(x), ab);
                Vec rhs7 = sub(d.act_r(d.act_r(vb(x), a), b), d.v_mul(vb(x), d.coc(a, b)));
                if (lhs7 != rhs7) rep.push_back({"H7", {i, j, x}, "x <| (ab) fails"});
            }
        }
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            for (int z = 0; z < m; ++z)
                if (d.v_mul(d.v_mul(vb(x), vb(y)), vb(z)) != d.v_mul(vb(x), d.v_mul(vb(y), vb(z))))
                    rep.push_back({"H8", {x, y, z}, "kernel multiplication not associative"});
    return rep;
}

inline bool is_system(const HochschildData& d) { return validate_system(d).empty(); }

struct ExtensionAlgebra {
    Algebra total;
    Matrix projection;  // dim_A x (dim_A + v_dim), kernel = 0 x V
    Matrix injection;   // (dim_A + v_dim) x v_dim
    HochschildData system;
};

inline ExtensionAlgebra build_product(const HochschildData& d) {
    ValidationReport rep = validate_system(d);
    if (!rep.empty())
        throw validation_error("build_product: axioms violated, first: " + rep.front().axiom, rep);
    const int n = d.A.dim, m = d.v_dim, N = n + m;
    Algebra t(d.A.field, N);
    for (int i = 0; i < n; ++i) t.basis[i] = d.A.basis[i];
    for (int x = 0; x < m; ++x) t.basis[n + x] = m == 1 ? "f" : "f" + std::to_string(x);
    for (int i = 0; i < n; ++i) t.unit[i] = d.A.unit[i];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) t.c(i, j, k) = d.A.c(i, j, k);
            for (int x = 0; x < m; ++x) t.c(i, j, n + x) = d.th(i, j, x);
        }
    for (int i = 0; i < n; ++i)
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y) {
                t.c(i, n + x, n + y) = d.al(i, x, y);
                t.c(n + x, i, n + y) = d.ar(x, i, y);
            }
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            for (int z = 0; z < m; ++z) t.c(n + x, n + y, n + z) = d.vm(x, y, z);
    t.name = d.A.name.empty() ? "" : d.A.name + " * k^" + std::to_string(m);

    ExtensionAlgebra ext;
    ext.total = std::move(t);
    ext.projection = Matrix(d.A.field, n, N);
    for (int i = 0; i < n; ++i) ext.projection.at(i, i) = Scalar::one(d.A.field);
    ext.injection = Matrix(d.A.field, N, m);
    for (int x = 0; x < m; ++x) ext.injection.at(n + x, x) = Scalar::one(d.A.field);
    ext.system = d;
    return ext;
}

// Recover a Hochschild system from a surjection pi : E -> A and a unital
// linear section s of pi. The kernel basis is the canonical echelon one.
//
//   x <| a = x * s(a),  a |> x = s(a) * x,  theta(a,b) = s(a)s(b) - s(ab)
struct ExtractedSystem {
    HochschildData system;
    std::vector<Vec> kernel_basis;  // vectors in E coordinates
    Matrix comparison;              // iso  A*V -> E,  (a, x) -> s(a) + x
};

inline ExtractedSystem extract_system(const Algebra& E, const Matrix& pi, const Algebra& A,
                                      const Matrix& s) {
    if (pi.rows != A.dim || pi.cols != E.dim || s.rows != E.dim || s.cols != A.dim)
        throw usage_error("extract_system: shape mismatch");
    if (!is_algebra_morphism(E, A, pi)) throw usage_error("extract_system: pi is not an algebra morphism");
    if (rank(pi) != A.dim) throw usage_error("extract_system: pi is not surjective");
    Matrix pis = pi * s;
    if (!(pis == Matrix::identity(A.field, A.dim)))
        throw usage_error("extract_system: s is not a section of pi");
    if (s.apply(A.unit) != E.unit) throw usage_error("extract_system: s is not unital");

    std::vector<Vec> kernel = rank_kernel(pi).kernel;
    const int m = static_cast<int>(kernel.size());
    Matrix K(E.field, E.dim, m);
    for (int j = 0; j < m; ++j) K.set_col(j, kernel[j]);
    auto v_coords = [&](const Vec& v) {
        auto sol = solve_affine(K, v);
        if (!sol) throw error("extract_system: vector not in kernel");
        return sol->particular;
    };

    HochschildData d(A, m);
    for (int i = 0; i < A.dim; ++i) {
        Vec sa = s.apply(A.basis_vec(i));
        for (int x = 0; x < m; ++x) {
            Vec lv = v_coords(E.mul(sa, kernel[x]));
            Vec rv = v_coords(E.mul(kernel[x], sa));
            for (int y = 0; y < m; ++y) {
                d.al(i, x, y) = lv[y];
                d.ar(x, i, y) = rv[y];
            }
        }
        for (int j = 0; j < A.dim; ++j) {
            Vec sb = s.apply(A.basis_vec(j));
            Vec tv = v_coords(sub(E.mul(sa, sb), s.apply(A.basis_mul(i, j))));
            for (int x = 0; x < m; ++x) d.th(i, j, x) = tv[x];
        }
    }
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            Vec pv = v_coords(E.mul(kernel[x], kernel[y]));
            for (int z = 0; z < m; ++z) d.vm(x, y, z) = pv[z];
        }

    ExtractedSystem out;
    out.system = std::move(d);
    out.kernel_basis = kernel;
    out.comparison = Matrix(E.field, E.dim, A.dim + m);
    for (int j = 0; j < A.dim; ++j) out.comparison.set_col(j, s.col(j));
    for (int x = 0; x < m; ++x) out.comparison.set_col(A.dim + x, kernel[x]);
    return out;
}

// The cohomologous test. Two systems over the same A and V are cohomologous
// when their kernel multiplications agree and some linear r : A -> V with
// r(1) = 0 satisfies the transport identities; the induced map
// psi_r(a, x) = (a, r(a) + x) is then an isomorphism of the two products.
//
// The transport identities are linear in r except for one product term that
// vanishes whenever the kernel multiplication is trivial; in that case a
// single exact affine solve decides the question over any field. Otherwise
// the action identities pin r down to an affine subspace which is searched
// exhaustively over F_p (and directly checked when zero-dimensional).
inline std::optional<Matrix> is_cohomologous(const HochschildData& d, const HochschildData& dp,
                                             std::int64_t budget = 2000000) {
    if (!d.A.same_structure(dp.A) || d.v_dim != dp.v_dim)
        throw usage_error("is_cohomologous: mismatched algebra or kernel dimension");
    if (d.v_mult != dp.v_mult) return std::nullopt;  // CH1
    const Algebra& A = d.A;
    const int n = A.dim, m = d.v_dim;
    const int nr = m * n;
    auto ridx = [n](int x, int i) { return x * n + i; };
    const Scalar zero = Scalar::zero(A.field);
    bool trivial_vmult = std::all_of(dp.v_mult.begin(), dp.v_mult.end(),
                                     [](const Scalar& s) { return s.is_zero(); });

    std::vector<Vec> rows;
    Vec rhs_all;
    auto add_row = [&](const Vec& row, const Scalar& rhs) {
        rows.push_back(row);
        rhs_all.push_back(rhs);
    };

    // r(1) = 0
    for (int x = 0; x < m; ++x) {
        Vec row(nr, zero);
        for (int i = 0; i < n; ++i) row[ridx(x, i)] = A.unit[i];
        add_row(row, zero);
    }
    // CH2: x <| a - x <|' a = x .' r(a)
    for (int x = 0; x < m; ++x)
        for (int i = 0; i < n; ++i)
            for (int y = 0; y < m; ++y) {
                Vec row(nr, zero);
                for (int z = 0; z < m; ++z) row[ridx(z, i)] = dp.vm(x, z, y);
                add_row(row, d.ar(x, i, y) - dp.ar(x, i, y));
            }
    // CH3: a |> x - a |>' x = r(a) .' x
    for (int i = 0; i < n; ++i)
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y) {
                Vec row(nr, zero);
                for (int z = 0; z < m; ++z) row[ridx(z, i)] = dp.vm(z, x, y);
                add_row(row, d.al(i, x, y) - dp.al(i, x, y));
            }
    // CH4 without the quadratic term (valid verbatim when .' = 0):
    // theta(a,b) - theta'(a,b) = -r(ab) + a |>' r(b) + r(a) <|' b
    if (trivial_vmult) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int y = 0; y < m; ++y) {
                    Vec row(nr, zero);
                    for (int k = 0; k < n; ++k) row[ridx(y, k)] -= A.c(i, j, k);
                    for (int x = 0; x < m; ++x) {
                        row[ridx(x, j)] += dp.al(i, x, y);
                        row[ridx(x, i)] += dp.ar(x, j, y);
                    }
                    add_row(row, d.th(i, j, y) - dp.th(i, j, y));
                }
    }

    Matrix M = Matrix::from_rows(A.field, rows, nr);
    auto sol = solve_affine(M, rhs_all);
    if (!sol) return std::nullopt;

    auto as_matrix = [&](const Vec& flat) {
        Matrix R(A.field, m, n);
        for (int x = 0; x < m; ++x)
            for (int i = 0; i < n; ++i) R.at(x, i) = flat[ridx(x, i)];
        return R;
    };
    auto check_ch4_full = [&](const Matrix& R) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Vec ra = R.col(i), rb = R.col(j), rab = R.apply(A.basis_mul(i, j));
                Vec lhs = add(Vec(d.cocycle.begin() + (static_cast<std::size_t>(i) * n + j) * m,
                                  d.cocycle.begin() + (static_cast<std::size_t>(i) * n + j + 1) * m),
                              rab);
                Vec rhs = Vec(dp.cocycle.begin() + (static_cast<std::size_t>(i) * n + j) * m,
                              dp.cocycle.begin() + (static_cast<std::size_t>(i) * n + j + 1) * m);
                rhs = add(rhs, dp.act_l(A.basis_vec(i), rb));
                rhs = add(rhs, dp.act_r(ra, A.basis_vec(j)));
                rhs = add(rhs, dp.v_mul(ra, rb));
                if (lhs != rhs) return false;
            }
        return true;
    };

    if (trivial_vmult) return as_matrix(sol->particular);

    if (sol->kernel.empty()) {
        Matrix R = as_matrix(sol->particular);
        if (check_ch4_full(R)) return R;
        return std::nullopt;
    }
    if (!A.field.is_prime_field())
        throw budget_error("is_cohomologous: nontrivial kernel multiplication with a free "
                           "parameter space is only searched over a finite field");
    int kd = static_cast<int>(sol->kernel.size());
    if (pow_i64_checked(A.field.p, kd, budget) > budget)
        throw budget_error("is_cohomologous: r-search budget exceeded");
    std::optional<Matrix> found;
    for_each_fp_vector(A.field, kd, [&](const Vec& coeffs) {
        Vec flat = sol->particular;
        for (int t = 0; t < kd; ++t) flat = add(flat, scale(coeffs[t], sol->kernel[t]));
        Matrix R = as_matrix(flat);
        if (check_ch4_full(R)) {
            found = R;
            return false;
        }
        return true;
    });
    return found;
}

// The transported map psi_r(a, x) = (a, r(a) + x) as a matrix on A x V.
inline Matrix cohomology_transport(const HochschildData& d, const Matrix& R) {
    const int n = d.A.dim, m = d.v_dim;
    Matrix psi = Matrix::identity(d.A.field, n + m);
    for (int x = 0; x < m; ++x)
        for (int i = 0; i < n; ++i) psi.at(n + x, i) = R.at(x, i);
    return psi;
}

// Split-epimorphism check: pi must be a surjective algebra map; the candidate
// section is accepted iff it is a unital algebra morphism splitting pi, and
// the returned system is then a semidirect one (trivial cocycle).
inline std::optional<HochschildData> check_split(const Algebra& B, const Matrix& pi,
                                                 const Algebra& A, const Matrix& s) {
    if (!is_algebra_morphism(B, A, pi) || rank(pi) != A.dim)
        throw usage_error("check_split: pi is not a surjective algebra morphism");
    if (!is_algebra_morphism(A, B, s)) return std::nullopt;
    Matrix pis = pi * s;
    if (!(pis == Matrix::identity(A.field, A.dim))) return std::nullopt;
    ExtractedSystem ex = extract_system(B, pi, A, s);
    for (const Scalar& c : ex.system.cocycle)
        if (!c.is_zero()) throw error("check_split: section is a morphism but cocycle is nonzero");
    return ex.system;
}

}  // namespace coflag

#endif
