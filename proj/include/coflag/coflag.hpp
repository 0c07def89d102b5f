// One-dimensional kernels: co-flag data and the classification machinery.
//
// A co-flag datum of the first kind is a triple (lambda, Lambda, theta) of two
// characters and a normalized (lambda, Lambda)-cocycle; the associated product
// carries (a,x)*(b,y) = (ab, theta(a,b) + lambda(a)y + Lambda(b)x). A datum of
// the second kind is a unital linear functional together with u != 0; its
// product has an invertible kernel line and is isomorphic to A x k.
//
// The classifying object splits into one block of cocycle classes per ordered
// character pair, computed by exact linear algebra (kernel of the cocycle
// identity modulo the coboundary image), plus one class per nonzero scalar.

#ifndef COFLAG_COFLAG_HPP
#define COFLAG_COFLAG_HPP

#include "automorphisms.hpp"
#include "hochschild.hpp"

#include <map>
#include <optional>

namespace coflag {

struct CoflagDatum {
    bool second_kind = false;
    Vec lambda;     // character (first kind) or unital functional (second kind)
    Vec Lambda;     // first kind only
    Matrix theta;   // first kind only, dim x dim
    Scalar u;       // second kind only

    static CoflagDatum first(Vec lambda, Vec Lambda, Matrix theta) {
        CoflagDatum d;
        d.lambda = std::move(lambda);
        d.Lambda = std::move(Lambda);
        d.theta = std::move(theta);
        return d;
    }
    static CoflagDatum second(Vec lambda, Scalar u) {
        CoflagDatum d;
        d.second_kind = true;
        d.lambda = std::move(lambda);
        d.u = u;
        return d;
    }
};

inline ValidationReport validate_coflag(const Algebra& a, const CoflagDatum& d) {
    ValidationReport rep;
    if (static_cast<int>(d.lambda.size()) != a.dim)
        throw usage_error("coflag datum: lambda size mismatch");
    const Scalar one = Scalar::one(a.field);
    if (d.second_kind) {
        if (dot(d.lambda, a.unit) != one) rep.push_back({"unital", {}, "lambda(1) != 1"});
        if (d.u.is_zero()) rep.push_back({"nonzero-u", {}, "u must be a nonzero scalar"});
        return rep;
    }
    if (static_cast<int>(d.Lambda.size()) != a.dim || d.theta.rows != a.dim || d.theta.cols != a.dim)
        throw usage_error("coflag datum: shape mismatch");
    if (!is_character(a, d.lambda)) rep.push_back({"character", {0}, "lambda is not an algebra map"});
    if (!is_character(a, d.Lambda)) rep.push_back({"character", {1}, "Lambda is not an algebra map"});
    auto theta_of = [&](const Vec& x, const Vec& y) {
        Scalar s = Scalar::zero(a.field);
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < a.dim; ++j)
                if (!d.theta.at(i, j).is_zero()) s += x[i] * y[j] * d.theta.at(i, j);
        return s;
    };
    for (int i = 0; i < a.dim; ++i) {
        if (!theta_of(a.basis_vec(i), a.unit).is_zero())
            rep.push_back({"normalized", {i}, "theta(e_i, 1) != 0"});
        if (!theta_of(a.unit, a.basis_vec(i)).is_zero())
            rep.push_back({"normalized", {i}, "theta(1, e_i) != 0"});
    }
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k) {
                Scalar lhs = theta_of(a.basis_vec(i), a.basis_mul(j, k)) -
                             theta_of(a.basis_mul(i, j), a.basis_vec(k));
                Scalar rhs = d.theta.at(i, j) * dot(d.Lambda, a.basis_vec(k)) -
                             d.theta.at(j, k) * dot(d.lambda, a.basis_vec(i));
                if (lhs != rhs) rep.push_back({"cocycle", {i, j, k}, "cocycle identity fails"});
            }
    return rep;
}

// Data <-> 1-dimensional Hochschild systems (mutually inverse).
inline HochschildData hs_from_cf(const Algebra& a, const CoflagDatum& d) {
    ValidationReport rep = validate_coflag(a, d);
    if (!rep.empty()) throw validation_error("invalid co-flag datum: " + rep.front().axiom, rep);
    HochschildData h(a, 1);
    if (!d.second_kind) {
        for (int i = 0; i < a.dim; ++i) {
            h.al(i, 0, 0) = d.lambda[i];
            h.ar(0, i, 0) = d.Lambda[i];
            for (int j = 0; j < a.dim; ++j) h.th(i, j, 0) = d.theta.at(i, j);
        }
        return h;
    }
    Scalar uinv = d.u.inverse();
    for (int i = 0; i < a.dim; ++i) {
        h.al(i, 0, 0) = d.lambda[i];
        h.ar(0, i, 0) = d.lambda[i];
        for (int j = 0; j < a.dim; ++j)
            h.th(i, j, 0) = uinv * (d.lambda[i] * d.lambda[j] - dot(d.lambda, a.basis_mul(i, j)));
    }
    h.vm(0, 0, 0) = d.u;
    return h;
}

inline CoflagDatum cf_from_hs(const HochschildData& h) {
    if (h.v_dim != 1) throw usage_error("cf_from_hs: kernel dimension must be 1");
    const Algebra& a = h.A;
    Vec lambda = zero_vec(a.field, a.dim), Lambda = zero_vec(a.field, a.dim);
    for (int i = 0; i < a.dim; ++i) {
        lambda[i] = h.al(i, 0, 0);
        Lambda[i] = h.ar(0, i, 0);
    }
    Scalar u = h.vm(0, 0, 0);
    if (u.is_zero()) {
        Matrix theta(a.field, a.dim, a.dim);
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < a.dim; ++j) theta.at(i, j) = h.th(i, j, 0);
        return CoflagDatum::first(std::move(lambda), std::move(Lambda), std::move(theta));
    }
    if (lambda != Lambda) throw error("cf_from_hs: invertible kernel with unequal actions");
    return CoflagDatum::second(std::move(lambda), u);
}

inline ExtensionAlgebra build_coflag_algebra(const Algebra& a, const CoflagDatum& d) {
    return build_product(hs_from_cf(a, d));
}

// Verified isomorphism A^(lambda,u) -> A x k,  (a, x) -> (a, lambda(a) + ux).
// Note it does not stabilize the kernel line unless u = 1.
struct SecondKindTrivializer {
    Algebra product;  // the direct product A x k
    Matrix iso;       // from the second-kind extension onto the product
};

inline SecondKindTrivializer trivializer_second_kind(const Algebra& a, const CoflagDatum& d) {
    if (!d.second_kind) throw usage_error("trivializer_second_kind: first-kind datum");
    ExtensionAlgebra ext = build_coflag_algebra(a, d);
    Algebra axk(a.field, a.dim + 1);
    for (int i = 0; i < a.dim; ++i) axk.basis[i] = a.basis[i];
    axk.basis[a.dim] = "f";
    for (int i = 0; i < a.dim; ++i) axk.unit[i] = a.unit[i];
    axk.unit[a.dim] = Scalar::one(a.field);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k) axk.c(i, j, k) = a.c(i, j, k);
    axk.c(a.dim, a.dim, a.dim) = Scalar::one(a.field);
    axk.name = (a.name.empty() ? "A" : a.name) + " x k";

    Matrix phi = Matrix::identity(a.field, a.dim + 1);
    for (int i = 0; i < a.dim; ++i) phi.at(a.dim, i) = d.lambda[i];
    phi.at(a.dim, a.dim) = d.u;
    if (!is_algebra_isomorphism(ext.total, axk, phi))
        throw error("trivializer_second_kind: comparison map failed verification");
    return {std::move(axk), std::move(phi)};
}

// ---------------------------------------------------------------------------
// cocycle classes per ordered character pair

struct H2Pair {
    Vec lambda, Lambda;
    int dim_z2 = 0, dim_b2 = 0, dim_h2 = 0;
    std::vector<Vec> z2_basis;          // flattened bilinear forms, echelon
    std::vector<Vec> b2_basis;
    std::vector<Matrix> representatives;  // coset representatives (prime field,
                                          // or the zero form when dim_h2 == 0)
};

inline Matrix unflatten_form(const FieldSpec& f, const Vec& flat, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = flat[i * n + j];
    return m;
}

inline H2Pair h2_pair(const Algebra& a, const Vec& lambda, const Vec& Lambda,
                      bool want_representatives = true) {
    if (!is_character(a, lambda) || !is_character(a, Lambda))
        throw usage_error("h2_pair: inputs must be characters");
    const int n = a.dim, N = n * n;
    const Scalar zero = Scalar::zero(a.field);
    auto tidx = [n](int i, int j) { return i * n + j; };

    // Z2: normalization rows + cocycle identity rows
    std::vector<Vec> rows;
    for (int i = 0; i < n; ++i) {
        Vec r1(N, zero), r2(N, zero);
        for (int j = 0; j < n; ++j) {
            r1[tidx(i, j)] += a.unit[j];
            r2[tidx(j, i)] += a.unit[j];
        }
        rows.push_back(r1);
        rows.push_back(r2);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec row(N, zero);
                for (int l = 0; l < n; ++l) {
                    row[tidx(i, l)] += a.c(j, k, l);
                    row[tidx(l, k)] -= a.c(i, j, l);
                }
                row[tidx(i, j)] -= Lambda[k];
                row[tidx(j, k)] += lambda[i];
                rows.push_back(row);
            }
    H2Pair out;
    out.lambda = lambda;
    out.Lambda = Lambda;
    out.z2_basis = rank_kernel(Matrix::from_rows(a.field, rows, N)).kernel;
    out.dim_z2 = static_cast<int>(out.z2_basis.size());

    // B2: image of t -> (a,b) |-> -t(ab) + lambda(a)t(b) + Lambda(b)t(a)
    // over the space of functionals with t(1) = 0
    std::vector<Vec> t_basis = rank_kernel(Matrix::from_rows(a.field, {a.unit}, n)).kernel;
    std::vector<Vec> images;
    for (const Vec& t : t_basis) {
        Vec img(N, zero);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                img[tidx(i, j)] =
                    lambda[i] * t[j] + Lambda[j] * t[i] - dot(t, a.basis_mul(i, j));
        images.push_back(img);
    }
    out.b2_basis = span_rref(a.field, images, N);
    out.dim_b2 = static_cast<int>(out.b2_basis.size());
    out.dim_h2 = out.dim_z2 - out.dim_b2;

    if (want_representatives) {
        if (a.field.is_prime_field()) {
            for (const Vec& rep : coset_representatives(a.field, out.z2_basis, out.b2_basis, N))
                out.representatives.push_back(unflatten_form(a.field, rep, n));
        } else if (out.dim_h2 == 0) {
            out.representatives.push_back(Matrix(a.field, n, n));
        }
    }
    return out;
}

struct GH2Report {
    std::vector<H2Pair> blocks;       // one per ordered character pair
    Vec lambda0;                      // base functional of the second-kind branch
    std::int64_t first_kind_count = 0;   // -1 when infinite (rationals, dim_h2 > 0)
    std::int64_t second_kind_count = 0;  // p - 1, or -1 over the rationals
    std::int64_t total_count = 0;        // -1 when infinite
};

inline GH2Report gh2_coflag(const Algebra& a, bool want_representatives = true) {
    GH2Report rep;
    auto chars = characters(a);
    for (const auto& l : chars)
        for (const auto& L : chars)
            rep.blocks.push_back(h2_pair(a, l.values, L.values, want_representatives));
    rep.lambda0 = unital_functional(a);
    bool finite = a.field.is_prime_field();
    rep.second_kind_count = finite ? a.field.p - 1 : -1;
    rep.first_kind_count = 0;
    for (const auto& b : rep.blocks) {
        if (finite)
            rep.first_kind_count += pow_i64_checked(a.field.p, b.dim_h2, 1000000000);
        else if (b.dim_h2 > 0)
            rep.first_kind_count = -1;
        else if (rep.first_kind_count >= 0)
            rep.first_kind_count += 1;
    }
    rep.total_count = (rep.first_kind_count < 0 || rep.second_kind_count < 0)
                          ? -1
                          : rep.first_kind_count + rep.second_kind_count;
    return rep;
}

// ---------------------------------------------------------------------------
// isomorphisms between first-kind products and their automorphism groups

struct IsoWitness {
    Scalar s0;
    Matrix psi;  // algebra automorphism of the base
    Vec r;       // linear functional on the base
};

// phi(a, x) = (psi(a), r(a) + x s0) as a matrix on A x k
inline Matrix witness_matrix(const Algebra& a, const IsoWitness& w) {
    Matrix phi(a.field, a.dim + 1, a.dim + 1);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) phi.at(i, j) = w.psi.at(i, j);
    for (int j = 0; j < a.dim; ++j) phi.at(a.dim, j) = w.r[j];
    phi.at(a.dim, a.dim) = w.s0;
    return phi;
}

// Decide A_(d) ~ A_(d') by scanning the supplied automorphism group: psi must
// transport both characters, and the residual condition is one linear system
// in the joint unknowns (s0, r); any solution with s0 != 0 gives a witness.
// A negative answer is exhaustive relative to the supplied group.
inline std::optional<IsoWitness> find_iso_first_kind(const Algebra& a, const CoflagDatum& d,
                                                     const CoflagDatum& dp,
                                                     const std::vector<Matrix>& autos) {
    if (d.second_kind || dp.second_kind) throw usage_error("find_iso_first_kind: first-kind data only");
    if (autos.empty()) throw usage_error("find_iso_first_kind: automorphism list must contain id");
    const int n = a.dim;
    const Scalar zero = Scalar::zero(a.field);
    auto compose = [&](const Vec& functional, const Matrix& psi) {
        Vec out = zero_vec(a.field, n);
        for (int j = 0; j < n; ++j) out[j] = dot(functional, psi.col(j));
        return out;
    };
    for (const Matrix& psi : autos) {
        if (compose(dp.lambda, psi) != d.lambda) continue;
        if (compose(dp.Lambda, psi) != d.Lambda) continue;
        // theta(e_i,e_j) s0 - lambda(e_i) r(e_j) - Lambda(e_j) r(e_i) + r(e_i e_j)
        //   = theta'(psi e_i, psi e_j)
        std::vector<Vec> rows;
        Vec rhs;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Vec row(n + 1, zero);
                row[0] = d.theta.at(i, j);
                row[1 + j] -= d.lambda[i];
                row[1 + i] -= d.Lambda[j];
                Vec ab = a.basis_mul(i, j);
                for (int k = 0; k < n; ++k) row[1 + k] += ab[k];
                rows.push_back(row);
                Vec pi = psi.col(i), pj = psi.col(j);
                Scalar v = zero;
                for (int s = 0; s < n; ++s)
                    for (int t = 0; t < n; ++t)
                        if (!dp.theta.at(s, t).is_zero()) v += pi[s] * pj[t] * dp.theta.at(s, t);
                rhs.push_back(v);
            }
        auto sol = solve_affine(Matrix::from_rows(a.field, rows, n + 1), rhs);
        if (!sol) continue;
        Vec candidate = sol->particular;
        if (candidate[0].is_zero()) {
            for (const Vec& kv : sol->kernel)
                if (!kv[0].is_zero()) {
                    candidate = add(candidate, kv);
                    break;
                }
            if (candidate[0].is_zero()) continue;
        }
        IsoWitness w;
        w.s0 = candidate[0];
        w.psi = psi;
        w.r = Vec(candidate.begin() + 1, candidate.end());
        Algebra left = build_coflag_algebra(a, d).total;
        Algebra right = build_coflag_algebra(a, dp).total;
        if (!is_algebra_isomorphism(left, right, witness_matrix(a, w)))
            throw error("find_iso_first_kind: witness failed verification");
        return w;
    }
    return std::nullopt;
}

struct HOCClass {
    std::vector<CoflagDatum> members;     // members[0] is the representative
    std::vector<IsoWitness> witnesses;    // witnesses[i] maps members[i] onto members[0]
};

struct HOCReport {
    std::vector<HOCClass> first_kind_classes;
    bool direct_product_class = true;  // the distinguished A x k class, never merged
    std::size_t total_classes() const { return first_kind_classes.size() + 1; }
};

// Isomorphism classes of all products A * k: orbits of the first-kind cocycle
// classes under the automorphism action, plus the direct product.
inline HOCReport hoc(const Algebra& a, const std::vector<Matrix>& autos) {
    if (!a.field.is_prime_field())
        throw usage_error("hoc: representative enumeration needs a prime field");
    GH2Report gh2 = gh2_coflag(a, true);
    std::vector<CoflagDatum> data;
    for (const auto& block : gh2.blocks)
        for (const Matrix& theta : block.representatives)
            data.push_back(CoflagDatum::first(block.lambda, block.Lambda, theta));

    std::vector<int> parent(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    std::map<std::pair<int, int>, IsoWitness> links;
    for (std::size_t i = 0; i < data.size(); ++i)
        for (std::size_t j = i + 1; j < data.size(); ++j) {
            if (find(static_cast<int>(i)) == find(static_cast<int>(j))) continue;
            auto w = find_iso_first_kind(a, data[i], data[j], autos);
            if (w) {
                links[{static_cast<int>(i), static_cast<int>(j)}] = *w;
                parent[find(static_cast<int>(j))] = find(static_cast<int>(i));
            }
        }

    HOCReport rep;
    std::map<int, int> root_to_class;
    for (std::size_t i = 0; i < data.size(); ++i) {
        int r = find(static_cast<int>(i));
        auto it = root_to_class.find(r);
        if (it == root_to_class.end()) {
            root_to_class[r] = static_cast<int>(rep.first_kind_classes.size());
            HOCClass cls;
            cls.members.push_back(data[i]);
            cls.witnesses.push_back(IsoWitness{Scalar::one(a.field), Matrix::identity(a.field, a.dim),
                                               zero_vec(a.field, a.dim)});
            rep.first_kind_classes.push_back(std::move(cls));
        } else {
            HOCClass& cls = rep.first_kind_classes[it->second];
            cls.members.push_back(data[i]);
            // witness from this member onto the class representative
            auto w = find_iso_first_kind(a, data[i], cls.members[0], autos);
            if (!w) throw error("hoc: merged class lost its witness");
            cls.witnesses.push_back(*w);
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// the automorphism group of a first-kind product, materialized over F_p

struct AutGroupElement {
    Scalar s0;
    Matrix psi;
    Vec r;
};

struct CoflagAutGroup {
    std::vector<AutGroupElement> elements;

    // composition law (s0, psi, r)(s0', psi', r') = (s0 s0', psi psi', r psi' + s0 r')
    AutGroupElement compose(const AutGroupElement& x, const AutGroupElement& y) const {
        AutGroupElement z;
        z.s0 = x.s0 * y.s0;
        z.psi = x.psi * y.psi;
        z.r = zero_vec(x.s0.field(), static_cast<int>(x.r.size()));
        for (std::size_t j = 0; j < z.r.size(); ++j)
            z.r[j] = dot(x.r, y.psi.col(static_cast<int>(j))) + x.s0 * y.r[j];
        return z;
    }
};

inline bool operator==(const AutGroupElement& a, const AutGroupElement& b) {
    return a.s0 == b.s0 && a.psi == b.psi && a.r == b.r;
}

inline CoflagAutGroup aut_group(const Algebra& a, const CoflagDatum& d,
                                const std::vector<Matrix>& autos,
                                std::int64_t budget = 2000000) {
    if (d.second_kind) throw usage_error("aut_group: first-kind datum required");
    if (!a.field.is_prime_field()) throw usage_error("aut_group: finite field required");
    CoflagAutGroup g;
    const int n = a.dim;
    const Scalar zero = Scalar::zero(a.field);
    auto compose_f = [&](const Vec& functional, const Matrix& psi) {
        Vec out = zero_vec(a.field, n);
        for (int j = 0; j < n; ++j) out[j] = dot(functional, psi.col(j));
        return out;
    };
    for (const Matrix& psi : autos) {
        if (compose_f(d.lambda, psi) != d.lambda) continue;
        if (compose_f(d.Lambda, psi) != d.Lambda) continue;
        std::vector<Vec> rows;
        Vec rhs;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Vec row(n + 1, zero);
                row[0] = d.theta.at(i, j);
                row[1 + j] -= d.lambda[i];
                row[1 + i] -= d.Lambda[j];
                Vec ab = a.basis_mul(i, j);
                for (int k = 0; k < n; ++k) row[1 + k] += ab[k];
                rows.push_back(row);
                Vec pi = psi.col(i), pj = psi.col(j);
                Scalar v = zero;
                for (int s = 0; s < n; ++s)
                    for (int t = 0; t < n; ++t)
                        if (!d.theta.at(s, t).is_zero()) v += pi[s] * pj[t] * d.theta.at(s, t);
                rhs.push_back(v);
            }
        auto sol = solve_affine(Matrix::from_rows(a.field, rows, n + 1), rhs);
        if (!sol) continue;
        int kd = static_cast<int>(sol->kernel.size());
        if (pow_i64_checked(a.field.p, kd, budget) > budget)
            throw budget_error("aut_group: solution space too large");
        for_each_fp_vector(a.field, kd, [&](const Vec& coeffs) {
            Vec cand = sol->particular;
            for (int t = 0; t < kd; ++t) cand = add(cand, scale(coeffs[t], sol->kernel[t]));
            if (!cand[0].is_zero())
                g.elements.push_back({cand[0], psi, Vec(cand.begin() + 1, cand.end())});
            return true;
        });
    }
    return g;
}

// ---------------------------------------------------------------------------
// iterated one-dimensional extensions

struct CoflagTower {
    Algebra total;
    std::vector<Matrix> projections;  // step i maps level i+1 onto level i
    std::vector<Algebra> levels;      // levels[0] = base
};

inline CoflagTower coflag_tower(const Algebra& base, const std::vector<CoflagDatum>& data) {
    CoflagTower t;
    t.levels.push_back(base);
    Algebra cur = base;
    for (std::size_t step = 0; step < data.size(); ++step) {
        ValidationReport rep = validate_coflag(cur, data[step]);
        if (!rep.empty())
            throw validation_error("coflag_tower: datum " + std::to_string(step) +
                                       " invalid over level " + std::to_string(step) + ": " +
                                       rep.front().axiom,
                                   rep);
        ExtensionAlgebra ext = build_coflag_algebra(cur, data[step]);
        if (rank(ext.projection) != cur.dim) throw error("coflag_tower: projection not surjective");
        t.projections.push_back(ext.projection);
        cur = ext.total;
        t.levels.push_back(cur);
    }
    t.total = cur;
    return t;
}

// ---------------------------------------------------------------------------
// recursive classification of co-flag algebras of a given dimension

struct ClassifiedAlgebra {
    Algebra rep;
    std::string provenance;  // chain of construction steps from k
};

inline Algebra direct_product_with_k(const Algebra& a) {
    Algebra k(a.field, 1);
    k.basis = {"f"};
    k.unit[0] = Scalar::one(a.field);
    k.c(0, 0, 0) = Scalar::one(a.field);
    return direct_product(a, k);
}

inline std::vector<ClassifiedAlgebra> classify_coflag(int n, const FieldSpec& field,
                                                      std::int64_t budget = 100000000) {
    if (!field.is_prime_field()) throw usage_error("classify_coflag: prime field required");
    if (n < 1) throw usage_error("classify_coflag: dimension must be >= 1");
    if (field.p == 2 && n >= 3)
        throw usage_error("classify_coflag: refusing dimension >= 3 in characteristic 2");
    Algebra k(field, 1);
    k.basis = {"1"};
    k.unit[0] = Scalar::one(field);
    k.c(0, 0, 0) = Scalar::one(field);
    k.name = "k";
    std::vector<ClassifiedAlgebra> level{{k, "k"}};
    for (int d = 2; d <= n; ++d) {
        std::vector<ClassifiedAlgebra> next;
        auto add_candidate = [&](Algebra cand, std::string prov) {
            for (const auto& existing : next)
                if (find_algebra_isomorphism(cand, existing.rep, budget)) return;
            next.push_back({std::move(cand), std::move(prov)});
        };
        for (const auto& parent : level) {
            std::vector<Matrix> autos = parent.rep.known_automorphisms
                                            ? *parent.rep.known_automorphisms
                                            : automorphisms_brute(parent.rep, budget);
            HOCReport rep = hoc(parent.rep, autos);
            for (std::size_t c = 0; c < rep.first_kind_classes.size(); ++c) {
                const CoflagDatum& datum = rep.first_kind_classes[c].members[0];
                Algebra cand = build_coflag_algebra(parent.rep, datum).total;
                add_candidate(std::move(cand),
                              parent.provenance + " -> class " + std::to_string(c));
            }
            add_candidate(direct_product_with_k(parent.rep), parent.provenance + " -> x k");
        }
        level = std::move(next);
    }
    return level;
}

}  // namespace coflag

#endif
