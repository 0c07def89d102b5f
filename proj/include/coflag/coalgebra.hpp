// Finite-dimensional coalgebras, the dualization functor and supersolvability.
//
// A coalgebra is stored through its comultiplication tensor
// Delta(c_i) = sum_{j,k} d[i][j][k] c_j (x) c_k and counit row. Dualizing an
// algebra transposes the structure constants (d[i][j][k] = c[j][k][i]); the
// convolution algebra of a coalgebra transposes them back, so the double dual
// is the identity on structure constants.

#ifndef COFLAG_COALGEBRA_HPP
#define COFLAG_COALGEBRA_HPP

#include "ideals.hpp"

#include <optional>
#include <set>

namespace coflag {

struct Coalgebra {
    FieldSpec field;
    int dim = 0;
    std::vector<std::string> basis;
    std::vector<Scalar> comult;  // d[(i*dim + j)*dim + k]
    Vec counit;
    std::string name;

    Coalgebra() = default;
    Coalgebra(const FieldSpec& f, int n) : field(f), dim(n), counit(zero_vec(f, n)) {
        basis.resize(n);
        for (int i = 0; i < n; ++i) basis[i] = "c" + std::to_string(i);
        comult.assign(static_cast<std::size_t>(n) * n * n, Scalar::zero(f));
    }

    const Scalar& d(int i, int j, int k) const {
        return comult[(static_cast<std::size_t>(i) * dim + j) * dim + k];
    }
    Scalar& d(int i, int j, int k) {
        return comult[(static_cast<std::size_t>(i) * dim + j) * dim + k];
    }

    // Delta of a coordinate vector, flattened into dim^2 coordinates (j*dim+k)
    Vec comult_of(const Vec& v) const {
        Vec out = zero_vec(field, dim * dim);
        for (int i = 0; i < dim; ++i) {
            if (v[i].is_zero()) continue;
            for (int j = 0; j < dim; ++j)
                for (int k = 0; k < dim; ++k)
                    if (!d(i, j, k).is_zero()) out[j * dim + k] += v[i] * d(i, j, k);
        }
        return out;
    }
};

inline ValidationReport validate_coalgebra(const Coalgebra& c) {
    ValidationReport rep;
    if (static_cast<int>(c.counit.size()) != c.dim ||
        c.comult.size() != static_cast<std::size_t>(c.dim) * c.dim * c.dim)
        throw usage_error("coalgebra tensor dimensions inconsistent");
    const int n = c.dim;
    // coassociativity: (Delta (x) Id) Delta = (Id (x) Delta) Delta
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int e = 0; e < n; ++e) {
                    Scalar lhs = Scalar::zero(c.field), rhs = Scalar::zero(c.field);
                    for (int j = 0; j < n; ++j) {
                        lhs += c.d(i, j, e) * c.d(j, a, b);
                        rhs += c.d(i, a, j) * c.d(j, b, e);
                    }
                    if (lhs != rhs) {
                        rep.push_back({"coassociativity", {i, a, b, e}, "tensor coefficients differ"});
                    }
                }
    // counit: (Id (x) eps) Delta = (eps (x) Id) Delta = Id
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Scalar right = Scalar::zero(c.field), left = Scalar::zero(c.field);
            for (int k = 0; k < n; ++k) {
                right += c.d(i, j, k) * c.counit[k];
                left += c.d(i, k, j) * c.counit[k];
            }
            Scalar want = i == j ? Scalar::one(c.field) : Scalar::zero(c.field);
            if (right != want) rep.push_back({"counit-right", {i, j}, "(Id x eps) Delta != Id"});
            if (left != want) rep.push_back({"counit-left", {i, j}, "(eps x Id) Delta != Id"});
        }
    return rep;
}

inline Coalgebra dualize_algebra(const Algebra& a) {
    require_valid(a, "dualize_algebra");
    Coalgebra c(a.field, a.dim);
    for (int i = 0; i < a.dim; ++i) c.basis[i] = a.basis[i] + "*";
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k) c.d(i, j, k) = a.c(j, k, i);
    c.counit = a.unit;
    c.name = a.name.empty() ? "" : "dual(" + a.name + ")";
    return c;
}

inline Algebra convolution_algebra(const Coalgebra& c) {
    Algebra a(c.field, c.dim);
    for (int i = 0; i < c.dim; ++i) a.basis[i] = c.basis[i] + "*";
    for (int i = 0; i < c.dim; ++i)
        for (int j = 0; j < c.dim; ++j)
            for (int k = 0; k < c.dim; ++k) a.c(i, j, k) = c.d(k, i, j);
    a.unit = c.counit;
    a.name = c.name.empty() ? "" : "conv(" + c.name + ")";
    ValidationReport rep = validate_algebra(a);
    if (!rep.empty())
        throw validation_error("convolution_algebra: input is not a coalgebra (" +
                                   rep.front().axiom + ")",
                               rep);
    return a;
}

// All group-like elements: g != 0 with Delta(g) = g (x) g and eps(g) = 1,
// in canonical order.
inline std::vector<Vec> grouplikes(const Coalgebra& c, std::int64_t budget = 2000000) {
    if (!c.field.is_prime_field()) throw usage_error("grouplike search needs a prime field");
    if (pow_i64_checked(c.field.p, c.dim, budget) > budget)
        throw budget_error("grouplike search budget exceeded");
    std::vector<Vec> out;
    for_each_fp_vector(c.field, c.dim, [&](const Vec& g) {
        if (is_zero_vec(g)) return true;
        if (dot(c.counit, g) != Scalar::one(c.field)) return true;
        Vec lhs = c.comult_of(g);
        for (int j = 0; j < c.dim; ++j)
            for (int k = 0; k < c.dim; ++k)
                if (lhs[j * c.dim + k] != g[j] * g[k]) return true;
        out.push_back(g);
        return true;
    });
    std::sort(out.begin(), out.end(), [](const Vec& x, const Vec& y) { return cmp_vec(x, y) < 0; });
    return out;
}

struct SubcoalgebraChain {
    std::vector<std::vector<Vec>> subspaces;  // echelon bases, dims 1..n
};

inline bool is_subcoalgebra(const Coalgebra& c, const std::vector<Vec>& basis) {
    // Delta(W) must lie in W (x) W
    std::vector<Vec> tensor_basis;
    for (const Vec& v : basis)
        for (const Vec& w : basis) {
            Vec t = zero_vec(c.field, c.dim * c.dim);
            for (int j = 0; j < c.dim; ++j)
                for (int k = 0; k < c.dim; ++k) t[j * c.dim + k] = v[j] * w[k];
            tensor_basis.push_back(t);
        }
    auto span = span_rref(c.field, tensor_basis, c.dim * c.dim);
    for (const Vec& v : basis)
        if (!in_span(c.field, span, c.comult_of(v), c.dim * c.dim)) return false;
    return true;
}

namespace detail {

inline bool chain_dfs(const Coalgebra& c, std::vector<std::vector<Vec>>& chain,
                      std::set<std::string>& dead, std::int64_t budget) {
    const auto& cur = chain.back();
    if (static_cast<int>(cur.size()) == c.dim) return true;
    std::string key;
    for (const Vec& v : cur)
        for (const Scalar& s : v) key += s.str() + ",";
    if (dead.count(key)) return false;
    // candidate extensions: cur + one coset representative vector
    std::vector<Vec> full;
    for (int i = 0; i < c.dim; ++i) {
        Vec e = zero_vec(c.field, c.dim);
        e[i] = Scalar::one(c.field);
        full.push_back(e);
    }
    std::vector<Vec> reps = coset_representatives(c.field, full, cur, c.dim);
    std::sort(reps.begin(), reps.end(), [](const Vec& x, const Vec& y) { return cmp_vec(x, y) < 0; });
    std::set<std::vector<std::string>> seen;
    for (const Vec& v : reps) {
        if (is_zero_vec(v)) continue;
        std::vector<Vec> ext = cur;
        ext.push_back(v);
        std::vector<Vec> basis = span_rref(c.field, ext, c.dim);
        if (static_cast<int>(basis.size()) != static_cast<int>(cur.size()) + 1) continue;
        std::vector<std::string> skey;
        for (const Vec& b : basis) {
            std::string s;
            for (const Scalar& x : b) s += x.str() + ",";
            skey.push_back(s);
        }
        if (!seen.insert(skey).second) continue;
        if (!is_subcoalgebra(c, basis)) continue;
        chain.push_back(basis);
        if (chain_dfs(c, chain, dead, budget)) return true;
        chain.pop_back();
    }
    dead.insert(key);
    return false;
}

}  // namespace detail

// A full flag of subcoalgebras seeded at a group-like line, if one exists.
// The decision is cross-checked against co-flag detection on the convolution
// algebra; the two routes must agree.
inline std::optional<SubcoalgebraChain> supersolvable_chain(const Coalgebra& c,
                                                            std::int64_t budget = 2000000) {
    if (!c.field.is_prime_field()) throw usage_error("supersolvable_chain needs a prime field");
    bool dual_says = is_coflag_algebra(convolution_algebra(c), budget);
    std::optional<SubcoalgebraChain> found;
    std::set<std::string> dead;
    for (const Vec& g : grouplikes(c, budget)) {
        std::vector<std::vector<Vec>> chain{span_rref(c.field, {g}, c.dim)};
        if (detail::chain_dfs(c, chain, dead, budget)) {
            found = SubcoalgebraChain{chain};
            break;
        }
    }
    if (dual_says != bool(found))
        throw error("supersolvable_chain: direct search disagrees with the convolution route");
    return found;
}

}  // namespace coflag

#endif
