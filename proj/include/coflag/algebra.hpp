// Finite-dimensional unital associative algebras given by structure constants
// on a chosen basis: e_i * e_j = sum_k c[i][j][k] e_k.

#ifndef COFLAG_ALGEBRA_HPP
#define COFLAG_ALGEBRA_HPP

#include "linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coflag {

struct ValidationIssue {
    std::string axiom;       // violated law
    std::vector<int> where;  // witnessing basis indices
    std::string detail;
};

using ValidationReport = std::vector<ValidationIssue>;

struct validation_error : error {
    ValidationReport report;
    explicit validation_error(std::string what, ValidationReport rep = {})
        : error(std::move(what)), report(std::move(rep)) {}
};

struct Algebra {
    FieldSpec field;
    int dim = 0;
    std::vector<std::string> basis;
    Vec unit;                   // coordinates of 1_A
    std::vector<Scalar> mult;   // c[(i*dim + j)*dim + k]

    std::string name;  // catalog identifier when applicable

    // Catalog registrations: closed-form character lists (usable over Q) and
    // full automorphism groups where known.
    std::optional<std::vector<Vec>> known_characters;
    std::optional<std::vector<Matrix>> known_automorphisms;

    Algebra() = default;
    Algebra(const FieldSpec& f, int n) : field(f), dim(n), unit(zero_vec(f, n)) {
        basis.resize(n);
        for (int i = 0; i < n; ++i) basis[i] = "e" + std::to_string(i);
        mult.assign(static_cast<std::size_t>(n) * n * n, Scalar::zero(f));
    }

    const Scalar& c(int i, int j, int k) const {
        return mult[(static_cast<std::size_t>(i) * dim + j) * dim + k];
    }
    Scalar& c(int i, int j, int k) {
        return mult[(static_cast<std::size_t>(i) * dim + j) * dim + k];
    }

    Vec basis_vec(int i) const {
        Vec v = zero_vec(field, dim);
        v[i] = Scalar::one(field);
        return v;
    }

    // product of basis elements as a coordinate vector
    Vec basis_mul(int i, int j) const {
        Vec v = zero_vec(field, dim);
        for (int k = 0; k < dim; ++k) v[k] = c(i, j, k);
        return v;
    }

    Vec mul(const Vec& x, const Vec& y) const {
        Vec v = zero_vec(field, dim);
        for (int i = 0; i < dim; ++i) {
            if (x[i].is_zero()) continue;
            for (int j = 0; j < dim; ++j) {
                if (y[j].is_zero()) continue;
                Scalar xy = x[i] * y[j];
                for (int k = 0; k < dim; ++k)
                    if (!c(i, j, k).is_zero()) v[k] += xy * c(i, j, k);
            }
        }
        return v;
    }

    bool same_structure(const Algebra& o) const {
        return field == o.field && dim == o.dim && unit == o.unit && mult == o.mult;
    }
};

inline ValidationReport validate_algebra(const Algebra& a) {
    ValidationReport rep;
    if (static_cast<int>(a.unit.size()) != a.dim ||
        a.mult.size() != static_cast<std::size_t>(a.dim) * a.dim * a.dim)
        throw usage_error("algebra tensor dimensions inconsistent");
    for (int i = 0; i < a.dim; ++i) {
        Vec left = a.mul(a.unit, a.basis_vec(i));
        if (left != a.basis_vec(i)) rep.push_back({"unit-left", {i}, "1*e_i != e_i"});
        Vec right = a.mul(a.basis_vec(i), a.unit);
        if (right != a.basis_vec(i)) rep.push_back({"unit-right", {i}, "e_i*1 != e_i"});
    }
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k) {
                Vec lhs = a.mul(a.basis_mul(i, j), a.basis_vec(k));
                Vec rhs = a.mul(a.basis_vec(i), a.basis_mul(j, k));
                if (lhs != rhs) {
                    for (int l = 0; l < a.dim; ++l)
                        if (lhs[l] != rhs[l]) {
                            rep.push_back({"associativity", {i, j, k, l}, "(ei ej)ek != ei(ej ek)"});
                            break;
                        }
                }
            }
    return rep;
}

inline void require_valid(const Algebra& a, const std::string& who) {
    ValidationReport rep = validate_algebra(a);
    if (!rep.empty())
        throw validation_error(who + ": invalid algebra (" + rep.front().axiom + ")", rep);
}

// A linear map between algebras, stored as a (dim_B x dim_A) matrix acting on
// coordinate columns.
struct AlgebraMorphism {
    Matrix matrix;
};

inline bool is_algebra_morphism(const Algebra& a, const Algebra& b, const Matrix& m) {
    if (m.rows != b.dim || m.cols != a.dim) return false;
    if (m.apply(a.unit) != b.unit) return false;
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            Vec lhs = m.apply(a.basis_mul(i, j));
            Vec rhs = b.mul(m.apply(a.basis_vec(i)), m.apply(a.basis_vec(j)));
            if (lhs != rhs) return false;
        }
    return true;
}

inline bool is_algebra_isomorphism(const Algebra& a, const Algebra& b, const Matrix& m) {
    if (a.dim != b.dim) return false;
    return is_algebra_morphism(a, b, m) && rank(m) == a.dim;
}

inline Algebra direct_product(const Algebra& a, const Algebra& b) {
    if (!(a.field == b.field)) throw usage_error("direct_product: field mismatch");
    Algebra p(a.field, a.dim + b.dim);
    for (int i = 0; i < a.dim; ++i) p.basis[i] = a.basis[i] + "'";
    for (int i = 0; i < b.dim; ++i) p.basis[a.dim + i] = b.basis[i] + "''";
    for (int i = 0; i < a.dim; ++i) p.unit[i] = a.unit[i];
    for (int i = 0; i < b.dim; ++i) p.unit[a.dim + i] = b.unit[i];
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k) p.c(i, j, k) = a.c(i, j, k);
    for (int i = 0; i < b.dim; ++i)
        for (int j = 0; j < b.dim; ++j)
            for (int k = 0; k < b.dim; ++k) p.c(a.dim + i, a.dim + j, a.dim + k) = b.c(i, j, k);
    p.name = (a.name.empty() ? "A" : a.name) + " x " + (b.name.empty() ? "B" : b.name);
    return p;
}

// Quotient of A by a two-sided ideal given as a reduced-echelon basis.
// The quotient basis consists of the images of the standard basis vectors at
// the non-pivot coordinates.
struct QuotientData {
    Algebra quotient;
    Matrix projection;            // dim_Q x dim_A
    std::vector<int> complement;  // indices of A-basis vectors lifted to Q-basis
};

inline QuotientData quotient_by_ideal(const Algebra& a, const std::vector<Vec>& ideal_basis) {
    std::vector<Vec> rb = span_rref(a.field, ideal_basis, a.dim);
    std::vector<int> pivots;
    for (const Vec& v : rb) {
        int p = 0;
        while (p < a.dim && v[p].is_zero()) ++p;
        pivots.push_back(p);
    }
    std::vector<bool> is_pivot(a.dim, false);
    for (int p : pivots) is_pivot[p] = true;

    QuotientData out;
    for (int i = 0; i < a.dim; ++i)
        if (!is_pivot[i]) out.complement.push_back(i);
    int qd = static_cast<int>(out.complement.size());

    // reduce an A-vector modulo the ideal, then read off complement coords
    auto project = [&](const Vec& v) {
        Vec w = v;
        for (std::size_t r = 0; r < rb.size(); ++r) {
            Scalar f = w[pivots[r]];
            if (!f.is_zero()) w = sub(w, scale(f, rb[r]));
        }
        Vec q = zero_vec(a.field, qd);
        for (int t = 0; t < qd; ++t) q[t] = w[out.complement[t]];
        return q;
    };

    Algebra q(a.field, qd);
    for (int t = 0; t < qd; ++t) q.basis[t] = a.basis[out.complement[t]];
    q.unit = project(a.unit);
    for (int s = 0; s < qd; ++s)
        for (int t = 0; t < qd; ++t) {
            Vec prod = project(a.basis_mul(out.complement[s], out.complement[t]));
            for (int u = 0; u < qd; ++u) q.c(s, t, u) = prod[u];
        }
    out.quotient = std::move(q);

    out.projection = Matrix(a.field, qd, a.dim);
    for (int i = 0; i < a.dim; ++i) {
        Vec col = project(a.basis_vec(i));
        for (int t = 0; t < qd; ++t) out.projection.at(t, i) = col[t];
    }
    return out;
}

// The unit-preserving linear functional dual to the last basis vector with a
// nonzero unit coordinate, rescaled so that it sends 1_A to 1.
inline Vec unital_functional(const Algebra& a) {
    for (int i = a.dim - 1; i >= 0; --i) {
        if (!a.unit[i].is_zero()) {
            Vec l = zero_vec(a.field, a.dim);
            l[i] = a.unit[i].inverse();
            return l;
        }
    }
    throw usage_error("algebra has zero unit vector");
}

inline Scalar apply_functional(const Vec& functional, const Vec& v) { return dot(functional, v); }

}  // namespace coflag

#endif
