// Exact dense linear algebra: reduced row echelon forms, rank/kernel data,
// affine solves and quotient-space (coset) enumeration over F_p.
//
// Kernel and span bases are always returned in reduced echelon form, so a
// subspace has exactly one basis and subspace equality is basis equality.
// All functions are pure; inputs are never modified.

#ifndef COFLAG_LINALG_HPP
#define COFLAG_LINALG_HPP

#include "field.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

namespace coflag {

using Vec = std::vector<Scalar>;

inline Vec zero_vec(const FieldSpec& f, int n) { return Vec(n, Scalar::zero(f)); }

inline bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

inline Vec add(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline Vec scale(const Scalar& c, const Vec& v) {
    Vec r = v;
    for (auto& x : r) x *= c;
    return r;
}

inline Scalar dot(const Vec& a, const Vec& b) {
    Scalar s = Scalar::zero(a.empty() ? FieldSpec::rationals() : a[0].field());
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Lexicographic comparison under the canonical scalar order.
inline int cmp_vec(const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int c = a[i].cmp(b[i]);
        if (c != 0) return c;
    }
    return a.size() < b.size() ? -1 : (a.size() > b.size() ? 1 : 0);
}

struct Matrix {
    int rows = 0;
    int cols = 0;
    FieldSpec field;
    std::vector<Scalar> a;

    Matrix() = default;
    Matrix(const FieldSpec& f, int r, int c)
        : rows(r), cols(c), field(f), a(static_cast<std::size_t>(r) * c, Scalar::zero(f)) {}

    static Matrix identity(const FieldSpec& f, int n) {
        Matrix m(f, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
        return m;
    }

    static Matrix from_rows(const FieldSpec& f, const std::vector<Vec>& rows_in, int ncols) {
        Matrix m(f, static_cast<int>(rows_in.size()), ncols);
        for (std::size_t i = 0; i < rows_in.size(); ++i)
            for (int j = 0; j < ncols; ++j) m.at(static_cast<int>(i), j) = rows_in[i][j];
        return m;
    }

    Scalar& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const Scalar& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    Vec row(int i) const {
        Vec r(a.begin() + static_cast<std::size_t>(i) * cols,
              a.begin() + static_cast<std::size_t>(i + 1) * cols);
        return r;
    }

    Vec col(int j) const {
        Vec c = zero_vec(field, rows);
        for (int i = 0; i < rows; ++i) c[i] = at(i, j);
        return c;
    }

    void set_col(int j, const Vec& v) {
        for (int i = 0; i < rows; ++i) at(i, j) = v[i];
    }

    // matrix * column vector
    Vec apply(const Vec& x) const {
        Vec y = zero_vec(field, rows);
        for (int i = 0; i < rows; ++i) {
            Scalar s = Scalar::zero(field);
            for (int j = 0; j < cols; ++j)
                if (!at(i, j).is_zero() && !x[j].is_zero()) s += at(i, j) * x[j];
            y[i] = s;
        }
        return y;
    }

    Matrix operator*(const Matrix& o) const {
        Matrix r(field, rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                if (at(i, k).is_zero()) continue;
                for (int j = 0; j < o.cols; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
            }
        return r;
    }

    bool operator==(const Matrix& o) const {
        return rows == o.rows && cols == o.cols && field == o.field && a == o.a;
    }
};

// In-place reduced row echelon form; returns pivot column indices.
inline std::vector<int> rref_inplace(Matrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int sel = -1;
        for (int i = r; i < m.rows; ++i)
            if (!m.at(i, c).is_zero()) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
        Scalar inv = m.at(r, c).inverse();
        for (int j = c; j < m.cols; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Scalar f = m.at(i, c);
            for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline int rank(Matrix m) { return static_cast<int>(rref_inplace(m).size()); }

struct RankKernel {
    int rank = 0;
    std::vector<Vec> kernel;  // reduced echelon basis, rows sorted by leading index
};

// Rank and canonical kernel basis of M (solutions of M x = 0).
inline RankKernel rank_kernel(Matrix m) {
    const int n = m.cols;
    std::vector<int> pivots = rref_inplace(m);
    RankKernel out;
    out.rank = static_cast<int>(pivots.size());
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    for (int fc = 0; fc < n; ++fc) {
        if (is_pivot[fc]) continue;
        Vec v = zero_vec(m.field, n);
        v[fc] = Scalar::one(m.field);
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            v[pivots[pr]] = -m.at(static_cast<int>(pr), fc);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

struct AffineSolution {
    Vec particular;
    std::vector<Vec> kernel;
};

// Full solution set of M x = b, or nothing when b is outside the image.
inline std::optional<AffineSolution> solve_affine(const Matrix& m, const Vec& b) {
    if (static_cast<int>(b.size()) != m.rows) throw usage_error("solve_affine: size mismatch");
    Matrix aug(m.field, m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    std::vector<int> pivots = rref_inplace(aug);
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;  // inconsistent
    AffineSolution sol;
    sol.particular = zero_vec(m.field, m.cols);
    for (std::size_t pr = 0; pr < pivots.size(); ++pr)
        sol.particular[pivots[pr]] = aug.at(static_cast<int>(pr), m.cols);
    Matrix stripped(m.field, m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) stripped.at(i, j) = aug.at(i, j);
    sol.kernel = rank_kernel(std::move(stripped)).kernel;
    return sol;
}

// Canonical (reduced echelon) basis of the span of the given vectors.
inline std::vector<Vec> span_rref(const FieldSpec& f, const std::vector<Vec>& vs, int n) {
    if (vs.empty()) return {};
    Matrix m = Matrix::from_rows(f, vs, n);
    std::vector<int> pivots = rref_inplace(m);
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis.push_back(m.row(static_cast<int>(i)));
    return basis;
}

inline bool in_span(const FieldSpec& f, const std::vector<Vec>& basis, const Vec& v, int n) {
    if (is_zero_vec(v)) return true;
    std::vector<Vec> all = basis;
    all.push_back(v);
    Matrix with = Matrix::from_rows(f, all, n);
    Matrix without = Matrix::from_rows(f, basis, n);
    return rank(std::move(with)) == rank(std::move(without));
}

inline bool spans_equal(const FieldSpec& f, const std::vector<Vec>& a, const std::vector<Vec>& b, int n) {
    return span_rref(f, a, n) == span_rref(f, b, n);
}

// Iterate over all vectors of F_p^len in odometer order (0,...,0 first);
// stop early when the callback returns false.
inline void for_each_fp_vector(const FieldSpec& f, int len,
                               const std::function<bool(const Vec&)>& fn) {
    if (!f.is_prime_field()) throw usage_error("finite field required");
    Vec v = zero_vec(f, len);
    std::vector<std::int64_t> digits(len, 0);
    for (;;) {
        if (!fn(v)) return;
        int i = len - 1;
        while (i >= 0) {
            if (++digits[i] < f.p) {
                v[i] = Scalar::of(f, digits[i]);
                break;
            }
            digits[i] = 0;
            v[i] = Scalar::zero(f);
            --i;
        }
        if (i < 0) return;
    }
}

inline std::int64_t pow_i64_checked(std::int64_t base, int exp, std::int64_t cap) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > cap / base) return cap + 1;
        r *= base;
    }
    return r;
}

// Representatives of ambient/sub: exactly p^(dim ambient - dim sub) vectors,
// pairwise non-congruent modulo the subspace and jointly covering every coset.
inline std::vector<Vec> coset_representatives(const FieldSpec& f,
                                              const std::vector<Vec>& ambient,
                                              const std::vector<Vec>& sub, int n) {
    if (!f.is_prime_field()) throw usage_error("finite field required for coset enumeration");
    std::vector<Vec> sub_basis = span_rref(f, sub, n);
    // extend the subspace basis by ambient vectors that add new pivots
    std::vector<Vec> complement;
    std::vector<Vec> acc = sub_basis;
    int r = static_cast<int>(sub_basis.size());
    for (const Vec& v : ambient) {
        acc.push_back(v);
        int nr = rank(Matrix::from_rows(f, acc, n));
        if (nr > r) {
            complement.push_back(v);
            r = nr;
        } else {
            acc.pop_back();
        }
    }
    std::vector<Vec> reps;
    for_each_fp_vector(f, static_cast<int>(complement.size()), [&](const Vec& coeffs) {
        Vec x = zero_vec(f, n);
        for (std::size_t i = 0; i < complement.size(); ++i)
            x = add(x, scale(coeffs[i], complement[i]));
        reps.push_back(std::move(x));
        return true;
    });
    return reps;
}

}  // namespace coflag

#endif
