// Two-sided ideal enumeration over F_p and derived structure queries.
//
// Subspaces are enumerated through their reduced-echelon bases (one matrix per
// subspace), so the search is duplicate-free and its output order canonical.

#ifndef COFLAG_IDEALS_HPP
#define COFLAG_IDEALS_HPP

#include "algebra.hpp"

#include <map>
#include <string>

namespace coflag {

namespace detail {

// Enumerate all d x n reduced-echelon matrices of rank d over F_p.
inline void for_each_rref_basis(const FieldSpec& f, int n, int d,
                                const std::function<bool(const std::vector<Vec>&)>& fn) {
    std::vector<int> pivots(d);
    std::function<bool(int, int)> choose = [&](int idx, int from) {
        if (idx == d) {
            // free entries: row r, column c with c > pivots[r] and c not a pivot
            std::vector<std::pair<int, int>> free_pos;
            std::vector<bool> is_pivot(n, false);
            for (int p : pivots) is_pivot[p] = true;
            for (int r = 0; r < d; ++r)
                for (int c = pivots[r] + 1; c < n; ++c)
                    if (!is_pivot[c]) free_pos.emplace_back(r, c);
            bool keep_going = true;
            for_each_fp_vector(f, static_cast<int>(free_pos.size()), [&](const Vec& vals) {
                std::vector<Vec> rows(d, zero_vec(f, n));
                for (int r = 0; r < d; ++r) rows[r][pivots[r]] = Scalar::one(f);
                for (std::size_t t = 0; t < free_pos.size(); ++t)
                    rows[free_pos[t].first][free_pos[t].second] = vals[t];
                keep_going = fn(rows);
                return keep_going;
            });
            return keep_going;
        }
        for (int c = from; c <= n - (d - idx); ++c) {
            pivots[idx] = c;
            if (!choose(idx + 1, c + 1)) return false;
        }
        return true;
    };
    choose(0, 0);
}

}  // namespace detail

inline bool is_two_sided_ideal(const Algebra& a, const std::vector<Vec>& basis) {
    auto span = span_rref(a.field, basis, a.dim);
    for (const Vec& v : basis)
        for (int i = 0; i < a.dim; ++i) {
            if (!in_span(a.field, span, a.mul(a.basis_vec(i), v), a.dim)) return false;
            if (!in_span(a.field, span, a.mul(v, a.basis_vec(i)), a.dim)) return false;
        }
    return true;
}

// All proper two-sided ideals of dimension 1..max_dim, as echelon bases.
inline std::vector<std::vector<Vec>> proper_two_sided_ideals(const Algebra& a, int max_dim = -1,
                                                             std::int64_t budget = 2000000) {
    if (!a.field.is_prime_field()) throw usage_error("ideal enumeration needs a prime field");
    if (max_dim < 0 || max_dim > a.dim - 1) max_dim = a.dim - 1;
    std::vector<std::vector<Vec>> out;
    std::int64_t seen = 0;
    for (int d = 1; d <= max_dim; ++d) {
        detail::for_each_rref_basis(a.field, a.dim, d, [&](const std::vector<Vec>& rows) {
            if (++seen > budget) throw budget_error("ideal search budget exceeded");
            if (is_two_sided_ideal(a, rows)) out.push_back(rows);
            return true;
        });
    }
    return out;
}

namespace detail {

inline std::string structure_key(const Algebra& a) {
    std::string key = std::to_string(a.dim) + "|";
    for (const Scalar& s : a.unit) key += s.str() + ",";
    key += "|";
    for (const Scalar& s : a.mult) key += s.str() + ",";
    return key;
}

}  // namespace detail

// Does A admit a chain of surjections onto k with 1-dimensional kernels?
// Top-down: peel 1-dimensional ideals recursively.
inline bool is_coflag_algebra(const Algebra& a, std::int64_t budget = 2000000) {
    static thread_local std::map<std::string, bool> memo;
    if (a.dim == 1) return true;
    std::string key = a.field.str() + "#" + detail::structure_key(a);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (const auto& ideal : proper_two_sided_ideals(a, 1, budget)) {
        if (is_coflag_algebra(quotient_by_ideal(a, ideal).quotient, budget)) {
            ok = true;
            break;
        }
    }
    memo[key] = ok;
    return ok;
}

}  // namespace coflag

#endif
