// Characters: unit-preserving multiplicative functionals A -> k.
//
// Over a prime field the full list is found by a pruned depth-first search
// over basis-value assignments. Over Q only catalog-registered lists are
// available; the general problem amounts to polynomial-system solving.

#ifndef COFLAG_CHARACTERS_HPP
#define COFLAG_CHARACTERS_HPP

#include "algebra.hpp"

#include <algorithm>

namespace coflag {

struct Character {
    Vec values;  // value on each basis element

    Scalar operator()(const Vec& v) const { return dot(values, v); }
};

inline bool is_character(const Algebra& a, const Vec& values) {
    if (dot(values, a.unit) != Scalar::one(a.field)) return false;
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            if (dot(values, a.basis_mul(i, j)) != values[i] * values[j]) return false;
    return true;
}

namespace detail {

inline void character_dfs(const Algebra& a, Vec& vals, int depth, std::vector<Vec>& out) {
    const int n = a.dim;
    if (depth == n) {
        if (dot(vals, a.unit) == Scalar::one(a.field)) out.push_back(vals);
        return;
    }
    // a pair (i,j) is checked at the first depth where i, j and the whole
    // support of e_i e_j are assigned
    for (std::int64_t x = 0; x < a.field.p; ++x) {
        vals[depth] = Scalar::of(a.field, x);
        bool ok = true;
        for (int i = 0; i <= depth && ok; ++i)
            for (int j = 0; j <= depth && ok; ++j) {
                int supp_max = -1;
                for (int k = 0; k < n; ++k)
                    if (!a.c(i, j, k).is_zero()) supp_max = k;
                if (std::max({i, j, supp_max}) != depth) continue;
                Scalar lhs = Scalar::zero(a.field);
                for (int k = 0; k <= depth; ++k)
                    if (!a.c(i, j, k).is_zero()) lhs += a.c(i, j, k) * vals[k];
                if (lhs != vals[i] * vals[j]) ok = false;
            }
        if (ok) character_dfs(a, vals, depth + 1, out);
    }
    vals[depth] = Scalar::zero(a.field);
}

}  // namespace detail

// Complete character list, in lexicographic order of value vectors.
inline std::vector<Character> characters(const Algebra& a) {
    std::vector<Vec> found;
    if (a.field.is_prime_field()) {
        Vec vals = zero_vec(a.field, a.dim);
        detail::character_dfs(a, vals, 0, found);
    } else if (a.known_characters) {
        for (const Vec& v : *a.known_characters)
            if (is_character(a, v)) found.push_back(v);
        if (found.size() != a.known_characters->size())
            throw error("registered character list failed verification");
    } else {
        throw usage_error("character search undecidable here: rationals field and no registered list");
    }
    std::sort(found.begin(), found.end(), [](const Vec& x, const Vec& y) { return cmp_vec(x, y) < 0; });
    std::vector<Character> out;
    for (auto& v : found) out.push_back({std::move(v)});
    return out;
}

}  // namespace coflag

#endif
