// Brute-force automorphism groups over F_p and isomorphism search between
// structure-constant algebras. Candidates are built column by column with
// early rejection on every multiplicative constraint whose support is already
// assigned; the image of one basis vector is forced by unit preservation.

#ifndef COFLAG_AUTOMORPHISMS_HPP
#define COFLAG_AUTOMORPHISMS_HPP

#include "characters.hpp"
#include "ideals.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace coflag {

namespace detail {

struct DfsBudget {
    std::int64_t visits = 0;
    std::int64_t cap = 0;  // 0 = unlimited
    void tick() {
        if (cap > 0 && ++visits > cap)
            throw budget_error("isomorphism search: work budget exceeded");
    }
};

// DFS over images of domain basis vectors; dom and cod may differ (iso search)
// or coincide (automorphisms). stop_after limits the number of hits.
inline void morphism_dfs(const Algebra& dom, const Algebra& cod, std::vector<Vec>& cols,
                         int depth, int unit_pivot, std::vector<Matrix>& out,
                         std::size_t stop_after, DfsBudget& budget) {
    const int n = dom.dim;
    if (out.size() >= stop_after) return;
    if (depth == n) {
        Matrix m(dom.field, n, n);
        for (int j = 0; j < n; ++j) m.set_col(j, cols[j]);
        if (rank(m) == n && is_algebra_isomorphism(dom, cod, m)) out.push_back(std::move(m));
        return;
    }

    auto consistent = [&](int d) {
        for (int i = 0; i <= d; ++i)
            for (int j = 0; j <= d; ++j) {
                if (i != d && j != d) {
                    int supp_max = -1;
                    for (int k = 0; k < n; ++k)
                        if (!dom.c(i, j, k).is_zero()) supp_max = k;
                    if (supp_max != d) continue;  // checked earlier or later
                } else {
                    bool ready = true;
                    for (int k = d + 1; k < n && ready; ++k)
                        if (!dom.c(i, j, k).is_zero()) ready = false;
                    if (!ready) continue;
                }
                Vec lhs = cod.mul(cols[i], cols[j]);
                Vec rhs = zero_vec(dom.field, n);
                for (int k = 0; k <= d; ++k)
                    if (!dom.c(i, j, k).is_zero()) rhs = add(rhs, scale(dom.c(i, j, k), cols[k]));
                if (lhs != rhs) return false;
            }
        return true;
    };

    if (depth == unit_pivot) {
        // forced: psi(e_pivot) = (1_B - sum_{i < pivot} u_i psi(e_i)) / u_pivot
        Vec v = cod.unit;
        for (int i = 0; i < depth; ++i)
            if (!dom.unit[i].is_zero()) v = sub(v, scale(dom.unit[i], cols[i]));
        v = scale(dom.unit[depth].inverse(), v);
        cols[depth] = v;
        budget.tick();
        if (consistent(depth))
            morphism_dfs(dom, cod, cols, depth + 1, unit_pivot, out, stop_after, budget);
        return;
    }

    for_each_fp_vector(dom.field, n, [&](const Vec& v) {
        cols[depth] = v;
        budget.tick();
        if (consistent(depth))
            morphism_dfs(dom, cod, cols, depth + 1, unit_pivot, out, stop_after, budget);
        return out.size() < stop_after;
    });
}

inline int max_unit_support(const Algebra& a) {
    int m = -1;
    for (int i = 0; i < a.dim; ++i)
        if (!a.unit[i].is_zero()) m = i;
    return m;
}

}  // namespace detail

// The full group of unit-preserving multiplicative bijections A -> A.
inline std::vector<Matrix> automorphisms_brute(const Algebra& a, std::int64_t cap = 100000000) {
    if (!a.field.is_prime_field()) throw usage_error("automorphism search needs a prime field");
    if (pow_i64_checked(a.field.p, a.dim * a.dim, cap) > cap)
        throw budget_error("automorphism search space p^(dim^2) exceeds cap; "
                           "use a catalog or file-supplied group");
    std::vector<Vec> cols(a.dim, zero_vec(a.field, a.dim));
    std::vector<Matrix> out;
    detail::DfsBudget budget;  // unlimited: the precheck above is the gate
    detail::morphism_dfs(a, a, cols, 0, detail::max_unit_support(a), out,
                         std::numeric_limits<std::size_t>::max(), budget);
    return out;
}

// Expand a generating set to the full group it generates and verify every
// element is an automorphism.
inline std::vector<Matrix> automorphism_closure(const Algebra& a, std::vector<Matrix> gens,
                                                std::size_t max_size = 1000000) {
    std::vector<Matrix> group{Matrix::identity(a.field, a.dim)};
    auto contains = [&](const Matrix& m) {
        return std::find(group.begin(), group.end(), m) != group.end();
    };
    for (const Matrix& g : gens)
        if (!is_algebra_isomorphism(a, a, g))
            throw validation_error("supplied map is not an algebra automorphism");
    std::size_t head = 0;
    for (const Matrix& g : gens)
        if (!contains(g)) group.push_back(g);
    while (head < group.size()) {
        Matrix cur = group[head++];
        for (const Matrix& g : gens) {
            Matrix prod = g * cur;
            if (!contains(prod)) {
                group.push_back(prod);
                if (group.size() > max_size) throw budget_error("automorphism closure too large");
            }
        }
    }
    return group;
}

enum class AutMode { brute, catalog };

inline std::vector<Matrix> automorphism_group(const Algebra& a, AutMode mode = AutMode::brute,
                                              std::int64_t cap = 100000000) {
    if (mode == AutMode::catalog) {
        if (!a.known_automorphisms) throw usage_error("no registered automorphism group for this algebra");
        return *a.known_automorphisms;
    }
    return automorphisms_brute(a, cap);
}

// Cheap isomorphism invariants used to skip hopeless brute searches.
struct AlgebraFingerprint {
    int dim;
    bool commutative;
    int n_characters;
    int n_dim1_ideals;

    friend bool operator==(const AlgebraFingerprint&, const AlgebraFingerprint&) = default;
};

inline AlgebraFingerprint fingerprint(const Algebra& a) {
    AlgebraFingerprint f;
    f.dim = a.dim;
    f.commutative = true;
    for (int i = 0; i < a.dim && f.commutative; ++i)
        for (int j = i + 1; j < a.dim && f.commutative; ++j)
            if (a.basis_mul(i, j) != a.basis_mul(j, i)) f.commutative = false;
    f.n_characters = static_cast<int>(characters(a).size());
    f.n_dim1_ideals = static_cast<int>(proper_two_sided_ideals(a, 1).size());
    return f;
}

// First unit-preserving multiplicative bijection A -> B found, if any.
// The cap bounds the number of candidate columns actually expanded; the
// pruned search visits far fewer nodes than the raw p^(dim^2) space.
inline std::optional<Matrix> find_algebra_isomorphism(const Algebra& a, const Algebra& b,
                                                      std::int64_t work_cap = 20000000) {
    if (!(a.field == b.field)) throw usage_error("isomorphism search: field mismatch");
    if (a.dim != b.dim) return std::nullopt;
    if (!a.field.is_prime_field()) throw usage_error("isomorphism search needs a prime field");
    if (!(fingerprint(a) == fingerprint(b))) return std::nullopt;
    std::vector<Vec> cols(a.dim, zero_vec(a.field, a.dim));
    std::vector<Matrix> out;
    detail::DfsBudget budget{0, work_cap};
    detail::morphism_dfs(a, b, cols, 0, detail::max_unit_support(a), out, 1, budget);
    if (out.empty()) return std::nullopt;
    return out.front();
}

}  // namespace coflag

#endif
