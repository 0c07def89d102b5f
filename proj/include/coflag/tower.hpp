// Tower decomposition: peel proper two-sided ideals (smallest first, so
// 1-dimensional ones whenever they exist) until an algebra without proper
// two-sided ideals remains. Each step records the quotient and the system
// recovered from the canonical unital section, and the rebuilt product is
// verified isomorphic to the algebra it came from.

#ifndef COFLAG_TOWER_HPP
#define COFLAG_TOWER_HPP

#include "hochschild.hpp"
#include "ideals.hpp"

namespace coflag {

struct TowerStep {
    Algebra quotient;
    HochschildData system;   // rebuilding quotient * kernel gives the previous level
    Matrix comparison;       // explicit isomorphism (quotient * kernel) -> previous level
};

struct Tower {
    std::vector<TowerStep> steps;
    Algebra base;  // no proper two-sided ideal
};

inline Matrix unital_section(const Algebra& big, const Algebra& quot, const Matrix& proj,
                             const std::vector<int>& complement) {
    Matrix s(big.field, big.dim, quot.dim);
    for (int t = 0; t < quot.dim; ++t) {
        Vec col = zero_vec(big.field, big.dim);
        col[complement[t]] = Scalar::one(big.field);
        s.set_col(t, col);
    }
    // correct for unit: add (1 - s(1)) * mu where mu is a unital functional
    Vec delta = sub(big.unit, s.apply(quot.unit));
    Vec mu = unital_functional(quot);
    for (int t = 0; t < quot.dim; ++t)
        if (!mu[t].is_zero()) s.set_col(t, add(s.col(t), scale(mu[t], delta)));
    return s;
}

inline Tower decompose_tower(const Algebra& a, std::int64_t budget = 2000000) {
    require_valid(a, "decompose_tower");
    Tower tw;
    Algebra cur = a;
    while (true) {
        auto ideals = proper_two_sided_ideals(cur, -1, budget);
        if (ideals.empty()) {
            tw.base = cur;
            return tw;
        }
        // enumeration runs by ascending dimension, so the first entry is a
        // smallest ideal (1-dimensional when one exists)
        const auto& ideal = ideals.front();
        QuotientData q = quotient_by_ideal(cur, ideal);
        Matrix s = unital_section(cur, q.quotient, q.projection, q.complement);
        ExtractedSystem ex = extract_system(cur, q.projection, q.quotient, s);
        Algebra rebuilt = build_product(ex.system).total;
        if (!is_algebra_isomorphism(rebuilt, cur, ex.comparison))
            throw error("decompose_tower: rebuilt product failed the isomorphism check");
        tw.steps.push_back({q.quotient, std::move(ex.system), std::move(ex.comparison)});
        cur = tw.steps.back().quotient;
    }
}

}  // namespace coflag

#endif
