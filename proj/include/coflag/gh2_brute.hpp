// Exhaustive classifier for extensions of A by a v_dim-dimensional kernel
// over a prime field: every candidate tensor tuple is generated, filtered by
// the system axioms and partitioned by the cohomologous relation.
//
// This is deliberately naive. It exists as the independent oracle that the
// linear-algebra classification path is validated against.

#ifndef COFLAG_GH2_BRUTE_HPP
#define COFLAG_GH2_BRUTE_HPP

#include "hochschild.hpp"

#include <map>

namespace coflag {

namespace detail {

inline std::string tensor_key(const std::vector<Scalar>& t) {
    std::string k;
    for (const Scalar& s : t) {
        k += s.str();
        k += ',';
    }
    return k;
}

}  // namespace detail

struct GH2BruteReport {
    std::int64_t candidates = 0;
    int valid_systems = 0;
    int total_classes = 0;

    struct BimoduleStratum {
        std::vector<Scalar> act_left, act_right;
        int classes = 0;
    };
    struct VMultStratum {
        std::vector<Scalar> v_mult;
        bool v_mult_zero = false;
        int classes = 0;
        std::vector<BimoduleStratum> bimodule_strata;  // filled for the zero stratum
    };
    std::vector<VMultStratum> strata;
    std::vector<HochschildData> class_reps;  // lexicographically least member per class
};

inline GH2BruteReport gh2_enumerate(const Algebra& A, int v_dim, std::int64_t budget = 2000000) {
    if (!A.field.is_prime_field()) throw usage_error("gh2_enumerate needs a prime field");
    GH2BruteReport rep;
    if (v_dim == 0) {
        rep.valid_systems = 1;
        rep.total_classes = 1;
        rep.class_reps.push_back(HochschildData(A, 0));
        return rep;
    }
    const int n = A.dim, m = v_dim;
    const int entries = 2 * n * m * m + n * n * m + m * m * m;
    std::int64_t space = pow_i64_checked(A.field.p, entries, budget);
    if (space > budget)
        throw budget_error("gh2_enumerate: p^" + std::to_string(entries) + " exceeds budget");
    rep.candidates = space;

    std::vector<HochschildData> valid;
    for_each_fp_vector(A.field, entries, [&](const Vec& flat) {
        HochschildData d(A, m);
        std::size_t off = 0;
        for (auto* tensor : {&d.act_left, &d.act_right, &d.cocycle, &d.v_mult})
            for (auto& s : **(&tensor)) s = flat[off++];
        if (is_system(d)) valid.push_back(std::move(d));
        return true;
    });
    rep.valid_systems = static_cast<int>(valid.size());

    // partition by the cohomologous relation (union-find)
    std::vector<int> parent(valid.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (std::size_t i = 0; i < valid.size(); ++i)
        for (std::size_t j = i + 1; j < valid.size(); ++j) {
            if (find(static_cast<int>(i)) == find(static_cast<int>(j))) continue;
            if (is_cohomologous(valid[i], valid[j], budget))
                parent[find(static_cast<int>(j))] = find(static_cast<int>(i));
        }

    // canonical representative per class: least flattened tensor tuple
    auto flat_tuple = [](const HochschildData& d) {
        std::vector<Scalar> t =  d.act_left;
        t.insert(t.end(), d.act_right.begin(), d.act_right.end());
        t.insert(t.end(), d.cocycle.begin(), d.cocycle.end());
        t.insert(t.end(), d.v_mult.begin(), d.v_mult.end());
        return t;
    };
    std::map<int, int> class_rep;  // root -> index of least member
    for (std::size_t i = 0; i < valid.size(); ++i) {
        int r = find(static_cast<int>(i));
        auto it = class_rep.find(r);
        if (it == class_rep.end() ||
            cmp_vec(flat_tuple(valid[i]), flat_tuple(valid[it->second])) < 0)
            class_rep[r] = static_cast<int>(i);
    }
    rep.total_classes = static_cast<int>(class_rep.size());

    // strata by kernel multiplication; the zero stratum further by bimodule
    std::map<std::string, GH2BruteReport::VMultStratum> strata;
    std::map<std::string, std::map<std::string, GH2BruteReport::BimoduleStratum>> bimods;
    for (auto& [root, idx] : class_rep) {
        const HochschildData& d = valid[idx];
        std::string vk = detail::tensor_key(d.v_mult);
        auto& st = strata[vk];
        st.v_mult = d.v_mult;
        st.v_mult_zero = std::all_of(d.v_mult.begin(), d.v_mult.end(),
                                     [](const Scalar& s) { return s.is_zero(); });
        st.classes += 1;
        if (st.v_mult_zero) {
            std::string bk = detail::tensor_key(d.act_left) + "|" + detail::tensor_key(d.act_right);
            auto& bs = bimods[vk][bk];
            bs.act_left = d.act_left;
            bs.act_right = d.act_right;
            bs.classes += 1;
        }
        rep.class_reps.push_back(d);
    }
    for (auto& [vk, st] : strata) {
        for (auto& [bk, bs] : bimods[vk]) st.bimodule_strata.push_back(bs);
        rep.strata.push_back(st);
    }
    return rep;
}

}  // namespace coflag

#endif
