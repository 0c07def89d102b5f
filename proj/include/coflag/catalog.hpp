// Catalog of named algebras (and, further down, the example coalgebra and
// Poisson algebras). Catalog entries carry closed-form character lists, which
// makes them usable over Q, and full automorphism groups where those are
// small and known.
//
// CLI-visible names:
//   field                      k
//   matrix:n                   M_n(k)
//   triangular:n               T_n(k), upper triangular n x n
//   cyclic-group:n             k[C_n] (n must be invertible in k)
//   dual-numbers               k[X]/(X^2)
//   coflag3:i, i = 1..6        the six 3-dimensional co-flag algebras
//   product(<name>,<name>)     direct product of two entries
//   heisenberg-poisson         upper triangular 2x2 with commutator bracket
//   example-coalgebra          the 3-dimensional non-cocommutative coalgebra
//                              dual to coflag3:3

#ifndef COFLAG_CATALOG_HPP
#define COFLAG_CATALOG_HPP

#include "algebra.hpp"
#include "automorphisms.hpp"
#include "coalgebra.hpp"
#include "poisson.hpp"

#include <numeric>
#include <variant>

namespace coflag {

namespace detail {

inline void register_inner_automorphisms(Algebra& a, std::int64_t unit_budget = 20000) {
    if (!a.field.is_prime_field()) return;
    if (pow_i64_checked(a.field.p, a.dim, unit_budget) > unit_budget) return;
    std::vector<Matrix> group;
    for_each_fp_vector(a.field, a.dim, [&](const Vec& u) {
        // u invertible iff left multiplication by u has full rank
        Matrix lmul(a.field, a.dim, a.dim);
        for (int j = 0; j < a.dim; ++j) lmul.set_col(j, a.mul(u, a.basis_vec(j)));
        auto uinv_sol = solve_affine(lmul, a.unit);
        if (!uinv_sol) return true;
        Vec uinv = uinv_sol->particular;
        if (a.mul(uinv, u) != a.unit) return true;
        Matrix conj(a.field, a.dim, a.dim);
        for (int j = 0; j < a.dim; ++j) conj.set_col(j, a.mul(a.mul(u, a.basis_vec(j)), uinv));
        if (std::find(group.begin(), group.end(), conj) == group.end())
            group.push_back(std::move(conj));
        return true;
    });
    a.known_automorphisms = std::move(group);
}

}  // namespace detail

inline Algebra catalog_field(const FieldSpec& f) {
    Algebra a(f, 1);
    a.basis = {"1"};
    a.unit[0] = Scalar::one(f);
    a.c(0, 0, 0) = Scalar::one(f);
    a.name = "field";
    a.known_characters = std::vector<Vec>{Vec{Scalar::one(f)}};
    a.known_automorphisms = std::vector<Matrix>{Matrix::identity(f, 1)};
    return a;
}

inline Algebra catalog_matrix(int n, const FieldSpec& f) {
    if (n < 1) throw usage_error("matrix: n >= 1 required");
    Algebra a(f, n * n);
    auto idx = [n](int i, int j) { return i * n + j; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.basis[idx(i, j)] = "e" + std::to_string(i + 1) + std::to_string(j + 1);
    for (int i = 0; i < n; ++i) a.unit[idx(i, i)] = Scalar::one(f);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (j == k) a.c(idx(i, j), idx(k, l), idx(i, l)) = Scalar::one(f);
    a.name = "matrix:" + std::to_string(n);
    if (n == 1)
        a.known_characters = std::vector<Vec>{Vec{Scalar::one(f)}};
    else
        a.known_characters = std::vector<Vec>{};
    detail::register_inner_automorphisms(a);
    return a;
}

inline Algebra catalog_triangular(int n, const FieldSpec& f) {
    if (n < 1) throw usage_error("triangular: n >= 1 required");
    std::vector<std::pair<int, int>> pos;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) pos.emplace_back(i, j);
    auto idx = [&pos](int i, int j) {
        for (std::size_t t = 0; t < pos.size(); ++t)
            if (pos[t] == std::make_pair(i, j)) return static_cast<int>(t);
        return -1;
    };
    Algebra a(f, static_cast<int>(pos.size()));
    for (std::size_t t = 0; t < pos.size(); ++t)
        a.basis[t] = "e" + std::to_string(pos[t].first + 1) + std::to_string(pos[t].second + 1);
    for (int i = 0; i < n; ++i) a.unit[idx(i, i)] = Scalar::one(f);
    for (std::size_t s = 0; s < pos.size(); ++s)
        for (std::size_t t = 0; t < pos.size(); ++t) {
            auto [i, j] = pos[s];
            auto [k, l] = pos[t];
            if (j == k) a.c(static_cast<int>(s), static_cast<int>(t), idx(i, l)) = Scalar::one(f);
        }
    a.name = "triangular:" + std::to_string(n);
    std::vector<Vec> chars;
    for (int u = 0; u < n; ++u) {
        Vec chi = zero_vec(f, a.dim);
        chi[idx(u, u)] = Scalar::one(f);
        chars.push_back(chi);
    }
    a.known_characters = std::move(chars);
    detail::register_inner_automorphisms(a);
    return a;
}

inline Algebra catalog_cyclic_group(int n, const FieldSpec& f) {
    if (n < 1) throw usage_error("cyclic-group: n >= 1 required");
    if (f.is_prime_field() && n % f.p == 0)
        throw usage_error("cyclic-group: order must be invertible in the field");
    Algebra a(f, n);
    a.basis[0] = "1";
    for (int i = 1; i < n; ++i) a.basis[i] = i == 1 ? "d" : "d^" + std::to_string(i);
    a.unit[0] = Scalar::one(f);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.c(i, j, (i + j) % n) = Scalar::one(f);
    a.name = "cyclic-group:" + std::to_string(n);
    // characters d -> w, one per n-th root of unity w in k
    std::vector<Vec> chars;
    auto add_char = [&](const Scalar& w) {
        Vec chi = zero_vec(f, n);
        Scalar acc = Scalar::one(f);
        for (int i = 0; i < n; ++i) {
            chi[i] = acc;
            acc *= w;
        }
        chars.push_back(chi);
    };
    if (f.is_prime_field()) {
        for (std::int64_t x = 1; x < f.p; ++x) {
            Scalar w = Scalar::of(f, x);
            Scalar acc = Scalar::one(f);
            for (int i = 0; i < n; ++i) acc *= w;
            if (acc.is_one()) add_char(w);
        }
    } else {
        add_char(Scalar::rational(1));
        if (n % 2 == 0) add_char(Scalar::rational(-1));
    }
    a.known_characters = std::move(chars);
    return a;
}

inline Algebra catalog_dual_numbers(const FieldSpec& f) {
    Algebra a(f, 2);
    a.basis = {"1", "x"};
    a.unit[0] = Scalar::one(f);
    a.c(0, 0, 0) = Scalar::one(f);
    a.c(0, 1, 1) = Scalar::one(f);
    a.c(1, 0, 1) = Scalar::one(f);
    a.name = "dual-numbers";
    a.known_characters = std::vector<Vec>{Vec{Scalar::one(f), Scalar::zero(f)}};
    if (f.is_prime_field()) {
        std::vector<Matrix> group;
        for (std::int64_t c = 1; c < f.p; ++c) {
            Matrix m = Matrix::identity(f, 2);
            m.at(1, 1) = Scalar::of(f, c);
            group.push_back(m);
        }
        a.known_automorphisms = std::move(group);
    }
    return a;
}

// The six 3-dimensional co-flag algebras, indexed 1..6:
//   1: k^3
//   2: k[X,Y]/(X^2-1, Y^2, XY-Y)
//   3: k<x,y | x^2=1, y^2=0, xy=-yx=y>
//   4: k[X,Y]/(X^2, Y^2, XY)
//   5: k[X,Y]/(X^2-Y, Y^2, XY)
//   6: k[X,Y]/(X^2, Y^2-Y, XY)
inline Algebra catalog_coflag3(int index, const FieldSpec& f) {
    Scalar o = Scalar::one(f);
    if (index == 1) {
        Algebra a(f, 3);
        a.basis = {"g1", "g2", "g3"};
        for (int i = 0; i < 3; ++i) {
            a.unit[i] = o;
            a.c(i, i, i) = o;
        }
        a.name = "coflag3:1";
        std::vector<Vec> chars;
        for (int i = 0; i < 3; ++i) {
            Vec chi = zero_vec(f, 3);
            chi[i] = o;
            chars.push_back(chi);
        }
        a.known_characters = std::move(chars);
        // permutations of the three orthogonal idempotents
        std::vector<Matrix> group;
        int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (auto& pm : perms) {
            Matrix m(f, 3, 3);
            for (int j = 0; j < 3; ++j) m.at(pm[j], j) = o;
            group.push_back(m);
        }
        a.known_automorphisms = std::move(group);
        return a;
    }
    if (index < 2 || index > 6) throw usage_error("coflag3: index must be 1..6");
    // basis {1, x, y} throughout
    Algebra a(f, 3);
    a.basis = {"1", "x", "y"};
    a.unit[0] = o;
    a.c(0, 0, 0) = o;
    a.c(0, 1, 1) = a.c(1, 0, 1) = o;
    a.c(0, 2, 2) = a.c(2, 0, 2) = o;
    switch (index) {
        case 2:  // x^2 = 1, y^2 = 0, xy = yx = y
            a.c(1, 1, 0) = o;
            a.c(1, 2, 2) = a.c(2, 1, 2) = o;
            break;
        case 3:  // x^2 = 1, y^2 = 0, xy = y, yx = -y
            a.c(1, 1, 0) = o;
            a.c(1, 2, 2) = o;
            a.c(2, 1, 2) = -o;
            break;
        case 4:  // x^2 = y^2 = xy = 0
            break;
        case 5:  // x^2 = y, y^2 = xy = 0
            a.c(1, 1, 2) = o;
            break;
        case 6:  // x^2 = 0, y^2 = y, xy = 0
            a.c(2, 2, 2) = o;
            break;
    }
    a.name = "coflag3:" + std::to_string(index);
    std::vector<Vec> chars;
    Vec triv = zero_vec(f, 3);
    triv[0] = o;
    chars.push_back(triv);  // x,y -> 0
    if (index == 2 || index == 3) {
        Vec chi = triv;
        chi[1] = -o;  // x -> -1
        chars.push_back(chi);
    }
    if (index == 6) {
        Vec chi = triv;
        chi[2] = o;  // y -> 1
        chars.push_back(chi);
    }
    a.known_characters = std::move(chars);
    return a;
}

// name grammar: base names listed at the top of this header, with optional
// ":n" parameter, plus product(<name>,<name>).
inline Algebra catalog_algebra(const std::string& name, const FieldSpec& f) {
    if (name.rfind("product(", 0) == 0 && name.back() == ')') {
        std::string inner = name.substr(8, name.size() - 9);
        int depth = 0;
        std::size_t comma = std::string::npos;
        for (std::size_t i = 0; i < inner.size(); ++i) {
            if (inner[i] == '(') ++depth;
            if (inner[i] == ')') --depth;
            if (inner[i] == ',' && depth == 0) {
                comma = i;
                break;
            }
        }
        if (comma == std::string::npos) throw usage_error("product(...) needs two entries");
        Algebra a = catalog_algebra(inner.substr(0, comma), f);
        Algebra b = catalog_algebra(inner.substr(comma + 1), f);
        Algebra p = direct_product(a, b);
        // characters of a product: each factor's characters through its projection
        if (a.known_characters && b.known_characters) {
            std::vector<Vec> chars;
            for (const Vec& ca : *a.known_characters) {
                Vec chi = zero_vec(f, p.dim);
                for (int i = 0; i < a.dim; ++i) chi[i] = ca[i];
                chars.push_back(chi);
            }
            for (const Vec& cb : *b.known_characters) {
                Vec chi = zero_vec(f, p.dim);
                for (int i = 0; i < b.dim; ++i) chi[a.dim + i] = cb[i];
                chars.push_back(chi);
            }
            p.known_characters = std::move(chars);
        }
        p.name = "product(" + a.name + "," + b.name + ")";
        return p;
    }
    std::string base = name;
    int n = 0;
    bool has_n = false;
    auto colon = name.find(':');
    if (colon != std::string::npos) {
        base = name.substr(0, colon);
        n = std::stoi(name.substr(colon + 1));
        has_n = true;
    }
    if (base == "field") return catalog_field(f);
    if (base == "matrix") return catalog_matrix(has_n ? n : 2, f);
    if (base == "triangular") return catalog_triangular(has_n ? n : 2, f);
    if (base == "cyclic-group") return catalog_cyclic_group(has_n ? n : 2, f);
    if (base == "dual-numbers") return catalog_dual_numbers(f);
    if (base == "coflag3") return catalog_coflag3(has_n ? n : 1, f);
    throw usage_error("unknown catalog algebra: " + name);
}

inline std::vector<std::string> catalog_algebra_names() {
    return {"field",       "matrix:n",  "triangular:n", "cyclic-group:n",
            "dual-numbers", "coflag3:i", "product(a,b)"};
}

// Upper triangular 2x2 matrices with the commutator bracket.
inline PoissonAlgebra catalog_heisenberg_poisson(const FieldSpec& f) {
    PoissonAlgebra p = commutator_poissonize(catalog_triangular(2, f), Scalar::one(f));
    p.algebra.name = "heisenberg-poisson";
    return p;
}

// The 3-dimensional non-cocommutative coalgebra dual to coflag3:3:
//   Delta(f1) = f1 x f1 + f2 x f2
//   Delta(f2) = f1 x f2 + f2 x f1
//   Delta(f3) = f1 x f3 + f3 x f1 + f2 x f3 - f3 x f2
//   eps = (1, 0, 0)
inline Coalgebra catalog_example_coalgebra(const FieldSpec& f) {
    Coalgebra c = dualize_algebra(catalog_coflag3(3, f));
    c.basis = {"f1", "f2", "f3"};
    c.name = "example-coalgebra";
    return c;
}

// Codimension-1 Poisson data over the Heisenberg-Poisson algebra. Families:
//   1, 2          : semidirect data for the two equal character pairs
//   3             : the (lambda1, lambda2) datum with nonzero bracket form
//   4 (param w)   : (lambda1, lambda2), gamma = (w, 0, -w)
//   5 (param t)   : (lambda2, lambda1), gamma = (t, 0, -t)
inline PoissonCoflagDatum catalog_heisenberg_datum(int family, const Scalar& param,
                                                   const FieldSpec& f) {
    const Scalar z = Scalar::zero(f), o = Scalar::one(f);
    Vec l1{o, z, z}, l2{z, z, o};
    PoissonCoflagDatum d;
    d.theta = Matrix(f, 3, 3);
    d.f = Matrix(f, 3, 3);
    d.gamma = zero_vec(f, 3);
    switch (family) {
        case 1:
            d.lambda = l1;
            d.Lambda = l1;
            break;
        case 2:
            d.lambda = l2;
            d.Lambda = l2;
            break;
        case 3:
            d.lambda = l1;
            d.Lambda = l2;
            d.gamma[0] = o;
            d.gamma[2] = -o;
            d.f.at(0, 1) = o;
            d.f.at(1, 0) = -o;
            d.f.at(1, 2) = o;
            d.f.at(2, 1) = -o;
            break;
        case 4:
            d.lambda = l1;
            d.Lambda = l2;
            d.gamma[0] = param;
            d.gamma[2] = -param;
            break;
        case 5:
            d.lambda = l2;
            d.Lambda = l1;
            d.gamma[0] = param;
            d.gamma[2] = -param;
            break;
        default:
            throw usage_error("heisenberg datum family must be 1..5");
    }
    return d;
}

using CatalogEntity = std::variant<Algebra, Coalgebra, PoissonAlgebra>;

inline CatalogEntity catalog(const std::string& name, const FieldSpec& f) {
    if (name == "heisenberg-poisson") return catalog_heisenberg_poisson(f);
    if (name == "example-coalgebra") return catalog_example_coalgebra(f);
    return catalog_algebra(name, f);
}

inline std::vector<std::string> catalog_names() {
    auto names = catalog_algebra_names();
    names.push_back("heisenberg-poisson");
    names.push_back("example-coalgebra");
    return names;
}

}  // namespace coflag

#endif
