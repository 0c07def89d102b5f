// JSON serialization for every entity the command line handles.
//
// Schema (indices 0-based, scalars are integers 0..p-1 over F_p and decimal
// strings "a" or "a/b" over Q):
//   field      {"kind": "Fp", "p": 5} | {"kind": "Q"}
//   algebra    {"field", "dim", "basis", "unit", "mult": [[i,j,k,v], ...]}
//   poisson    algebra keys plus "bracket": [[i,j,k,v], ...]
//   coalgebra  {"field", "dim", "basis", "counit", "comult": [[i,j,k,v], ...]}
//   datum      {"kind": "first"|"second", "lambda", "Lambda", "theta", "u"}
//   poisson datum {"lambda", "Lambda", "gamma", "theta", "f"}
//   system     {"algebra", "v_dim", "act_left", "act_right", "cocycle", "v_mult"}
//   matrix     {"rows", "cols", "entries": [[i,j,v], ...]}
// Sparse tensor entries omit zeros; parsing normalizes out-of-range residues
// and unreduced fractions with a warning.

#ifndef COFLAG_JSON_IO_HPP
#define COFLAG_JSON_IO_HPP

#include "catalog.hpp"

#include <json.hpp>

#include <fstream>
#include <variant>

namespace coflag {

using json = nlohmann::json;

inline json field_to_json(const FieldSpec& f) {
    if (f.is_prime_field()) return json{{"kind", "Fp"}, {"p", f.p}};
    return json{{"kind", "Q"}};
}

inline FieldSpec field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw usage_error("field: expected {\"kind\": ...}");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "Q") return FieldSpec::rationals();
    if (kind == "Fp") {
        if (!j.contains("p")) throw usage_error("field: prime field needs \"p\"");
        return FieldSpec::prime(j.at("p").get<std::int64_t>());  // rejects non-primes
    }
    throw usage_error("field: unknown kind " + kind);
}

// Accepts integers, and strings "a" or "a/b"; normalizes with a warning when
// the representation is not canonical.
inline Scalar scalar_from_json(const json& j, const FieldSpec& f, std::vector<std::string>* warnings) {
    auto warn = [&](const std::string& msg) {
        if (warnings) warnings->push_back(msg);
    };
    if (j.is_number_integer()) {
        std::int64_t v = j.get<std::int64_t>();
        if (f.is_prime_field() && (v < 0 || v >= f.p))
            warn("scalar " + std::to_string(v) + " normalized modulo " + std::to_string(f.p));
        return Scalar::of(f, v);
    }
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        auto slash = s.find('/');
        std::int64_t num, den = 1;
        try {
            num = std::stoll(slash == std::string::npos ? s : s.substr(0, slash));
            if (slash != std::string::npos) den = std::stoll(s.substr(slash + 1));
        } catch (const std::exception&) {
            throw usage_error("scalar: cannot parse \"" + s + "\"");
        }
        if (den == 0) throw usage_error("scalar: zero denominator in \"" + s + "\"");
        Scalar v = f.is_prime_field()
                       ? Scalar::of(f, num) / Scalar::of(f, den)
                       : Scalar::rational(num, den);
        if (v.str() != s) warn("scalar \"" + s + "\" normalized to " + v.str());
        return v;
    }
    throw usage_error("scalar: expected integer or string");
}

inline json scalar_to_json(const Scalar& s) {
    if (s.field().is_prime_field()) return json(s.residue());
    return json(s.str());
}

inline Vec vec_from_json(const json& j, const FieldSpec& f, int len, const std::string& what,
                         std::vector<std::string>* warnings) {
    if (!j.is_array() || static_cast<int>(j.size()) != len)
        throw usage_error(what + ": expected array of length " + std::to_string(len));
    Vec v;
    for (const auto& e : j) v.push_back(scalar_from_json(e, f, warnings));
    return v;
}

inline json vec_to_json(const Vec& v) {
    json a = json::array();
    for (const auto& s : v) a.push_back(scalar_to_json(s));
    return a;
}

// sparse order-3 tensor [[i,j,k,value], ...]
inline std::vector<Scalar> tensor3_from_json(const json& j, const FieldSpec& f, int d0, int d1,
                                             int d2, const std::string& what,
                                             std::vector<std::string>* warnings) {
    std::vector<Scalar> t(static_cast<std::size_t>(d0) * d1 * d2, Scalar::zero(f));
    if (!j.is_array()) throw usage_error(what + ": expected array of [i,j,k,value] entries");
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 4) throw usage_error(what + ": entry must be [i,j,k,value]");
        int i = e[0].get<int>(), jj = e[1].get<int>(), k = e[2].get<int>();
        if (i < 0 || i >= d0 || jj < 0 || jj >= d1 || k < 0 || k >= d2)
            throw usage_error(what + ": index out of range");
        t[(static_cast<std::size_t>(i) * d1 + jj) * d2 + k] = scalar_from_json(e[3], f, warnings);
    }
    return t;
}

inline json tensor3_to_json(const std::vector<Scalar>& t, int d0, int d1, int d2) {
    json a = json::array();
    for (int i = 0; i < d0; ++i)
        for (int j = 0; j < d1; ++j)
            for (int k = 0; k < d2; ++k) {
                const Scalar& s = t[(static_cast<std::size_t>(i) * d1 + j) * d2 + k];
                if (!s.is_zero()) a.push_back(json::array({i, j, k, scalar_to_json(s)}));
            }
    return a;
}

inline Matrix matrix_from_json(const json& j, const FieldSpec& f,
                               std::vector<std::string>* warnings) {
    if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw usage_error("matrix: expected {rows, cols, entries}");
    Matrix m(f, j.at("rows").get<int>(), j.at("cols").get<int>());
    for (const auto& e : j.at("entries")) {
        if (!e.is_array() || e.size() != 3) throw usage_error("matrix: entry must be [i,j,value]");
        int i = e[0].get<int>(), jj = e[1].get<int>();
        if (i < 0 || i >= m.rows || jj < 0 || jj >= m.cols)
            throw usage_error("matrix: index out of range");
        m.at(i, jj) = scalar_from_json(e[2], f, warnings);
    }
    return m;
}

inline json matrix_to_json(const Matrix& m) {
    json entries = json::array();
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (!m.at(i, j).is_zero()) entries.push_back(json::array({i, j, scalar_to_json(m.at(i, j))}));
    return json{{"rows", m.rows}, {"cols", m.cols}, {"entries", entries}};
}

inline json bilinear_to_json(const Matrix& m) {
    json entries = json::array();
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (!m.at(i, j).is_zero()) entries.push_back(json::array({i, j, scalar_to_json(m.at(i, j))}));
    return entries;
}

inline Matrix bilinear_from_json(const json& j, const FieldSpec& f, int n, const std::string& what,
                                 std::vector<std::string>* warnings) {
    Matrix m(f, n, n);
    if (j.is_null()) return m;
    if (!j.is_array()) throw usage_error(what + ": expected array of [i,j,value]");
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 3) throw usage_error(what + ": entry must be [i,j,value]");
        int i = e[0].get<int>(), jj = e[1].get<int>();
        if (i < 0 || i >= n || jj < 0 || jj >= n) throw usage_error(what + ": index out of range");
        m.at(i, jj) = scalar_from_json(e[2], f, warnings);
    }
    return m;
}

// ---------------------------------------------------------------------------

inline json algebra_to_json(const Algebra& a) {
    json j{{"field", field_to_json(a.field)},
           {"dim", a.dim},
           {"basis", a.basis},
           {"unit", vec_to_json(a.unit)},
           {"mult", tensor3_to_json(a.mult, a.dim, a.dim, a.dim)}};
    if (!a.name.empty()) j["name"] = a.name;
    return j;
}

inline Algebra algebra_from_json(const json& j, std::vector<std::string>* warnings) {
    FieldSpec f = field_from_json(j.at("field"));
    int n = j.at("dim").get<int>();
    if (n < 1) throw usage_error("algebra: dim must be positive");
    Algebra a(f, n);
    if (j.contains("basis")) {
        if (static_cast<int>(j.at("basis").size()) != n)
            throw usage_error("algebra: basis label count != dim");
        a.basis = j.at("basis").get<std::vector<std::string>>();
    }
    a.unit = vec_from_json(j.at("unit"), f, n, "unit", warnings);
    a.mult = tensor3_from_json(j.at("mult"), f, n, n, n, "mult", warnings);
    if (j.contains("name")) a.name = j.at("name").get<std::string>();
    return a;
}

inline json poisson_to_json(const PoissonAlgebra& p) {
    json j = algebra_to_json(p.algebra);
    j["bracket"] = tensor3_to_json(p.bracket, p.algebra.dim, p.algebra.dim, p.algebra.dim);
    return j;
}

inline PoissonAlgebra poisson_from_json(const json& j, std::vector<std::string>* warnings) {
    PoissonAlgebra p(algebra_from_json(j, warnings));
    p.bracket = tensor3_from_json(j.at("bracket"), p.algebra.field, p.algebra.dim, p.algebra.dim,
                                  p.algebra.dim, "bracket", warnings);
    return p;
}

inline json coalgebra_to_json(const Coalgebra& c) {
    json j{{"field", field_to_json(c.field)},
           {"dim", c.dim},
           {"basis", c.basis},
           {"counit", vec_to_json(c.counit)},
           {"comult", tensor3_to_json(c.comult, c.dim, c.dim, c.dim)}};
    if (!c.name.empty()) j["name"] = c.name;
    return j;
}

inline Coalgebra coalgebra_from_json(const json& j, std::vector<std::string>* warnings) {
    FieldSpec f = field_from_json(j.at("field"));
    int n = j.at("dim").get<int>();
    if (n < 1) throw usage_error("coalgebra: dim must be positive");
    Coalgebra c(f, n);
    if (j.contains("basis")) c.basis = j.at("basis").get<std::vector<std::string>>();
    c.counit = vec_from_json(j.at("counit"), f, n, "counit", warnings);
    c.comult = tensor3_from_json(j.at("comult"), f, n, n, n, "comult", warnings);
    if (j.contains("name")) c.name = j.at("name").get<std::string>();
    return c;
}

inline json coflag_datum_to_json(const CoflagDatum& d) {
    if (d.second_kind)
        return json{{"kind", "second"}, {"lambda", vec_to_json(d.lambda)}, {"u", scalar_to_json(d.u)}};
    return json{{"kind", "first"},
                {"lambda", vec_to_json(d.lambda)},
                {"Lambda", vec_to_json(d.Lambda)},
                {"theta", bilinear_to_json(d.theta)}};
}

inline CoflagDatum coflag_datum_from_json(const json& j, const FieldSpec& f, int n,
                                          std::vector<std::string>* warnings) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "second")
        return CoflagDatum::second(vec_from_json(j.at("lambda"), f, n, "lambda", warnings),
                                   scalar_from_json(j.at("u"), f, warnings));
    if (kind != "first") throw usage_error("datum: kind must be \"first\" or \"second\"");
    return CoflagDatum::first(
        vec_from_json(j.at("lambda"), f, n, "lambda", warnings),
        vec_from_json(j.at("Lambda"), f, n, "Lambda", warnings),
        bilinear_from_json(j.contains("theta") ? j.at("theta") : json(), f, n, "theta", warnings));
}

inline json poisson_datum_to_json(const PoissonCoflagDatum& d) {
    return json{{"lambda", vec_to_json(d.lambda)},
                {"Lambda", vec_to_json(d.Lambda)},
                {"gamma", vec_to_json(d.gamma)},
                {"theta", bilinear_to_json(d.theta)},
                {"f", bilinear_to_json(d.f)}};
}

inline PoissonCoflagDatum poisson_datum_from_json(const json& j, const FieldSpec& f, int n,
                                                  std::vector<std::string>* warnings) {
    PoissonCoflagDatum d;
    d.lambda = vec_from_json(j.at("lambda"), f, n, "lambda", warnings);
    d.Lambda = vec_from_json(j.at("Lambda"), f, n, "Lambda", warnings);
    d.gamma = vec_from_json(j.at("gamma"), f, n, "gamma", warnings);
    d.theta = bilinear_from_json(j.contains("theta") ? j.at("theta") : json(), f, n, "theta", warnings);
    d.f = bilinear_from_json(j.contains("f") ? j.at("f") : json(), f, n, "f", warnings);
    return d;
}

inline json system_to_json(const HochschildData& d) {
    const int n = d.A.dim, m = d.v_dim;
    return json{{"algebra", algebra_to_json(d.A)},
                {"v_dim", m},
                {"act_left", tensor3_to_json(d.act_left, n, m, m)},
                {"act_right", tensor3_to_json(d.act_right, m, n, m)},
                {"cocycle", tensor3_to_json(d.cocycle, n, n, m)},
                {"v_mult", tensor3_to_json(d.v_mult, m, m, m)}};
}

inline HochschildData system_from_json(const json& j, std::vector<std::string>* warnings) {
    Algebra a = algebra_from_json(j.at("algebra"), warnings);
    int m = j.at("v_dim").get<int>();
    if (m < 0) throw usage_error("system: v_dim must be >= 0");
    HochschildData d(a, m);
    const FieldSpec& f = a.field;
    if (j.contains("act_left"))
        d.act_left = tensor3_from_json(j.at("act_left"), f, a.dim, m, m, "act_left", warnings);
    if (j.contains("act_right"))
        d.act_right = tensor3_from_json(j.at("act_right"), f, m, a.dim, m, "act_right", warnings);
    if (j.contains("cocycle"))
        d.cocycle = tensor3_from_json(j.at("cocycle"), f, a.dim, a.dim, m, "cocycle", warnings);
    if (j.contains("v_mult"))
        d.v_mult = tensor3_from_json(j.at("v_mult"), f, m, m, m, "v_mult", warnings);
    return d;
}

// ---------------------------------------------------------------------------

using Entity = std::variant<Algebra, Coalgebra, PoissonAlgebra>;

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw usage_error("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

// Entity detection: "bracket" selects a Poisson algebra, "comult" (without
// "mult") a coalgebra, "mult" an algebra.
inline Entity entity_from_json(const json& j, std::vector<std::string>* warnings) {
    bool has_mult = j.contains("mult"), has_comult = j.contains("comult");
    if (has_mult && has_comult)
        throw usage_error("entity: both mult and comult present; split into two files");
    if (j.contains("bracket")) return poisson_from_json(j, warnings);
    if (has_comult) return coalgebra_from_json(j, warnings);
    if (has_mult) return algebra_from_json(j, warnings);
    throw usage_error("entity: no mult, comult or bracket key found");
}

inline json entity_to_json(const Entity& e) {
    if (std::holds_alternative<Algebra>(e)) return algebra_to_json(std::get<Algebra>(e));
    if (std::holds_alternative<Coalgebra>(e)) return coalgebra_to_json(std::get<Coalgebra>(e));
    return poisson_to_json(std::get<PoissonAlgebra>(e));
}

}  // namespace coflag

#endif
