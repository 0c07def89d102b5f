// Exact scalar arithmetic over Q and over prime fields F_p.
//
// Every Scalar carries its field tag. Canonical forms are maintained at all
// times: fractions in lowest terms with positive denominator over Q, least
// nonnegative residues over F_p. Equality is therefore structural equality.

#ifndef COFLAG_FIELD_HPP
#define COFLAG_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coflag {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Search/enumeration space exceeded the configured budget.
struct budget_error : error {
    using error::error;
};

// Malformed request: bad parameters, wrong field, missing input.
struct usage_error : error {
    using error::error;
};

inline bool is_prime_u64(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

enum class FieldKind : std::uint8_t { rationals, prime };

struct FieldSpec {
    FieldKind kind = FieldKind::rationals;
    std::int64_t p = 0;

    static FieldSpec rationals() { return FieldSpec{FieldKind::rationals, 0}; }

    static FieldSpec prime(std::int64_t p) {
        if (!is_prime_u64(p)) throw usage_error("modulus not prime: " + std::to_string(p));
        return FieldSpec{FieldKind::prime, p};
    }

    bool is_prime_field() const { return kind == FieldKind::prime; }
    std::int64_t characteristic() const { return is_prime_field() ? p : 0; }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

    std::string str() const {
        return is_prime_field() ? "Fp:" + std::to_string(p) : "Q";
    }
};

class Scalar {
public:
    Scalar() = default;  // zero over Q

    static Scalar zero(const FieldSpec& f) { return Scalar(f, 0); }
    static Scalar one(const FieldSpec& f) { return Scalar(f, 1); }

    static Scalar of(const FieldSpec& f, std::int64_t n) { return Scalar(f, n); }

    static Scalar of_rat(const FieldSpec& f, const bigrat& q) {
        if (f.is_prime_field()) {
            // embed a/b as a * b^{-1} mod p; requires p not dividing b
            Scalar num(f, 0), den(f, 0);
            num.r_ = mod_big(boost::multiprecision::numerator(q), f.p);
            den.r_ = mod_big(boost::multiprecision::denominator(q), f.p);
            if (den.r_ == 0) throw usage_error("denominator divisible by modulus");
            return num / den;
        }
        Scalar s;
        s.field_ = f;
        s.q_ = q;
        return s;
    }

    static Scalar rational(std::int64_t num, std::int64_t den = 1) {
        if (den == 0) throw usage_error("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        Scalar s;
        s.field_ = FieldSpec::rationals();
        s.q_ = bigrat(bigint(num), bigint(den));
        return s;
    }

    const FieldSpec& field() const { return field_; }

    bool is_zero() const { return field_.is_prime_field() ? r_ == 0 : q_.is_zero(); }
    bool is_one() const { return field_.is_prime_field() ? r_ == 1 : q_ == 1; }

    Scalar operator-() const {
        Scalar s(*this);
        if (field_.is_prime_field())
            s.r_ = r_ == 0 ? 0 : field_.p - r_;
        else
            s.q_ = -q_;
        return s;
    }

    Scalar operator+(const Scalar& o) const {
        check_same(o);
        Scalar s(*this);
        if (field_.is_prime_field())
            s.r_ = (r_ + o.r_) % field_.p;
        else
            s.q_ += o.q_;
        return s;
    }

    Scalar operator-(const Scalar& o) const { return *this + (-o); }

    Scalar operator*(const Scalar& o) const {
        check_same(o);
        Scalar s(*this);
        if (field_.is_prime_field())
            s.r_ = mul_mod(r_, o.r_, field_.p);
        else
            s.q_ *= o.q_;
        return s;
    }

    Scalar inverse() const {
        if (is_zero()) throw error("division by zero");
        Scalar s(*this);
        if (field_.is_prime_field())
            s.r_ = inv_mod(r_, field_.p);
        else
            s.q_ = 1 / q_;
        return s;
    }

    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const {
        return field_ == o.field_ && (field_.is_prime_field() ? r_ == o.r_ : q_ == o.q_);
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Total order used for canonical/lexicographic choices. Over F_p scalars
    // compare by their balanced lift in (-p/2, p/2], so that e.g. -1 < 1 holds
    // over every field and canonical representatives look alike over Q and F_p.
    int cmp(const Scalar& o) const {
        check_same(o);
        if (field_.is_prime_field()) {
            std::int64_t a = balanced(), b = o.balanced();
            return a < b ? -1 : (a > b ? 1 : 0);
        }
        return q_ < o.q_ ? -1 : (q_ > o.q_ ? 1 : 0);
    }
    bool operator<(const Scalar& o) const { return cmp(o) < 0; }

    // Fp residue in [0, p); only meaningful over a prime field.
    std::int64_t residue() const { return r_; }
    // Balanced lift in (-p/2, p/2].
    std::int64_t balanced() const { return 2 * r_ > field_.p ? r_ - field_.p : r_; }
    const bigrat& rat() const { return q_; }

    std::string str() const {
        if (field_.is_prime_field()) return std::to_string(r_);
        return q_.str();
    }

private:
    Scalar(const FieldSpec& f, std::int64_t n) : field_(f) {
        if (f.is_prime_field()) {
            r_ = n % f.p;
            if (r_ < 0) r_ += f.p;
        } else {
            q_ = n;
        }
    }

    void check_same(const Scalar& o) const {
        if (!(field_ == o.field_)) throw error("scalar field mismatch");
    }

    static std::int64_t mod_big(const bigint& n, std::int64_t p) {
        bigint r = n % p;
        if (r < 0) r += p;
        return static_cast<std::int64_t>(r);
    }

    static std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
        return static_cast<std::int64_t>((__int128)a * b % p);
    }

    static std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
        // extended Euclid
        std::int64_t t = 0, nt = 1, r = p, nr = a;
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        if (t < 0) t += p;
        return t;
    }

    FieldSpec field_ = FieldSpec::rationals();
    bigrat q_;             // rationals only
    std::int64_t r_ = 0;   // prime field only
};

}  // namespace coflag

#endif
