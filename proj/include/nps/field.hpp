#ifndef NPS_FIELD_HPP
#define NPS_FIELD_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "nps/errors.hpp"

namespace nps {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Coefficient field: the rationals (characteristic 0) or a prime field F_p.
/// Elements are represented exactly; no algebraic closure is ever built.
class Field {
public:
    Field() : p_(0) {}
    explicit Field(std::uint64_t p);

    std::uint64_t characteristic() const { return p_; }
    bool is_rational() const { return p_ == 0; }

    friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

    std::string str() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

private:
    std::uint64_t p_; // 0 or a prime < 2^61
};

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// Element of Q or of F_p. The characteristic is carried with the value so
/// that plain operators work; mixing fields throws.
class Coeff {
public:
    Coeff() : p_(0), r_(0) {}
    explicit Coeff(const Field& f) : p_(f.characteristic()), r_(0) {}

    static Coeff from_int(const Field& f, long long v);
    static Coeff from_int(const Field& f, const Int& v);
    static Coeff from_rat(const Field& f, const Rat& v);

    Field field() const { return p_ == 0 ? Field() : Field(p_); }
    bool is_zero() const { return p_ == 0 ? q_.is_zero() : r_ == 0; }
    bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

    /// Exact value; only meaningful over Q.
    const Rat& rat() const;
    /// Residue in [0, p); only meaningful over F_p.
    std::uint64_t residue() const;

    Coeff operator-() const;
    Coeff& operator+=(const Coeff& o);
    Coeff& operator-=(const Coeff& o);
    Coeff& operator*=(const Coeff& o);
    Coeff inv() const;

    friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
    friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
    friend Coeff operator*(Coeff a, const Coeff& b) { return a *= b; }
    friend Coeff operator/(Coeff a, const Coeff& b) { return a *= b.inv(); }

    friend bool operator==(const Coeff& a, const Coeff& b);
    friend bool operator!=(const Coeff& a, const Coeff& b) { return !(a == b); }

    /// Scale by an integer (used by formal derivatives: n reduces into the field).
    Coeff times_int(const Int& n) const;

    std::string str() const;

private:
    void check_same(const Coeff& o) const;

    Rat q_;             // payload over Q
    std::uint64_t p_;   // characteristic (0 = rationals)
    std::uint64_t r_;   // payload over F_p, in [0, p)
};

} // namespace nps

#endif
