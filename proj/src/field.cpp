#include "nps/field.hpp"

namespace nps {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // This witness set decides primality for every n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

Field::Field(std::uint64_t p) : p_(p) {
    if (p == 0) return;
    if (p >= (1ull << 61))
        throw input_error("characteristic too large (must be < 2^61): " + std::to_string(p));
    if (!is_prime_u64(p))
        throw input_error("characteristic must be 0 or a prime, got " + std::to_string(p));
}

Coeff Coeff::from_int(const Field& f, long long v) {
    Coeff c(f);
    if (f.is_rational()) {
        c.q_ = v;
    } else {
        const std::uint64_t p = f.characteristic();
        long long m = v % static_cast<long long>(p);
        if (m < 0) m += static_cast<long long>(p);
        c.r_ = static_cast<std::uint64_t>(m);
    }
    return c;
}

Coeff Coeff::from_int(const Field& f, const Int& v) {
    Coeff c(f);
    if (f.is_rational()) {
        c.q_ = v;
    } else {
        Int m = v % Int(f.characteristic());
        if (m < 0) m += Int(f.characteristic());
        c.r_ = m.convert_to<std::uint64_t>();
    }
    return c;
}

Coeff Coeff::from_rat(const Field& f, const Rat& v) {
    if (f.is_rational()) {
        Coeff c(f);
        c.q_ = v;
        return c;
    }
    // Reduce a rational into F_p; the denominator must be invertible.
    Coeff num = from_int(f, numerator(v));
    Coeff den = from_int(f, denominator(v));
    if (den.is_zero())
        throw input_error("rational with denominator divisible by the characteristic");
    return num * den.inv();
}

const Rat& Coeff::rat() const {
    if (p_ != 0) throw internal_error("rat() called on a prime-field element");
    return q_;
}

std::uint64_t Coeff::residue() const {
    if (p_ == 0) throw internal_error("residue() called on a rational element");
    return r_;
}

void Coeff::check_same(const Coeff& o) const {
    if (p_ != o.p_) throw input_error("coefficient field mismatch");
}

Coeff Coeff::operator-() const {
    Coeff c(*this);
    if (p_ == 0)
        c.q_ = -c.q_;
    else
        c.r_ = r_ == 0 ? 0 : p_ - r_;
    return c;
}

Coeff& Coeff::operator+=(const Coeff& o) {
    check_same(o);
    if (p_ == 0) {
        q_ += o.q_;
    } else {
        r_ += o.r_;
        if (r_ >= p_) r_ -= p_;
    }
    return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) {
    check_same(o);
    if (p_ == 0) {
        q_ -= o.q_;
    } else {
        r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + p_ - o.r_;
    }
    return *this;
}

Coeff& Coeff::operator*=(const Coeff& o) {
    check_same(o);
    if (p_ == 0)
        q_ *= o.q_;
    else
        r_ = mulmod_u64(r_, o.r_, p_);
    return *this;
}

Coeff Coeff::inv() const {
    if (is_zero()) throw input_error("division by zero coefficient");
    Coeff c(*this);
    if (p_ == 0)
        c.q_ = Rat(1) / q_;
    else
        c.r_ = powmod_u64(r_, p_ - 2, p_);
    return c;
}

bool operator==(const Coeff& a, const Coeff& b) {
    if (a.p_ != b.p_) return false;
    return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
}

Coeff Coeff::times_int(const Int& n) const {
    Coeff f = from_int(field(), n);
    return *this * f;
}

std::string Coeff::str() const {
    if (p_ == 0) return q_.str();
    return std::to_string(r_);
}

} // namespace nps
