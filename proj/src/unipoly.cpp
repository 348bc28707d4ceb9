#include "nps/unipoly.hpp"

#include <algorithm>

namespace nps {

UniPoly::UniPoly(const Field& f, std::vector<Coeff> coeffs) : field_(f), c_(std::move(coeffs)) {
    trim();
}

UniPoly UniPoly::constant(const Field& f, const Coeff& c) {
    UniPoly r(f);
    if (!c.is_zero()) r.c_ = {c};
    return r;
}

UniPoly UniPoly::monomial(const Field& f, const Coeff& c, std::int64_t exp) {
    UniPoly r(f);
    if (exp < 0) throw input_error("negative exponent");
    if (!c.is_zero()) {
        r.c_.assign(static_cast<std::size_t>(exp) + 1, Coeff(f));
        r.c_.back() = c;
    }
    return r;
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void UniPoly::check_field(const UniPoly& o) const {
    if (field_ != o.field_) throw input_error("field mismatch");
}

std::int64_t UniPoly::order() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return static_cast<std::int64_t>(i);
    if (trunc_)
        throw indeterminate_error("order indeterminate at this precision (series is zero up to degree " +
                                  std::to_string(*trunc_) + ")");
    throw input_error("order of the zero polynomial");
}

Coeff UniPoly::coeff(std::int64_t exp) const {
    if (exp < 0 || static_cast<std::size_t>(exp) >= c_.size()) return Coeff(field_);
    return c_[static_cast<std::size_t>(exp)];
}

Coeff UniPoly::lc() const {
    if (c_.empty()) throw input_error("leading coefficient of zero polynomial");
    return c_.back();
}

void UniPoly::set_coeff(std::int64_t exp, const Coeff& c) {
    if (exp < 0) throw input_error("negative exponent");
    if (static_cast<std::size_t>(exp) >= c_.size()) {
        if (c.is_zero()) return;
        c_.resize(static_cast<std::size_t>(exp) + 1, Coeff(field_));
    }
    c_[static_cast<std::size_t>(exp)] = c;
    trim();
}

void UniPoly::set_truncation(std::optional<std::int64_t> t) {
    trunc_ = t;
    if (trunc_) {
        while (!c_.empty() && degree() > *trunc_) c_.pop_back();
        trim();
    }
}

UniPoly UniPoly::truncated(std::int64_t bound) const {
    UniPoly r = *this;
    r.trunc_ = trunc_ ? std::min(*trunc_, bound) : bound;
    while (!r.c_.empty() && r.degree() > *r.trunc_) r.c_.pop_back();
    r.trim();
    return r;
}

namespace {
std::optional<std::int64_t> merge_trunc(const std::optional<std::int64_t>& a,
                                        const std::optional<std::int64_t>& b) {
    if (a && b) return std::min(*a, *b);
    return a ? a : b;
}
} // namespace

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    check_field(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(field_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trunc_ = merge_trunc(trunc_, o.trunc_);
    if (trunc_) while (!c_.empty() && degree() > *trunc_) c_.pop_back();
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    check_field(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(field_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trunc_ = merge_trunc(trunc_, o.trunc_);
    if (trunc_) while (!c_.empty() && degree() > *trunc_) c_.pop_back();
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    a.check_field(b);
    UniPoly r(a.field_);
    // Truncation propagates as min(Ta + ord b, Tb + ord a).
    std::optional<std::int64_t> t;
    auto low = [](const UniPoly& p) -> std::int64_t {
        for (std::size_t i = 0; i < p.c_.size(); ++i)
            if (!p.c_[i].is_zero()) return static_cast<std::int64_t>(i);
        return 0;
    };
    if (a.trunc_) t = *a.trunc_ + low(b);
    if (b.trunc_) t = merge_trunc(t, *b.trunc_ + low(a));
    if (a.c_.empty() || b.c_.empty()) {
        r.trunc_ = t;
        return r;
    }
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Coeff(a.field_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.trunc_ = t;
    if (r.trunc_) while (!r.c_.empty() && r.degree() > *r.trunc_) r.c_.pop_back();
    r.trim();
    return r;
}

UniPoly UniPoly::scaled(const Coeff& c) const {
    UniPoly r(field_);
    r.trunc_ = trunc_;
    if (c.is_zero()) return r;
    r.c_ = c_;
    for (auto& x : r.c_) x *= c;
    return r;
}

bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.field_ == b.field_ && a.c_ == b.c_ && a.trunc_ == b.trunc_;
}

UniPoly UniPoly::derivative() const {
    UniPoly r(field_);
    r.trunc_ = trunc_ ? std::optional<std::int64_t>(*trunc_ - 1) : std::nullopt;
    if (c_.size() <= 1) return r;
    r.c_.assign(c_.size() - 1, Coeff(field_));
    for (std::size_t i = 1; i < c_.size(); ++i)
        r.c_[i - 1] = c_[i].times_int(Int(i));
    r.trim();
    return r;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(lc().inv());
}

UniPoly UniPoly::pow(std::int64_t e) const {
    if (e < 0) throw input_error("negative power");
    UniPoly r = constant(field_, Coeff::from_int(field_, 1));
    UniPoly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    check_field(d);
    if (d.is_zero()) throw input_error("division by zero polynomial");
    if (trunc_ || d.trunc_) throw input_error("divmod requires exact polynomials");
    UniPoly q(field_), r = *this;
    const Coeff inv_lc = d.lc().inv();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        std::int64_t k = r.degree() - d.degree();
        Coeff c = r.lc() * inv_lc;
        q.set_coeff(k, c);
        // r -= c * z^k * d
        for (std::int64_t i = 0; i <= d.degree(); ++i) {
            Coeff nc = r.coeff(i + k) - c * d.coeff(i);
            r.set_coeff(i + k, nc);
        }
    }
    return {q, r};
}

UniPoly UniPoly::exact_div(const UniPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw internal_error("exact_div: division not exact");
    return q;
}

UniPoly UniPoly::inflate(std::int64_t k) const {
    if (k <= 0) throw input_error("inflate needs k >= 1");
    UniPoly r(field_);
    if (c_.empty()) return r;
    r.c_.assign(static_cast<std::size_t>(degree() * k) + 1, Coeff(field_));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * k] = c_[i];
    return r;
}

UniPoly UniPoly::deflate(std::int64_t k) const {
    if (k <= 0) throw input_error("deflate needs k >= 1");
    UniPoly r(field_);
    if (c_.empty()) return r;
    r.c_.assign(c_.size() / k + 1, Coeff(field_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (i % k != 0) throw internal_error("deflate: support not divisible");
        r.c_[i / k] = c_[i];
    }
    r.trim();
    return r;
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        std::string cs = c_[i].str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) { s += "-"; cs = cs.substr(1); }
        } else {
            s += neg ? " - " : " + ";
            if (neg) cs = cs.substr(1);
        }
        first = false;
        if (i == 0) {
            s += cs;
        } else {
            if (cs != "1") s += cs + "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

namespace {

/// gcd over Q via a primitive pseudo-remainder sequence on integer
/// coefficient vectors; plain monic Euclid blows up on long inputs.
UniPoly gcd_rational(const UniPoly& a, const UniPoly& b) {
    const Field K = a.field();
    auto to_int = [&](const UniPoly& u) {
        Int lcm = 1;
        for (const Coeff& c : u.coeffs()) lcm = boost::multiprecision::lcm(lcm, denominator(c.rat()));
        std::vector<Int> v(u.coeffs().size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = numerator(u.coeffs()[i].rat() * Rat(lcm));
        return v;
    };
    auto strip = [](std::vector<Int>& v) {
        while (!v.empty() && v.back().is_zero()) v.pop_back();
        Int g = 0;
        for (const Int& x : v) {
            g = boost::multiprecision::gcd(g, x);
            if (g == 1) return;
        }
        if (g.is_zero() || g == 1) return;
        for (Int& x : v) x /= g;
    };
    std::vector<Int> x = to_int(a), y = to_int(b);
    strip(x);
    strip(y);
    while (!y.empty()) {
        if (x.size() < y.size()) std::swap(x, y);
        // pseudo-remainder of x by y
        while (x.size() >= y.size() && !x.empty()) {
            const Int lead = x.back();
            const Int ylead = y.back();
            const Int g = boost::multiprecision::gcd(lead, ylead);
            const Int cx = ylead / g, cy = lead / g;
            const std::size_t shift = x.size() - y.size();
            for (std::size_t i = 0; i < x.size(); ++i) x[i] *= cx;
            for (std::size_t i = 0; i < y.size(); ++i) x[i + shift] -= y[i] * cy;
            while (!x.empty() && x.back().is_zero()) x.pop_back();
        }
        strip(x);
        std::swap(x, y);
    }
    UniPoly r(K);
    for (std::size_t i = 0; i < x.size(); ++i)
        r.set_coeff(static_cast<std::int64_t>(i), Coeff::from_rat(K, Rat(x[i])));
    return r.is_zero() ? r : r.monic();
}

} // namespace

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    if (a.field() != b.field()) throw input_error("field mismatch");
    if (a.truncation() || b.truncation()) throw input_error("gcd requires exact polynomials");
    if (a.field().is_rational()) {
        if (a.is_zero()) return b.is_zero() ? b : b.monic();
        if (b.is_zero()) return a.monic();
        return gcd_rational(a, b);
    }
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = x.divmod(y);
        (void)q;
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

namespace {

/// p-th root of a polynomial all of whose exponents are divisible by p.
/// Over F_p the coefficients are fixed by Frobenius, so only exponents shrink.
UniPoly pth_root(const UniPoly& f, std::uint64_t p) {
    return f.deflate(static_cast<std::int64_t>(p));
}

void merge_factor(std::vector<std::pair<std::int64_t, UniPoly>>& out, std::int64_t m, const UniPoly& s) {
    if (s.degree() >= 1) out.emplace_back(m, s);
}

void sqfree_rec(const UniPoly& f, std::int64_t mult_scale,
                std::vector<std::pair<std::int64_t, UniPoly>>& out) {
    // f monic, deg >= 1
    const std::uint64_t p = f.field().characteristic();
    UniPoly fp = f.derivative();
    if (fp.is_zero()) {
        if (p == 0) throw internal_error("zero derivative in characteristic 0");
        sqfree_rec(pth_root(f, p).monic(), mult_scale * static_cast<std::int64_t>(p), out);
        return;
    }
    UniPoly c = gcd(f, fp);
    UniPoly w = f.exact_div(c).monic();
    std::int64_t m = 1;
    while (w.degree() >= 1) {
        UniPoly y = gcd(w, c);
        UniPoly z = w.exact_div(y).monic();
        merge_factor(out, m * mult_scale, z);
        w = y;
        c = c.exact_div(y).monic();
        ++m;
    }
    if (c.degree() >= 1) {
        if (p == 0) throw internal_error("leftover factor in characteristic 0");
        sqfree_rec(pth_root(c, p).monic(), mult_scale * static_cast<std::int64_t>(p), out);
    }
}

} // namespace

std::vector<std::pair<std::int64_t, UniPoly>> squarefree_decomposition(const UniPoly& f) {
    if (f.is_zero()) throw input_error("squarefree decomposition of zero");
    std::vector<std::pair<std::int64_t, UniPoly>> out;
    UniPoly g = f.monic();
    if (g.degree() >= 1) sqfree_rec(g, 1, out);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // Multiplicities from the two descent branches can coincide; merge them.
    std::vector<std::pair<std::int64_t, UniPoly>> merged;
    for (auto& [m, s] : out) {
        if (!merged.empty() && merged.back().first == m)
            merged.back().second = merged.back().second * s;
        else
            merged.emplace_back(m, s);
    }
    return merged;
}

std::int64_t distinct_root_count(const UniPoly& f) {
    if (f.is_zero()) throw input_error("distinct roots of zero polynomial");
    std::int64_t n = 0;
    // Each squarefree component is separable over the (perfect) base field,
    // so its degree counts its roots in the closure.
    for (const auto& [m, s] : squarefree_decomposition(f)) {
        (void)m;
        n += s.degree();
    }
    return n;
}

} // namespace nps
