#include "nps/poly.hpp"

#include <algorithm>
#include <limits>

#include "nps/parse.hpp"

namespace nps {

std::int64_t checked_add_exp(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw input_error("exponent overflow (64-bit)");
    return r;
}

Poly Poly::constant(const Field& f, const Coeff& c) {
    Poly r(f);
    if (!c.is_zero()) r.terms_[{0, 0}] = c;
    return r;
}

Poly Poly::monomial(const Field& f, const Coeff& c, Exp2 e) {
    if (e.a < 0 || e.b < 0) throw input_error("negative exponent");
    Poly r(f);
    if (!c.is_zero()) r.terms_[e] = c;
    return r;
}

void Poly::check_field(const Poly& o) const {
    if (field_ != o.field_) throw input_error("field mismatch");
}

void Poly::apply_truncation() {
    if (!trunc_) return;
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.total() > *trunc_)
            it = terms_.erase(it);
        else
            ++it;
    }
}

void Poly::set_truncation(std::optional<std::int64_t> t) {
    trunc_ = t;
    apply_truncation();
}

Poly Poly::truncated(std::int64_t bound) const {
    Poly r = *this;
    r.trunc_ = trunc_ ? std::min(*trunc_, bound) : bound;
    r.apply_truncation();
    return r;
}

Coeff Poly::coeff(Exp2 e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(field_) : it->second;
}

void Poly::add_term(Exp2 e, const Coeff& c) {
    if (e.a < 0 || e.b < 0) throw input_error("negative exponent");
    if (c.is_zero()) return;
    if (trunc_ && e.total() > *trunc_) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::int64_t Poly::total_degree() const {
    if (terms_.empty()) throw input_error("degree of zero polynomial");
    std::int64_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.total());
    return d;
}

std::int64_t Poly::degree_in_y() const {
    std::int64_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.b);
    return d;
}

std::int64_t Poly::degree_in_x() const {
    std::int64_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.a);
    return d;
}

std::int64_t Poly::order() const {
    if (terms_.empty()) {
        if (trunc_)
            throw indeterminate_error("order indeterminate at this precision (zero up to degree " +
                                      std::to_string(*trunc_) + ")");
        throw input_error("order of the zero polynomial");
    }
    std::int64_t o = std::numeric_limits<std::int64_t>::max();
    for (const auto& [e, c] : terms_) o = std::min(o, e.total());
    return o;
}

Poly Poly::initial_part() const {
    const std::int64_t o = order();
    Poly r(field_);
    for (const auto& [e, c] : terms_)
        if (e.total() == o) r.terms_[e] = c;
    return r;
}

MonomialSplit Poly::extract_monomial() const {
    if (terms_.empty()) throw input_error("extract_monomial of zero polynomial");
    std::int64_t d1 = std::numeric_limits<std::int64_t>::max();
    std::int64_t d2 = d1;
    for (const auto& [e, c] : terms_) {
        d1 = std::min(d1, e.a);
        d2 = std::min(d2, e.b);
    }
    Poly g(field_);
    for (const auto& [e, c] : terms_) g.terms_[{e.a - d1, e.b - d2}] = c;
    if (trunc_) g.trunc_ = *trunc_ - d1 - d2;
    return {d1, d2, g};
}

bool Poly::is_convenient() const {
    if (terms_.empty()) return false;
    bool on_x = false, on_y = false;
    for (const auto& [e, c] : terms_) {
        if (e.b == 0) on_x = true; // term of f(x,0)
        if (e.a == 0) on_y = true; // term of f(0,y)
    }
    return on_x && on_y;
}

namespace {
std::optional<std::int64_t> merge_trunc(const std::optional<std::int64_t>& a,
                                        const std::optional<std::int64_t>& b) {
    if (a && b) return std::min(*a, *b);
    return a ? a : b;
}
} // namespace

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    check_field(o);
    trunc_ = merge_trunc(trunc_, o.trunc_);
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    apply_truncation();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_field(o);
    trunc_ = merge_trunc(trunc_, o.trunc_);
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    apply_truncation();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_field(b);
    Poly r(a.field_);
    std::optional<std::int64_t> t;
    auto low = [](const Poly& p) -> std::int64_t {
        if (p.terms_.empty()) return 0;
        std::int64_t o = std::numeric_limits<std::int64_t>::max();
        for (const auto& [e, c] : p.terms_) o = std::min(o, e.total());
        return o;
    };
    if (a.trunc_) t = *a.trunc_ + low(b);
    if (b.trunc_) t = merge_trunc(t, *b.trunc_ + low(a));
    r.trunc_ = t;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exp2 e{checked_add_exp(ea.a, eb.a), checked_add_exp(ea.b, eb.b)};
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly Poly::scaled(const Coeff& c) const {
    Poly r(field_);
    r.trunc_ = trunc_;
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

Poly Poly::shifted(std::int64_t dx, std::int64_t dy) const {
    Poly r(field_);
    for (const auto& [e, v] : terms_)
        r.terms_[{checked_add_exp(e.a, dx), checked_add_exp(e.b, dy)}] = v;
    if (trunc_) r.trunc_ = *trunc_ + dx + dy;
    return r;
}

bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_ && a.trunc_ == b.trunc_;
}

Poly Poly::partial(Var v) const {
    Poly r(field_);
    if (trunc_) r.trunc_ = *trunc_ - 1;
    for (const auto& [e, c] : terms_) {
        if (v == Var::x) {
            if (e.a == 0) continue;
            r.add_term({e.a - 1, e.b}, c.times_int(Int(e.a)));
        } else {
            if (e.b == 0) continue;
            r.add_term({e.a, e.b - 1}, c.times_int(Int(e.b)));
        }
    }
    return r;
}

Poly Poly::sheared_x(const Coeff& lambda) const {
    if (trunc_) throw input_error("shear requires an exact polynomial");
    Poly r(field_);
    const Coeff one = Coeff::from_int(field_, 1);
    for (const auto& [e, c] : terms_) {
        // (x + lambda y)^a via Pascal's row, exact in any characteristic.
        std::vector<Coeff> binom(static_cast<std::size_t>(e.a) + 1, Coeff(field_));
        binom[0] = one;
        for (std::int64_t row = 1; row <= e.a; ++row)
            for (std::int64_t k = row; k >= 1; --k) binom[k] += binom[k - 1];
        Coeff lpow = one;
        for (std::int64_t k = 0; k <= e.a; ++k) {
            // term c * C(a,k) lambda^k x^{a-k} y^{b+k}
            r.add_term({e.a - k, checked_add_exp(e.b, k)}, c * binom[k] * lpow);
            lpow *= lambda;
        }
    }
    return r;
}

Poly Poly::transposed() const {
    Poly r(field_);
    r.trunc_ = trunc_;
    for (const auto& [e, c] : terms_) r.terms_[{e.b, e.a}] = c;
    return r;
}

std::vector<UniPoly> Poly::y_coefficients() const {
    if (trunc_) throw input_error("y_coefficients requires an exact polynomial");
    std::vector<UniPoly> ys(static_cast<std::size_t>(degree_in_y()) + 1, UniPoly(field_));
    for (const auto& [e, c] : terms_) {
        UniPoly& u = ys[static_cast<std::size_t>(e.b)];
        u.set_coeff(e.a, u.coeff(e.a) + c);
    }
    return ys;
}

Poly Poly::from_y_coefficients(const Field& f, const std::vector<UniPoly>& ys) {
    Poly r(f);
    for (std::size_t b = 0; b < ys.size(); ++b) {
        const auto& cs = ys[b].coeffs();
        for (std::size_t a = 0; a < cs.size(); ++a)
            if (!cs[a].is_zero()) r.terms_[{static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)}] = cs[a];
    }
    return r;
}

std::string Poly::str() const { return render_poly(*this); }

Poly multiply_truncated(const Poly& f, const Poly& g, std::int64_t bound) {
    if (f.field() != g.field()) throw input_error("field mismatch");
    Poly fz = f.truncated(bound), gz = g.truncated(bound);
    Poly r = fz * gz;
    return r.truncated(bound);
}

UniPoly substitute_param(const Poly& f, const UniPoly& xt, const UniPoly& yt, std::int64_t bound) {
    if (f.field() != xt.field() || f.field() != yt.field()) throw input_error("field mismatch");
    if (bound < 1) throw input_error("substitution bound must be >= 1");
    for (const UniPoly* s : {&xt, &yt}) {
        if (s->is_zero()) {
            if (s->truncation())
                throw indeterminate_error("parametrization component is zero up to its truncation");
            continue; // exactly zero component (axis branch)
        }
        if (s->order() < 1) throw input_error("parametrization must have positive order");
    }
    const bool xz = xt.is_zero(), yz = yt.is_zero();
    const std::int64_t ox = xz ? 1 : xt.order();
    const std::int64_t oy = yz ? 1 : yt.order();
    UniPoly result(f.field());
    result.set_truncation(bound);
    std::vector<UniPoly> xpow{UniPoly::constant(f.field(), Coeff::from_int(f.field(), 1)).truncated(bound)};
    std::vector<UniPoly> ypow = xpow;
    auto power = [&](std::vector<UniPoly>& cache, const UniPoly& base, std::int64_t e) -> const UniPoly& {
        while (static_cast<std::int64_t>(cache.size()) <= e)
            cache.push_back((cache.back() * base).truncated(bound));
        return cache[static_cast<std::size_t>(e)];
    };
    for (const auto& [e, c] : f.terms()) {
        if ((xz && e.a > 0) || (yz && e.b > 0)) continue;
        using I128 = __int128;
        if (I128(e.a) * ox + I128(e.b) * oy > I128(bound)) continue;
        UniPoly term = (power(xpow, xt, e.a) * power(ypow, yt, e.b)).truncated(bound);
        result += term.scaled(c);
    }
    result.set_truncation(bound);
    return result;
}

} // namespace nps
