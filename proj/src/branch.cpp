#include "nps/branch.hpp"

#include <numeric>

namespace nps {

std::vector<std::int64_t> semigroup_generators_from_exponents(const std::vector<std::int64_t>& beta) {
    if (beta.empty()) throw input_error("empty exponent sequence");
    std::vector<std::int64_t> v(beta.size()), e(beta.size());
    v[0] = beta[0];
    e[0] = beta[0];
    for (std::size_t k = 1; k < beta.size(); ++k) {
        e[k] = std::gcd(e[k - 1], beta[k]);
        if (k == 1)
            v[1] = beta[1];
        else
            v[k] = (e[k - 2] / e[k - 1]) * v[k - 1] + beta[k] - beta[k - 1];
    }
    return v;
}

CharExponents char_exponents_from_param(const UniPoly& xt, const UniPoly& yt) {
    if (xt.field() != yt.field()) throw input_error("field mismatch");
    const Field& K = xt.field();
    const std::uint64_t p = K.characteristic();

    // Axis branches.
    if (xt.is_zero()) {
        if (xt.truncation())
            throw indeterminate_error("x(t) is zero up to its truncation");
        if (yt.is_zero() || yt.order() != 1)
            throw input_error("a branch with x(t) = 0 must have ord y(t) = 1 (the y-axis)");
        return {{1}, semigroup_from_generators({1})};
    }
    // x(t) must be exactly t^n.
    const std::int64_t n = xt.order();
    if (n < 1) throw input_error("ord x(t) must be >= 1");
    if (xt.degree() != n || !xt.coeff(n).is_one())
        throw input_error("x(t) must be the pure power t^n (normalized form); reparametrize the input");
    if (p != 0 && n % static_cast<std::int64_t>(p) == 0)
        throw input_error("wild branch (characteristic divides the multiplicity " + std::to_string(n) +
                          "); supply the value semigroup explicitly");

    if (n == 1) return {{1}, semigroup_from_generators({1})};

    if (yt.is_zero()) {
        if (yt.truncation())
            throw indeterminate_error("y(t) is zero up to its truncation");
        throw input_error("y(t) = 0 with ord x(t) > 1 is not a primitive parametrization");
    }
    if (yt.order() < n)
        throw input_error("expected ord y(t) >= ord x(t) = " + std::to_string(n) +
                          "; swap the coordinates");

    std::vector<std::int64_t> beta{n};
    std::int64_t e = n;
    const auto& cs = yt.coeffs();
    for (std::size_t k = 0; k < cs.size() && e > 1; ++k) {
        if (cs[k].is_zero()) continue;
        if (static_cast<std::int64_t>(k) % e != 0) {
            beta.push_back(static_cast<std::int64_t>(k));
            e = std::gcd(e, static_cast<std::int64_t>(k));
        }
    }
    if (e > 1) {
        if (yt.truncation())
            throw indeterminate_error("characteristic exponents not determined at this precision "
                                      "(gcd stuck at " + std::to_string(e) + ")");
        throw input_error("parametrization is not primitive (all exponents share the factor " +
                          std::to_string(e) + ")");
    }
    return {beta, semigroup_from_generators(semigroup_generators_from_exponents(beta))};
}

} // namespace nps
