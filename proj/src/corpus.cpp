#include "nps/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "nps/parse.hpp"

namespace nps {

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

std::int64_t draw_range(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(draw(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

UniPoly tpow(const Field& K, std::int64_t e, long long c = 1) {
    return UniPoly::monomial(K, Coeff::from_int(K, c), e);
}

/// Cache for the two-term cusp factors; keyed per characteristic and template.
Poly cusp3_factor(const Field& K, std::int64_t n, std::int64_t m, std::int64_t q) {
    static std::map<std::tuple<std::uint64_t, std::int64_t, std::int64_t, std::int64_t>, Poly> cache;
    auto key = std::make_tuple(K.characteristic(), n, m, q);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    UniPoly xt = tpow(K, n);
    UniPoly yt = tpow(K, m) + tpow(K, q);
    Poly f = implicitize(xt, yt, /*degree_cap=*/n + q);
    cache.emplace(key, f);
    return f;
}

struct BranchDraw {
    BranchSpec spec;
    std::string key;        // canonical factor text, for distinctness
    std::int64_t degree;    // total degree of the factor
    bool convenient_irreducible; // true for non-axis branches
};

} // namespace

std::vector<CurveSpec> generate_corpus(std::uint64_t seed, std::size_t count,
                                       const std::vector<std::uint64_t>& chars) {
    if (chars.empty()) throw input_error("corpus needs at least one characteristic");
    for (std::uint64_t p : chars) Field probe(p); // validates 0-or-prime
    std::mt19937_64 rng(seed);
    std::vector<CurveSpec> out;
    out.reserve(count);

    for (std::size_t idx = 0; idx < count; ++idx) {
        const Field K(chars[draw(rng, chars.size())]);
        const std::uint64_t p = K.characteristic();
        const std::size_t want = 1 + draw(rng, 4);
        const std::int64_t degree_budget = 14;

        std::vector<BranchDraw> picked;
        std::set<std::string> seen;
        std::int64_t used = 0;
        bool have_axis_x = false, have_axis_y = false;

        auto try_add = [&](BranchDraw&& b) {
            if (used + b.degree > degree_budget) return false;
            if (!seen.insert(b.key).second) return false;
            used += b.degree;
            picked.push_back(std::move(b));
            return true;
        };

        for (int attempts = 0; picked.size() < want && attempts < 40; ++attempts) {
            const std::uint64_t kind = draw(rng, 12);
            if (kind < 4) {
                // Smooth branch x = t, y = c1 t + c2 t^k.
                const std::int64_t c1 = draw_range(rng, -2, 2);
                const std::int64_t c2 = draw_range(rng, 1, 3);
                const std::int64_t k = draw_range(rng, 2, 4);
                BranchDraw b;
                b.spec.xt = tpow(K, 1);
                b.spec.yt = UniPoly(K, {Coeff(K), Coeff::from_int(K, c1)}) + tpow(K, k, c2);
                Poly fac = parse_poly("y", K) - parse_poly("x", K).scaled(Coeff::from_int(K, c1)) -
                           Poly::monomial(K, Coeff::from_int(K, c2), {k, 0});
                b.spec.factor = normalize_factor(fac);
                b.key = render_poly(*b.spec.factor);
                b.degree = fac.total_degree();
                b.convenient_irreducible = true;
                try_add(std::move(b));
            } else if (kind < 7) {
                // Pure-power cusp (t^n, c t^m), gcd(n, m) = 1.
                const std::int64_t n = draw_range(rng, 2, 4);
                const std::int64_t m = draw_range(rng, n + 1, n + 5);
                if (std::gcd(n, m) != 1) continue;
                std::int64_t c = draw_range(rng, 1, 3);
                if (p != 0 && c % static_cast<std::int64_t>(p) == 0) c = 1;
                const bool wild = p != 0 && n % static_cast<std::int64_t>(p) == 0;
                BranchDraw b;
                // factor y^n - c^n x^m
                Poly fac = Poly::monomial(K, Coeff::from_int(K, 1), {0, n});
                Coeff cn = Coeff::from_int(K, 1);
                for (std::int64_t i = 0; i < n; ++i) cn *= Coeff::from_int(K, c);
                fac -= Poly::monomial(K, cn, {m, 0});
                b.spec.factor = normalize_factor(fac);
                if (wild) {
                    // Tame dictionary unavailable; the value semigroup of a
                    // pure-power parametrization is <n, m> in any characteristic.
                    b.spec.semigroup_gens = std::vector<std::int64_t>{n, m};
                } else {
                    b.spec.xt = tpow(K, n);
                    b.spec.yt = tpow(K, m, c);
                }
                b.key = render_poly(*b.spec.factor);
                b.degree = std::max(n, m);
                b.convenient_irreducible = true;
                try_add(std::move(b));
            } else if (kind < 9) {
                // Two-term cusp (t^n, t^m + t^q) with gcd(n,m) = d > 1, gcd(d,q) = 1.
                const std::int64_t n = 4;
                if (p == 2) continue; // wild
                const std::int64_t m = 6;
                const std::int64_t q = draw_range(rng, 7, 9);
                if (q % 2 == 0) continue;
                if (used + q > degree_budget) continue;
                BranchDraw b;
                b.spec.xt = tpow(K, n);
                b.spec.yt = tpow(K, m) + tpow(K, q);
                b.spec.factor = cusp3_factor(K, n, m, q);
                b.key = render_poly(*b.spec.factor);
                b.degree = b.spec.factor->total_degree();
                b.convenient_irreducible = true;
                try_add(std::move(b));
            } else if (kind == 9 && !have_axis_x) {
                // The y-axis {x = 0}, parametrized (0, t).
                BranchDraw b;
                b.spec.xt = UniPoly(K);
                b.spec.yt = tpow(K, 1);
                b.key = "x";
                b.degree = 1;
                b.convenient_irreducible = false;
                if (try_add(std::move(b))) have_axis_x = true;
            } else if (kind == 10 && !have_axis_y) {
                // The x-axis {y = 0}, parametrized (t, 0).
                BranchDraw b;
                b.spec.xt = tpow(K, 1);
                b.spec.yt = UniPoly(K);
                b.key = "y";
                b.degree = 1;
                b.convenient_irreducible = false;
                if (try_add(std::move(b))) have_axis_y = true;
            } else if (kind == 11 && p != 0) {
                // Wild pure-power branch through its semigroup.
                const std::int64_t n = static_cast<std::int64_t>(p);
                const std::int64_t m = draw_range(rng, n + 1, n + 4);
                if (std::gcd(n, m) != 1) continue;
                if (used + m > degree_budget) continue;
                BranchDraw b;
                Poly fac = Poly::monomial(K, Coeff::from_int(K, 1), {0, n}) -
                           Poly::monomial(K, Coeff::from_int(K, 1), {m, 0});
                b.spec.factor = normalize_factor(fac);
                b.spec.semigroup_gens = std::vector<std::int64_t>{n, m};
                b.key = render_poly(*b.spec.factor);
                b.degree = m;
                b.convenient_irreducible = true;
                try_add(std::move(b));
            }
        }
        if (picked.empty()) {
            // Degenerate draw; fall back to a single smooth branch.
            BranchDraw b;
            b.spec.xt = tpow(K, 1);
            b.spec.yt = tpow(K, 2);
            b.spec.factor = normalize_factor(parse_poly("y-x^2", K));
            b.key = "y-x^2";
            b.degree = 2;
            picked.push_back(std::move(b));
        }

        CurveSpec spec;
        spec.id = "corpus-" + std::to_string(seed) + "-" + std::to_string(idx);
        spec.field = K;
        for (auto& b : picked) spec.branches.push_back(std::move(b.spec));
        out.push_back(std::move(spec));
    }
    return out;
}

} // namespace nps
