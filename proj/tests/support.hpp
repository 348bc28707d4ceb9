#ifndef NPS_TESTS_SUPPORT_HPP
#define NPS_TESTS_SUPPORT_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "nps/newton.hpp"
#include "nps/parse.hpp"
#include "nps/poly.hpp"

namespace nps_test {

using namespace nps;

inline Poly P(const std::string& text, std::uint64_t p = 0) { return parse_poly(text, Field(p)); }
inline UniPoly U(const std::string& text, std::uint64_t p = 0) { return parse_uniseries(text, Field(p)); }

inline std::int64_t draw_range(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Random sparse polynomial with exponents <= emax and small integer
/// coefficients; never zero.
inline Poly random_poly(std::mt19937_64& rng, const Field& K, int terms, std::int64_t emax,
                        bool no_constant = true) {
    Poly f(K);
    while (f.is_zero()) {
        for (int i = 0; i < terms; ++i) {
            Exp2 e{draw_range(rng, 0, emax), draw_range(rng, 0, emax)};
            if (no_constant && e.a == 0 && e.b == 0) continue;
            std::int64_t c = draw_range(rng, -4, 4);
            f.add_term(e, Coeff::from_int(K, c));
        }
    }
    return f;
}

/// Brute-force Newton polygon: every support pair whose connecting line has
/// all of supp (and its +e1, +e2 shifts) on the non-origin side is a sub-edge;
/// maximal segments per supporting line are the polygon edges.
inline std::vector<Edge> brute_polygon_edges(const Poly& f) {
    std::vector<Exp2> supp;
    for (const auto& [e, c] : f.terms()) supp.push_back(e);
    std::vector<Exp2> pts = supp;
    for (const auto& e : supp) {
        pts.push_back({e.a + 1, e.b});
        pts.push_back({e.a, e.b + 1});
    }
    struct Line {
        std::int64_t na, nb, c;
        bool operator<(const Line& o) const {
            return std::tie(na, nb, c) < std::tie(o.na, o.nb, o.c);
        }
    };
    std::map<Line, std::vector<Exp2>> lines;
    for (const Exp2& p : supp) {
        for (const Exp2& q : supp) {
            if (!(p.a < q.a && p.b > q.b)) continue;
            std::int64_t na = p.b - q.b, nb = q.a - p.a;
            const std::int64_t g = std::gcd(na, nb);
            na /= g;
            nb /= g;
            const std::int64_t c = na * p.a + nb * p.b;
            bool supporting = true;
            for (const Exp2& r : pts)
                if (na * r.a + nb * r.b < c) { supporting = false; break; }
            if (supporting) {
                lines[{na, nb, c}].push_back(p);
                lines[{na, nb, c}].push_back(q);
            }
        }
    }
    std::vector<Edge> edges;
    for (auto& [line, ps] : lines) {
        auto lo = *std::min_element(ps.begin(), ps.end(),
                                    [](const Exp2& a, const Exp2& b) { return a.a < b.a; });
        auto hi = *std::max_element(ps.begin(), ps.end(),
                                    [](const Exp2& a, const Exp2& b) { return a.a < b.a; });
        edges.emplace_back(lo, hi);
    }
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return a.start.a < b.start.a; });
    return edges;
}

/// Sylvester-determinant resultant (Bareiss fraction-free over K[x]); the
/// independent oracle for the PRS implementation.
inline UniPoly sylvester_resultant_y(const Poly& f, const Poly& g) {
    const Field& K = f.field();
    std::vector<UniPoly> a = f.y_coefficients(); // a[i] = coeff of y^i
    std::vector<UniPoly> b = g.y_coefficients();
    const std::int64_t m = static_cast<std::int64_t>(a.size()) - 1;
    const std::int64_t n = static_cast<std::int64_t>(b.size()) - 1;
    const std::int64_t N = m + n;
    std::vector<std::vector<UniPoly>> S(static_cast<std::size_t>(N),
                                        std::vector<UniPoly>(static_cast<std::size_t>(N), UniPoly(K)));
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j <= m; ++j) S[i][i + j] = a[static_cast<std::size_t>(m - j)];
    for (std::int64_t i = 0; i < m; ++i)
        for (std::int64_t j = 0; j <= n; ++j) S[n + i][i + j] = b[static_cast<std::size_t>(n - j)];

    // Bareiss determinant with row pivoting.
    UniPoly prev = UniPoly::constant(K, Coeff::from_int(K, 1));
    bool negate = false;
    for (std::int64_t k = 0; k < N; ++k) {
        std::int64_t piv = k;
        while (piv < N && S[piv][k].is_zero()) ++piv;
        if (piv == N) return UniPoly(K); // determinant is zero
        if (piv != k) {
            std::swap(S[piv], S[k]);
            negate = !negate;
        }
        for (std::int64_t i = k + 1; i < N; ++i) {
            for (std::int64_t j = k + 1; j < N; ++j)
                S[i][j] = (S[i][j] * S[k][k] - S[i][k] * S[k][j]).exact_div(prev);
            S[i][k] = UniPoly(K);
        }
        prev = S[k][k];
    }
    UniPoly det = S[N - 1][N - 1];
    return negate ? -det : det;
}

} // namespace nps_test

#endif
