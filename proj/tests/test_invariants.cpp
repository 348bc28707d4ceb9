#include <doctest.h>

#include "nps/invariants.hpp"
#include "support.hpp"

using namespace nps;
using nps_test::P;

TEST_CASE("mu_N_convenient examples") {
    CHECK(mu_N_convenient(newton_polygon(P("x^2+y^3"))) == 2);
    CHECK(mu_N_convenient(newton_polygon(P("y^3-x^2*y-x^2*y^2+x^4"))) == 4);
    CHECK(mu_N_convenient(newton_polygon(P("y^2-2*x*y+x^2+x^3"))) == 1);
    CHECK_THROWS_AS(mu_N_convenient(newton_polygon(P("x*y^2+x^4"))), input_error);
}

TEST_CASE("mu_N_general four cases") {
    CHECK(mu_N_general(P("x*y^2+x^4")) == 5); // x*(y^2+x^3), case (1,0)
    CHECK(mu_N_general(P("x*y")) == 1);       // case (1,1), monomial
    CHECK(mu_N_general(P("x^2+y^3")) == 2);   // case (0,0)
    CHECK(mu_N_general(P("y^3+x^3*y")) == 7); // y*(y^2+x^3), case (0,1)
    CHECK_THROWS_AS(mu_N_general(P("x^2*y")), input_error); // d1 = 2, not reduced
}

TEST_CASE("mu_N_stabilized examples") {
    CHECK(mu_N_stabilized(P("x*y")) == 1);
    CHECK(mu_N_stabilized(P("x")) == 0);
    CHECK(mu_N_stabilized(P("x^2+y^3")) == 2);
    CHECK_THROWS_AS(mu_N_stabilized(P("1")), input_error);
}

TEST_CASE("mu_N_lenarcik examples") {
    CHECK(mu_N_lenarcik(P("x*y^2+x^4")) == 5);
    CHECK(mu_N_lenarcik(P("x^2+y^3")) == 2);
    CHECK(mu_N_lenarcik(P("x*y")) == 1);
    CHECK_THROWS_AS(mu_N_lenarcik(P("y-x")), input_error); // order 1
}

TEST_CASE("invariants_bundle examples") {
    auto b1 = invariants_bundle(P("x^2+y^3"));
    CHECK(b1.mu_N == 2);
    CHECK(b1.delta_N == Rat(1));
    CHECK(b1.r_N == 1);

    auto b2 = invariants_bundle(P("y^3-x^2*y-x^2*y^2+x^4"));
    CHECK(b2.mu_N == 4);
    CHECK(b2.delta_N == Rat(3));
    CHECK(b2.r_N == 3);

    auto b3 = invariants_bundle(P("y^2-2*x*y+x^2+x^3"));
    CHECK(b3.mu_N == 1);
    CHECK(b3.delta_N == Rat(1));
    CHECK(b3.r_N == 2);
}

namespace {

/// Random series with a prescribed (d1, d2) offset pattern, convenient
/// cofactor, order >= 2.
Poly random_offset_series(std::mt19937_64& rng, const Field& K, std::int64_t d1, std::int64_t d2) {
    while (true) {
        Poly g = nps_test::random_poly(rng, K, 5, 6, true);
        // Make g convenient with g(0,0) = 0 and order >= 2 - d1 - d2 >= 1.
        std::int64_t a = nps_test::draw_range(rng, std::max<std::int64_t>(1, 2 - d1 - d2), 6);
        std::int64_t b = nps_test::draw_range(rng, std::max<std::int64_t>(1, 2 - d1 - d2), 6);
        g.add_term({a, 0}, Coeff::from_int(K, 1));
        g.add_term({0, b}, Coeff::from_int(K, 1));
        if (g.is_zero() || !g.is_convenient() || !g.coeff({0, 0}).is_zero()) continue;
        Poly f = g.shifted(d1, d2);
        if (f.order() < 2) continue;
        auto split = f.extract_monomial();
        if (split.d1 != d1 || split.d2 != d2) continue;
        return f;
    }
}

} // namespace

TEST_CASE("all mu_N routes agree on random series") {
    std::mt19937_64 rng(41);
    for (std::uint64_t p : {0ull, 2ull, 5ull}) {
        Field K(p);
        for (std::int64_t d1 = 0; d1 <= 1; ++d1) {
            for (std::int64_t d2 = 0; d2 <= 1; ++d2) {
                for (int iter = 0; iter < 25; ++iter) {
                    Poly f = random_offset_series(rng, K, d1, d2);
                    CAPTURE(render_poly(f));
                    const std::int64_t general = mu_N_general(f);
                    CHECK(general == mu_N_stabilized(f));
                    CHECK(general == mu_N_lenarcik(f));
                    if (d1 == 0 && d2 == 0)
                        CHECK(general == mu_N_convenient(newton_polygon(f)));
                }
            }
        }
    }
}

TEST_CASE("Pick consistency and the delta identity") {
    std::mt19937_64 rng(43);
    Field K(0);
    for (int iter = 0; iter < 50; ++iter) {
        Poly f = random_offset_series(rng, K, 0, 0);
        NewtonPolygon n = newton_polygon(f);
        auto m = polygon_measures(n);
        auto lc = lattice_counts(n);
        auto inv = invariants_bundle(f);
        CHECK(inv.mu_N == lc.double_area - m.h_total - m.v_total + 1);
        CHECK(inv.r_N == lc.on_polygon - 1);
        CHECK(inv.delta_N == Rat(lc.below_not_on_axes));
        CHECK(Rat(2) * inv.delta_N == Rat(inv.mu_N + inv.r_N - 1));
        CHECK(denominator(inv.delta_N) == 1);
    }
}
