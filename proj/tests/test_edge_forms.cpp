#include <doctest.h>

#include "nps/edge_forms.hpp"
#include "support.hpp"

using namespace nps;
using nps_test::P;

TEST_CASE("edge_initial examples") {
    Poly quartic = P("y^3-x^2*y-x^2*y^2+x^4");
    EdgeForm e1 = edge_initial(quartic, Edge({0, 3}, {2, 1}));
    CHECK(e1.in_form.same_terms(P("y^3-x^2*y")));
    CHECK(e1.alpha_S == 0);
    CHECK(e1.beta_S == 1);
    CHECK(e1.reduced_part.same_terms(P("y^2-x^2")));
    CHECK(e1.m == 2);
    CHECK(e1.n == 2);
    CHECK(e1.d == 2);
    // F(u,v) = v^2 - u^2: coefficients of u^2, uv, v^2
    CHECK(e1.binary_form.coeff(0).rat() == -1);
    CHECK(e1.binary_form.coeff(1).rat() == 0);
    CHECK(e1.binary_form.coeff(2).rat() == 1);

    Poly cusp = P("x^2+y^3");
    EdgeForm e2 = edge_initial(cusp, Edge({0, 3}, {2, 0}));
    CHECK(e2.in_form.same_terms(cusp));
    CHECK(e2.alpha_S == 0);
    CHECK(e2.beta_S == 0);
    CHECK(e2.d == 1);

    Poly tangent = P("y^2-2*x*y+x^2+x^3");
    EdgeForm e3 = edge_initial(tangent, Edge({0, 2}, {2, 0}));
    CHECK(e3.in_form.same_terms(P("y^2-2*x*y+x^2")));
    CHECK(e3.d == 2);
    // F = (v-u)^2 = u^2 - 2uv + v^2
    CHECK(e3.binary_form.coeff(0).rat() == 1);
    CHECK(e3.binary_form.coeff(1).rat() == -2);
    CHECK(e3.binary_form.coeff(2).rat() == 1);

    CHECK_THROWS_AS(edge_initial(cusp, Edge({0, 2}, {2, 0})), input_error);
}

TEST_CASE("binary_form_squarefree examples") {
    Field Q(0), F2(2);
    // v^2 - u^2 over Q
    BinaryForm f1(Q, {Coeff::from_int(Q, -1), Coeff(Q), Coeff::from_int(Q, 1)});
    auto r1 = binary_form_squarefree(f1);
    CHECK(r1.squarefree);
    CHECK(r1.distinct_roots() == 2);

    // (v-u)^2 over Q
    BinaryForm f2(Q, {Coeff::from_int(Q, 1), Coeff::from_int(Q, -2), Coeff::from_int(Q, 1)});
    auto r2 = binary_form_squarefree(f2);
    CHECK(!r2.squarefree);
    CHECK(r2.multiplicities == std::vector<std::int64_t>{2});

    // v^2 - u^2 = (v-u)^2 over F_2
    BinaryForm f3(F2, {Coeff::from_int(F2, 1), Coeff(F2), Coeff::from_int(F2, 1)});
    auto r3 = binary_form_squarefree(f3);
    CHECK(!r3.squarefree);
    CHECK(r3.multiplicities == std::vector<std::int64_t>{2});

    CHECK_THROWS_AS(binary_form_squarefree(BinaryForm(Q, {Coeff(Q), Coeff(Q)})), input_error);
}

TEST_CASE("non-degeneracy examples") {
    // x^p + y^{p+1} is non-degenerate but not strongly non-degenerate.
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        Poly f = P("x^" + std::to_string(p) + "+y^" + std::to_string(p + 1), p);
        DegeneracyReport d = analyze_degeneracy(f);
        CHECK(d.nondegenerate);
        CHECK(!d.strongly_nondegenerate);
        // The failure comes from the vertex (p, 0), not from the edge.
        CHECK(d.edges_only_strong);
    }
    // The same support in characteristic 0 is strongly non-degenerate.
    Poly f0 = P("x^2+y^3");
    DegeneracyReport d0 = analyze_degeneracy(f0);
    CHECK(d0.nondegenerate);
    CHECK(d0.strongly_nondegenerate);

    CHECK(!is_nondegenerate(P("(y-x)*(y-x-x^2)")));
    CHECK(is_nondegenerate(P("y^3-x^2*y-x^2*y^2+x^4")));
}

TEST_CASE("strong non-degeneracy catches torus-critical edges") {
    // x^2 y + x y^2 has a torus-critical edge point exactly in characteristic 3.
    CHECK(is_strongly_nondegenerate(P("x^2*y+x*y^2")));
    CHECK(is_strongly_nondegenerate(P("x^2*y+x*y^2", 2)));
    CHECK(!is_strongly_nondegenerate(P("x^2*y+x*y^2", 3)));

    CHECK(is_strongly_nondegenerate(P("x*y+x^3+y^3")));
}

TEST_CASE("edge_factor_data examples") {
    Poly quartic = P("y^3-x^2*y-x^2*y^2+x^4");
    auto d1 = edge_factor_data(quartic, Edge({0, 3}, {2, 1}));
    CHECK(d1.bidegree_h == 2);
    CHECK(d1.bidegree_v == 2);
    CHECK(d1.r == 2);
    CHECK(d1.distinct_factor_count == 2);

    auto d2 = edge_factor_data(P("x^2+y^3"), Edge({0, 3}, {2, 0}));
    CHECK(d2.bidegree_h == 2);
    CHECK(d2.bidegree_v == 3);
    CHECK(d2.r == 1);
    CHECK(d2.distinct_factor_count == 1);

    auto d3 = edge_factor_data(P("(y-x)*(y-x-x^2)"), Edge({0, 2}, {2, 0}));
    CHECK(d3.bidegree_h == 2);
    CHECK(d3.bidegree_v == 2);
    CHECK(d3.r == 2);
    CHECK(d3.distinct_factor_count == 1);
}

TEST_CASE("binary form reconstruction (quasi-homogeneous structure)") {
    std::mt19937_64 rng(47);
    for (std::uint64_t p : {0ull, 2ull, 5ull}) {
        Field K(p);
        for (int iter = 0; iter < 40; ++iter) {
            Poly f = nps_test::random_poly(rng, K, 6, 7, true);
            for (const Edge& S : newton_polygon(f).edges) {
                EdgeForm ef = edge_initial(f, S);
                // Substitute u = x^{m/d}, v = y^{n/d} into F.
                Poly rebuilt(K);
                const std::int64_t mh = ef.m / ef.d, nh = ef.n / ef.d;
                for (std::int64_t i = 0; i <= ef.d; ++i) {
                    const Coeff c = ef.binary_form.coeff(i);
                    if (c.is_zero()) continue;
                    rebuilt.add_term({(ef.d - i) * mh, i * nh}, c);
                }
                CHECK(rebuilt.same_terms(ef.reduced_part));
            }
        }
    }
}

TEST_CASE("non-degeneracy is symmetric in x and y") {
    std::mt19937_64 rng(53);
    for (std::uint64_t p : {0ull, 3ull}) {
        Field K(p);
        for (int iter = 0; iter < 50; ++iter) {
            Poly f = nps_test::random_poly(rng, K, 5, 6, true);
            CHECK(is_nondegenerate(f) == is_nondegenerate(f.transposed()));
        }
    }
}

TEST_CASE("for non-degenerate series distinct factor counts add up to r(N)") {
    std::mt19937_64 rng(59);
    Field K(0);
    int found = 0;
    for (int iter = 0; iter < 80; ++iter) {
        Poly f = nps_test::random_poly(rng, K, 5, 6, true);
        NewtonPolygon n = newton_polygon(f);
        if (n.edges.empty() || !is_nondegenerate(f)) continue;
        ++found;
        std::int64_t sum_r = 0, sum_distinct = 0;
        for (const Edge& S : n.edges) {
            auto d = edge_factor_data(f, S);
            sum_r += d.r;
            sum_distinct += d.distinct_factor_count;
        }
        CHECK(sum_r == sum_distinct);
    }
    CHECK(found > 10);
}

TEST_CASE("in characteristic 0 non-degeneracy agrees with the strong version") {
    std::mt19937_64 rng(61);
    Field K(0);
    for (int iter = 0; iter < 80; ++iter) {
        Poly f = nps_test::random_poly(rng, K, 5, 6, true);
        DegeneracyReport d = analyze_degeneracy(f);
        CHECK(d.nondegenerate == d.strongly_nondegenerate);
    }
}
