#include <doctest.h>

#include "nps/corpus.hpp"
#include "nps/json_io.hpp"
#include "nps/verify.hpp"
#include "support.hpp"

using namespace nps;
using nps_test::P;
using nps_test::U;

namespace {

BranchSpec param_branch(const Field& K, const std::string& x, const std::string& y) {
    BranchSpec b;
    b.xt = parse_uniseries(x, K);
    b.yt = parse_uniseries(y, K);
    return b;
}

} // namespace

TEST_CASE("implicitize examples") {
    CHECK(implicitize(U("t^2"), U("t^3")).same_terms(normalize_factor(P("y^2-x^3"))));
    CHECK(implicitize(U("t"), U("t+t^2")).same_terms(normalize_factor(P("y-x-x^2"))));
    Poly f = implicitize(U("t^4"), U("t^6+t^7"));
    CHECK(substitute_param(f, U("t^4"), U("t^6+t^7"), 64).is_zero());
    CHECK(f.degree_in_y() == 4);
    CHECK_THROWS_AS(implicitize(U("t^2"), U("t^4")), input_error); // not primitive
}

TEST_CASE("resolve_branch handles the three branch forms") {
    Field K(0);
    // Parametrized.
    ResolvedBranch r1 = resolve_branch(param_branch(K, "t^2", "t^3"), K);
    CHECK(r1.semigroup.conductor == 2);
    CHECK(r1.factor_provenance == "implicitized");
    // Axis.
    ResolvedBranch r2 = resolve_branch(param_branch(K, "0", "t"), K);
    CHECK(r2.semigroup.generators == std::vector<std::int64_t>{1});
    CHECK(render_poly(r2.factor) == "x");
    // Abstract with factor.
    BranchSpec b3;
    b3.semigroup_gens = std::vector<std::int64_t>{2, 3};
    b3.factor = P("x^2+y^3", 2);
    ResolvedBranch r3 = resolve_branch(b3, Field(2));
    CHECK(r3.mu_bar == 2);

    BranchSpec bad;
    bad.semigroup_gens = std::vector<std::int64_t>{2, 3};
    CHECK_THROWS_AS(resolve_branch(bad, K), input_error); // no factor

    BranchSpec wrong = param_branch(K, "t^2", "t^3");
    wrong.factor = P("y^2-x^5");
    CHECK_THROWS_AS(resolve_branch(wrong, K), input_error); // factor does not vanish
}

TEST_CASE("expand_curve examples") {
    Field K(0);
    CurveSpec spec;
    spec.field = K;
    spec.branches = {param_branch(K, "t", "t"), param_branch(K, "t", "-t"),
                     param_branch(K, "t", "t^2")};
    std::vector<ResolvedBranch> rb;
    for (const auto& b : spec.branches) rb.push_back(resolve_branch(b, K));
    PairwiseI0 i0 = pairwise_i0(spec, rb);
    CHECK(i0.value[0][1] == 1);
    CHECK(i0.value[0][2] == 1);
    CHECK(i0.value[1][2] == 1);
    ExpandedCurve ex = expand_curve(rb, i0);
    CHECK(ex.exact);
    // (y-x)(y+x)(y-x^2), up to normalization of each factor
    CHECK(ex.poly.same_terms(P("y^3-x^2*y-x^2*y^2+x^4")));

    // branches {x, y^2+x^3}: product x*y^2 + x^4. Over Q the second branch has
    // no normalized parametrization, so it enters through its semigroup.
    CurveSpec spec2;
    spec2.field = K;
    spec2.branches = {param_branch(K, "0", "t"), BranchSpec{}};
    spec2.branches[1].semigroup_gens = std::vector<std::int64_t>{2, 3};
    spec2.branches[1].factor = P("y^2+x^3");
    std::vector<ResolvedBranch> rb2;
    for (const auto& b : spec2.branches) rb2.push_back(resolve_branch(b, K));
    PairwiseI0 i02 = pairwise_i0(spec2, rb2);
    CHECK(i02.value[0][1] == 2);
    ExpandedCurve ex2 = expand_curve(rb2, i02);
    CHECK(ex2.poly.same_terms(P("x*y^2+x^4")));

    // Duplicate branches are rejected.
    CurveSpec dup;
    dup.field = K;
    dup.branches = {param_branch(K, "t", "t"), param_branch(K, "t", "t")};
    std::vector<ResolvedBranch> rbd;
    for (const auto& b : dup.branches) rbd.push_back(resolve_branch(b, K));
    PairwiseI0 fake;
    fake.value = {{0, 1}, {1, 0}};
    fake.provenance = {{"", "user"}, {"user", ""}};
    CHECK_THROWS_AS(expand_curve(rbd, fake), input_error);
}

TEST_CASE("mu_bar_curve examples") {
    Field K(0);
    auto mk = [&](std::vector<BranchSpec> branches) {
        CurveSpec spec;
        spec.field = K;
        spec.branches = std::move(branches);
        std::vector<ResolvedBranch> rb;
        for (const auto& b : spec.branches) rb.push_back(resolve_branch(b, K));
        PairwiseI0 i0 = pairwise_i0(spec, rb);
        return mu_bar_curve(rb, i0);
    };
    CHECK(mk({param_branch(K, "t", "t"), param_branch(K, "t", "-t"),
              param_branch(K, "t", "t^2")}) == 4);
    CHECK(mk({param_branch(K, "t", "t"), param_branch(K, "t", "t+t^2")}) == 3);
    BranchSpec cusp;
    cusp.semigroup_gens = std::vector<std::int64_t>{2, 3};
    cusp.factor = P("y^2+x^3");
    CHECK(mk({param_branch(K, "0", "t"), cusp}) == 5);
}

TEST_CASE("verify_theorem worked curves") {
    Field K(0);
    // Three pairwise-transverse smooth branches.
    CurveSpec spec1;
    spec1.id = "three-lines";
    spec1.field = K;
    spec1.branches = {param_branch(K, "t", "t"), param_branch(K, "t", "-t"),
                      param_branch(K, "t", "t^2")};
    VerificationReport r1 = verify_theorem(spec1);
    CHECK(r1.mu_bar == 4);
    CHECK(r1.mu_N == 4);
    CHECK(r1.r_f == 3);
    CHECK(r1.r_N == 3);
    CHECK(r1.nondegenerate);
    CHECK(r1.all_passed());
    REQUIRE(r1.milnor.has_value());
    CHECK(*r1.milnor == 4);

    // Two tangent smooth branches: strict inequality, degenerate.
    CurveSpec spec2;
    spec2.id = "tangent-pair";
    spec2.field = K;
    spec2.branches = {param_branch(K, "t", "t"), param_branch(K, "t", "t+t^2")};
    VerificationReport r2 = verify_theorem(spec2);
    CHECK(r2.mu_bar == 3);
    CHECK(r2.mu_N == 1);
    CHECK(r2.r_f == 2);
    CHECK(r2.r_N == 2);
    CHECK(!r2.nondegenerate);
    CHECK(r2.all_passed());
    CHECK(r2.delta_f == Rat(2));
    CHECK(r2.delta_N == Rat(1));

    // char-2 cusp via its semigroup: non-degenerate, not strongly; mu infinite.
    CurveSpec spec3;
    spec3.id = "char2-cusp";
    spec3.field = Field(2);
    BranchSpec b;
    b.semigroup_gens = std::vector<std::int64_t>{2, 3};
    b.factor = P("x^2+y^3", 2);
    spec3.branches = {b};
    VerificationReport r3 = verify_theorem(spec3);
    CHECK(r3.mu_bar == 2);
    CHECK(r3.mu_N == 2);
    CHECK(r3.r_f == 1);
    CHECK(r3.r_N == 1);
    CHECK(r3.nondegenerate);
    CHECK(!r3.strongly_nondegenerate);
    CHECK(r3.milnor_infinite);
    CHECK(r3.all_passed());
    // Melle-Wall and tameness are skipped, not passed.
    for (const auto& c : r3.checks)
        if (c.name.rfind("melle_wall", 0) == 0 || c.name.rfind("tameness", 0) == 0)
            CHECK(c.status == CheckStatus::skipped);
}

TEST_CASE("corpus generation is deterministic and tame") {
    auto c1 = generate_corpus(12345, 40, {0, 2, 3, 5, 7});
    auto c2 = generate_corpus(12345, 40, {0, 2, 3, 5, 7});
    REQUIRE(c1.size() == c2.size());
    for (std::size_t i = 0; i < c1.size(); ++i)
        CHECK(curve_spec_to_json(c1[i]) == curve_spec_to_json(c2[i]));
    auto c3 = generate_corpus(99, 40, {0, 2, 3, 5, 7});
    bool differs = false;
    for (std::size_t i = 0; i < std::min(c1.size(), c3.size()); ++i)
        if (curve_spec_to_json(c1[i]) != curve_spec_to_json(c3[i])) differs = true;
    CHECK(differs);

    // Tameness: no parametrized branch with ord x divisible by the characteristic.
    for (const auto& spec : c3) {
        const std::uint64_t p = spec.field.characteristic();
        if (p == 0) continue;
        for (const auto& br : spec.branches) {
            if (!br.xt || br.xt->is_zero()) continue;
            CHECK(br.xt->order() % static_cast<std::int64_t>(p) != 0);
        }
    }
}

TEST_CASE("verification reports are recomputable bit for bit") {
    auto corpus = generate_corpus(777, 8, {0, 3});
    for (const auto& spec : corpus) {
        json a = report_to_json(verify_theorem(spec));
        json b = report_to_json(verify_theorem(spec));
        CHECK(a == b);
        // The recorded lhs/rhs reproduce each pass flag.
        for (const auto& jc : a["checks"]) {
            if (jc["status"] == "skipped") continue;
            const std::int64_t lhs = jc["lhs"], rhs = jc["rhs"];
            const bool ok = jc["relation"] == ">=" ? lhs >= rhs : lhs == rhs;
            CHECK(ok == (jc["status"] == "pass"));
        }
    }
}

TEST_CASE("doubling the truncation bound never changes the checks") {
    auto corpus = generate_corpus(4242, 10, {0, 2, 5});
    for (const auto& spec : corpus) {
        VerificationReport a = verify_theorem(spec);
        VerificationReport b = verify_theorem(spec, 2 * a.expansion_bound);
        REQUIRE(a.checks.size() == b.checks.size());
        for (std::size_t i = 0; i < a.checks.size(); ++i) {
            CHECK(a.checks[i].name == b.checks[i].name);
            CHECK(a.checks[i].status == b.checks[i].status);
        }
    }
}

TEST_CASE("curve spec JSON round-trip") {
    auto corpus = generate_corpus(31337, 12, {0, 2, 7});
    for (const auto& spec : corpus) {
        json j = curve_spec_to_json(spec);
        CurveSpec back = curve_spec_from_json(j);
        CHECK(curve_spec_to_json(back) == j);
    }
    // Abstract branch with i0 matrix.
    json j = json::parse(R"({
        "id": "two-cusps",
        "char": 2,
        "branches": [
            {"semigroup": [2,3], "factor": "x^2+y^3"},
            {"x": "t", "y": "t^2"}
        ],
        "i0": [[0,2],[2,0]]
    })");
    CurveSpec spec = curve_spec_from_json(j);
    CHECK(spec.field.characteristic() == 2);
    REQUIRE(spec.branches.size() == 2);
    VerificationReport rep = verify_theorem(spec);
    CHECK(rep.i0.provenance[0][1] == "user");
    CHECK(rep.all_passed());
}

TEST_CASE("corollary 2.6 on corpus branches: non-degenerate irreducible implies coprime bidegree") {
    auto corpus = generate_corpus(2024, 60, {0, 2, 3, 5, 7});
    int convenient_branches = 0;
    for (const auto& spec : corpus) {
        for (const auto& br : spec.branches) {
            ResolvedBranch rb = resolve_branch(br, spec.field);
            NewtonPolygon n = newton_polygon(rb.factor);
            if (!n.is_convenient() || n.edges.size() != 1) continue;
            ++convenient_branches;
            if (is_nondegenerate(rb.factor)) {
                const Edge& S = n.edges[0];
                CHECK(std::gcd(S.h(), S.v()) == 1);
            }
        }
    }
    CHECK(convenient_branches > 50);
}
