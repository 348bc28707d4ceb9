#include "nps/invariants.hpp"

#include <algorithm>

namespace nps {

std::string to_string(MuRoute r) {
    switch (r) {
        case MuRoute::convenient: return "convenient";
        case MuRoute::offset_x: return "offset_x";
        case MuRoute::offset_y: return "offset_y";
        case MuRoute::offset_xy: return "offset_xy";
        case MuRoute::stabilized_monomial: return "stabilized_monomial";
    }
    return "?";
}

std::int64_t mu_N_convenient(const NewtonPolygon& n) {
    if (!(n.k == 0 && n.l == 0))
        throw input_error("mu_N_convenient requires a convenient polygon (offsets are (" +
                          std::to_string(n.k) + "," + std::to_string(n.l) + "))");
    if (!n.has_edges()) throw input_error("mu_N_convenient requires at least one edge");
    PolygonMeasures m = polygon_measures(n);
    return m.bracket_total - m.h_total - m.v_total + 1;
}

std::int64_t mu_N_stabilized(const Poly& f) {
    if (f.is_zero()) throw input_error("mu_N of the zero series");
    if (f.order() < 1) throw input_error("mu_N requires order >= 1");
    Poly stored = f;
    stored.set_truncation(std::nullopt); // polygon is computed from stored terms
    const Coeff one = Coeff::from_int(f.field(), 1);
    auto value_at = [&](std::int64_t m) {
        Poly fm = stored;
        fm.add_term({m, 0}, one);
        fm.add_term({0, m}, one);
        return mu_N_convenient(newton_polygon(fm));
    };
    std::int64_t m = stored.total_degree() + 2;
    while (m <= (1 << 16)) {
        std::int64_t a = value_at(m);
        std::int64_t b = value_at(m + 1);
        if (a == b) return a;
        m *= 2;
    }
    throw indeterminate_error("mu_N did not stabilize within the search window (m <= 2^16)");
}

std::int64_t mu_N_general(const Poly& f) {
    MuRoute r;
    return mu_N_general(f, r);
}

std::int64_t mu_N_general(const Poly& f, MuRoute& route_out) {
    if (f.is_zero()) throw input_error("mu_N of the zero series");
    auto split = f.extract_monomial();
    if (split.d1 >= 2 || split.d2 >= 2)
        throw input_error("monomial part x^" + std::to_string(split.d1) + " y^" +
                          std::to_string(split.d2) + " is not reduced");
    if (!split.cofactor.coeff({0, 0}).is_zero()) {
        // Pure monomial up to a unit; the closed formulas assume g(0,0) = 0.
        route_out = MuRoute::stabilized_monomial;
        return mu_N_stabilized(f);
    }
    NewtonPolygon n = newton_polygon(f);
    PolygonMeasures m = polygon_measures(n);
    if (split.d1 == 0 && split.d2 == 0) {
        route_out = MuRoute::convenient;
        return m.bracket_total - m.h_total - m.v_total + 1;
    }
    if (split.d1 == 1 && split.d2 == 0) {
        route_out = MuRoute::offset_x;
        return m.bracket_total - m.h_total + m.v_total;
    }
    if (split.d1 == 0 && split.d2 == 1) {
        route_out = MuRoute::offset_y;
        return m.bracket_total + m.h_total - m.v_total;
    }
    route_out = MuRoute::offset_xy;
    return m.bracket_total + m.h_total + m.v_total + 1;
}

namespace {

Rat rat_of(std::int64_t v) { return Rat(v); }

struct ChainCrossings {
    Rat m1; // abscissa on beta = 1
    Rat n1; // ordinate on alpha = 1
};

/// Intersections of the supporting chain with the lines beta = 1, alpha = 1.
/// When the chain does not reach a line, it is extended along its extremal
/// edge's supporting line.
ChainCrossings crossings(const NewtonPolygon& n) {
    ChainCrossings c{Rat(0), Rat(0)};
    // beta = 1: walk edges for a crossing; otherwise extend the last edge.
    const Edge* hit = nullptr;
    for (const Edge& e : n.edges)
        if (e.start.b >= 1 && e.end.b <= 1) { hit = &e; break; }
    const Edge& eb = hit ? *hit : n.edges.back();
    c.m1 = rat_of(eb.start.a) + Rat(Int(eb.start.b - 1) * eb.h(), Int(eb.v()));
    // alpha = 1
    hit = nullptr;
    for (const Edge& e : n.edges)
        if (e.start.a <= 1 && e.end.a >= 1) { hit = &e; break; }
    const Edge& ea = hit ? *hit : n.edges.front();
    c.n1 = rat_of(ea.start.b) - Rat(Int(1 - ea.start.a) * ea.v(), Int(ea.h()));
    return c;
}

} // namespace

std::int64_t mu_N_lenarcik(const Poly& f) {
    if (f.is_zero()) throw input_error("mu_N of the zero series");
    if (f.order() < 2) throw input_error("the Lenarcik formula requires order >= 2");
    auto split = f.extract_monomial();
    if (split.d1 >= 2 || split.d2 >= 2) throw input_error("monomial part is not reduced");
    NewtonPolygon n = newton_polygon(f);
    if (!n.has_edges()) {
        // Single vertex; order >= 2 and reduced leaves only x*y.
        if (n.k == 1 && n.l == 1) return 1;
        throw input_error("degenerate polygon is not that of a reduced series of order >= 2");
    }
    ChainCrossings c = crossings(n);
    // Closed loop: (1,1) -> (1,n1) -> chain vertices with both coords > 1 -> (m1,1).
    std::vector<std::pair<Rat, Rat>> loop;
    loop.emplace_back(Rat(1), Rat(1));
    loop.emplace_back(Rat(1), c.n1);
    for (const Exp2& v : n.vertices)
        if (v.a > 1 && v.b > 1) loop.emplace_back(rat_of(v.a), rat_of(v.b));
    loop.emplace_back(c.m1, Rat(1));
    Rat twice(0);
    for (std::size_t i = 0; i < loop.size(); ++i) {
        const auto& p = loop[i];
        const auto& q = loop[(i + 1) % loop.size()];
        twice += p.first * q.second - q.first * p.second;
    }
    if (twice < 0) twice = -twice;
    Rat mu = twice + c.m1 + c.n1 - 1;
    if (denominator(mu) != 1)
        throw internal_error("Lenarcik value is not an integer: " + mu.str());
    return numerator(mu).convert_to<std::int64_t>();
}

PolygonInvariants invariants_bundle(const Poly& f) {
    MuRoute route;
    const std::int64_t mu = mu_N_general(f, route);
    NewtonPolygon n = newton_polygon(f);
    PolygonMeasures m = polygon_measures(n);
    PolygonInvariants inv{mu, Rat(0), m.r_N, route};
    inv.delta_N = Rat(Int(mu) + m.r_N - 1, Int(2));

    if (n.is_convenient() && n.has_edges()) {
        LatticeCounts lc = lattice_counts(n);
        if (lc.double_area != m.bracket_total)
            throw internal_error("[N,N] disagrees with the shoelace area");
        if (mu != lc.double_area - m.h_total - m.v_total + 1)
            throw internal_error("mu_N disagrees with the Pick route");
        if (m.r_N != lc.on_polygon - 1)
            throw internal_error("r_N disagrees with the lattice-point count");
        if (inv.delta_N != Rat(lc.below_not_on_axes))
            throw internal_error("delta_N disagrees with the lattice-point count");
    }
    return inv;
}

} // namespace nps
