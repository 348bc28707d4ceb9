#include "nps/newton.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

namespace nps {

Edge::Edge(Exp2 s, Exp2 e) : start(s), end(e) {
    if (s.a < 0 || s.b < 0 || e.a < 0 || e.b < 0)
        throw input_error("edge endpoints must lie in N^2");
    if (!(s.a < e.a && e.b < s.b))
        throw input_error("invalid Newton edge orientation");
}

std::int64_t Edge::lattice_length() const { return std::gcd(h(), v()); }

EdgeMeasures edge_measures(const Edge& s) { return {s.h(), s.v(), s.lattice_length()}; }

std::int64_t bracket(const Edge& s, const Edge& t) {
    const Int a = Int(s.h()) * t.v();
    const Int b = Int(s.v()) * t.h();
    Int m = std::min(a, b);
    if (m > Int(std::numeric_limits<std::int64_t>::max()))
        throw input_error("bracket overflow");
    return m.convert_to<std::int64_t>();
}

NewtonPolygon newton_polygon(const Poly& f) {
    if (f.is_zero()) {
        if (f.truncation())
            throw indeterminate_error("polygon indeterminate: series is zero up to its truncation");
        throw input_error("Newton polygon of the zero polynomial");
    }
    NewtonPolygon n;
    auto split = f.extract_monomial();
    n.k = split.d1;
    n.l = split.d2;

    // Column minima of the support, by alpha ascending.
    std::map<std::int64_t, std::int64_t> colmin;
    for (const auto& [e, c] : f.terms()) {
        auto it = colmin.find(e.a);
        if (it == colmin.end() || e.b < it->second) colmin[e.a] = e.b;
    }
    std::vector<Exp2> pts;
    pts.reserve(colmin.size());
    for (auto& [a, b] : colmin) pts.push_back({a, b});

    // Lower-left monotone chain; collinear interior points are dropped.
    std::vector<Exp2> ch;
    for (const Exp2& p : pts) {
        while (ch.size() >= 2) {
            const Exp2& u = ch[ch.size() - 2];
            const Exp2& v = ch[ch.size() - 1];
            const Int cross = Int(v.a - u.a) * (p.b - u.b) - Int(v.b - u.b) * (p.a - u.a);
            if (cross <= 0)
                ch.pop_back();
            else
                break;
        }
        ch.push_back(p);
    }
    // Keep only the compact (strictly descending) prefix of the chain.
    std::size_t cut = ch.size();
    for (std::size_t i = 0; i + 1 < ch.size(); ++i) {
        if (ch[i + 1].b >= ch[i].b) { cut = i + 1; break; }
    }
    ch.resize(cut);

    n.vertices = ch;
    for (std::size_t i = 0; i + 1 < ch.size(); ++i) n.edges.emplace_back(ch[i], ch[i + 1]);

    if (f.truncation() && !n.vertices.empty()) {
        const std::int64_t corner = n.vertices.back().a + n.vertices.front().b;
        if (*f.truncation() <= corner + 1)
            n.warnings.push_back("truncation bound " + std::to_string(*f.truncation()) +
                                 " is within 1 of the polygon bounding box; the polygon may be unstable");
    }
    return n;
}

PolygonMeasures polygon_measures(const NewtonPolygon& n) {
    PolygonMeasures m{0, 0, 0, 0};
    for (const Edge& s : n.edges) {
        m.h_total += s.h();
        m.v_total += s.v();
        m.r_N += s.lattice_length();
    }
    for (const Edge& s : n.edges)
        for (const Edge& t : n.edges) m.bracket_total += bracket(s, t);
    m.r_N += n.k + n.l;
    return m;
}

namespace {

bool on_segment(const Edge& e, std::int64_t a, std::int64_t b) {
    if (a < e.start.a || a > e.end.a) return false;
    if (b > e.start.b || b < e.end.b) return false;
    const Int cross = Int(e.end.a - e.start.a) * (b - e.start.b) -
                      Int(e.end.b - e.start.b) * (a - e.start.a);
    return cross == 0;
}

/// Height of the chain above abscissa a (exact rational), valid for
/// vertices.front().a <= a <= vertices.back().a.
Rat chain_height(const NewtonPolygon& n, std::int64_t a) {
    for (const Edge& e : n.edges) {
        if (a >= e.start.a && a <= e.end.a) {
            // beta = start.b - (a - start.a) * v/h
            return Rat(e.start.b) - Rat(Int(a - e.start.a) * e.v(), Int(e.h()));
        }
    }
    throw internal_error("chain_height: abscissa outside chain");
}

} // namespace

LatticeCounts lattice_counts(const NewtonPolygon& n) {
    LatticeCounts c{0, 0, 0};
    if (n.vertices.empty()) throw input_error("lattice counts of an empty polygon");
    if (!n.has_edges()) {
        c.on_polygon = 1; // the lone vertex
        return c;
    }
    const std::int64_t a_lo = n.vertices.front().a, a_hi = n.vertices.back().a;
    const std::int64_t b_hi = n.vertices.front().b;
    if (Int(a_hi + 1) * (b_hi + 1) > Int(100000000))
        throw input_error("lattice enumeration box too large");

    // Points on the chain, by enumeration over the bounding box.
    for (std::int64_t a = a_lo; a <= a_hi; ++a)
        for (std::int64_t b = n.vertices.back().b; b <= b_hi; ++b)
            for (const Edge& e : n.edges)
                if (on_segment(e, a, b)) { ++c.on_polygon; break; }

    // Points (i,j), i,j >= 1, lying on or below the chain.
    for (std::int64_t i = std::max<std::int64_t>(1, a_lo); i <= a_hi; ++i) {
        Rat h = chain_height(n, i);
        Int fl = numerator(h) / denominator(h); // exact floor for h >= 0
        std::int64_t top = fl.convert_to<std::int64_t>();
        if (top >= 1) c.below_not_on_axes += top;
    }

    // Shoelace of the loop: vertices, then the corner (k, l).
    std::vector<Exp2> loop = n.vertices;
    loop.push_back({n.k, n.l});
    Int twice = 0;
    for (std::size_t i = 0; i < loop.size(); ++i) {
        const Exp2& p = loop[i];
        const Exp2& q = loop[(i + 1) % loop.size()];
        twice += Int(p.a) * q.b - Int(q.a) * p.b;
    }
    if (twice < 0) twice = -twice;
    c.double_area = twice.convert_to<std::int64_t>();
    return c;
}

} // namespace nps
