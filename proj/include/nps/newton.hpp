#ifndef NPS_NEWTON_HPP
#define NPS_NEWTON_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "nps/poly.hpp"

namespace nps {

/// Compact 1-face of a Newton diagram: endpoints in N^2 with
/// start.a < end.a and end.b < start.b.
struct Edge {
    Exp2 start;
    Exp2 end;

    Edge(Exp2 s, Exp2 e);

    std::int64_t h() const { return end.a - start.a; }   // |S|_1
    std::int64_t v() const { return start.b - end.b; }   // |S|_2
    std::int64_t lattice_length() const;                 // r(S) = gcd(|S|_1, |S|_2)

    friend bool operator==(const Edge& a, const Edge& b) {
        return a.start == b.start && a.end == b.end;
    }
};

struct EdgeMeasures {
    std::int64_t h;
    std::int64_t v;
    std::int64_t r;
    friend bool operator==(const EdgeMeasures&, const EdgeMeasures&) = default;
};

EdgeMeasures edge_measures(const Edge& s);

/// [S,T] = min(|S|_1 |T|_2, |S|_2 |T|_1); symmetric.
std::int64_t bracket(const Edge& s, const Edge& t);

/// The compact boundary faces of the Newton diagram of f, together with
/// the axis offsets (k, l) of the maximal dividing monomial x^k y^l.
/// `vertices` runs from the top-left vertex to the bottom-right one; edge
/// slopes -|S|_2/|S|_1 strictly increase along the chain. A monomial (times
/// a unit) has no edges and a single vertex (k, l).
struct NewtonPolygon {
    std::vector<Exp2> vertices;
    std::vector<Edge> edges;
    std::int64_t k = 0;
    std::int64_t l = 0;
    std::vector<std::string> warnings;

    bool has_edges() const { return !edges.empty(); }
    /// Convenient inputs touch both axes: offsets (0,0) and at least a vertex.
    bool is_convenient() const { return k == 0 && l == 0 && !vertices.empty(); }

    friend bool operator==(const NewtonPolygon& a, const NewtonPolygon& b) {
        return a.vertices == b.vertices && a.edges == b.edges && a.k == b.k && a.l == b.l;
    }
};

NewtonPolygon newton_polygon(const Poly& f);

struct PolygonMeasures {
    std::int64_t h_total;       // |N|_1
    std::int64_t v_total;       // |N|_2
    std::int64_t bracket_total; // [N,N], summed over ordered pairs incl. S=T
    std::int64_t r_N;           // sum r(S) + k + l
    friend bool operator==(const PolygonMeasures&, const PolygonMeasures&) = default;
};

PolygonMeasures polygon_measures(const NewtonPolygon& n);

struct LatticeCounts {
    std::int64_t on_polygon;         // lattice points on the edge chain (or the lone vertex)
    std::int64_t below_not_on_axes;  // points (i,j), i,j >= 1, on or under the chain
    std::int64_t double_area;        // 2 * area between the chain and the lines x=k, y=l
    friend bool operator==(const LatticeCounts&, const LatticeCounts&) = default;
};

LatticeCounts lattice_counts(const NewtonPolygon& n);

} // namespace nps

#endif
