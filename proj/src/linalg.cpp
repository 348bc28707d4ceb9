#include "nps/linalg.hpp"

#include <algorithm>
#include <list>
#include <map>

namespace nps {

namespace {

/// Rank over F_p: plain row echelon with modular inverses; all machine ops.
std::size_t rank_prime_field(std::vector<Row>& m, const Field& field) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        const Coeff inv = m[rank][col].inv();
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][col].is_zero()) continue;
            const Coeff f = m[r][col] * inv;
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= m[rank][c] * f;
        }
        ++rank;
    }
    (void)field;
    return rank;
}

struct IntRow {
    std::vector<Int> v;
    std::size_t lead; // first nonzero index, or v.size()

    void find_lead(std::size_t from) {
        lead = from;
        while (lead < v.size() && v[lead].is_zero()) ++lead;
    }
    void strip_content() {
        Int g = 0;
        for (std::size_t i = lead; i < v.size(); ++i) {
            g = boost::multiprecision::gcd(g, v[i]);
            if (g == 1) return;
        }
        if (g.is_zero() || g == 1) return;
        for (std::size_t i = lead; i < v.size(); ++i) v[i] /= g;
    }
};

/// Rank over Q: rows are cleared to primitive integer vectors and reduced by
/// leading column; content is stripped after every combination so entries
/// stay near the size the structure forces.
std::size_t rank_rationals(const std::vector<Row>& m) {
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    std::list<IntRow> queue;
    for (const Row& r : m) {
        IntRow ir;
        ir.v.resize(cols);
        Int lcm = 1;
        for (const Coeff& c : r) lcm = boost::multiprecision::lcm(lcm, denominator(c.rat()));
        for (std::size_t i = 0; i < cols; ++i)
            ir.v[i] = numerator(r[i].rat() * Rat(lcm));
        ir.find_lead(0);
        if (ir.lead == cols) continue;
        ir.strip_content();
        queue.push_back(std::move(ir));
    }
    std::map<std::size_t, IntRow> pivots; // leading column -> reduced row
    while (!queue.empty()) {
        IntRow row = std::move(queue.front());
        queue.pop_front();
        while (row.lead < cols) {
            auto it = pivots.find(row.lead);
            if (it == pivots.end()) break;
            const IntRow& p = it->second;
            const Int a = p.v[p.lead], b = row.v[row.lead];
            const Int g = boost::multiprecision::gcd(a, b);
            const Int ca = a / g, cb = b / g;
            // row <- ca * row - cb * pivot
            for (std::size_t i = row.lead; i < cols; ++i)
                row.v[i] = row.v[i] * ca - p.v[i] * cb;
            row.find_lead(row.lead);
            if (row.lead < cols) row.strip_content();
        }
        if (row.lead < cols) pivots.emplace(row.lead, std::move(row));
    }
    return pivots.size();
}

} // namespace

std::size_t matrix_rank(std::vector<Row> m, const Field& field) {
    if (!field.is_rational()) return rank_prime_field(m, field);
    return rank_rationals(m);
}

Row kernel_vector(std::vector<Row> m, std::size_t cols, const Field& field,
                  std::size_t* kernel_dim_out) {
    // Gauss-Jordan to reduced row echelon form over the field.
    const std::size_t rows = m.size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && m[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        const Coeff inv = m[r][col].inv();
        for (std::size_t c = col; c < cols; ++c) m[r][c] *= inv;
        for (std::size_t rr = 0; rr < rows; ++rr) {
            if (rr == r || m[rr][col].is_zero()) continue;
            const Coeff f = m[rr][col];
            for (std::size_t c = col; c < cols; ++c) m[rr][c] -= m[r][c] * f;
        }
        pivot_col.push_back(col);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    if (kernel_dim_out) *kernel_dim_out = cols - pivot_col.size();
    // Free column -> kernel vector: v[free] = 1, v[pivot_col_i] = -m[i][free].
    std::size_t free_col = cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) { free_col = c; break; }
    if (free_col == cols) return {};
    Row v(cols, Coeff(field));
    v[free_col] = Coeff::from_int(field, 1);
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
        v[pivot_col[i]] = -m[i][free_col];
    return v;
}

} // namespace nps
