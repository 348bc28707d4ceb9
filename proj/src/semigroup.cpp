#include "nps/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace nps {

namespace {

std::vector<bool> membership_table(const std::vector<std::int64_t>& gens, std::int64_t bound) {
    std::vector<bool> in(static_cast<std::size_t>(bound) + 1, false);
    in[0] = true;
    for (std::int64_t v = 1; v <= bound; ++v) {
        for (std::int64_t gnr : gens) {
            if (gnr <= v && in[static_cast<std::size_t>(v - gnr)]) {
                in[static_cast<std::size_t>(v)] = true;
                break;
            }
        }
    }
    return in;
}

std::string join(const std::vector<std::int64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

} // namespace

bool Semigroup::contains(std::int64_t v) const {
    if (v < 0) return false;
    if (v >= conductor) return true;
    auto table = membership_table(generators, v);
    return table[static_cast<std::size_t>(v)];
}

Semigroup semigroup_from_generators(const std::vector<std::int64_t>& gens_in) {
    if (gens_in.empty()) throw input_error("empty generator list");
    for (std::int64_t v : gens_in)
        if (v <= 0) throw input_error("generators must be positive");
    std::vector<std::int64_t> gens = gens_in;
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    std::int64_t d = 0;
    for (std::int64_t v : gens) d = std::gcd(d, v);
    if (d != 1) throw input_error("generators must have gcd 1 (got gcd " + std::to_string(d) + ")");

    // Minimal system: drop any generator that is a sum of two nonzero elements.
    auto table = membership_table(gens, gens.back());
    std::vector<std::int64_t> mins;
    for (std::int64_t gnr : gens) {
        bool redundant = false;
        for (std::int64_t a = 1; a < gnr && !redundant; ++a)
            if (table[static_cast<std::size_t>(a)] && table[static_cast<std::size_t>(gnr - a)])
                redundant = true;
        if (!redundant) mins.push_back(gnr);
    }

    Semigroup s;
    s.generators = mins;
    s.e.resize(mins.size());
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < mins.size(); ++i) {
        acc = std::gcd(acc, mins[i]);
        s.e[i] = acc;
    }
    for (std::size_t i = 1; i < mins.size(); ++i) {
        if (s.e[i] >= s.e[i - 1])
            throw input_error("minimal system <" + join(mins) +
                              "> does not have strictly decreasing gcd sequence; not a plane-branch semigroup");
        s.n.push_back(s.e[i - 1] / s.e[i]);
    }

    std::int64_t c = 1 - mins[0];
    for (std::size_t k = 1; k < mins.size(); ++k) c += (s.n[k - 1] - 1) * mins[k];
    s.conductor = c;

    const std::int64_t by_gaps = conductor_by_gaps(s);
    if (by_gaps != s.conductor)
        throw input_error("conductor formula (" + std::to_string(s.conductor) +
                          ") disagrees with gap enumeration (" + std::to_string(by_gaps) +
                          ") for <" + join(mins) + ">; not a plane-branch semigroup");
    return s;
}

std::int64_t conductor_by_gaps(const Semigroup& s) {
    const std::int64_t v0 = s.generators.front();
    if (v0 == 1) return 0;
    std::int64_t bound = s.generators.front() * s.generators[1];
    for (int rounds = 0; rounds < 8; ++rounds) {
        auto table = membership_table(s.generators, bound);
        // Smallest c whose run of v0 consecutive members starts at c.
        std::int64_t run = 0;
        for (std::int64_t v = 0; v <= bound; ++v) {
            run = table[static_cast<std::size_t>(v)] ? run + 1 : 0;
            if (run == v0) return v - v0 + 1;
        }
        bound *= 2;
    }
    throw internal_error("conductor search did not terminate");
}

bool is_admissible(const Semigroup& s) {
    for (std::size_t k = 1; k + 1 < s.generators.size(); ++k)
        if (s.n[k - 1] * s.generators[k] >= s.generators[k + 1]) return false;
    return true;
}

std::vector<std::int64_t> puiseux_sequence(const Semigroup& s) {
    if (!is_admissible(s))
        throw input_error("semigroup <" + join(s.generators) +
                          "> is not admissible (needs n_k v_k < v_{k+1})");
    const auto& v = s.generators;
    std::vector<std::int64_t> b(v.size());
    b[0] = v[0];
    for (std::size_t k = 1; k < v.size(); ++k) {
        std::int64_t acc = v[k];
        for (std::size_t i = 1; i < k; ++i) acc -= (s.n[i - 1] - 1) * v[i];
        b[k] = acc;
    }
    // Sanity: b increasing, gcd prefix equals e, conductor identity.
    std::int64_t g = 0;
    for (std::size_t k = 0; k < b.size(); ++k) {
        if (k > 0 && b[k] <= b[k - 1])
            throw internal_error("Puiseux sequence not increasing");
        g = std::gcd(g, b[k]);
        if (g != s.e[k]) throw internal_error("Puiseux gcd chain mismatch");
    }
    std::int64_t c = 0;
    for (std::size_t k = 1; k < b.size(); ++k) c += (s.e[k - 1] - s.e[k]) * (b[k] - 1);
    if (c != s.conductor)
        throw internal_error("Puiseux conductor identity failed: " + std::to_string(c) +
                             " != " + std::to_string(s.conductor));
    return b;
}

CotaCheck cota_check(const Semigroup& s) {
    if (s.g() < 1) throw input_error("cota check needs at least two generators");
    const std::int64_t v0 = s.generators[0], v1 = s.generators[1];
    const std::int64_t d = std::gcd(v0, v1);
    CotaCheck r;
    r.bound_holds = s.conductor >= (v0 - 1) * (v1 - 1) + d - 1;
    r.equality_iff_coprime = (s.conductor == (v0 - 1) * (v1 - 1)) == (d == 1);
    return r;
}

std::int64_t mu_bar_branch(const Semigroup& s) { return s.conductor; }

} // namespace nps
