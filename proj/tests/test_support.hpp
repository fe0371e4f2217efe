#pragma once

// Shared fixtures and independent oracles for the test suites. The oracles
// here deliberately avoid the library's own algorithms: cycle enumeration is
// done by permutation search and decompositions are validated by exhaustive
// combination search.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "revmc/revmc.hpp"

namespace support {

using revmc::Cycle;
using revmc::Int;
using revmc::IntMat;
using revmc::IntVec;
using revmc::StructureGraph;

// 4 vertices, edges {12,23,34,14,24}: two triangles sharing the edge 2-4.
inline StructureGraph running_example() {
    return revmc::build_graph({{"1", "2"}, {"2", "3"}, {"3", "4"}, {"1", "4"}, {"2", "4"}});
}

inline StructureGraph triangle() {
    return revmc::build_graph({{"1", "2"}, {"2", "3"}, {"1", "3"}});
}

inline StructureGraph square() { // C4
    return revmc::build_graph({{"1", "2"}, {"2", "3"}, {"3", "4"}, {"1", "4"}});
}

inline StructureGraph path3() {
    return revmc::build_graph({{"1", "2"}, {"2", "3"}});
}

inline StructureGraph complete4() {
    return revmc::build_graph(
        {{"1", "2"}, {"1", "3"}, {"1", "4"}, {"2", "3"}, {"2", "4"}, {"3", "4"}});
}

inline StructureGraph petersen() {
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({std::to_string(i), std::to_string((i + 1) % 5)});       // outer C5
        edges.push_back({std::to_string(i), std::to_string(i + 5)});             // spokes
        edges.push_back({std::to_string(i + 5), std::to_string((i + 2) % 5 + 5)}); // pentagram
    }
    return revmc::build_graph(edges);
}

inline StructureGraph grid3x3() {
    std::vector<std::pair<std::string, std::string>> edges;
    auto name = [](int r, int c) { return std::to_string(3 * r + c + 1); };
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            if (c + 1 < 3) edges.push_back({name(r, c), name(r, c + 1)});
            if (r + 1 < 3) edges.push_back({name(r, c), name(r + 1, c)});
        }
    return revmc::build_graph(edges);
}

// Canonical arc order of the running example:
// 1->2, 1->4, 2->3, 2->4, 3->4 | 2->1, 4->1, 3->2, 4->2, 4->3
inline IntVec z_omega_a() { return {1, -1, 0, 1, 0, -1, 1, 0, -1, 0}; }
inline IntVec z_omega_b() { return {0, 0, 1, -1, 1, 0, 0, -1, 1, -1}; }
inline IntVec z_omega_c() { return {1, -1, 1, 0, 1, -1, 1, -1, 0, -1}; }

inline Cycle omega_a() { return Cycle{{0, 1, 3}}; } // 1->2->4->1 (internal indices)
inline Cycle omega_b() { return Cycle{{1, 2, 3}}; } // 2->3->4->2
inline Cycle omega_c() { return Cycle{{0, 1, 2, 3}}; } // 1->2->3->4->1

// Cocycle rows of the full subset table, subsets ordered by cardinality then
// lexicographically, columns in canonical arc order.
inline IntMat full_cocycle_table() {
    return {
        {1, 1, 0, 0, 0, -1, -1, 0, 0, 0},    // {1}
        {-1, 0, 1, 1, 0, 1, 0, -1, -1, 0},   // {2}
        {0, 0, -1, 0, 1, 0, 0, 1, 0, -1},    // {3}
        {0, -1, 0, -1, -1, 0, 1, 0, 1, 1},   // {4}
        {0, 1, 1, 1, 0, 0, -1, -1, -1, 0},   // {1,2}
        {1, 1, -1, 0, 1, -1, -1, 1, 0, -1},  // {1,3}
        {1, 0, 0, -1, -1, -1, 0, 0, 1, 1},   // {1,4}
        {-1, 0, 0, 1, 1, 1, 0, 0, -1, -1},   // {2,3}
        {-1, -1, 1, 0, -1, 1, 1, -1, 0, 1},  // {2,4}
        {0, -1, -1, -1, 0, 0, 1, 1, 1, 0},   // {3,4}
        {0, 1, 0, 1, 1, 0, -1, 0, -1, -1},   // {1,2,3}
        {0, 0, 1, 0, -1, 0, 0, -1, 0, 1},    // {1,2,4}
        {1, 0, -1, -1, 0, -1, 0, 1, 1, 0},   // {1,3,4}
        {-1, -1, 0, 0, 0, 1, 1, 0, 0, 0},    // {2,3,4}
    };
}

// Rotation with P(1->2) = P(2->3) = P(3->1) = 0.6 and 0.2 backwards.
inline revmc::TransitionMatrix biased_three_cycle() {
    auto g = triangle();
    // rows over labels 1,2,3; diagonal 0.2
    std::vector<double> rows = {
        0.2, 0.6, 0.2,
        0.2, 0.2, 0.6,
        0.6, 0.2, 0.2,
    };
    return revmc::TransitionMatrix(g, rows);
}

// ---- independent oracles ----

// Brute-force enumeration of directed elementary circuits by permutation
// search: for every vertex subset, root at its smallest member and try every
// ordering of the rest.
inline std::vector<Cycle> brute_force_cycles(const StructureGraph& g,
                                             bool include_two_cycles) {
    const int n = g.num_vertices();
    std::vector<Cycle> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) verts.push_back(v);
        if (verts.size() < 2) continue;
        if (verts.size() == 2 && !include_two_cycles) continue;
        std::vector<int> rest(verts.begin() + 1, verts.end());
        std::sort(rest.begin(), rest.end());
        do {
            std::vector<int> seq{verts[0]};
            seq.insert(seq.end(), rest.begin(), rest.end());
            bool ok = true;
            for (size_t i = 0; i < seq.size() && ok; ++i)
                ok = g.has_edge(seq[i], seq[(i + 1) % seq.size()]);
            if (ok) out.push_back(Cycle{seq});
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Exhaustive search for nonnegative integer combinations of the given cycle
// vectors summing to z, with coefficients bounded by max_coeff. Returns true
// iff some combination reproduces z exactly.
inline bool combination_search(const StructureGraph& g, const std::vector<IntVec>& vectors,
                               const IntVec& z, Int max_coeff) {
    std::vector<Int> coeff(vectors.size(), 0);
    std::function<bool(size_t, IntVec)> rec = [&](size_t i, IntVec acc) -> bool {
        if (i == vectors.size()) return acc == z;
        for (Int c = 0; c <= max_coeff; ++c) {
            IntVec next = acc;
            for (size_t k = 0; k < next.size(); ++k) next[k] += c * vectors[i][k];
            if (rec(i + 1, next)) return true;
        }
        return false;
    };
    return rec(0, IntVec(z.size(), 0));
}

// Random q-reversible (generally non-reversible) matrix on a graph.
inline revmc::TransitionMatrix random_q_reversible(const StructureGraph& g,
                                                   revmc::Xoshiro256ss& rng) {
    std::vector<double> arcp(g.num_arcs());
    for (auto& x : arcp) x = 0.1 + 0.9 * rng.next_double();
    double max_row = 0.0;
    for (int v = 0; v < g.num_vertices(); ++v) {
        double row = 0.0;
        for (int w : g.neighbors(v)) row += arcp[g.arc_index(v, w)];
        max_row = std::max(max_row, row);
    }
    for (auto& x : arcp) x *= 0.9 / max_row;
    return revmc::transition_from_arcs(g, arcp);
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
    return m;
}

// proportionality gap between two positive vectors after normalizing each
inline double proportionality_gap(std::vector<double> a, std::vector<double> b) {
    double sa = 0.0, sb = 0.0;
    for (double x : a) sa += x;
    for (double x : b) sb += x;
    for (auto& x : a) x /= sa;
    for (auto& x : b) x /= sb;
    return max_abs_diff(a, b);
}

} // namespace support
