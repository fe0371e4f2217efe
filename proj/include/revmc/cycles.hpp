#pragma once

// Directed elementary cycles of the doubled digraph, cycle vectors, the
// integer lattice basis of ker A, and the conformal (Graver) machinery.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <optional>
#include <vector>

#include "revmc/graph.hpp"
#include "revmc/intmat.hpp"

namespace revmc {

inline constexpr size_t kDefaultCycleCap = 1'000'000;

// A directed elementary circuit, stored as its canonical representative:
// the vertex sequence rotated so the smallest vertex comes first.
struct Cycle {
    std::vector<int> verts; // v0 v1 ... v_{k-1}, closing arc v_{k-1} -> v0

    int length() const { return static_cast<int>(verts.size()); }
    bool is_two_cycle() const { return verts.size() == 2; }

    Cycle reversed() const {
        Cycle r{verts};
        std::reverse(r.verts.begin() + 1, r.verts.end());
        return r;
    }
    std::vector<std::pair<int, int>> arc_pairs() const {
        std::vector<std::pair<int, int>> a;
        for (size_t i = 0; i < verts.size(); ++i)
            a.emplace_back(verts[i], verts[(i + 1) % verts.size()]);
        return a;
    }
    bool operator==(const Cycle& o) const { return verts == o.verts; }
    bool operator<(const Cycle& o) const {
        if (verts.size() != o.verts.size()) return verts.size() < o.verts.size();
        return verts < o.verts;
    }
};

namespace detail {

// Rooted DFS enumeration of directed elementary circuits: for each start
// vertex s in increasing order, walk only through vertices > s, closing back
// to s. Every circuit is found exactly once, rooted at its smallest vertex,
// so the emitted sequence is already the canonical rotation.
template <typename ArcFilter>
inline void enumerate_cycles_impl(const StructureGraph& g, bool include_two_cycles,
                                  size_t cap, const ArcFilter& arc_ok,
                                  std::vector<Cycle>& out) {
    const int n = g.num_vertices();
    std::vector<char> on_path(n, 0);
    std::vector<int> path;

    std::function<void(int, int)> dfs = [&](int s, int v) {
        for (int w : g.neighbors(v)) {
            if (w < s || on_path[w]) {
                if (w == s && path.size() >= 2 && arc_ok(g.arc_index(v, s))) {
                    if (path.size() > 2 || include_two_cycles) {
                        if (out.size() >= cap)
                            throw CycleCapExceededError("cycle enumeration cap exceeded");
                        out.push_back(Cycle{path});
                    }
                }
                continue;
            }
            if (!arc_ok(g.arc_index(v, w))) continue;
            on_path[w] = 1;
            path.push_back(w);
            dfs(s, w);
            path.pop_back();
            on_path[w] = 0;
        }
    };

    for (int s = 0; s < n; ++s) {
        on_path[s] = 1;
        path = {s};
        dfs(s, s);
        on_path[s] = 0;
    }
    std::sort(out.begin(), out.end());
}

} // namespace detail

inline std::vector<Cycle> enumerate_cycles(const StructureGraph& g,
                                           bool include_two_cycles = false,
                                           size_t cap = kDefaultCycleCap) {
    std::vector<Cycle> out;
    detail::enumerate_cycles_impl(g, include_two_cycles, cap,
                                  [](int) { return true; }, out);
    return out;
}

// z_a = N_a(c) - N_{r(a)}(c): +1 on arcs of the cycle, -1 on their reversals.
// A 2-cycle traverses both directions of its edge, so its vector is zero.
inline IntVec cycle_vector(const StructureGraph& g, const Cycle& c) {
    IntVec z(g.num_arcs(), 0);
    for (auto [v, w] : c.arc_pairs()) {
        int a = g.arc_index(v, w);
        if (a < 0) throw ParseError("cycle uses a non-arc " + g.label(v) + "->" + g.label(w));
        z[a] += 1;
        z[g.reverse_arc(a)] -= 1;
    }
    return z;
}

inline IntVec positive_part(const IntVec& z) {
    IntVec p(z.size(), 0);
    for (size_t i = 0; i < z.size(); ++i) p[i] = z[i] > 0 ? z[i] : 0;
    return p;
}
inline IntVec negative_part(const IntVec& z) {
    IntVec p(z.size(), 0);
    for (size_t i = 0; i < z.size(); ++i) p[i] = z[i] < 0 ? -z[i] : 0;
    return p;
}

// Integer lattice basis of ker A, in row Hermite normal form for determinism.
inline IntMat lattice_basis(const ModelMatrix& m) {
    return hermite_normal_form(integer_echelon(m.stacked()).kernel);
}

inline bool in_kernel(const ModelMatrix& m, const IntVec& z) {
    if (static_cast<int>(z.size()) != m.cols())
        throw DimensionMismatchError("kernel membership: wrong vector length");
    return is_zero(mat_vec(m.stacked(), z));
}

// z1 conformal to z2: componentwise same sign and |z1| <= |z2|.
inline bool is_conformal(const IntVec& z1, const IntVec& z2) {
    if (z1.size() != z2.size())
        throw DimensionMismatchError("conformality: vectors of different length");
    for (size_t i = 0; i < z1.size(); ++i) {
        if (z1[i] * z2[i] < 0) return false;
        if (std::llabs(z1[i]) > std::llabs(z2[i])) return false;
    }
    return true;
}

struct CycleMultiple {
    Cycle cycle;
    Int multiplicity; // > 0
};

// Peel directed cycles off the positive support of z: find the
// lexicographically smallest canonical cycle inside {a : z_a > 0}, subtract
// the largest multiple keeping the residual nonnegative, repeat. Failure to
// find a cycle on a nonzero residual means z was not in ker A.
inline std::vector<CycleMultiple> conformal_decompose(const StructureGraph& g, IntVec z,
                                                      size_t cap = kDefaultCycleCap) {
    if (static_cast<int>(z.size()) != g.num_arcs())
        throw DimensionMismatchError("conformal_decompose: wrong vector length");
    for (int a = 0; a < g.num_arcs(); ++a)
        if (z[a] != -z[g.reverse_arc(a)])
            throw NotInKernelError("vector is not antisymmetric under arc reversal");

    std::vector<CycleMultiple> parts;
    while (!is_zero(z)) {
        std::vector<Cycle> found;
        detail::enumerate_cycles_impl(g, false, cap,
                                      [&](int a) { return z[a] > 0; }, found);
        if (found.empty())
            throw NotInKernelError("no directed cycle in the positive support: z is not in ker A");
        const Cycle& c = found.front(); // lexicographically smallest canonical cycle
        Int alpha = 0;
        for (auto [v, w] : c.arc_pairs()) {
            Int za = z[g.arc_index(v, w)];
            alpha = alpha == 0 ? za : std::min(alpha, za);
        }
        for (auto [v, w] : c.arc_pairs()) {
            int a = g.arc_index(v, w);
            z[a] -= alpha;
            z[g.reverse_arc(a)] += alpha;
        }
        parts.push_back({c, alpha});
    }
    return parts;
}

// The Graver basis of the cycle lattice: all non-2-cycle cycle vectors.
inline IntMat graver_basis(const StructureGraph& g, size_t cap = kDefaultCycleCap) {
    IntMat basis;
    for (const Cycle& c : enumerate_cycles(g, false, cap))
        basis.push_back(cycle_vector(g, c));
    std::sort(basis.begin(), basis.end());
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
    return basis;
}

// True iff no element is conformally dominated by a distinct element and a
// bounded brute-force search over kernel elements (entries up to the basis's
// max absolute entry) finds no conformally smaller kernel element missing
// from the basis. Exploits antisymmetry: only forward-arc entries are free.
inline bool verify_graver_minimality(const StructureGraph& g, const ModelMatrix& m,
                                     const IntMat& basis) {
    if (basis.size() > 10'000)
        throw InstanceTooLargeError("minimality check limited to 10^4 elements");
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j)
            if (i != j && basis[i] == basis[j]) return false;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j)
            if (i != j && is_conformal(basis[i], basis[j])) return false;

    Int bound = 0;
    for (const auto& v : basis)
        for (Int x : v) bound = std::max(bound, std::llabs(x));
    const int mfw = g.num_edges();
    const double states = std::pow(2.0 * bound + 1.0, mfw);
    if (states > 5e7)
        throw InstanceTooLargeError("minimality brute force too large");

    IntVec z(g.num_arcs(), 0);
    std::function<bool(int)> scan = [&](int e) -> bool {
        if (e == mfw) {
            if (is_zero(z) || !in_kernel(m, z)) return true;
            // every bounded kernel element must conformally dominate a basis element
            bool dominated = false;
            for (const auto& b : basis)
                if (is_conformal(b, z)) { dominated = true; break; }
            if (!dominated) return false;
            // and nothing strictly below a basis element may be a kernel element
            for (const auto& b : basis)
                if (z != b && is_conformal(z, b) &&
                    std::find(basis.begin(), basis.end(), z) == basis.end())
                    return false;
            return true;
        }
        for (Int x = -bound; x <= bound; ++x) {
            z[e] = x;
            z[e + mfw] = -x;
            if (!scan(e + 1)) return false;
        }
        z[e] = z[e + mfw] = 0;
        return true;
    };
    return scan(0);
}

} // namespace revmc
