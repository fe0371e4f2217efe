#pragma once

// Numeric Markov-chain utilities: invariant distribution, symmetrization,
// spectral checks, chain simulation, and the empirical 2-reversibility test.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "revmc/graph.hpp"
#include "revmc/parameterization.hpp"
#include "revmc/transition.hpp"

namespace revmc {

// Portable RNG so chain goldens are platform-stable: xoshiro256** seeded
// through splitmix64.
class Xoshiro256ss {
public:
    explicit Xoshiro256ss(uint64_t seed) {
        uint64_t x = seed;
        for (auto& word : s_) {
            x += 0x9e3779b97f4a7c15ull;
            uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
            word = z ^ (z >> 31);
        }
    }

    uint64_t next() {
        auto rotl = [](uint64_t v, int k) { return (v << k) | (v >> (64 - k)); };
        const uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // uniform double in [0, 1)
    double next_double() { return (next() >> 11) * 0x1.0p-53; }

    static const char* name() { return "xoshiro256**"; }

private:
    uint64_t s_[4];
};

struct ChainPath {
    std::vector<int> states; // internal vertex indices
    uint64_t seed = 0;
    std::string rng = Xoshiro256ss::name();
};

namespace detail {

inline void require_irreducible(const TransitionMatrix& p) {
    const StructureGraph& g = p.graph();
    const int n = g.num_vertices();
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (!seen[w] && p(v, w) > 0.0) { seen[w] = 1; stack.push_back(w); }
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v]) throw ReducibleError("chain is reducible on its support");
    // with q-reversible support, forward reachability plus the symmetric zero
    // pattern gives strong connectivity; asymmetric patterns need both sweeps
    std::fill(seen.begin(), seen.end(), 0);
    seen[0] = 1;
    stack = {0};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (!seen[w] && p(w, v) > 0.0) { seen[w] = 1; stack.push_back(w); }
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v]) throw ReducibleError("chain is reducible on its support");
}

} // namespace detail

// Unique invariant probability: direct linear solve of pi^t P = pi^t with the
// normalization sum pi = 1 for moderate sizes, power iteration above.
inline std::vector<double> invariant_distribution(const TransitionMatrix& p) {
    detail::require_irreducible(p);
    const int n = p.size();
    if (n <= 2000) {
        Eigen::MatrixXd m(n + 1, n);
        Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n + 1);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) m(j, i) = p(i, j) - (i == j ? 1.0 : 0.0);
        for (int i = 0; i < n; ++i) m(n, i) = 1.0;
        rhs(n) = 1.0;
        Eigen::VectorXd pi = m.colPivHouseholderQr().solve(rhs);
        std::vector<double> out(n);
        double total = 0.0;
        for (int i = 0; i < n; ++i) total += pi(i);
        for (int i = 0; i < n; ++i) out[i] = pi(i) / total;
        return out;
    }
    std::vector<double> pi(n, 1.0 / n), next(n);
    for (int iter = 0; iter < 100000; ++iter) {
        std::fill(next.begin(), next.end(), 0.0);
        for (int v = 0; v < n; ++v) {
            next[v] += pi[v] * p(v, v);
            for (int w : p.graph().neighbors(v)) next[w] += pi[v] * p(v, w);
        }
        double delta = 0.0;
        for (int v = 0; v < n; ++v) delta = std::max(delta, std::fabs(next[v] - pi[v]));
        pi.swap(next);
        if (delta < 1e-15) break;
    }
    return pi;
}

// S = diag(pi)^{1/2} P diag(pi)^{-1/2}; symmetric iff P reversible wrt pi.
inline std::vector<double> symmetrize(const TransitionMatrix& p,
                                      const std::vector<double>& pi) {
    const int n = p.size();
    if (static_cast<int>(pi.size()) != n)
        throw DimensionMismatchError("pi has wrong length");
    for (double x : pi)
        if (!(x > 0.0)) throw NonpositivePiError("pi must be strictly positive");
    std::vector<double> s(n * n, 0.0);
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            s[v * n + w] = std::sqrt(pi[v]) * p(v, w) / std::sqrt(pi[w]);
    return s;
}

struct SpectralReport {
    bool symmetric = false;
    double max_asymmetry = 0.0;
    std::vector<double> eigenvalues; // ascending, from the symmetrized matrix
};

inline SpectralReport spectral_check(const std::vector<double>& s, int n,
                                     double tol = 1e-10) {
    if (static_cast<int>(s.size()) != n * n)
        throw DimensionMismatchError("matrix is not n x n");
    SpectralReport rep;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rep.max_asymmetry = std::max(rep.max_asymmetry,
                                         std::fabs(s[i * n + j] - s[j * n + i]));
    rep.symmetric = rep.max_asymmetry <= tol;
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = 0.5 * (s[i * n + j] + s[j * n + i]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    rep.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + n);
    return rep;
}

inline ChainPath simulate_chain(const TransitionMatrix& p,
                                const std::vector<double>& start, int steps,
                                uint64_t seed) {
    const int n = p.size();
    if (static_cast<int>(start.size()) != n)
        throw DimensionMismatchError("start distribution has wrong length");
    if (steps < 1) throw PathTooShortError("need at least one step");
    Xoshiro256ss rng(seed);
    auto draw = [&](auto value_at) {
        double u = rng.next_double(), acc = 0.0;
        for (int v = 0; v < n; ++v) {
            acc += value_at(v);
            if (u < acc) return v;
        }
        return n - 1;
    };
    ChainPath path;
    path.seed = seed;
    path.states.reserve(steps + 1);
    int x = draw([&](int v) { return start[v]; });
    path.states.push_back(x);
    for (int k = 0; k < steps; ++k) {
        x = draw([&](int v) { return p(path.states.back(), v); });
        path.states.push_back(x);
    }
    return path;
}

struct EmpiricalReport {
    // max over edges of |N(v,w) - N(w,v)| / sqrt(N(v,w) + N(w,v) + 1)
    double statistic = 0.0;
    bool pass = false;
    long long transitions = 0;
};

inline constexpr double kEmpiricalThreshold = 5.0;

inline EmpiricalReport empirical_reversibility_test(const ChainPath& path,
                                                    const StructureGraph& g) {
    if (path.states.size() < 2)
        throw PathTooShortError("path has no transitions");
    const int n = g.num_vertices();
    std::vector<long long> counts(n * n, 0);
    for (size_t k = 0; k + 1 < path.states.size(); ++k)
        ++counts[path.states[k] * n + path.states[k + 1]];
    EmpiricalReport rep;
    rep.transitions = static_cast<long long>(path.states.size()) - 1;
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [v, w] = g.edge(e);
        double fwd = static_cast<double>(counts[v * n + w]);
        double bwd = static_cast<double>(counts[w * n + v]);
        double stat = std::fabs(fwd - bwd) / std::sqrt(fwd + bwd + 1.0);
        rep.statistic = std::max(rep.statistic, stat);
    }
    rep.pass = rep.statistic < kEmpiricalThreshold;
    return rep;
}

// Random point on the reversible variety: log t uniform on (-1,1) over the
// default cocycle family, raw s rescaled so the largest off-diagonal row mass
// is 0.9, which guarantees strict feasibility.
inline std::pair<TransitionMatrix, ReversibleParams> sample_reversible(
    const StructureGraph& g, uint64_t seed) {
    Xoshiro256ss rng(seed);
    ReversibleParams params;
    params.family = default_family(g);
    params.t.resize(params.family.size());
    for (auto& t : params.t) t = std::exp(2.0 * rng.next_double() - 1.0);
    params.s.resize(g.num_edges());
    for (auto& s : params.s) s = std::exp(2.0 * rng.next_double() - 1.0);

    std::vector<double> m = detail::inverse_t_products(params, g.num_vertices());
    double max_row = 0.0;
    for (int v = 0; v < g.num_vertices(); ++v) {
        double row = 0.0;
        for (int w : g.neighbors(v)) row += params.s[g.edge_index(v, w)] * m[w] / m[v];
        max_row = std::max(max_row, row);
    }
    for (auto& s : params.s) s *= 0.9 / max_row;
    return {from_st_params(params, g), params};
}

} // namespace revmc
