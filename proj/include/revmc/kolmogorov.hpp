#pragma once

// Cycle binomials, the Kolmogorov condition, detailed balance, the
// spanning-tree reversibility certificate, toric-ideal membership, and
// syzygies of cycle binomials on exponent vectors.

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "revmc/cycles.hpp"
#include "revmc/graph.hpp"
#include "revmc/transition.hpp"

namespace revmc {

inline constexpr double kDefaultTol = 1e-9;

// The binomial P^{z+} - P^{z-} encoded by its exponent vector z.
struct Binomial {
    IntVec exponent;

    bool trivial() const { return is_zero(exponent); }
    IntVec pos() const { return positive_part(exponent); }
    IntVec neg() const { return negative_part(exponent); }
};

inline Binomial cycle_binomial(const StructureGraph& g, const Cycle& c) {
    return Binomial{cycle_vector(g, c)};
}

// Evaluates P^{z+} - P^{z-} through the log domain.
inline double evaluate_binomial(const Binomial& b, const TransitionMatrix& p) {
    const StructureGraph& g = p.graph();
    if (static_cast<int>(b.exponent.size()) != g.num_arcs())
        throw DimensionMismatchError("binomial exponent has wrong length");
    double lp = 0.0, lm = 0.0;
    for (int a = 0; a < g.num_arcs(); ++a) {
        if (b.exponent[a] == 0) continue;
        double x = p.arc_value(a);
        if (x <= 0.0)
            throw ZeroOnSupportError("binomial needs a zero transition " + g.arc_label(a));
        if (b.exponent[a] > 0) lp += b.exponent[a] * std::log(x);
        else lm += -b.exponent[a] * std::log(x);
    }
    return std::exp(lp) - std::exp(lm);
}

struct KolmogorovReport {
    bool reversible = false;
    std::vector<Cycle> violations; // sorted by canonical form
};

namespace detail {

inline void require_q_reversible(const TransitionMatrix& p) {
    if (!p.is_q_reversible())
        throw NotQReversibleError("off-diagonal zero pattern is not symmetric");
}

} // namespace detail

// Checks |sum log P_a - sum log P_{r(a)}| <= tol for every cycle. Cycles
// through a zero edge are satisfied identically (both orientations vanish)
// and are skipped.
inline KolmogorovReport check_kolmogorov_exhaustive(const TransitionMatrix& p,
                                                    double tol = kDefaultTol,
                                                    size_t cap = kDefaultCycleCap) {
    detail::require_q_reversible(p);
    const StructureGraph& g = p.graph();
    KolmogorovReport rep;
    rep.reversible = true;
    for (const Cycle& c : enumerate_cycles(g, false, cap)) {
        double imbalance = 0.0;
        bool zero_arc = false;
        for (auto [v, w] : c.arc_pairs()) {
            double fwd = p(v, w), bwd = p(w, v);
            if (fwd == 0.0) { zero_arc = true; break; }
            imbalance += std::log(fwd) - std::log(bwd);
        }
        if (!zero_arc && std::fabs(imbalance) > tol) {
            rep.reversible = false;
            rep.violations.push_back(c);
        }
    }
    return rep;
}

enum class Verdict { reversible, not_reversible, not_q_reversible };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::reversible: return "reversible";
        case Verdict::not_reversible: return "not-reversible";
        default: return "not-q-reversible";
    }
}

struct ReversibilityCertificate {
    std::vector<double> kappa;                  // positive, sums to 1
    double max_residual = 0.0;                  // log-domain detailed-balance residual
    std::vector<std::pair<int, int>> tree_edges; // (parent, child)
    Verdict verdict = Verdict::not_reversible;
};

// Constructive certificate: kappa is accumulated along a BFS spanning tree of
// the positive support as the product of P_{parent->child}/P_{child->parent}
// ratios, then detailed balance is checked on all arcs. Polynomial-time
// equivalent of the exhaustive cycle check.
inline ReversibilityCertificate certify_reversibility(const TransitionMatrix& p,
                                                      double tol = kDefaultTol) {
    detail::require_q_reversible(p);
    const StructureGraph& g = p.graph();
    const int n = g.num_vertices();

    ReversibilityCertificate cert;
    std::vector<double> log_kappa(n, 0.0);
    std::vector<char> seen(n, 0);
    std::queue<int> bfs;
    bfs.push(0); // smallest label
    seen[0] = 1;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (int w : g.neighbors(v)) {
            if (seen[w] || p(v, w) == 0.0) continue;
            seen[w] = 1;
            log_kappa[w] = log_kappa[v] + std::log(p(v, w)) - std::log(p(w, v));
            cert.tree_edges.emplace_back(v, w);
            bfs.push(w);
        }
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v])
            throw DisconnectedSupportError("positive support does not reach vertex '" +
                                           g.label(v) + "'");

    for (int e = 0; e < g.num_edges(); ++e) {
        auto [v, w] = g.edge(e);
        if (p(v, w) == 0.0) continue;
        double res = std::fabs(log_kappa[v] + std::log(p(v, w)) -
                               log_kappa[w] - std::log(p(w, v)));
        cert.max_residual = std::max(cert.max_residual, res);
    }

    double mx = *std::max_element(log_kappa.begin(), log_kappa.end());
    double total = 0.0;
    cert.kappa.resize(n);
    for (int v = 0; v < n; ++v) total += std::exp(log_kappa[v] - mx);
    for (int v = 0; v < n; ++v) cert.kappa[v] = std::exp(log_kappa[v] - mx) / total;

    cert.verdict = cert.max_residual <= tol ? Verdict::reversible : Verdict::not_reversible;
    return cert;
}

// Relative residual of kappa(v) P_{v->w} = kappa(w) P_{w->v} over all arcs.
inline bool check_detailed_balance(const TransitionMatrix& p,
                                   const std::vector<double>& kappa,
                                   double tol = kDefaultTol) {
    const StructureGraph& g = p.graph();
    if (static_cast<int>(kappa.size()) != g.num_vertices())
        throw DimensionMismatchError("kappa has wrong length");
    for (double k : kappa)
        if (!(k > 0.0)) throw NonpositiveKappaError("kappa must be strictly positive");
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [v, w] = g.edge(e);
        double lhs = kappa[v] * p(v, w), rhs = kappa[w] * p(w, v);
        double denom = std::max(lhs, rhs);
        if (denom == 0.0) continue;
        if (std::fabs(lhs - rhs) / denom > tol) return false;
    }
    return true;
}

// A z = 0 in exact integer arithmetic; decides K-ideal membership for binomials.
inline bool toric_membership(const Binomial& b, const ModelMatrix& m) {
    if (static_cast<int>(b.exponent.size()) != m.cols())
        throw DimensionMismatchError("binomial exponent does not match the model matrix");
    return is_zero(mat_vec(m.stacked(), b.exponent));
}

enum class Leading { by_order, positive, negative };

namespace detail {

// Fixed lexicographic monomial order on arcs sorted by (tail, head) labels;
// the most significant variable is the last arc in that chain. Returns true
// when the positive part of z is the leading monomial.
inline bool positive_part_leads(const StructureGraph& g, const IntVec& z) {
    std::vector<int> arcs(g.num_arcs());
    for (int a = 0; a < g.num_arcs(); ++a) arcs[a] = a;
    std::sort(arcs.begin(), arcs.end(), [&](int a, int b) {
        const std::string ta = g.label(g.arc_tail(a)), tb = g.label(g.arc_tail(b));
        if (ta != tb) return label_less(ta, tb);
        return label_less(g.label(g.arc_head(a)), g.label(g.arc_head(b)));
    });
    for (auto it = arcs.rbegin(); it != arcs.rend(); ++it) {
        if (z[*it] > 0) return true;
        if (z[*it] < 0) return false;
    }
    return true; // zero binomial, choice irrelevant
}

} // namespace detail

// S-polynomial of two cycle binomials on exponent vectors. With leading
// exponents L_i and trailing T_i, the syzygy is P^{L1-a+T2} - P^{L2-a+T1}
// for a = min(L1, L2); its exponent vector is (L1+T2) - (L2+T1), with common
// monomial factors cancelling in the subtraction.
inline Binomial syzygy(const StructureGraph& g, const Binomial& b1, const Binomial& b2,
                       Leading l1 = Leading::by_order, Leading l2 = Leading::by_order) {
    auto check_cycle_exponent = [&](const Binomial& b) {
        if (static_cast<int>(b.exponent.size()) != g.num_arcs())
            throw NotCycleBinomialError("exponent has wrong length");
        for (int a = 0; a < g.num_arcs(); ++a)
            if (b.exponent[a] != -b.exponent[g.reverse_arc(a)] ||
                std::llabs(b.exponent[a]) > 1)
                throw NotCycleBinomialError("exponent is not a cycle vector");
    };
    check_cycle_exponent(b1);
    check_cycle_exponent(b2);

    auto oriented = [&](const Binomial& b, Leading l) {
        bool pos_leads = l == Leading::positive ||
                         (l == Leading::by_order && detail::positive_part_leads(g, b.exponent));
        IntVec z = b.exponent;
        if (!pos_leads)
            for (auto& x : z) x = -x;
        return z;
    };
    IntVec z1 = oriented(b1, l1), z2 = oriented(b2, l2);
    IntVec out(z1.size());
    for (size_t i = 0; i < z1.size(); ++i) out[i] = z1[i] - z2[i];
    return Binomial{out};
}

} // namespace revmc
