#pragma once

// The three parameterizations of reversible structure: theta (joint
// 2-distribution), (pi, s) (square-root), and (s, t) (monomial/toric), with
// forward maps, inverse maps, feasibility inequalities, and the
// Hastings-Metropolis construction.

#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "revmc/graph.hpp"
#include "revmc/kolmogorov.hpp"
#include "revmc/transition.hpp"

namespace revmc {

// Point of the flat simplex over V union E: loop mass per vertex plus
// symmetrized mass per edge.
struct ThetaVector {
    std::vector<double> theta_v; // per vertex
    std::vector<double> theta_e; // per edge

    void validate(const StructureGraph& g) const {
        if (static_cast<int>(theta_v.size()) != g.num_vertices() ||
            static_cast<int>(theta_e.size()) != g.num_edges())
            throw DimensionMismatchError("theta has wrong dimensions");
        double sum = 0.0;
        for (double x : theta_v) {
            if (!(x >= 0.0)) throw EntriesOutOfRangeError("negative theta_v entry");
            sum += x;
        }
        for (double x : theta_e) {
            if (!(x >= 0.0)) throw EntriesOutOfRangeError("negative theta_e entry");
            sum += x;
        }
        if (std::fabs(sum - 1.0) > 1e-12)
            throw EntriesOutOfRangeError("theta does not sum to 1");
    }
};

// Symmetric edge weights s plus positive multipliers t over a cocycle family.
struct ReversibleParams {
    std::vector<double> s; // per edge, strictly positive
    std::vector<double> t; // per family member, strictly positive
    VertexFamily family;

    void validate(const StructureGraph& g) const {
        if (static_cast<int>(s.size()) != g.num_edges() || t.size() != family.size())
            throw DimensionMismatchError("params have wrong dimensions");
        for (double x : s)
            if (!(x > 0.0)) throw NonpositiveParamsError("s must be strictly positive");
        for (double x : t)
            if (!(x > 0.0)) throw NonpositiveParamsError("t must be strictly positive");
    }
};

// Nonnegative matrix over V x V with total mass 1.
struct JointDistribution {
    int n = 0;
    std::vector<double> q; // row-major

    double operator()(int v, int w) const { return q[v * n + w]; }
    double& at(int v, int w) { return q[v * n + w]; }
    std::vector<double> marginal() const {
        std::vector<double> pi(n, 0.0);
        for (int v = 0; v < n; ++v)
            for (int w = 0; w < n; ++w) pi[v] += q[v * n + w];
        return pi;
    }
};

// pi(v) = theta_v + 1/2 sum over incident edges of theta_e
inline std::vector<double> theta_to_pi(const ThetaVector& theta, const StructureGraph& g) {
    theta.validate(g);
    std::vector<double> pi = theta.theta_v;
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [v, w] = g.edge(e);
        pi[v] += 0.5 * theta.theta_e[e];
        pi[w] += 0.5 * theta.theta_e[e];
    }
    return pi;
}

// P_{v->w} = theta_e / (2 theta_v + sum of incident theta_e); the diagonal
// completes rows to 1. The denominator is the unnormalized kappa(v).
inline TransitionMatrix theta_to_transition(const ThetaVector& theta, const StructureGraph& g) {
    theta.validate(g);
    const int n = g.num_vertices();
    std::vector<double> denom(n, 0.0);
    for (int v = 0; v < n; ++v) denom[v] = 2.0 * theta.theta_v[v];
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [v, w] = g.edge(e);
        denom[v] += theta.theta_e[e];
        denom[w] += theta.theta_e[e];
    }
    for (int v = 0; v < n; ++v)
        if (!(denom[v] > 0.0))
            throw IsolatedMasslessError("vertex '" + g.label(v) + "' carries no mass");
    std::vector<double> arcp(g.num_arcs(), 0.0);
    for (int a = 0; a < g.num_arcs(); ++a)
        arcp[a] = theta.theta_e[g.edge_of_arc(a)] / denom[g.arc_tail(a)];
    return transition_from_arcs(g, arcp);
}

// Inverse of the theta map: theta_e = pi(v) P_{v->w} + pi(w) P_{w->v},
// theta_v = pi(v) P_{v->v}. Requires P reversible with invariant pi.
inline ThetaVector transition_to_theta(const TransitionMatrix& p,
                                       const std::vector<double>& pi,
                                       double tol = kDefaultTol) {
    const StructureGraph& g = p.graph();
    if (static_cast<int>(pi.size()) != g.num_vertices())
        throw DimensionMismatchError("pi has wrong length");
    for (double x : pi)
        if (!(x > 0.0)) throw NonpositivePiError("pi must be strictly positive");
    if (certify_reversibility(p, tol).verdict != Verdict::reversible ||
        !check_detailed_balance(p, pi, tol))
        throw NotReversibleError("P is not reversible with the given invariant");

    ThetaVector theta;
    theta.theta_v.resize(g.num_vertices());
    theta.theta_e.resize(g.num_edges());
    for (int v = 0; v < g.num_vertices(); ++v) theta.theta_v[v] = pi[v] * p(v, v);
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [v, w] = g.edge(e);
        theta.theta_e[e] = pi[v] * p(v, w) + pi[w] * p(w, v);
    }
    return theta;
}

// Q(v,w) = pi(v) A(v,w) for the lazy random walk A(v,w) = 1/(2 d(v)) on
// edges, A(v,v) = 1/2.
inline JointDistribution random_walk_joint(const std::vector<double>& pi,
                                           const StructureGraph& g) {
    const int n = g.num_vertices();
    if (static_cast<int>(pi.size()) != n)
        throw DimensionMismatchError("pi has wrong length");
    for (double x : pi)
        if (!(x > 0.0)) throw NonpositivePiError("pi must be strictly positive");
    JointDistribution q;
    q.n = n;
    q.q.assign(n * n, 0.0);
    for (int v = 0; v < n; ++v) {
        q.at(v, v) = pi[v] * 0.5;
        for (int w : g.neighbors(v)) q.at(v, w) = pi[v] / (2.0 * g.degree(v));
    }
    return q;
}

enum class AcceptanceVariant { hastings, barker, product };

inline const char* to_string(AcceptanceVariant v) {
    switch (v) {
        case AcceptanceVariant::hastings: return "hastings";
        case AcceptanceVariant::barker: return "barker";
        default: return "product";
    }
}

// P(v,w) = f(Q(v,w), Q(w,v)) off-diagonal; the diagonal keeps the marginal.
// All three f satisfy f(x,y) <= min(x,y), which makes the diagonal >= Q(v,v).
inline JointDistribution metropolize(const JointDistribution& q, const StructureGraph& g,
                                     AcceptanceVariant variant) {
    const int n = q.n;
    if (n != g.num_vertices()) throw DimensionMismatchError("joint does not match graph");
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w) {
            const bool should = v == w || g.has_edge(v, w);
            if ((q(v, w) > 0.0) != should)
                throw BadSupportError("joint support must be edges plus diagonal");
            if (q(v, w) < 0.0 || q(v, w) >= 1.0)
                throw EntriesOutOfRangeError("joint entries must lie in [0,1)");
        }

    auto f = [variant](double x, double y) {
        switch (variant) {
            case AcceptanceVariant::hastings: return std::min(x, y);
            case AcceptanceVariant::barker: return x * y / (x + y);
            default: return x * y;
        }
    };
    std::vector<double> pi = q.marginal();
    JointDistribution p;
    p.n = n;
    p.q.assign(n * n, 0.0);
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [v, w] = g.edge(e);
        double val = f(q(v, w), q(w, v));
        if (val > std::min(q(v, w), q(w, v)) + 1e-15)
            throw EntriesOutOfRangeError("acceptance function exceeded min(x,y)");
        p.at(v, w) = val;
        p.at(w, v) = val;
    }
    for (int v = 0; v < n; ++v) {
        double off = 0.0;
        for (int w : g.neighbors(v)) off += p(v, w);
        p.at(v, v) = pi[v] - off;
    }
    return p;
}

// Square-root parameterization: P_{v->w} = pi(v)^{-1/2} pi(w)^{1/2} s(v,w).
// Feasible iff sum_w s(v,w) sqrt(pi(w)) <= sqrt(pi(v)) for every v.
inline TransitionMatrix from_pi_s(const std::vector<double>& pi,
                                  const std::vector<double>& s,
                                  const StructureGraph& g) {
    const int n = g.num_vertices();
    if (static_cast<int>(pi.size()) != n || static_cast<int>(s.size()) != g.num_edges())
        throw DimensionMismatchError("pi or s has wrong length");
    for (double x : pi)
        if (!(x > 0.0)) throw NonpositivePiError("pi must be strictly positive");
    for (double x : s)
        if (!(x > 0.0)) throw NonpositiveParamsError("s must be strictly positive");

    std::vector<double> sqrt_pi(n);
    for (int v = 0; v < n; ++v) sqrt_pi[v] = std::sqrt(pi[v]);
    for (int v = 0; v < n; ++v) {
        double lhs = 0.0;
        for (int w : g.neighbors(v)) lhs += s[g.edge_index(v, w)] * sqrt_pi[w];
        if (lhs > sqrt_pi[v])
            throw FeasibilityViolatedError(
                "square-root feasibility fails at vertex '" + g.label(v) + "'", v);
    }
    std::vector<double> arcp(g.num_arcs(), 0.0);
    for (int a = 0; a < g.num_arcs(); ++a) {
        int v = g.arc_tail(a), w = g.arc_head(a);
        arcp[a] = s[g.edge_of_arc(a)] * sqrt_pi[w] / sqrt_pi[v];
    }
    return transition_from_arcs(g, arcp);
}

// kappa(v) = prod over family members containing v of t_B^{-2}, unnormalized.
inline std::vector<double> kappa_from_t(const ReversibleParams& params,
                                        const StructureGraph& g) {
    params.validate(g);
    std::vector<double> kappa(g.num_vertices(), 1.0);
    for (size_t i = 0; i < params.family.size(); ++i)
        for (int v : params.family[i]) kappa[v] /= params.t[i] * params.t[i];
    return kappa;
}

namespace detail {

// m(v) = prod over family members containing v of t_B^{-1}; the arc monomial
// in the (s,t) parameterization is m(head)/m(tail).
inline std::vector<double> inverse_t_products(const ReversibleParams& params, int n) {
    std::vector<double> m(n, 1.0);
    for (size_t i = 0; i < params.family.size(); ++i)
        for (int v : params.family[i]) m[v] /= params.t[i];
    return m;
}

} // namespace detail

// slack(v) = m(v) - sum_w s(v,w) m(w); all slacks >= 0 iff the (s,t) point
// yields a Markov matrix, and slack(v)/m(v) is the diagonal entry.
inline std::vector<double> feasibility_report(const ReversibleParams& params,
                                              const StructureGraph& g) {
    params.validate(g);
    std::vector<double> m = detail::inverse_t_products(params, g.num_vertices());
    std::vector<double> slack(g.num_vertices(), 0.0);
    for (int v = 0; v < g.num_vertices(); ++v) {
        double sum = 0.0;
        for (int w : g.neighbors(v)) sum += params.s[g.edge_index(v, w)] * m[w];
        slack[v] = m[v] - sum;
    }
    return slack;
}

// Monomial parameterization: P_{v->w} = s(v,w) m(w)/m(v).
inline TransitionMatrix from_st_params(const ReversibleParams& params,
                                       const StructureGraph& g) {
    params.validate(g);
    std::vector<double> slack = feasibility_report(params, g);
    for (int v = 0; v < g.num_vertices(); ++v)
        if (slack[v] < 0.0)
            throw FeasibilityViolatedError(
                "(s,t) feasibility fails at vertex '" + g.label(v) + "'", v);
    std::vector<double> m = detail::inverse_t_products(params, g.num_vertices());
    std::vector<double> arcp(g.num_arcs(), 0.0);
    for (int a = 0; a < g.num_arcs(); ++a)
        arcp[a] = params.s[g.edge_of_arc(a)] * m[g.arc_head(a)] / m[g.arc_tail(a)];
    return transition_from_arcs(g, arcp);
}

// Recovery: s is forced as sqrt(P_{v->w} P_{w->v}); log t solves the stacked
// arc equations log P_a - log s = sum_B u_a(B) log t_B in least squares
// (minimum-norm for over-complete families). A residual above 1e-8 means P
// is off the variety.
inline ReversibleParams to_st_params(const TransitionMatrix& p, const VertexFamily& family,
                                     double residual_tol = 1e-8) {
    const StructureGraph& g = p.graph();
    const int n = g.num_vertices();
    const int na = g.num_arcs();
    for (int a = 0; a < na; ++a)
        if (p.arc_value(a) <= 0.0)
            throw ZeroTransitionError("P must be strictly positive on the support arc " +
                                      g.arc_label(a));

    IntMat u = cocycle_matrix(g, family);
    if (integer_rank(u) != n - 1)
        throw NotABasisError("family does not span the cocycle space");

    ReversibleParams params;
    params.family = family;
    params.s.resize(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [v, w] = g.edge(e);
        params.s[e] = std::sqrt(p(v, w) * p(w, v));
    }

    Eigen::MatrixXd a_mat(na, static_cast<int>(family.size()));
    Eigen::VectorXd rhs(na);
    for (int a = 0; a < na; ++a) {
        for (size_t b = 0; b < family.size(); ++b) a_mat(a, static_cast<int>(b)) = u[b][a];
        rhs(a) = std::log(p.arc_value(a)) - std::log(params.s[g.edge_of_arc(a)]);
    }
    Eigen::VectorXd x = a_mat.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(rhs);
    double residual = (a_mat * x - rhs).lpNorm<Eigen::Infinity>();
    if (residual > residual_tol)
        throw NotReversibleError("P is not on the reversible variety (residual " +
                                 std::to_string(residual) + ")");
    params.t.resize(family.size());
    for (size_t b = 0; b < family.size(); ++b)
        params.t[b] = std::exp(x(static_cast<int>(b)));
    return params;
}

} // namespace revmc
