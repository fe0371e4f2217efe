#pragma once

// Row-stochastic transition matrices over the vertices of a structure graph.
// Off-diagonal mass is only allowed on edges of the declared support graph.

#include <cmath>
#include <vector>

#include "revmc/errors.hpp"
#include "revmc/graph.hpp"

namespace revmc {

inline constexpr double kRowSumTol = 1e-12;

class TransitionMatrix {
public:
    TransitionMatrix() = default;

    TransitionMatrix(StructureGraph g, std::vector<double> rows)
        : graph_(std::move(g)), p_(std::move(rows)) {
        const int n = graph_.num_vertices();
        if (static_cast<int>(p_.size()) != n * n)
            throw DimensionMismatchError("transition matrix has wrong size");
        for (int v = 0; v < n; ++v) {
            double sum = 0.0;
            for (int w = 0; w < n; ++w) {
                double x = p_[v * n + w];
                if (!(x >= 0.0))
                    throw BadSupportError("negative transition probability");
                if (v != w && x > 0.0 && !graph_.has_edge(v, w))
                    throw BadSupportError("positive mass off the support graph: " +
                                          graph_.label(v) + "->" + graph_.label(w));
                sum += x;
            }
            if (std::fabs(sum - 1.0) > kRowSumTol)
                throw BadSupportError("row of vertex '" + graph_.label(v) + "' does not sum to 1");
        }
    }

    const StructureGraph& graph() const { return graph_; }
    int size() const { return graph_.num_vertices(); }

    double operator()(int v, int w) const { return p_[v * size() + w]; }
    double arc_value(int a) const { return (*this)(graph_.arc_tail(a), graph_.arc_head(a)); }
    const std::vector<double>& raw() const { return p_; }

    // off-diagonal zero pattern symmetric on the support edges
    bool is_q_reversible() const {
        for (int e = 0; e < graph_.num_edges(); ++e) {
            auto [v, w] = graph_.edge(e);
            if (((*this)(v, w) == 0.0) != ((*this)(w, v) == 0.0)) return false;
        }
        return true;
    }

private:
    StructureGraph graph_;
    std::vector<double> p_;
};

// Convenience builder: off-diagonal entries per arc, diagonal completes rows.
inline TransitionMatrix transition_from_arcs(const StructureGraph& g,
                                             const std::vector<double>& arc_probs) {
    const int n = g.num_vertices();
    std::vector<double> rows(n * n, 0.0);
    for (int a = 0; a < g.num_arcs(); ++a)
        rows[g.arc_tail(a) * n + g.arc_head(a)] = arc_probs[a];
    for (int v = 0; v < n; ++v) {
        double off = 0.0;
        for (int w = 0; w < n; ++w)
            if (w != v) off += rows[v * n + w];
        if (off > 1.0 + kRowSumTol)
            throw BadSupportError("off-diagonal mass of vertex '" + g.label(v) + "' exceeds 1");
        rows[v * n + v] = 1.0 - off;
        if (rows[v * n + v] < 0.0) rows[v * n + v] = 0.0;
    }
    return TransitionMatrix(g, rows);
}

} // namespace revmc
