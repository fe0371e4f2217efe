#pragma once

// Undirected structure graph, its doubled digraph, and the incidence /
// edge-arc / cocycle / model matrices built from it.
//
// Canonical orderings are fixed at construction so every derived matrix is
// reproducible: vertices sorted by label (numeric-aware), edges sorted
// lexicographically by (min, max) endpoint, arcs listed as all forward arcs
// (min -> max) in edge order followed by all backward arcs in edge order.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "revmc/errors.hpp"
#include "revmc/intmat.hpp"

namespace revmc {

// Labels that parse as unsigned integers compare numerically, everything else
// lexicographically (numbers sort before non-numbers).
inline bool label_less(const std::string& a, const std::string& b) {
    auto numeric = [](const std::string& s) {
        return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
    };
    const bool na = numeric(a), nb = numeric(b);
    if (na != nb) return na;
    if (na && nb) {
        if (a.size() != b.size()) return a.size() < b.size();
    }
    return a < b;
}

class StructureGraph {
public:
    StructureGraph() = default;

    // edge_list: unordered pairs of vertex labels; extra_vertices may add
    // labels not mentioned by any edge (they make the graph disconnected and
    // are rejected, but produce the right error message).
    explicit StructureGraph(const std::vector<std::pair<std::string, std::string>>& edge_list,
                            const std::vector<std::string>& extra_vertices = {}) {
        std::set<std::string> label_set(extra_vertices.begin(), extra_vertices.end());
        for (const auto& [u, v] : edge_list) {
            if (u == v) throw SelfLoopError("self-loop on vertex '" + u + "'");
            label_set.insert(u);
            label_set.insert(v);
        }
        labels_.assign(label_set.begin(), label_set.end());
        std::sort(labels_.begin(), labels_.end(), label_less);
        for (int i = 0; i < static_cast<int>(labels_.size()); ++i) index_[labels_[i]] = i;

        std::set<std::pair<int, int>> edge_set;
        for (const auto& [u, v] : edge_list) {
            int a = index_.at(u), b = index_.at(v);
            if (a > b) std::swap(a, b);
            if (!edge_set.insert({a, b}).second)
                throw DuplicateEdgeError("duplicate edge {" + u + "," + v + "}");
        }
        edges_.assign(edge_set.begin(), edge_set.end()); // already (min,max)-lex sorted

        adjacency_.assign(labels_.size(), {});
        arc_of_pair_.clear();
        const int m = static_cast<int>(edges_.size());
        for (int e = 0; e < m; ++e) {
            auto [a, b] = edges_[e];
            adjacency_[a].push_back(b);
            adjacency_[b].push_back(a);
            arc_of_pair_[{a, b}] = e;     // forward arc
            arc_of_pair_[{b, a}] = e + m; // backward arc
        }
        for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());

        check_connected();
    }

    int num_vertices() const { return static_cast<int>(labels_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int num_arcs() const { return 2 * num_edges(); }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_[v]; }
    int vertex_index(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) throw ParseError("unknown vertex label '" + label + "'");
        return it->second;
    }
    bool has_vertex(const std::string& label) const { return index_.count(label) != 0; }

    std::pair<int, int> edge(int e) const { return edges_[e]; }
    const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

    int arc_tail(int a) const {
        const auto& e = edges_[a % num_edges()];
        return a < num_edges() ? e.first : e.second;
    }
    int arc_head(int a) const {
        const auto& e = edges_[a % num_edges()];
        return a < num_edges() ? e.second : e.first;
    }
    int reverse_arc(int a) const { return (a + num_edges()) % num_arcs(); }
    int edge_of_arc(int a) const { return a % num_edges(); }

    // -1 when {v,w} is not an edge
    int arc_index(int v, int w) const {
        auto it = arc_of_pair_.find({v, w});
        return it == arc_of_pair_.end() ? -1 : it->second;
    }
    int edge_index(int v, int w) const {
        int a = arc_index(v, w);
        return a < 0 ? -1 : edge_of_arc(a);
    }
    bool has_edge(int v, int w) const { return arc_index(v, w) >= 0; }

    std::string edge_label(int e) const {
        return labels_[edges_[e].first] + "-" + labels_[edges_[e].second];
    }
    std::string arc_label(int a) const {
        return labels_[arc_tail(a)] + "->" + labels_[arc_head(a)];
    }

    bool operator==(const StructureGraph& o) const {
        return labels_ == o.labels_ && edges_ == o.edges_;
    }

private:
    void check_connected() const {
        if (labels_.empty()) throw DisconnectedError("empty graph");
        std::vector<char> seen(labels_.size(), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adjacency_[v])
                if (!seen[w]) { seen[w] = 1; stack.push_back(w); }
        }
        for (size_t v = 0; v < seen.size(); ++v)
            if (!seen[v]) throw DisconnectedError("graph is disconnected at vertex '" + labels_[v] + "'");
    }

    std::vector<std::string> labels_;
    std::map<std::string, int> index_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
    std::map<std::pair<int, int>, int> arc_of_pair_;
};

inline StructureGraph build_graph(const std::vector<std::pair<std::string, std::string>>& edges,
                                  const std::vector<std::string>& extra_vertices = {}) {
    return StructureGraph(edges, extra_vertices);
}

// V x E, entry 1 iff the vertex is an endpoint of the edge.
inline IntMat incidence_matrix(const StructureGraph& g) {
    IntMat gamma(g.num_vertices(), IntVec(g.num_edges(), 0));
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [a, b] = g.edge(e);
        gamma[a][e] = 1;
        gamma[b][e] = 1;
    }
    return gamma;
}

// E x A, entry 1 iff the arc is one of the two directions of the edge.
inline IntMat edge_arc_matrix(const StructureGraph& g) {
    IntMat e(g.num_edges(), IntVec(g.num_arcs(), 0));
    for (int a = 0; a < g.num_arcs(); ++a) e[g.edge_of_arc(a)][a] = 1;
    return e;
}

// +1 on arcs leaving B, -1 on arcs entering B. B as internal vertex indices.
inline IntVec cocycle_vector(const StructureGraph& g, const std::vector<int>& subset) {
    if (subset.empty() || static_cast<int>(subset.size()) >= g.num_vertices())
        throw EmptyOrFullSubsetError("cocycle subset must be proper and nonempty");
    std::vector<char> in(g.num_vertices(), 0);
    for (int v : subset) in[v] = 1;
    IntVec u(g.num_arcs(), 0);
    for (int a = 0; a < g.num_arcs(); ++a) {
        const bool t = in[g.arc_tail(a)], h = in[g.arc_head(a)];
        if (t && !h) u[a] = 1;
        else if (!t && h) u[a] = -1;
    }
    return u;
}

using VertexFamily = std::vector<std::vector<int>>;

inline IntMat cocycle_matrix(const StructureGraph& g, const VertexFamily& family) {
    IntMat u;
    u.reserve(family.size());
    for (const auto& b : family) u.push_back(cocycle_vector(g, b));
    return u;
}

// Singletons {v} for every vertex except the largest-labeled one (the root).
// Always a basis of the cocycle space.
inline VertexFamily default_family(const StructureGraph& g) {
    VertexFamily fam;
    for (int v = 0; v + 1 < g.num_vertices(); ++v) fam.push_back({v});
    return fam;
}

// All 2^|V|-2 proper nonempty subsets; guarded against exponential blowup.
inline VertexFamily all_proper_subsets(const StructureGraph& g) {
    const int n = g.num_vertices();
    if (n > 16) throw InstanceTooLargeError("full subset family needs |V| <= 16");
    VertexFamily fam;
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<int> b;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) b.push_back(v);
        fam.push_back(std::move(b));
    }
    // sort by cardinality then lexicographically, matching subset-table order
    std::sort(fam.begin(), fam.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return fam;
}

struct ModelMatrix {
    IntMat e_block;                       // |E| x |A|
    IntMat u_block;                       // |family| x |A|
    std::vector<std::string> row_labels;  // edge labels then subset labels
    VertexFamily family;

    IntMat stacked() const {
        IntMat a = e_block;
        a.insert(a.end(), u_block.begin(), u_block.end());
        return a;
    }
    int cols() const { return num_cols(e_block); }
};

inline std::string subset_label(const StructureGraph& g, const std::vector<int>& b) {
    std::string s = "{";
    for (size_t i = 0; i < b.size(); ++i) {
        if (i) s += ",";
        s += g.label(b[i]);
    }
    return s + "}";
}

inline ModelMatrix model_matrix(const StructureGraph& g, const VertexFamily& family) {
    ModelMatrix m;
    m.e_block = edge_arc_matrix(g);
    m.u_block = cocycle_matrix(g, family);
    m.family = family;
    for (int e = 0; e < g.num_edges(); ++e) m.row_labels.push_back(g.edge_label(e));
    for (const auto& b : family) m.row_labels.push_back(subset_label(g, b));
    const int want = g.num_edges() + g.num_vertices() - 1;
    if (integer_rank(m.stacked()) != want)
        throw RankDeficientFamilyError("cocycle family does not reach rank |E|+|V|-1");
    return m;
}

inline ModelMatrix model_matrix(const StructureGraph& g) {
    return model_matrix(g, default_family(g));
}

} // namespace revmc
