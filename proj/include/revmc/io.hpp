#pragma once

// Serialization: edge-list and JSON graph input, JSON forms of matrices,
// transition data, parameter vectors, certificates, cycles, and chain paths.

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "revmc/cycles.hpp"
#include "revmc/graph.hpp"
#include "revmc/kolmogorov.hpp"
#include "revmc/markov.hpp"
#include "revmc/parameterization.hpp"
#include "revmc/transition.hpp"

namespace revmc {

using nlohmann::json;

namespace detail {

inline std::string label_from_json(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw ParseError("vertex label must be a string or integer");
}

} // namespace detail

// Plain-text edge list: one "u v" pair per line; blank lines and lines
// starting with '#' are skipped.
inline StructureGraph parse_graph_text(std::istream& in) {
    std::vector<std::pair<std::string, std::string>> edges;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string u, v, extra;
        if (!(ls >> u)) continue;
        if (u[0] == '#') continue;
        if (!(ls >> v) || (ls >> extra))
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected exactly two vertex labels");
        edges.emplace_back(u, v);
    }
    if (edges.empty()) throw ParseError("edge list is empty");
    return build_graph(edges);
}

inline StructureGraph graph_from_json(const json& j) {
    if (!j.contains("edges")) throw ParseError("graph JSON needs an \"edges\" array");
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError("each edge must be a pair");
        edges.emplace_back(detail::label_from_json(e[0]), detail::label_from_json(e[1]));
    }
    std::vector<std::string> extra;
    if (j.contains("vertices"))
        for (const auto& v : j.at("vertices")) extra.push_back(detail::label_from_json(v));
    return build_graph(edges, extra);
}

inline json graph_to_json(const StructureGraph& g) {
    json j;
    j["vertices"] = g.labels();
    json edges = json::array();
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [v, w] = g.edge(e);
        edges.push_back({g.label(v), g.label(w)});
    }
    j["edges"] = edges;
    return j;
}

inline json int_matrix_to_json(const IntMat& m, const std::vector<std::string>& row_labels,
                               const std::vector<std::string>& col_labels) {
    json j;
    j["row_labels"] = row_labels;
    j["col_labels"] = col_labels;
    j["rows"] = m;
    return j;
}

inline std::string int_matrix_to_csv(const IntMat& m,
                                     const std::vector<std::string>& row_labels,
                                     const std::vector<std::string>& col_labels) {
    std::ostringstream out;
    out << "row";
    for (const auto& c : col_labels) out << "," << c;
    out << "\n";
    for (size_t i = 0; i < m.size(); ++i) {
        out << row_labels[i];
        for (Int x : m[i]) out << "," << x;
        out << "\n";
    }
    return out.str();
}

inline std::vector<std::string> edge_labels(const StructureGraph& g) {
    std::vector<std::string> l;
    for (int e = 0; e < g.num_edges(); ++e) l.push_back(g.edge_label(e));
    return l;
}
inline std::vector<std::string> arc_labels(const StructureGraph& g) {
    std::vector<std::string> l;
    for (int a = 0; a < g.num_arcs(); ++a) l.push_back(g.arc_label(a));
    return l;
}

// {"vertices":[...], "rows":[[...], ...]} with row-stochastic validation
inline TransitionMatrix transition_from_json(const json& j, const StructureGraph& g) {
    if (!j.contains("vertices") || !j.contains("rows"))
        throw ParseError("transition JSON needs \"vertices\" and \"rows\"");
    std::vector<std::string> verts;
    for (const auto& v : j.at("vertices")) verts.push_back(detail::label_from_json(v));
    const int n = g.num_vertices();
    if (static_cast<int>(verts.size()) != n)
        throw ParseError("transition vertex list does not match the graph");
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = g.vertex_index(verts[i]);
    const auto& rows = j.at("rows");
    if (static_cast<int>(rows.size()) != n) throw ParseError("wrong number of rows");
    std::vector<double> p(n * n, 0.0);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n) throw ParseError("wrong row length");
        for (int k = 0; k < n; ++k)
            p[perm[i] * n + perm[k]] = rows[i][k].get<double>();
    }
    return TransitionMatrix(g, p);
}

inline json transition_to_json(const TransitionMatrix& p) {
    const int n = p.size();
    json rows = json::array();
    for (int v = 0; v < n; ++v) {
        json row = json::array();
        for (int w = 0; w < n; ++w) row.push_back(p(v, w));
        rows.push_back(row);
    }
    return json{{"vertices", p.graph().labels()}, {"rows", rows}};
}

inline json certificate_to_json(const ReversibilityCertificate& cert,
                                const StructureGraph& g) {
    json kappa;
    for (int v = 0; v < g.num_vertices(); ++v) kappa[g.label(v)] = cert.kappa[v];
    json tree = json::array();
    for (auto [v, w] : cert.tree_edges) tree.push_back({g.label(v), g.label(w)});
    return json{{"kappa", kappa},
                {"max_residual", cert.max_residual},
                {"verdict", to_string(cert.verdict)},
                {"tree_edges", tree}};
}

// cycles as arrays of vertex labels in canonical rotation
inline json cycles_to_json(const std::vector<Cycle>& cycles, const StructureGraph& g) {
    json out = json::array();
    for (const auto& c : cycles) {
        json seq = json::array();
        for (int v : c.verts) seq.push_back(g.label(v));
        out.push_back(seq);
    }
    return out;
}

inline json lattice_to_json(const IntMat& basis, const StructureGraph& g) {
    return json{{"arc_labels", arc_labels(g)}, {"vectors", basis}};
}

inline IntVec arc_vector_from_json(const json& j, const StructureGraph& g) {
    const json& vec = j.is_object() && j.contains("vector") ? j.at("vector") : j;
    if (!vec.is_array() || static_cast<int>(vec.size()) != g.num_arcs())
        throw ParseError("expected an integer vector with one entry per arc");
    IntVec z;
    for (const auto& x : vec) z.push_back(x.get<Int>());
    return z;
}

inline VertexFamily family_from_json(const json& j, const StructureGraph& g) {
    VertexFamily fam;
    for (const auto& subset : j) {
        std::vector<int> b;
        for (const auto& v : subset) b.push_back(g.vertex_index(detail::label_from_json(v)));
        std::sort(b.begin(), b.end());
        fam.push_back(std::move(b));
    }
    return fam;
}

inline json family_to_json(const VertexFamily& fam, const StructureGraph& g) {
    json out = json::array();
    for (const auto& b : fam) {
        json subset = json::array();
        for (int v : b) subset.push_back(g.label(v));
        out.push_back(subset);
    }
    return out;
}

inline std::string family_key(const StructureGraph& g, const std::vector<int>& b) {
    std::string key;
    for (size_t i = 0; i < b.size(); ++i) {
        if (i) key += ",";
        key += g.label(b[i]);
    }
    return key;
}

// {"s": {"v-w": value}, "t": {"sorted,vertex,list": value}, "family": [...]}
inline ReversibleParams params_from_json(const json& j, const StructureGraph& g) {
    if (!j.contains("s") || !j.contains("t") || !j.contains("family"))
        throw ParseError("params JSON needs \"s\", \"t\" and \"family\"");
    ReversibleParams params;
    params.family = family_from_json(j.at("family"), g);
    params.s.assign(g.num_edges(), 0.0);
    for (const auto& [key, value] : j.at("s").items()) {
        auto dash = key.find('-');
        if (dash == std::string::npos) throw ParseError("s key must be \"v-w\"");
        int v = g.vertex_index(key.substr(0, dash));
        int w = g.vertex_index(key.substr(dash + 1));
        int e = g.edge_index(v, w);
        if (e < 0) throw ParseError("s key \"" + key + "\" is not an edge");
        params.s[e] = value.get<double>();
    }
    params.t.assign(params.family.size(), 0.0);
    const auto& tmap = j.at("t");
    for (size_t i = 0; i < params.family.size(); ++i) {
        std::string key = family_key(g, params.family[i]);
        if (!tmap.contains(key)) throw ParseError("missing t value for subset {" + key + "}");
        params.t[i] = tmap.at(key).get<double>();
    }
    params.validate(g);
    return params;
}

inline json params_to_json(const ReversibleParams& params, const StructureGraph& g) {
    json s, t;
    for (int e = 0; e < g.num_edges(); ++e) s[g.edge_label(e)] = params.s[e];
    for (size_t i = 0; i < params.family.size(); ++i)
        t[family_key(g, params.family[i])] = params.t[i];
    return json{{"s", s}, {"t", t}, {"family", family_to_json(params.family, g)}};
}

// {"theta_v": {label: value}, "theta_e": {"v-w": value}}
inline ThetaVector theta_from_json(const json& j, const StructureGraph& g) {
    if (!j.contains("theta_v") || !j.contains("theta_e"))
        throw ParseError("theta JSON needs \"theta_v\" and \"theta_e\"");
    ThetaVector theta;
    theta.theta_v.assign(g.num_vertices(), 0.0);
    theta.theta_e.assign(g.num_edges(), 0.0);
    for (const auto& [key, value] : j.at("theta_v").items())
        theta.theta_v[g.vertex_index(key)] = value.get<double>();
    for (const auto& [key, value] : j.at("theta_e").items()) {
        auto dash = key.find('-');
        if (dash == std::string::npos) throw ParseError("theta_e key must be \"v-w\"");
        int e = g.edge_index(g.vertex_index(key.substr(0, dash)),
                             g.vertex_index(key.substr(dash + 1)));
        if (e < 0) throw ParseError("theta_e key \"" + key + "\" is not an edge");
        theta.theta_e[e] = value.get<double>();
    }
    theta.validate(g);
    return theta;
}

inline json theta_to_json(const ThetaVector& theta, const StructureGraph& g) {
    json tv, te;
    for (int v = 0; v < g.num_vertices(); ++v) tv[g.label(v)] = theta.theta_v[v];
    for (int e = 0; e < g.num_edges(); ++e) te[g.edge_label(e)] = theta.theta_e[e];
    return json{{"theta_v", tv}, {"theta_e", te}};
}

inline json path_to_json(const ChainPath& path, const StructureGraph& g) {
    json states = json::array();
    for (int v : path.states) states.push_back(g.label(v));
    return json{{"rng", path.rng}, {"seed", path.seed}, {"states", states}};
}

// newline-delimited labels with an RNG header comment
inline void path_to_text(std::ostream& out, const ChainPath& path, const StructureGraph& g) {
    out << "# rng=" << path.rng << " seed=" << path.seed << "\n";
    for (int v : path.states) out << g.label(v) << "\n";
}

} // namespace revmc
