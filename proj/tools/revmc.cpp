// revmc: command-line front end for the reversible Markov chain library.
//
// Exit codes: 0 success / reversible, 1 not reversible, 2 parse error,
// 3 invalid graph, 4 not q-reversible, 5 infeasible parameters.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "revmc/revmc.hpp"

namespace {

using revmc::json;

constexpr int kExitOk = 0;
constexpr int kExitNotReversible = 1;
constexpr int kExitParse = 2;
constexpr int kExitGraph = 3;
constexpr int kExitNotQReversible = 4;
constexpr int kExitInfeasible = 5;

size_t cycle_cap() {
    if (const char* env = std::getenv("REVMC_CYCLE_CAP")) return std::strtoull(env, nullptr, 10);
    return revmc::kDefaultCycleCap;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw revmc::ParseError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw revmc::ParseError(std::string("JSON parse error in ") + path + ": " + e.what());
    }
    return j;
}

revmc::StructureGraph load_graph(const std::string& path) {
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json")
        return revmc::graph_from_json(load_json(path));
    std::ifstream in(path);
    if (!in) throw revmc::ParseError("cannot open file: " + path);
    return revmc::parse_graph_text(in);
}

revmc::VertexFamily load_family(const std::string& spec, const revmc::StructureGraph& g) {
    if (spec.empty()) return revmc::default_family(g);
    json j = spec[0] == '[' ? json::parse(spec) : load_json(spec);
    return revmc::family_from_json(j, g);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_analyze(const std::string& graph_file, bool all_subsets, bool include_two_cycles,
                bool csv) {
    auto g = load_graph(graph_file);
    auto family = all_subsets ? revmc::all_proper_subsets(g) : revmc::default_family(g);
    auto model = revmc::model_matrix(g, family);
    auto cycles = revmc::enumerate_cycles(g, include_two_cycles, cycle_cap());

    if (csv) {
        std::cout << revmc::int_matrix_to_csv(model.stacked(), model.row_labels,
                                              revmc::arc_labels(g));
        return kExitOk;
    }
    json out;
    out["graph"] = revmc::graph_to_json(g);
    out["arcs"] = revmc::arc_labels(g);
    out["incidence"] = revmc::int_matrix_to_json(revmc::incidence_matrix(g), g.labels(),
                                                 revmc::edge_labels(g));
    out["edge_arc"] = revmc::int_matrix_to_json(model.e_block, revmc::edge_labels(g),
                                                revmc::arc_labels(g));
    std::vector<std::string> subset_names(model.row_labels.begin() + g.num_edges(),
                                          model.row_labels.end());
    out["cocycle"] = revmc::int_matrix_to_json(model.u_block, subset_names,
                                               revmc::arc_labels(g));
    out["model"] = revmc::int_matrix_to_json(model.stacked(), model.row_labels,
                                             revmc::arc_labels(g));
    out["rank"] = revmc::integer_rank(model.stacked());
    out["cycles"] = revmc::cycles_to_json(cycles, g);
    out["lattice_basis"] = revmc::lattice_to_json(revmc::lattice_basis(model), g);
    out["graver_basis"] = revmc::lattice_to_json(revmc::graver_basis(g, cycle_cap()), g);
    emit(out);
    return kExitOk;
}

int run_check(const std::string& graph_file, const std::string& matrix_file, double tol,
              bool exhaustive) {
    auto g = load_graph(graph_file);
    auto p = revmc::transition_from_json(load_json(matrix_file), g);
    if (exhaustive) {
        auto rep = revmc::check_kolmogorov_exhaustive(p, tol, cycle_cap());
        json out;
        out["reversible"] = rep.reversible;
        out["violated_cycles"] = revmc::cycles_to_json(rep.violations, g);
        emit(out);
        return rep.reversible ? kExitOk : kExitNotReversible;
    }
    auto cert = revmc::certify_reversibility(p, tol);
    emit(revmc::certificate_to_json(cert, g));
    return cert.verdict == revmc::Verdict::reversible ? kExitOk : kExitNotReversible;
}

int run_params(const std::string& graph_file, const std::string& input_file,
               const std::string& direction, const std::string& family_spec, double tol) {
    auto g = load_graph(graph_file);
    if (direction == "from") {
        auto params = revmc::params_from_json(load_json(input_file), g);
        auto slack = revmc::feasibility_report(params, g);
        bool feasible = true;
        json slack_json;
        for (int v = 0; v < g.num_vertices(); ++v) {
            slack_json[g.label(v)] = slack[v];
            if (slack[v] < 0.0) feasible = false;
        }
        if (!feasible) {
            emit(json{{"feasible", false}, {"slack", slack_json}});
            return kExitInfeasible;
        }
        auto p = revmc::from_st_params(params, g);
        json out;
        out["matrix"] = revmc::transition_to_json(p);
        out["kappa_unnormalized"] = revmc::kappa_from_t(params, g);
        emit(out);
        return kExitOk;
    }
    auto p = revmc::transition_from_json(load_json(input_file), g);
    auto fam = load_family(family_spec, g);
    auto params = revmc::to_st_params(p, fam, tol > 0 ? tol : 1e-8);
    emit(revmc::params_to_json(params, g));
    return kExitOk;
}

int run_sample(const std::string& graph_file, uint64_t seed) {
    auto g = load_graph(graph_file);
    auto [p, params] = revmc::sample_reversible(g, seed);
    json out;
    out["seed"] = seed;
    out["matrix"] = revmc::transition_to_json(p);
    out["params"] = revmc::params_to_json(params, g);
    emit(out);
    return kExitOk;
}

int run_simulate(const std::string& graph_file, const std::string& matrix_file, int steps,
                 uint64_t seed, bool text) {
    auto g = load_graph(graph_file);
    auto p = revmc::transition_from_json(load_json(matrix_file), g);
    std::vector<double> start(g.num_vertices(), 1.0 / g.num_vertices());
    auto path = revmc::simulate_chain(p, start, steps, seed);
    auto rep = revmc::empirical_reversibility_test(path, g);
    if (text) {
        revmc::path_to_text(std::cout, path, g);
        return kExitOk;
    }
    json out;
    out["path"] = revmc::path_to_json(path, g);
    out["empirical"] = {{"statistic", rep.statistic},
                        {"pass", rep.pass},
                        {"transitions", rep.transitions}};
    emit(out);
    return kExitOk;
}

int run_decompose(const std::string& graph_file, const std::string& vector_file) {
    auto g = load_graph(graph_file);
    auto z = revmc::arc_vector_from_json(load_json(vector_file), g);
    auto parts = revmc::conformal_decompose(g, z, cycle_cap());
    json out = json::array();
    for (const auto& part : parts) {
        json seq = json::array();
        for (int v : part.cycle.verts) seq.push_back(g.label(v));
        out.push_back({{"cycle", seq}, {"multiplicity", part.multiplicity}});
    }
    emit(json{{"arc_labels", revmc::arc_labels(g)}, {"decomposition", out}});
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"algebra of reversible Markov chains"};
    app.require_subcommand(1);

    std::string graph_file, matrix_file, input_file, vector_file, family_spec, direction;
    double tol = 1e-9;
    bool exhaustive = false, all_subsets = false, include_two_cycles = false;
    bool csv = false, text = false;
    int steps = 1000;
    uint64_t seed = 0;

    auto* analyze = app.add_subcommand("analyze", "graph, cycle and matrix report");
    analyze->add_option("graph", graph_file)->required();
    analyze->add_flag("--all-subsets", all_subsets, "cocycle rows for all proper subsets");
    analyze->add_flag("--include-two-cycles", include_two_cycles);
    analyze->add_flag("--csv", csv, "emit the model matrix as CSV");

    auto* check = app.add_subcommand("check", "verify the Kolmogorov condition");
    check->add_option("graph", graph_file)->required();
    check->add_option("matrix", matrix_file)->required();
    check->add_option("--tol", tol);
    check->add_flag("--exhaustive", exhaustive, "check every cycle instead of the certificate");

    auto* certify = app.add_subcommand("certify", "emit the reversibility certificate");
    certify->add_option("graph", graph_file)->required();
    certify->add_option("matrix", matrix_file)->required();
    certify->add_option("--tol", tol);

    auto* params = app.add_subcommand("params", "convert between (s,t) parameters and P");
    params->add_option("graph", graph_file)->required();
    params->add_option("input", input_file, "params JSON (from) or matrix JSON (to)")->required();
    params->add_option("--direction", direction)->required()
        ->check(CLI::IsMember({"to", "from"}));
    params->add_option("--family", family_spec, "family JSON file or inline array");
    params->add_option("--tol", tol);

    auto* sample = app.add_subcommand("sample", "draw a random reversible matrix");
    sample->add_option("graph", graph_file)->required();
    sample->add_option("--seed", seed);

    auto* simulate = app.add_subcommand("simulate", "simulate a chain and test 2-reversibility");
    simulate->add_option("graph", graph_file)->required();
    simulate->add_option("matrix", matrix_file)->required();
    simulate->add_option("--steps", steps);
    simulate->add_option("--seed", seed);
    simulate->add_flag("--text", text, "newline-delimited path instead of JSON");

    auto* decompose = app.add_subcommand("decompose", "conformal cycle decomposition");
    decompose->add_option("graph", graph_file)->required();
    decompose->add_option("vector", vector_file)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return run_analyze(graph_file, all_subsets, include_two_cycles, csv);
        if (*check) return run_check(graph_file, matrix_file, tol, exhaustive);
        if (*certify) return run_check(graph_file, matrix_file, tol, false);
        if (*params) return run_params(graph_file, input_file, direction, family_spec, tol);
        if (*sample) return run_sample(graph_file, seed);
        if (*simulate) return run_simulate(graph_file, matrix_file, steps, seed, text);
        if (*decompose) return run_decompose(graph_file, vector_file);
    } catch (const revmc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const revmc::SelfLoopError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGraph;
    } catch (const revmc::DuplicateEdgeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGraph;
    } catch (const revmc::DisconnectedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGraph;
    } catch (const revmc::NotQReversibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotQReversible;
    } catch (const revmc::FeasibilityViolatedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const revmc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}
