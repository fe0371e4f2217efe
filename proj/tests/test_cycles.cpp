#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace revmc;
using support::running_example;

TEST_CASE("cycle enumeration matches the brute-force oracle") {
    for (const auto& g : {running_example(), support::triangle(), support::square(),
                          support::complete4(), support::path3()}) {
        for (bool two : {false, true}) {
            auto got = enumerate_cycles(g, two);
            auto expect = support::brute_force_cycles(g, two);
            REQUIRE(got == expect);
        }
    }
}

TEST_CASE("running example has the six cycles") {
    auto g = running_example();
    auto cycles = enumerate_cycles(g);
    REQUIRE(cycles.size() == 6);
    // both orientations of 1-2-4, 2-3-4, 1-2-3-4, canonical rotations sorted
    REQUIRE(std::count(cycles.begin(), cycles.end(), support::omega_a()) == 1);
    REQUIRE(std::count(cycles.begin(), cycles.end(), support::omega_b()) == 1);
    REQUIRE(std::count(cycles.begin(), cycles.end(), support::omega_c()) == 1);
    for (const auto& c : cycles)
        REQUIRE(std::count(cycles.begin(), cycles.end(), c.reversed()) == 1);

    // a 2-cycle equals its own reversal, so each edge adds exactly one
    REQUIRE(enumerate_cycles(g, true).size() == 11); // 6 + 1 per edge
}

TEST_CASE("trees have no cycles") {
    REQUIRE(enumerate_cycles(support::path3()).empty());
    REQUIRE(enumerate_cycles(build_graph({{"1", "2"}})).empty());
}

TEST_CASE("triangle has both orientations") {
    auto cycles = enumerate_cycles(support::triangle());
    REQUIRE(cycles.size() == 2);
    REQUIRE(cycles[0].reversed() == cycles[1]);
}

TEST_CASE("cycle cap") {
    REQUIRE_THROWS_AS(enumerate_cycles(support::complete4(), false, 3), CycleCapExceededError);
}

TEST_CASE("cycle vectors") {
    auto g = running_example();
    REQUIRE(cycle_vector(g, support::omega_a()) == support::z_omega_a());
    REQUIRE(cycle_vector(g, support::omega_b()) == support::z_omega_b());
    REQUIRE(cycle_vector(g, support::omega_c()) == support::z_omega_c());

    for (const auto& c : enumerate_cycles(g, true)) {
        auto z = cycle_vector(g, c);
        auto zr = cycle_vector(g, c.reversed());
        for (int a = 0; a < g.num_arcs(); ++a) {
            REQUIRE(zr[a] == -z[a]);
            REQUIRE(z[g.reverse_arc(a)] == -z[a]);
        }
        // positive part equals the traversal counts
        auto zp = positive_part(z);
        IntVec counts(g.num_arcs(), 0);
        for (auto [v, w] : c.arc_pairs()) ++counts[g.arc_index(v, w)];
        if (!c.is_two_cycle()) REQUIRE(zp == counts);
    }

    // 2-cycle vector is zero
    REQUIRE(is_zero(cycle_vector(g, Cycle{{0, 1}})));
}

TEST_CASE("every cycle vector lies in the kernel of the model matrix") {
    for (const auto& g : {running_example(), support::square(), support::complete4(),
                          support::petersen(), support::grid3x3()}) {
        auto m = model_matrix(g);
        for (const auto& c : enumerate_cycles(g))
            REQUIRE(in_kernel(m, cycle_vector(g, c)));
    }
}

TEST_CASE("lattice basis") {
    auto g = running_example();
    auto m = model_matrix(g, all_proper_subsets(g));
    auto basis = lattice_basis(m);
    REQUIRE(basis.size() == 2); // |E| - |V| + 1
    IntMat table_basis{support::z_omega_a(), support::z_omega_b()};
    REQUIRE(same_lattice(basis, table_basis));

    REQUIRE(lattice_basis(model_matrix(support::path3())).empty());

    auto c4 = support::square();
    auto b4 = lattice_basis(model_matrix(c4));
    REQUIRE(b4.size() == 1);
    auto cycles = enumerate_cycles(c4);
    REQUIRE(cycles.size() == 2);
    auto z = cycle_vector(c4, cycles[0]);
    bool plus = b4[0] == z, minus = true;
    for (int a = 0; a < c4.num_arcs(); ++a) minus = minus && b4[0][a] == -z[a];
    REQUIRE((plus || minus));
}

TEST_CASE("conformality") {
    auto za = support::z_omega_a(), zb = support::z_omega_b();
    REQUIRE(is_conformal(za, za));
    REQUIRE_FALSE(is_conformal(za, zb)); // opposite signs on 2->4
    REQUIRE(is_conformal(IntVec(za.size(), 0), za));
    REQUIRE(is_conformal(IntVec(za.size(), 0), IntVec(za.size(), 0)));
    IntVec za2 = za;
    for (auto& x : za2) x *= 2;
    REQUIRE(is_conformal(za, za2));
    REQUIRE_FALSE(is_conformal(za2, za));
    REQUIRE_THROWS_AS(is_conformal(za, IntVec(3, 0)), DimensionMismatchError);
}

TEST_CASE("conformal decomposition basics") {
    auto g = running_example();

    auto parts = conformal_decompose(g, support::z_omega_a());
    REQUIRE(parts.size() == 1);
    REQUIRE(parts[0].cycle == support::omega_a());
    REQUIRE(parts[0].multiplicity == 1);

    REQUIRE(conformal_decompose(g, IntVec(g.num_arcs(), 0)).empty());

    // a cocycle vector is antisymmetric but not in the kernel
    REQUIRE_THROWS_AS(conformal_decompose(g, cocycle_vector(g, {0})), NotInKernelError);
    // non-antisymmetric input is rejected up front
    IntVec bad(g.num_arcs(), 0);
    bad[0] = 1;
    REQUIRE_THROWS_AS(conformal_decompose(g, bad), NotInKernelError);
}

TEST_CASE("conformal decomposition of a combined element") {
    auto g = running_example();
    auto za = support::z_omega_a(), zb = support::z_omega_b(), zc = support::z_omega_c();
    IntVec z(g.num_arcs(), 0);
    for (int a = 0; a < g.num_arcs(); ++a) z[a] = za[a] + 2 * zb[a] + 2 * zc[a];

    auto parts = conformal_decompose(g, z);
    IntVec recombined(g.num_arcs(), 0);
    for (const auto& part : parts) {
        REQUIRE(part.multiplicity > 0);
        auto zi = cycle_vector(g, part.cycle);
        REQUIRE(is_conformal(zi, z));
        for (int a = 0; a < g.num_arcs(); ++a) recombined[a] += part.multiplicity * zi[a];
        // positive parts add up without cancellation
    }
    REQUIRE(recombined == z);
    IntVec pos_sum(g.num_arcs(), 0);
    for (const auto& part : parts) {
        auto zp = positive_part(cycle_vector(g, part.cycle));
        for (int a = 0; a < g.num_arcs(); ++a) pos_sum[a] += part.multiplicity * zp[a];
    }
    REQUIRE(pos_sum == positive_part(z));

    // cross-check with the exhaustive combination-search oracle
    std::vector<IntVec> all_cycle_vectors;
    for (const auto& c : enumerate_cycles(g)) all_cycle_vectors.push_back(cycle_vector(g, c));
    Int max_coeff = 0;
    for (Int x : z) max_coeff = std::max(max_coeff, std::llabs(x));
    std::vector<IntVec> same_orientation; // restrict to vectors conformal to z
    for (const auto& v : all_cycle_vectors)
        if (is_conformal(v, z)) same_orientation.push_back(v);
    REQUIRE(support::combination_search(g, same_orientation, z, max_coeff));
}

TEST_CASE("decomposition is orientation-consistent") {
    auto g = running_example();
    Xoshiro256ss rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        // random nonnegative combination of one orientation per cycle class
        auto cycles = enumerate_cycles(g);
        IntVec z(g.num_arcs(), 0);
        std::vector<Cycle> chosen;
        for (const auto& c : cycles) {
            if (std::find(chosen.begin(), chosen.end(), c.reversed()) != chosen.end()) continue;
            chosen.push_back(c);
            Int coeff = static_cast<Int>(rng.next() % 4);
            auto zc = cycle_vector(g, c);
            for (int a = 0; a < g.num_arcs(); ++a) z[a] += coeff * zc[a];
        }
        auto parts = conformal_decompose(g, z);
        IntVec rec(g.num_arcs(), 0);
        for (const auto& part : parts) {
            auto zi = cycle_vector(g, part.cycle);
            REQUIRE(is_conformal(zi, z));
            for (int a = 0; a < g.num_arcs(); ++a) rec[a] += part.multiplicity * zi[a];
        }
        REQUIRE(rec == z);

        IntVec neg(z.size());
        for (size_t i = 0; i < z.size(); ++i) neg[i] = -z[i];
        auto neg_parts = conformal_decompose(g, neg);
        REQUIRE(neg_parts.size() == parts.size());
        for (const auto& np : neg_parts) {
            auto match = std::find_if(parts.begin(), parts.end(), [&](const CycleMultiple& p) {
                return p.cycle == np.cycle.reversed() && p.multiplicity == np.multiplicity;
            });
            REQUIRE(match != parts.end());
        }
    }
}

TEST_CASE("graver basis") {
    auto g = running_example();
    auto basis = graver_basis(g);
    REQUIRE(basis.size() == 6);
    int antipodal = 0;
    for (const auto& z : basis) {
        IntVec neg(z.size());
        for (size_t i = 0; i < z.size(); ++i) neg[i] = -z[i];
        if (std::find(basis.begin(), basis.end(), neg) != basis.end()) ++antipodal;
    }
    REQUIRE(antipodal == 6); // 3 antipodal pairs

    REQUIRE(graver_basis(support::path3()).empty());
    REQUIRE(graver_basis(support::square()).size() == 2);
}

TEST_CASE("graver minimality") {
    auto g = running_example();
    auto m = model_matrix(g, all_proper_subsets(g));
    auto basis = graver_basis(g);
    REQUIRE(verify_graver_minimality(g, m, basis));

    // a doubled vector is dominated by its half
    auto doubled = basis;
    IntVec twice = basis[0];
    for (auto& x : twice) x *= 2;
    doubled.push_back(twice);
    REQUIRE_FALSE(verify_graver_minimality(g, m, doubled));

    auto c4 = support::square();
    REQUIRE(verify_graver_minimality(c4, model_matrix(c4), graver_basis(c4)));
}
