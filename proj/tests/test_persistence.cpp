#include <catch2/catch_amalgamated.hpp>

#include "symph/oracles.hpp"
#include "symph/persistence.hpp"
#include "symph/scenarios.hpp"

using namespace symph;

namespace {

group_action trivial(index_t n) { return make_group({identity_permutation(n)}, n); }

orbit_chain_complex classical(const filtered_complex& fc, std::uint32_t p = 2) {
    return build_orbit_complex(fc, trivial(fc.complex.vertex_count), grade_op::max,
                               make_field(p));
}

// one edge whose grade undercuts its latest face: not a filtration
orbit_chain_complex broken_filtration() {
    orbit_chain_complex occ;
    occ.field = make_field(2);
    occ.k = 1;
    occ.vertex_count = 2;
    occ.basis.resize(2);
    occ.boundary.resize(2);
    occ.basis[0].push_back({{0}, {{{0}, 1}}, {0.0}});
    occ.basis[0].push_back({{1}, {{{1}, 1}}, {1.0}});
    occ.basis[1].push_back({{0, 1}, {{{0, 1}, 1}}, {0.5}});
    occ.boundary[1] = {{{0, 1}, {1, 1}}};
    return occ;
}

}  // namespace

TEST_CASE("merge order decides which component dies") {
    const filtered_complex fc = build_filtered_complex(
        make_complex(3, {{0, 1}, {1, 2}}), make_vertex_function(1, {{0.0}, {2.0}, {1.0}}));
    const persistence_diagram d = compute_persistence(classical(fc), make_field(2));
    REQUIRE(d.degree(0).pairs == std::vector<std::pair<value_t, value_t>>{{1.0, 2.0}});
    REQUIRE(d.degree(0).essential == std::vector<value_t>{0.0});
    REQUIRE(d.degree(1).empty());
}

TEST_CASE("zero-persistence pairs are dropped") {
    const filtered_complex fc = build_filtered_complex(
        make_complex(3, {{0, 1}, {1, 2}}), make_vertex_function(1, {{0.0}, {1.0}, {2.0}}));
    const persistence_diagram d = compute_persistence(classical(fc), make_field(2));
    REQUIRE(d.degree(0).pairs.empty());
    REQUIRE(d.degree(0).essential == std::vector<value_t>{0.0});
}

TEST_CASE("a cone filled later yields a finite degree-1 pair") {
    const simplicial_complex k =
        make_complex(5, {{0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {0, 3, 4}});
    const filtered_complex fc = build_filtered_complex(
        k, make_vertex_function(1, {{0.0}, {0.0}, {0.0}, {0.0}, {1.0}}));
    const persistence_diagram d = compute_persistence(classical(fc), make_field(2));
    REQUIRE(d.degree(1).pairs == std::vector<std::pair<value_t, value_t>>{{0.0, 1.0}});
    REQUIRE(d.degree(1).essential.empty());
    REQUIRE(d.degree(0).essential == std::vector<value_t>{0.0});
    REQUIRE(d.degree(2).empty());
}

TEST_CASE("ties resolve deterministically and match the brute-force oracle") {
    const filtered_complex fc = build_filtered_complex(
        make_complex(3, {{0, 1}, {1, 2}, {0, 2}}),
        make_vertex_function(1, {{0.0}, {0.0}, {0.0}}));
    const orbit_chain_complex occ = classical(fc);
    const persistence_diagram d = compute_persistence(occ, make_field(2));
    REQUIRE(d.degree(0).pairs.empty());
    REQUIRE(d.degree(0).essential == std::vector<value_t>{0.0});
    REQUIRE(d.degree(1).essential == std::vector<value_t>{0.0});
    REQUIRE(d == brute_force_diagram(occ));
}

TEST_CASE("random complexes agree with the brute-force diagram oracle") {
    for (std::uint32_t seed = 500; seed < 530; ++seed) {
        const random_instance inst = gen_random_instance(seed);
        const orbit_chain_complex occ = build_orbit_complex(inst.fc, inst.h);
        REQUIRE(compute_persistence(occ, occ.field) == brute_force_diagram(occ));
    }
}

TEST_CASE("rank queries equal the diagram-derived counts for scalar grades") {
    for (std::uint32_t seed = 1; seed <= 10; ++seed) {
        const random_instance inst = gen_random_instance(seed);
        const orbit_chain_complex occ = build_orbit_complex(inst.fc, inst.h);
        const persistence_diagram d = compute_persistence(occ, occ.field);

        std::vector<value_t> grades;
        for (const auto& layer : occ.basis)
            for (const auto& e : layer) grades.push_back(e.grade[0]);
        std::sort(grades.begin(), grades.end());
        grades.erase(std::unique(grades.begin(), grades.end()), grades.end());

        for (std::size_t i = 0; i < grades.size(); ++i)
            for (std::size_t j = i + 1; j < grades.size(); ++j)
                for (index_t n = 0; n <= occ.dim(); ++n) {
                    const value_t u = grades[i], v = grades[j];
                    long expected = 0;
                    for (const auto& [b, dd] : d.degree(static_cast<std::size_t>(n)).pairs)
                        if (b <= u && v < dd) ++expected;
                    for (value_t b : d.degree(static_cast<std::size_t>(n)).essential)
                        if (b <= u) ++expected;
                    REQUIRE(pbnf_rank(occ, n, {u}, {v}) == expected);
                }
    }
}

TEST_CASE("rank queries support multi-channel grades") {
    const filtered_complex fc = build_filtered_complex(
        make_complex(2, {{0, 1}}), make_vertex_function(2, {{0.0, 0.0}, {1.0, 1.0}}));
    const orbit_chain_complex occ = build_orbit_complex(fc, trivial(2));
    REQUIRE(pbnf_rank(occ, 0, {0.0, 0.0}, {1.0, 1.0}) == 1);
    REQUIRE(pbnf_rank(occ, 0, {0.0, 0.0}, {0.5, 0.5}) == 1);
    REQUIRE(pbnf_rank(occ, 0, {1.0, 1.0}, {2.0, 2.0}) == 1);
    REQUIRE(pbnf_rank(occ, 1, {0.0, 0.0}, {2.0, 2.0}) == 0);
    REQUIRE(pbnf_rank(occ, 5, {0.0, 0.0}, {1.0, 1.0}) == 0);
}

TEST_CASE("rank queries reject malformed thresholds") {
    const filtered_complex fc = build_filtered_complex(
        make_complex(2, {{0, 1}}), make_vertex_function(1, {{0.0}, {1.0}}));
    const orbit_chain_complex occ = build_orbit_complex(fc, trivial(2));
    REQUIRE_THROWS_AS(pbnf_rank(occ, 0, {0.5}, {0.5}), validation_error);
    REQUIRE_THROWS_AS(pbnf_rank(occ, 0, {1.0}, {0.0}), validation_error);
    REQUIRE_THROWS_AS(pbnf_rank(occ, 0, {0.0, 0.0}, {1.0, 1.0}), validation_error);
}

TEST_CASE("scalar-only and field checks on compute_persistence") {
    const filtered_complex fc = build_filtered_complex(
        make_complex(2, {{0, 1}}), make_vertex_function(2, {{0.0, 0.0}, {1.0, 1.0}}));
    const orbit_chain_complex occ = build_orbit_complex(fc, trivial(2));
    REQUIRE_THROWS_AS(compute_persistence(occ, occ.field), validation_error);

    const filtered_complex fc1 = build_filtered_complex(
        make_complex(2, {{0, 1}}), make_vertex_function(1, {{0.0}, {1.0}}));
    const orbit_chain_complex occ1 = build_orbit_complex(fc1, trivial(2));
    REQUIRE_THROWS_AS(compute_persistence(occ1, make_field(3)), validation_error);
}

TEST_CASE("non-filtration grades fail identically through engine and oracle") {
    const orbit_chain_complex occ = broken_filtration();
    const char* msg =
        "sublevel set is not closed under the boundary; grades do not form a filtration";
    REQUIRE_THROWS_AS(compute_persistence(occ, occ.field), validation_error);
    REQUIRE_THROWS_WITH(pbnf_rank(occ, 1, {0.6}, {0.7}), msg);
    REQUIRE_THROWS_WITH(pbnf_rank(occ, 0, {0.6}, {0.7}), msg);
    REQUIRE_THROWS_WITH(brute_force_pbnf(occ, 1, {0.6}, {0.7}), msg);
    REQUIRE_THROWS_WITH(brute_force_pbnf(occ, 0, {0.6}, {0.7}), msg);
}

TEST_CASE("diagrams are field-independent on torsion-free instances") {
    const filtered_complex fc = build_filtered_complex(
        make_complex(6, {{0, 1, 2}, {3, 4, 5}}),
        make_vertex_function(1, {{0.0}, {1.0}, {2.0}, {2.0}, {1.0}, {0.0}}));
    const group_action h = make_group({identity_permutation(6), {5, 4, 3, 2, 1, 0}}, 6);
    const persistence_diagram d2 =
        compute_persistence(build_orbit_complex(fc, h, grade_op::max, make_field(2)),
                            make_field(2));
    const persistence_diagram d3 =
        compute_persistence(build_orbit_complex(fc, h, grade_op::max, make_field(3)),
                            make_field(3));
    REQUIRE(d2 == d3);
}
