#include <catch2/catch_amalgamated.hpp>

#include "symph/bottleneck.hpp"
#include "symph/io.hpp"
#include "symph/scenarios.hpp"

using namespace symph;

namespace {

persistence_diagram symmetric_diagram(const filtered_complex& fc, const group_action& h) {
    return compute_persistence(build_orbit_complex(fc, h), field_spec{2});
}

std::vector<index_t> global_minima(const vertex_function& f) {
    value_t lo = f.values[0][0];
    for (const grade_t& g : f.values) lo = std::min(lo, g[0]);
    std::vector<index_t> at;
    for (std::size_t v = 0; v < f.values.size(); ++v)
        if (f.values[v][0] == lo) at.push_back(static_cast<index_t>(v));
    return at;
}

bool is_dyadic(value_t v) { return exact_dyadic(v).has_value(); }

}  // namespace

TEST_CASE("circle-rooms structure") {
    const scenario_data s = gen_circle_rooms(12);
    REQUIRE(s.name == "circle-rooms");
    REQUIRE(s.phi.complex.vertex_count == 24);
    REQUIRE(s.phi.complex.cells[1].size() == 24);
    REQUIRE(s.phi.complex == s.psi.complex);
    REQUIRE(s.h.order() == 2);
    REQUIRE(s.g_sample.size() == 24);

    const std::vector<index_t> phi_min = global_minima(s.phi.f);
    REQUIRE(phi_min == std::vector<index_t>{0, 3, 12, 15});
    const std::vector<index_t> psi_min = global_minima(s.psi.f);
    REQUIRE(psi_min == std::vector<index_t>{0, 3, 10, 14});

    // phi bottoms out on exactly two antipodal pairs; psi on none
    auto antipodal_pairs = [](const std::vector<index_t>& at, index_t n) {
        int count = 0;
        for (index_t x : at)
            for (index_t y : at)
                if (y == (x + n) % (2 * n) && x < y) ++count;
        return count;
    };
    REQUIRE(antipodal_pairs(phi_min, 12) == 2);
    REQUIRE(antipodal_pairs(psi_min, 12) == 0);

    value_t max_phi = -2.0, max_psi = -2.0;
    for (const grade_t& g : s.phi.f.values) max_phi = std::max(max_phi, g[0]);
    for (const grade_t& g : s.psi.f.values) max_psi = std::max(max_psi, g[0]);
    REQUIRE(max_phi == -0.5);
    REQUIRE(max_psi == -0.5);

    for (const grade_t& g : s.phi.f.values) REQUIRE(is_dyadic(g[0]));
    for (const grade_t& g : s.psi.f.values) REQUIRE(is_dyadic(g[0]));

    REQUIRE(is_permutation(s.witness, 24));
    for (index_t v = 0; v < 24; ++v)
        REQUIRE(s.phi.f.values[static_cast<std::size_t>(v)] ==
                s.psi.f.values[static_cast<std::size_t>(s.witness[static_cast<std::size_t>(v)])]);
}

TEST_CASE("circle-rooms symmetric diagrams hit their frozen values") {
    const scenario_data s = gen_circle_rooms(12);
    const persistence_diagram dphi = symmetric_diagram(s.phi, s.h);
    const persistence_diagram dpsi = symmetric_diagram(s.psi, s.h);

    REQUIRE(dphi.degree(0).pairs ==
            std::vector<std::pair<value_t, value_t>>{{-1.0, -0.5}});
    REQUIRE(dphi.degree(0).essential == std::vector<value_t>{-1.0});
    REQUIRE(dphi.degree(1).essential == std::vector<value_t>{-0.5});

    REQUIRE(dpsi.degree(0).pairs ==
            std::vector<std::pair<value_t, value_t>>{{-0.9375, -0.5}, {-0.9375, -0.5}});
    REQUIRE(dpsi.degree(0).essential == std::vector<value_t>{-0.9375});
    REQUIRE(dpsi.degree(1).essential == std::vector<value_t>{-0.5});

    const matching_result b0 = bottleneck_distance(dphi.degree(0), dpsi.degree(0));
    REQUIRE(b0.value == 0.21875);  // 7/32
}

TEST_CASE("two-spheres structure") {
    const scenario_data s = gen_two_spheres(3, 12);
    REQUIRE(s.name == "two-spheres");
    REQUIRE(s.phi.complex.vertex_count == 124);
    REQUIRE(s.phi.complex.size() == 724);
    REQUIRE(s.h.order() == 2);
    REQUIRE(s.g_sample.size() == 48);
    REQUIRE(s.g_sample[0] == identity_permutation(124));

    const action_report rep = validate_action(s.phi.complex, s.h);
    REQUIRE(rep.valid_for_orbit_complex());
    REQUIRE(rep.regular);
    for (const vertex_permutation& g : s.g_sample)
        REQUIRE(is_simplicial_automorphism(s.phi.complex, g));

    // one mesh copy carries the geometry; the two components appear as channels
    REQUIRE(s.points.size() == 62);
    REQUIRE(s.phi_channels.size() == 2);
    REQUIRE(s.phi_channels[0].size() == 62);
    REQUIRE(s.phi_channels[1].size() == 62);
    REQUIRE(s.psi_channels.size() == 2);
    for (index_t v = 0; v < 124; ++v)
        REQUIRE(s.phi.f.values[static_cast<std::size_t>(v)] ==
                s.psi.f.values[static_cast<std::size_t>(s.witness[static_cast<std::size_t>(v)])]);
}

TEST_CASE("two-spheres symmetric diagrams hit their frozen values") {
    const scenario_data s = gen_two_spheres(3, 12);
    const persistence_diagram dphi = symmetric_diagram(s.phi, s.h);
    const persistence_diagram dpsi = symmetric_diagram(s.psi, s.h);

    REQUIRE(dphi.degree(0).pairs.empty());
    REQUIRE(dphi.degree(0).essential == std::vector<value_t>{-1.0});
    REQUIRE(dphi.degree(1).empty());
    REQUIRE(dphi.degree(2).essential == std::vector<value_t>{1.0});

    REQUIRE(dpsi.degree(0).pairs.empty());
    REQUIRE(dpsi.degree(0).essential == std::vector<value_t>{0.0});
    REQUIRE(dpsi.degree(1).pairs ==
            std::vector<std::pair<value_t, value_t>>{{0.0, 1.0}});
    REQUIRE(dpsi.degree(1).essential.empty());
    REQUIRE(dpsi.degree(2).essential == std::vector<value_t>{1.0});
}

TEST_CASE("generators are deterministic down to the serialized bytes") {
    const scenario_data a = gen_circle_rooms(12), b = gen_circle_rooms(12);
    REQUIRE(a.phi.complex == b.phi.complex);
    REQUIRE(a.phi.f == b.phi.f);
    REQUIRE(a.psi.f == b.psi.f);
    REQUIRE(a.h.elements == b.h.elements);
    REQUIRE(a.g_sample == b.g_sample);
    REQUIRE(a.witness == b.witness);
    REQUIRE(complex_to_json(a.phi.complex).dump(2) == complex_to_json(b.phi.complex).dump(2));
    REQUIRE(values_to_json(a.psi.f).dump(2) == values_to_json(b.psi.f).dump(2));

    const scenario_data c = gen_two_spheres(3, 12), d = gen_two_spheres(3, 12);
    REQUIRE(c.phi.f == d.phi.f);
    REQUIRE(c.g_sample == d.g_sample);
    REQUIRE(sample_to_json(c.g_sample).dump(2) == sample_to_json(d.g_sample).dump(2));
}

TEST_CASE("scenario parameter validation") {
    REQUIRE_THROWS_AS(gen_circle_rooms(7), validation_error);
    REQUIRE_THROWS_AS(gen_circle_rooms(6), validation_error);
    REQUIRE_THROWS_AS(gen_two_spheres(1, 12), validation_error);
    REQUIRE_THROWS_AS(gen_two_spheres(3, 2), validation_error);
}

TEST_CASE("random instances are seeded, bounded, and dyadic") {
    for (std::uint32_t seed = 1; seed <= 50; ++seed) {
        const random_instance a = gen_random_instance(seed);
        const random_instance b = gen_random_instance(seed);
        REQUIRE(a.fc == b.fc);
        REQUIRE(a.fc.complex.size() <= 30);
        REQUIRE(a.h.order() == 1);
        for (const grade_t& g : a.fc.f.values) {
            REQUIRE(g[0] >= -1.0);
            REQUIRE(g[0] <= 1.0);
            REQUIRE(is_dyadic(g[0]));
        }
    }
    REQUIRE_FALSE(gen_random_instance(1).fc == gen_random_instance(2).fc);
}

TEST_CASE("doubled instances carry a valid swap action") {
    const random_instance base = gen_random_instance(9);
    const random_instance dbl = doubled_instance(base.fc);
    REQUIRE(dbl.fc.complex.vertex_count == 2 * base.fc.complex.vertex_count);
    REQUIRE(dbl.fc.complex.size() == 2 * base.fc.complex.size());
    REQUIRE(dbl.h.order() == 2);
    REQUIRE(validate_action(dbl.fc.complex, dbl.h).valid_for_orbit_complex());
    REQUIRE(validate_action(dbl.fc.complex, dbl.h).regular);
}
