#include <catch2/catch_amalgamated.hpp>

#include "symph/complex.hpp"

using namespace symph;

TEST_CASE("make_complex closes top cells under faces") {
    const simplicial_complex k = make_complex(4, {{2, 0, 1}, {3}});
    REQUIRE(k.vertex_count == 4);
    REQUIRE(k.dim() == 2);
    REQUIRE(k.size() == 8);
    REQUIRE(k.cells[0] == std::vector<simplex_t>{{0}, {1}, {2}, {3}});
    REQUIRE(k.cells[1] == std::vector<simplex_t>{{0, 1}, {0, 2}, {1, 2}});
    REQUIRE(k.cells[2] == std::vector<simplex_t>{{0, 1, 2}});
    REQUIRE(k.contains({1, 2}));
    REQUIRE_FALSE(k.contains({1, 3}));
    REQUIRE(k.index_of({0, 2}) == 1);
    REQUIRE(k.index_of({0, 3}) == -1);
}

TEST_CASE("make_complex rejects bad cells") {
    REQUIRE_THROWS_AS(make_complex(2, {{0, 2}}), validation_error);
    REQUIRE_THROWS_AS(make_complex(3, {{-1}}), validation_error);
    REQUIRE_THROWS_AS(make_complex(3, {{0, 0}}), validation_error);
    REQUIRE_THROWS_AS(make_complex(3, {{}}), validation_error);
}

TEST_CASE("make_vertex_function validates arity") {
    REQUIRE_THROWS_AS(make_vertex_function(2, {{0.0, 1.0}, {0.5}}), validation_error);
    REQUIRE_THROWS_AS(make_vertex_function(0, {{}}), validation_error);
    const vertex_function f = make_vertex_function(2, {{0.0, 1.0}, {0.5, -1.0}});
    REQUIRE(f.k == 2);
}

TEST_CASE("grades are componentwise maxima over vertices") {
    const vertex_function f = make_vertex_function(1, {{0.0}, {2.0}, {1.0}});
    REQUIRE(lower_star_grade({0, 2}, f) == grade_t{1.0});
    REQUIRE(lower_star_grade({0, 1, 2}, f) == grade_t{2.0});

    const vertex_function f2 = make_vertex_function(2, {{0.0, 3.0}, {2.0, 1.0}});
    REQUIRE(lower_star_grade({0, 1}, f2) == grade_t{2.0, 3.0});
}

TEST_CASE("build_filtered_complex grades every cell") {
    const simplicial_complex k = make_complex(3, {{0, 1, 2}});
    const filtered_complex fc =
        build_filtered_complex(k, make_vertex_function(1, {{0.0}, {1.0}, {2.0}}));
    REQUIRE(fc.grade_of(1, k.index_of({0, 1})) == grade_t{1.0});
    REQUIRE(fc.grade_of(2, 0) == grade_t{2.0});
    REQUIRE_THROWS_AS(build_filtered_complex(k, make_vertex_function(1, {{0.0}, {1.0}})),
                      validation_error);
}

TEST_CASE("sublevel_complex keeps exactly the cells at or below the threshold") {
    const simplicial_complex k = make_complex(3, {{0, 1, 2}});
    const filtered_complex fc =
        build_filtered_complex(k, make_vertex_function(1, {{0.0}, {1.0}, {2.0}}));
    const simplicial_complex at1 = sublevel_complex(fc, {1.0});
    REQUIRE(at1.cells[0] == std::vector<simplex_t>{{0}, {1}});
    REQUIRE(at1.cells[1] == std::vector<simplex_t>{{0, 1}});
    REQUIRE(at1.dim() == 1);
    const simplicial_complex at2 = sublevel_complex(fc, {2.0});
    REQUIRE(at2 == k);
}

TEST_CASE("barycentric subdivision keeps the vertex values and refines cells") {
    const simplicial_complex k = make_complex(3, {{0, 1, 2}});
    const filtered_complex fc =
        build_filtered_complex(k, make_vertex_function(1, {{0.0}, {1.0}, {2.0}}));
    const subdivision sd = barycentric_subdivide(fc);
    REQUIRE(sd.fc.complex.vertex_count == 7);
    REQUIRE(sd.fc.complex.cells[2].size() == 6);
    REQUIRE(sd.fc.complex.cells[1].size() == 12);

    for (index_t v = 0; v < 3; ++v) {
        const index_t w = sd.vertex_of[0][static_cast<std::size_t>(v)];
        REQUIRE(sd.fc.f.values[static_cast<std::size_t>(w)] ==
                fc.f.values[static_cast<std::size_t>(v)]);
    }
    for (const grade_t& g : sd.fc.f.values) {
        REQUIRE(g[0] >= 0.0);
        REQUIRE(g[0] <= 2.0);
    }
    for (const auto& [d, i] : sd.origin) {
        REQUIRE(d >= 0);
        REQUIRE(d <= 2);
        REQUIRE(i >= 0);
    }
}
