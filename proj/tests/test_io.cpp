#include <cstdio>

#include <catch2/catch_amalgamated.hpp>

#include "symph/io.hpp"
#include "symph/scenarios.hpp"

using namespace symph;

TEST_CASE("complexes round-trip through JSON via their maximal cells") {
    const simplicial_complex k = make_complex(5, {{0, 1, 2}, {2, 3}, {4}});
    const json j = complex_to_json(k);
    REQUIRE(j["vertices"] == 5);
    REQUIRE(j["simplices"].size() == 3);
    REQUIRE(complex_from_json(j) == k);
}

TEST_CASE("vertex values round-trip for scalar and tuple arities") {
    const vertex_function f1 = make_vertex_function(1, {{0.5}, {-1.0}});
    REQUIRE(values_from_json(values_to_json(f1)) == f1);

    const vertex_function f2 = make_vertex_function(2, {{0.5, 1.0}, {-1.0, 0.0}});
    REQUIRE(values_from_json(values_to_json(f2)) == f2);

    // bare arrays and scalar entries are accepted on input
    REQUIRE(values_from_json(json::parse("[0.5, -1.0]")) == f1);
}

TEST_CASE("groups round-trip and can be given by generators") {
    const group_action h = enumerate_group({{1, 2, 3, 0}}, 4);
    REQUIRE(group_from_json(group_to_json(h), 4).elements == h.elements);

    const json gens = {{"generators", {{1, 2, 3, 0}}}};
    REQUIRE(group_from_json(gens, 4).order() == 4);

    const json capped = {{"generators", {{1, 2, 3, 0}}}, {"cap", 3}};
    REQUIRE_THROWS_AS(group_from_json(capped, 4), validation_error);

    REQUIRE_THROWS_AS(group_from_json(json::object(), 4), io_error);
}

TEST_CASE("samples round-trip and accept bare arrays") {
    const std::vector<vertex_permutation> sample{{0, 1}, {1, 0}};
    REQUIRE(sample_from_json(sample_to_json(sample)) == sample);
    REQUIRE(sample_from_json(json::parse("[[0,1],[1,0]]")) == sample);
}

TEST_CASE("diagrams round-trip with their metadata") {
    persistence_diagram d{make_field(3), grade_op::max,
                          {degree_diagram{{{0.0, 1.0}}, {0.0}}, degree_diagram{{}, {0.5}}}};
    const json j = diagram_to_json(d);
    REQUIRE(j["meta"]["field"] == 3);
    REQUIRE(j["meta"]["operator"] == "max");
    const persistence_diagram back = diagram_from_json(j);
    REQUIRE(back == d);
    REQUIRE(back.field.p == 3);
    REQUIRE(back.op == grade_op::max);
}

TEST_CASE("CSV output lists pairs then essentials per degree") {
    const persistence_diagram d{make_field(2), grade_op::max,
                                {degree_diagram{{{0.0, 1.0}}, {0.0}},
                                 degree_diagram{{}, {0.5}}}};
    REQUIRE(diagram_to_csv(d) == "degree,birth,death\n0,0,1\n0,0,inf\n1,0.5,inf\n");
}

TEST_CASE("malformed inputs raise I/O errors with context") {
    REQUIRE_THROWS_AS(load_json_file("/nonexistent/path.json"), io_error);
    REQUIRE_THROWS_AS(complex_from_json(json::parse("{\"simplices\": []}")), io_error);
    REQUIRE_THROWS_AS(complex_from_json(json::parse("{\"vertices\": \"x\"}")), io_error);
    REQUIRE_THROWS_AS(diagram_from_json(json::parse("{\"degree_0\": {}}")), io_error);
    REQUIRE_THROWS_AS(diagram_from_json(json::parse(
                          "{\"meta\": {\"field\": 2, \"operator\": \"max\"}, "
                          "\"degree_x\": {\"pairs\": [], \"essential\": []}}")),
                      io_error);

    const std::string path = "/tmp/symph_io_bad.json";
    save_text_file(path, "{ not json");
    REQUIRE_THROWS_AS(load_json_file(path), io_error);
    std::remove(path.c_str());
}

TEST_CASE("scenario files round-trip to the generated objects") {
    const scenario_data s = gen_circle_rooms(12);
    REQUIRE(complex_from_json(complex_to_json(s.phi.complex)) == s.phi.complex);
    REQUIRE(values_from_json(values_to_json(s.psi.f)) == s.psi.f);
    REQUIRE(group_from_json(group_to_json(s.h), 24).elements == s.h.elements);
    REQUIRE(sample_from_json(sample_to_json(s.g_sample)) == s.g_sample);
}

TEST_CASE("dyadic values print as exact rationals") {
    REQUIRE(exact_dyadic(0.0) == "0");
    REQUIRE(exact_dyadic(3.0) == "3");
    REQUIRE(exact_dyadic(0.5) == "1/2");
    REQUIRE(exact_dyadic(-0.9375) == "-15/16");
    REQUIRE(exact_dyadic(0.21875) == "7/32");
    REQUIRE_FALSE(exact_dyadic(1.0 / 3.0).has_value());
    REQUIRE_FALSE(exact_dyadic(std::numeric_limits<value_t>::infinity()).has_value());
}
