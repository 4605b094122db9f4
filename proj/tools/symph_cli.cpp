#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symph/symph.hpp"

namespace {

using namespace symph;

std::string fmt12(value_t v) {
    if (std::isinf(v)) return "inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

/// 12-significant-digit rendering, with the exact rational alongside when the
/// value is a dyadic that the decimal form does not already spell out.
std::string with_exact(value_t v) {
    std::string s = fmt12(v);
    if (const auto r = exact_dyadic(v); r && *r != s) s += " (= " + *r + ")";
    return s;
}

struct common_flags {
    std::uint32_t field_p = 2;
    std::string op_name = "max";
    std::string out_path;
    std::string format = "json";
};

void add_field_flag(CLI::App* cmd, common_flags& fl) {
    cmd->add_option("--field", fl.field_p, "coefficient field GF(p), p prime")
        ->default_val(std::uint32_t{2});
}

void add_operator_flag(CLI::App* cmd, common_flags& fl) {
    cmd->add_option("--operator", fl.op_name, "orbit grade operator")
        ->check(CLI::IsMember({"max", "mean"}))
        ->default_val("max");
}

grade_op parse_op(const common_flags& fl) {
    return fl.op_name == "mean" ? grade_op::mean : grade_op::max;
}

vertex_function load_values(const json& complex_json, const std::string& values_path) {
    if (!values_path.empty()) return values_from_json(load_json_file(values_path));
    if (complex_json.contains("values")) return values_from_json(complex_json);
    throw io_error("no vertex values: pass --values or embed \"values\" in the complex file");
}

orbit_chain_complex load_orbit_complex(const std::string& complex_path,
                                       const std::string& values_path,
                                       const std::string& group_path, const common_flags& fl) {
    const json cj = load_json_file(complex_path);
    const simplicial_complex cx = complex_from_json(cj);
    const vertex_function f = load_values(cj, values_path);
    const group_action h = group_path.empty()
                               ? make_group({identity_permutation(cx.vertex_count)},
                                            cx.vertex_count)
                               : group_from_json(load_json_file(group_path), cx.vertex_count);
    return build_orbit_complex(build_filtered_complex(cx, f), h, parse_op(fl),
                               make_field(fl.field_p));
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty())
        std::fputs(text.c_str(), stdout);
    else
        save_text_file(out_path, text);
}

int run_compute(const std::string& complex_path, const std::string& values_path,
                const std::string& group_path, const common_flags& fl) {
    const orbit_chain_complex occ =
        load_orbit_complex(complex_path, values_path, group_path, fl);
    const persistence_diagram d = compute_persistence(occ, occ.field);
    emit(fl.out_path,
         fl.format == "csv" ? diagram_to_csv(d) : diagram_to_json(d).dump(2) + "\n");
    return 0;
}

int run_bottleneck(const std::string& a_path, const std::string& b_path,
                   const std::vector<index_t>& degrees_flag) {
    const persistence_diagram a = diagram_from_json(load_json_file(a_path));
    const persistence_diagram b = diagram_from_json(load_json_file(b_path));
    const std::vector<index_t> degrees =
        degrees_flag.empty() ? all_degrees(a, b) : degrees_flag;
    const aggregate_result agg = aggregate_bottleneck(a, b, degrees);
    for (const auto& [n, r] : agg.per_degree)
        std::printf("degree %d: %s\n", n, r.infinite ? "inf" : with_exact(r.value).c_str());
    std::printf("%s\n", agg.infinite ? "inf" : with_exact(agg.value).c_str());
    return 0;
}

int run_dg_bound(const std::string& complex_path, const std::string& values_a,
                 const std::string& values_b, const std::string& sample_path) {
    const json cj = load_json_file(complex_path);
    const simplicial_complex cx = complex_from_json(cj);
    const filtered_complex fa =
        build_filtered_complex(cx, values_from_json(load_json_file(values_a)));
    const filtered_complex fb =
        build_filtered_complex(cx, values_from_json(load_json_file(values_b)));
    const std::vector<vertex_permutation> sample =
        sample_from_json(load_json_file(sample_path));
    const sampled_bound b = dG_upper_bound(fa, fb, sample);
    std::printf("%s\n", with_exact(b.value).c_str());
    std::printf("argmin: sample[%zu]\n", b.argmin);
    return 0;
}

int run_pbnf(const std::string& complex_path, const std::string& values_path,
             const std::string& group_path, const common_flags& fl, index_t degree,
             const std::vector<value_t>& u, const std::vector<value_t>& v) {
    const orbit_chain_complex occ =
        load_orbit_complex(complex_path, values_path, group_path, fl);
    std::printf("%ld\n", pbnf_rank(occ, degree, u, v));
    return 0;
}

int run_scenario(const std::string& name, const std::string& out_dir, index_t circle_n,
                 index_t rings, index_t longitudes) {
    scenario_data s;
    if (name == "circle-rooms")
        s = gen_circle_rooms(circle_n);
    else if (name == "two-spheres")
        s = gen_two_spheres(rings, longitudes);
    else
        throw io_error("unknown scenario \"" + name +
                       "\"; available: circle-rooms, two-spheres");
    std::filesystem::create_directories(out_dir);
    const auto path = [&out_dir](const char* file) {
        return (std::filesystem::path(out_dir) / file).string();
    };
    save_text_file(path("complex.json"), complex_to_json(s.phi.complex).dump(2) + "\n");
    save_text_file(path("values-phi.json"), values_to_json(s.phi.f).dump(2) + "\n");
    save_text_file(path("values-psi.json"), values_to_json(s.psi.f).dump(2) + "\n");
    save_text_file(path("group.json"), group_to_json(s.h).dump(2) + "\n");
    save_text_file(path("sample.json"), sample_to_json(s.g_sample).dump(2) + "\n");
    save_text_file(path("witness.json"), json{{"witness", s.witness}}.dump(2) + "\n");
    std::printf("wrote %s scenario to %s\n", s.name.c_str(), out_dir.c_str());
    return 0;
}

int run_verify(const std::string& report_path) {
    const std::vector<check_result> results = run_acceptance();
    bool all = true;
    for (const check_result& r : results) {
        std::printf("[%s] %s%s%s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.empty() ? "" : ": ", r.detail.c_str());
        all = all && r.pass;
    }
    if (!report_path.empty())
        save_text_file(report_path, acceptance_report(results).dump(2) + "\n");
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"persistence of symmetric scalar fields: diagrams, matching "
                 "distances, and pseudo-distance bounds"};
    app.require_subcommand(1);

    common_flags fl;
    std::string complex_path, values_path, group_path;
    std::string values_a, values_b, sample_path;
    std::string diagram_a, diagram_b;
    std::vector<index_t> degrees_flag;
    index_t pbnf_degree = 0;
    std::vector<value_t> pbnf_u, pbnf_v;
    std::string scenario_name, report_path;
    index_t circle_n = 12, rings = 3, longitudes = 12;

    CLI::App* compute = app.add_subcommand(
        "compute", "persistence diagram of a filtered complex with a symmetry group");
    compute->add_option("--complex", complex_path, "complex JSON")->required();
    compute->add_option("--values", values_path, "vertex values JSON");
    compute->add_option("--group", group_path, "symmetry group JSON (default: trivial)");
    add_field_flag(compute, fl);
    add_operator_flag(compute, fl);
    compute->add_option("--out", fl.out_path, "output path (default: stdout)");
    compute->add_option("--format", fl.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->default_val("json");

    CLI::App* bottleneck =
        app.add_subcommand("bottleneck", "matching distance between two diagrams");
    bottleneck->add_option("--a", diagram_a, "first diagram JSON")->required();
    bottleneck->add_option("--b", diagram_b, "second diagram JSON")->required();
    bottleneck->add_option("--degrees", degrees_flag, "degrees to compare (default: all)")
        ->delimiter(',');

    CLI::App* dg = app.add_subcommand(
        "dg-bound", "sampled upper bound for the symmetry-invariant pseudo-distance");
    dg->add_option("--complex", complex_path, "complex JSON")->required();
    dg->add_option("--values-a", values_a, "first vertex values JSON")->required();
    dg->add_option("--values-b", values_b, "second vertex values JSON")->required();
    dg->add_option("--group-sample", sample_path, "sampled symmetries JSON")->required();

    CLI::App* pbnf = app.add_subcommand(
        "pbnf", "persistent Betti number at one threshold pair (u, v)");
    pbnf->add_option("--complex", complex_path, "complex JSON")->required();
    pbnf->add_option("--values", values_path, "vertex values JSON");
    pbnf->add_option("--group", group_path, "symmetry group JSON (default: trivial)");
    pbnf->add_option("--degree", pbnf_degree, "homology degree")->required();
    pbnf->add_option("--u", pbnf_u, "lower threshold (comma-separated for k > 1)")
        ->delimiter(',')
        ->required();
    pbnf->add_option("--v", pbnf_v, "upper threshold (comma-separated for k > 1)")
        ->delimiter(',')
        ->required();
    add_field_flag(pbnf, fl);
    add_operator_flag(pbnf, fl);

    CLI::App* scenario =
        app.add_subcommand("scenario", "write a built-in scenario as JSON files");
    scenario->add_option("name", scenario_name, "circle-rooms or two-spheres")->required();
    scenario->add_option("--out", fl.out_path, "output directory")->required();
    scenario->add_option("--n", circle_n, "circle-rooms: half the vertex count (even, >= 8)");
    scenario->add_option("--rings", rings, "two-spheres: latitude rings per hemisphere");
    scenario->add_option("--longitudes", longitudes, "two-spheres: vertices per ring");

    CLI::App* verify = app.add_subcommand("verify", "run the acceptance suite");
    verify->add_option("--report", report_path, "write a machine-readable report JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*compute) return run_compute(complex_path, values_path, group_path, fl);
        if (*bottleneck) return run_bottleneck(diagram_a, diagram_b, degrees_flag);
        if (*dg) return run_dg_bound(complex_path, values_a, values_b, sample_path);
        if (*pbnf)
            return run_pbnf(complex_path, values_path, group_path, fl, pbnf_degree, pbnf_u,
                            pbnf_v);
        if (*scenario)
            return run_scenario(scenario_name, fl.out_path, circle_n, rings, longitudes);
        if (*verify) return run_verify(report_path);
    } catch (const validation_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const io_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
