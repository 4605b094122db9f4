#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "symph/bottleneck.hpp"
#include "symph/io.hpp"
#include "symph/oracles.hpp"
#include "symph/persistence.hpp"
#include "symph/pseudo_distance.hpp"
#include "symph/scenarios.hpp"

namespace symph {

struct check_result {
    std::string name;
    bool pass = true;
    std::string detail;
};

namespace detail {

struct checker {
    check_result res;
    int failures = 0;

    explicit checker(std::string name) { res.name = std::move(name); }

    void expect(bool ok, const std::string& what) {
        if (ok) return;
        res.pass = false;
        ++failures;
        if (failures <= 8) {
            if (!res.detail.empty()) res.detail += "; ";
            res.detail += what;
        } else if (failures == 9) {
            res.detail += "; (further failures omitted)";
        }
    }

    void note(const std::string& summary) {
        if (res.pass) res.detail = summary;
    }
};

inline group_action trivial_group(index_t n) {
    return make_group({identity_permutation(n)}, n);
}

inline persistence_diagram orbit_diagram(const filtered_complex& fc, const group_action& h,
                                         grade_op op = grade_op::max,
                                         field_spec field = field_spec{}) {
    return compute_persistence(build_orbit_complex(fc, h, op, field), field);
}

inline std::vector<value_t> distinct_grades(const orbit_chain_complex& occ) {
    std::vector<value_t> g;
    for (const auto& layer : occ.basis)
        for (const auto& e : layer) g.push_back(e.grade[0]);
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
}

}  // namespace detail

/// Two-spheres symmetric diagrams in degree 1: the second field carries
/// exactly the point (0,1), the first carries nothing, and their bottleneck
/// distance is exactly 1/2.
inline check_result acceptance_two_spheres_degree1() {
    detail::checker c("two-spheres degree-1 diagram");
    const scenario_data s = gen_two_spheres(3, 12);
    const persistence_diagram dphi = detail::orbit_diagram(s.phi, s.h);
    const persistence_diagram dpsi = detail::orbit_diagram(s.psi, s.h);
    const degree_diagram expected{{{0.0, 1.0}}, {}};
    c.expect(dpsi.degree(1) == expected, "second-field degree-1 diagram is not {(0,1)}");
    c.expect(dphi.degree(1).empty(), "first-field degree-1 diagram is not empty");
    const matching_result m = bottleneck_distance(dphi.degree(1), dpsi.degree(1));
    c.expect(!m.infinite && m.value == 0.5, "degree-1 bottleneck is not exactly 1/2");
    c.note("degree-1 diagrams {(0,1)} vs empty, bottleneck exactly 1/2");
    return c.res;
}

/// Two-spheres sandwich: aggregate bottleneck over degrees 0-1 equals 1
/// exactly and stays below the rotation-sampled upper bound, which lands in
/// the window predicted by dense pre-sampling.
inline check_result acceptance_two_spheres_sandwich() {
    detail::checker c("two-spheres stability sandwich");
    const scenario_data s = gen_two_spheres(3, 12);
    const persistence_diagram dphi = detail::orbit_diagram(s.phi, s.h);
    const persistence_diagram dpsi = detail::orbit_diagram(s.psi, s.h);
    c.expect(dphi.degree(0).essential == std::vector<value_t>{-1.0},
             "first-field degree-0 essential births are not {-1}");
    c.expect(dpsi.degree(0).essential == std::vector<value_t>{0.0},
             "second-field degree-0 essential births are not {0}");
    const aggregate_result agg = aggregate_bottleneck(dphi, dpsi, {0, 1});
    c.expect(!agg.infinite && agg.value == 1.0,
             "aggregate bottleneck over degrees 0-1 is not exactly 1");
    const sampled_bound b =
        dg_upper_bound_sampled(s.points, s.phi_channels, s.psi_channels, axis_step_rotations());
    c.expect(b.value >= 1.39 && b.value <= std::sqrt(2.0) + 1e-9,
             "rotation-sampled upper bound " + detail::shortest(b.value) +
                 " is outside [1.39, sqrt(2)+1e-9]");
    c.expect(agg.value <= b.value, "lower bound exceeds the sampled upper bound");
    c.note("aggregate bottleneck 1 <= sampled bound " + detail::shortest(b.value));
    return c.res;
}

/// Circle-rooms separation: the classical diagrams of the two fields agree
/// and the designed witness certifies classical pseudo-distance 0, yet the
/// symmetric degree-0 diagrams separate the fields by at least the gap of
/// the brute-forced antipodal-pair births, which the sampled upper bound
/// dominates; degree-1 symmetric diagrams still agree, and the degree-0 rank
/// function attains the value 2 on a nonempty grid region.
inline check_result acceptance_circle_separation() {
    detail::checker c("circle-rooms separation");
    const scenario_data s = gen_circle_rooms(12);
    const index_t N = s.phi.complex.vertex_count;
    const group_action triv = detail::trivial_group(N);

    const persistence_diagram dphi_cl = detail::orbit_diagram(s.phi, triv);
    const persistence_diagram dpsi_cl = detail::orbit_diagram(s.psi, triv);
    c.expect(dphi_cl == dpsi_cl, "classical diagrams differ");
    const aggregate_result agg0 =
        aggregate_bottleneck(dphi_cl, dpsi_cl, all_degrees(dphi_cl, dpsi_cl));
    c.expect(!agg0.infinite && agg0.value == 0.0, "classical bottleneck is not 0");
    c.expect(classical_dHomeo_witness(s.phi, s.psi, s.witness) == 0.0,
             "designed witness does not certify value 0");

    const index_t half = N / 2;
    value_t t0 = std::numeric_limits<value_t>::infinity();
    value_t tbar = std::numeric_limits<value_t>::infinity();
    for (index_t x = 0; x < N; ++x) {
        const index_t y = (x + half) % N;
        t0 = std::min(t0, std::max(s.phi.f.values[static_cast<std::size_t>(x)][0],
                                   s.phi.f.values[static_cast<std::size_t>(y)][0]));
        tbar = std::min(tbar, std::max(s.psi.f.values[static_cast<std::size_t>(x)][0],
                                       s.psi.f.values[static_cast<std::size_t>(y)][0]));
    }
    c.expect(t0 < tbar, "antipodal-pair births do not separate");

    const persistence_diagram dphi_s = detail::orbit_diagram(s.phi, s.h);
    const persistence_diagram dpsi_s = detail::orbit_diagram(s.psi, s.h);
    c.expect(dphi_s.degree(0).essential == std::vector<value_t>{t0},
             "symmetric degree-0 essential birth of the first field is not t0");
    c.expect(dpsi_s.degree(0).essential == std::vector<value_t>{tbar},
             "symmetric degree-0 essential birth of the second field is not tbar");
    const matching_result b0 = bottleneck_distance(dphi_s.degree(0), dpsi_s.degree(0));
    c.expect(!b0.infinite && b0.value >= tbar - t0 && tbar - t0 > 0,
             "degree-0 bottleneck does not certify the gap");
    const sampled_bound dg = dG_upper_bound(s.phi, s.psi, s.g_sample);
    c.expect(tbar - t0 <= dg.value, "gap exceeds the sampled upper bound");
    c.expect(dphi_s.degree(1) == dpsi_s.degree(1), "symmetric degree-1 diagrams differ");

    const orbit_chain_complex occ = build_orbit_complex(s.phi, s.h);
    const std::vector<value_t> grades = detail::distinct_grades(occ);
    bool rank2 = false;
    for (std::size_t i = 0; i < grades.size() && !rank2; ++i)
        for (std::size_t j = i + 1; j < grades.size() && !rank2; ++j)
            rank2 = pbnf_rank(occ, 0, {grades[i]}, {grades[j]}) == 2;
    c.expect(rank2, "degree-0 rank never attains 2 on the grade grid");

    c.note("classical sides equal, symmetric births " + detail::shortest(t0) + " vs " +
           detail::shortest(tbar) + ", degree-0 bottleneck " + detail::shortest(b0.value) +
           " <= sampled bound " + detail::shortest(dg.value));
    return c.res;
}

/// Reparametrization invariance: pulling either field back along any sampled
/// symmetry that conjugates H into itself leaves the symmetric diagrams
/// unchanged, for at least 20 distinct sample elements per scenario.
inline check_result acceptance_invariance() {
    detail::checker c("reparametrization invariance");
    const scenario_data scenarios[] = {gen_circle_rooms(12), gen_two_spheres(3, 12)};
    for (const scenario_data& s : scenarios) {
        const persistence_diagram base_phi = detail::orbit_diagram(s.phi, s.h);
        const persistence_diagram base_psi = detail::orbit_diagram(s.psi, s.h);
        int tested = 0;
        for (const vertex_permutation& g : s.g_sample) {
            if (!check_conjugation_closure(s.h, {g}).closed) continue;
            ++tested;
            c.expect(detail::orbit_diagram(apply_group_element(s.phi, g), s.h) == base_phi,
                     s.name + ": first-field diagram changed under a sampled symmetry");
            c.expect(detail::orbit_diagram(apply_group_element(s.psi, g), s.h) == base_psi,
                     s.name + ": second-field diagram changed under a sampled symmetry");
        }
        c.expect(tested >= 20,
                 s.name + ": only " + std::to_string(tested) + " conjugation-closed elements");
    }
    c.note("diagrams invariant under all conjugation-closed sample elements");
    return c.res;
}

/// Oracle agreement: the engine's rank queries match dense brute force on a
/// 10x10 threshold grid per scenario field, and engine diagrams match
/// brute-force diagrams on 200 seeded random complexes.
inline check_result acceptance_oracle_agreement() {
    detail::checker c("oracle agreement");
    const scenario_data scenarios[] = {gen_circle_rooms(12), gen_two_spheres(3, 12)};
    for (const scenario_data& s : scenarios) {
        for (const filtered_complex* fc : {&s.phi, &s.psi}) {
            const orbit_chain_complex occ = build_orbit_complex(*fc, s.h);
            const std::vector<value_t> g = detail::distinct_grades(occ);
            const value_t lo = g.front(), hi = g.back();
            std::vector<value_t> ladder(10);
            for (int i = 0; i < 10; ++i) ladder[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / 9;
            for (value_t u : ladder)
                for (value_t v : ladder) {
                    if (!(u < v)) continue;
                    for (index_t n = 0; n <= occ.dim(); ++n)
                        c.expect(pbnf_rank(occ, n, {u}, {v}) == brute_force_pbnf(occ, n, {u}, {v}),
                                 s.name + ": rank mismatch at (" + detail::shortest(u) + ", " +
                                     detail::shortest(v) + "), degree " + std::to_string(n));
                }
        }
    }
    for (std::uint32_t seed = 1; seed <= 200; ++seed) {
        const random_instance inst = gen_random_instance(seed);
        const orbit_chain_complex occ = build_orbit_complex(inst.fc, inst.h);
        c.expect(compute_persistence(occ, occ.field) == brute_force_diagram(occ),
                 "diagram mismatch on seed " + std::to_string(seed));
    }
    c.note("rank grids and 200 seeded diagrams agree exactly");
    return c.res;
}

/// Quotient equivalence: the symmetric-chain route and the quotient-complex
/// route produce identical diagrams on both scenarios and on 100 seeded
/// doubled complexes with the swap action.
inline check_result acceptance_quotient_equivalence() {
    detail::checker c("quotient equivalence");
    auto both_routes_agree = [&c](const filtered_complex& fc, const group_action& h,
                                  const std::string& tag) {
        const persistence_diagram via_orbit = detail::orbit_diagram(fc, h);
        const quotient_result qr = quotient_complex(fc.complex, h);
        const filtered_complex qfc =
            build_filtered_complex(qr.complex, quotient_function(qr, fc.f));
        const persistence_diagram via_quotient =
            detail::orbit_diagram(qfc, detail::trivial_group(qr.complex.vertex_count));
        c.expect(via_orbit == via_quotient, tag + ": routes disagree");
    };
    const scenario_data scenarios[] = {gen_circle_rooms(12), gen_two_spheres(3, 12)};
    for (const scenario_data& s : scenarios) {
        both_routes_agree(s.phi, s.h, s.name + " first field");
        both_routes_agree(s.psi, s.h, s.name + " second field");
    }
    for (std::uint32_t seed = 1; seed <= 100; ++seed) {
        const random_instance dbl = doubled_instance(gen_random_instance(seed).fc);
        both_routes_agree(dbl.fc, dbl.h, "doubled seed " + std::to_string(seed));
    }
    c.note("orbit and quotient routes agree on scenarios and 100 doubled instances");
    return c.res;
}

/// Structural invariants: composed boundaries vanish over GF(2) and GF(3),
/// grades are monotone along boundaries under the max operator, and diagrams
/// survive barycentric subdivision on 50 seeded instances.
inline check_result acceptance_structural() {
    detail::checker c("structural invariants");
    auto dd_zero = [&c](const orbit_chain_complex& occ, const std::string& tag) {
        for (std::size_t d = 2; d < occ.boundary.size(); ++d)
            for (std::size_t j = 0; j < occ.boundary[d].size(); ++j) {
                std::vector<std::uint32_t> acc(occ.basis[d - 2].size(), 0);
                for (const auto& [r1, c1] : occ.boundary[d][j])
                    for (const auto& [r0, c0] : occ.boundary[d - 1][static_cast<std::size_t>(r1)])
                        acc[static_cast<std::size_t>(r0)] =
                            fp_add(acc[static_cast<std::size_t>(r0)],
                                   fp_mul(c1, c0, occ.field), occ.field);
                for (std::uint32_t a : acc)
                    c.expect(a == 0, tag + ": boundary of boundary is nonzero");
            }
    };
    auto monotone = [&c](const orbit_chain_complex& occ, const std::string& tag) {
        for (std::size_t d = 1; d < occ.boundary.size(); ++d)
            for (std::size_t j = 0; j < occ.boundary[d].size(); ++j)
                for (const auto& [row, coeff] : occ.boundary[d][j]) {
                    (void)coeff;
                    c.expect(grade_leq(occ.basis[d - 1][static_cast<std::size_t>(row)].grade,
                                       occ.basis[d][j].grade),
                             tag + ": face grade exceeds coface grade");
                }
    };
    const scenario_data scenarios[] = {gen_circle_rooms(12), gen_two_spheres(3, 12)};
    for (const scenario_data& s : scenarios)
        for (const filtered_complex* fc : {&s.phi, &s.psi})
            for (std::uint32_t p : {2u, 3u}) {
                const orbit_chain_complex occ =
                    build_orbit_complex(*fc, s.h, grade_op::max, make_field(p));
                dd_zero(occ, s.name + " GF(" + std::to_string(p) + ")");
                monotone(occ, s.name);
            }
    for (std::uint32_t seed = 1; seed <= 20; ++seed) {
        const random_instance dbl = doubled_instance(gen_random_instance(seed).fc);
        for (std::uint32_t p : {2u, 3u}) {
            const orbit_chain_complex occ =
                build_orbit_complex(dbl.fc, dbl.h, grade_op::max, make_field(p));
            dd_zero(occ, "doubled seed " + std::to_string(seed));
            monotone(occ, "doubled seed " + std::to_string(seed));
        }
    }
    for (std::uint32_t seed = 1; seed <= 50; ++seed) {
        const random_instance inst = gen_random_instance(seed);
        const group_action triv = detail::trivial_group(inst.fc.complex.vertex_count);
        const persistence_diagram before = detail::orbit_diagram(inst.fc, triv);
        const subdivision sd = barycentric_subdivide(inst.fc);
        const persistence_diagram after =
            detail::orbit_diagram(sd.fc, detail::trivial_group(sd.fc.complex.vertex_count));
        c.expect(before == after, "subdivision changed the diagram on seed " + std::to_string(seed));
    }
    c.note("boundary squares to zero, grades monotone, subdivision preserves diagrams");
    return c.res;
}

/// Perturbation stability: random dyadic perturbations move the symmetric
/// diagrams by no more than the sup norm of the perturbation.
inline check_result acceptance_perturbation() {
    detail::checker c("perturbation stability");
    const scenario_data scenarios[] = {gen_circle_rooms(12), gen_two_spheres(3, 12)};
    std::mt19937 rng(97);
    for (const scenario_data& s : scenarios) {
        const persistence_diagram base = detail::orbit_diagram(s.phi, s.h);
        const std::size_t nv = s.phi.f.values.size();
        for (int iter = 0; iter < 100; ++iter) {
            std::vector<grade_t> perturbed(nv);
            value_t norm = 0.0;
            for (std::size_t v = 0; v < nv; ++v) {
                const value_t d =
                    static_cast<value_t>(static_cast<long long>(rng() % 257) - 128) / 1024.0;
                norm = std::max(norm, std::fabs(d));
                perturbed[v] = {s.phi.f.values[v][0] + d};
            }
            const persistence_diagram moved = detail::orbit_diagram(
                build_filtered_complex(s.phi.complex, make_vertex_function(1, perturbed)), s.h);
            const aggregate_result agg =
                aggregate_bottleneck(base, moved, all_degrees(base, moved));
            c.expect(!agg.infinite && agg.value <= norm + 1e-12,
                     s.name + ": diagram moved " + detail::shortest(agg.value) +
                         " under a perturbation of " + detail::shortest(norm));
        }
    }
    c.note("200 perturbations stay within their sup norm");
    return c.res;
}

/// Operator contraction: orbit grades under both operators differ by no more
/// than the generating vertex functions do, exactly, on 100 random dyadic
/// function pairs.
inline check_result acceptance_contraction() {
    detail::checker c("operator contraction");
    const scenario_data s = gen_circle_rooms(12);
    const index_t nv = s.phi.complex.vertex_count;
    std::mt19937 rng(41);
    auto random_values = [&rng, nv]() {
        std::vector<grade_t> vals(static_cast<std::size_t>(nv));
        for (auto& g : vals)
            g = {static_cast<value_t>(static_cast<long long>(rng() % 129) - 64) / 64.0};
        return vals;
    };
    for (int iter = 0; iter < 100; ++iter) {
        const std::vector<grade_t> fv = random_values(), gv = random_values();
        value_t vertex_gap = 0.0;
        for (index_t v = 0; v < nv; ++v)
            vertex_gap = std::max(vertex_gap, std::fabs(fv[static_cast<std::size_t>(v)][0] -
                                                        gv[static_cast<std::size_t>(v)][0]));
        const filtered_complex fcf =
            build_filtered_complex(s.phi.complex, make_vertex_function(1, fv));
        const filtered_complex fcg =
            build_filtered_complex(s.phi.complex, make_vertex_function(1, gv));
        for (grade_op op : {grade_op::max, grade_op::mean}) {
            const orbit_chain_complex of = build_orbit_complex(fcf, s.h, op);
            const orbit_chain_complex og = build_orbit_complex(fcg, s.h, op);
            value_t orbit_gap = 0.0;
            for (std::size_t d = 0; d < of.basis.size(); ++d)
                for (std::size_t i = 0; i < of.basis[d].size(); ++i)
                    orbit_gap = std::max(orbit_gap, std::fabs(of.basis[d][i].grade[0] -
                                                              og.basis[d][i].grade[0]));
            c.expect(orbit_gap <= vertex_gap,
                     std::string(to_string(op)) + " operator expanded the gap on iteration " +
                         std::to_string(iter));
        }
    }
    c.note("both operators contract the sup norm on 100 dyadic pairs");
    return c.res;
}

inline std::vector<check_result> run_acceptance() {
    return {acceptance_two_spheres_degree1(), acceptance_two_spheres_sandwich(),
            acceptance_circle_separation(),   acceptance_invariance(),
            acceptance_oracle_agreement(),    acceptance_quotient_equivalence(),
            acceptance_structural(),          acceptance_perturbation(),
            acceptance_contraction()};
}

inline json acceptance_report(const std::vector<check_result>& results) {
    json checks = json::array();
    bool all = true;
    for (const check_result& r : results) {
        checks.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        all = all && r.pass;
    }
    return json{{"pass", all}, {"checks", std::move(checks)}};
}

}  // namespace symph
