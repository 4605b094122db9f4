#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "symph/complex.hpp"
#include "symph/geometry.hpp"
#include "symph/group.hpp"

namespace symph {

// A generated benchmark instance: two fields on one complex, the symmetry
// subgroup H, a finite sample of candidate symmetries, and a vertex map with
// φ(x) = ψ(witness(x)) exactly, certifying that the classical pseudo-distance
// vanishes.  The geometric members describe one component of the space for
// isometry-sampled bounds; they are empty for purely combinatorial scenarios.
struct scenario_data {
    std::string name;
    filtered_complex phi;
    filtered_complex psi;
    group_action h;
    std::vector<vertex_permutation> g_sample;
    vertex_permutation witness;
    std::vector<vec3> points;
    std::vector<std::vector<value_t>> phi_channels;
    std::vector<std::function<value_t(const vec3&)>> psi_channels;
};

namespace detail {

// Matches equal values pairwise in sorted order: returns w with
// phi[x] = psi[w[x]] for all x.  Requires equal value multisets.
inline vertex_permutation value_matching(const std::vector<value_t>& phi,
                                         const std::vector<value_t>& psi) {
    const std::size_t n = phi.size();
    std::vector<index_t> ia(n), ib(n);
    std::iota(ia.begin(), ia.end(), 0);
    std::iota(ib.begin(), ib.end(), 0);
    auto by_value = [](const std::vector<value_t>& f) {
        return [&f](index_t x, index_t y) {
            const value_t a = f[static_cast<std::size_t>(x)], b = f[static_cast<std::size_t>(y)];
            return a < b || (a == b && x < y);
        };
    };
    std::sort(ia.begin(), ia.end(), by_value(phi));
    std::sort(ib.begin(), ib.end(), by_value(psi));
    vertex_permutation w(n);
    for (std::size_t r = 0; r < n; ++r) {
        if (phi[static_cast<std::size_t>(ia[r])] != psi[static_cast<std::size_t>(ib[r])])
            throw validation_error("value multisets differ; cannot build witness");
        w[static_cast<std::size_t>(ia[r])] = ib[r];
    }
    return w;
}

// Lays out circular runs: each (ascent u, descent d) arc starts at the low
// value, climbs a dyadic ladder for u steps to the high value, and descends
// for d steps.  Arc lengths must sum to the cycle length.
inline std::vector<value_t> lay_arcs(const std::vector<std::pair<index_t, index_t>>& arcs,
                                     index_t cycle, value_t lo, value_t hi, index_t den) {
    auto ladder = [&](index_t j) { return lo + (hi - lo) * j / den; };
    std::vector<value_t> f(static_cast<std::size_t>(cycle));
    index_t pos = 0;
    for (const auto& [u, d] : arcs) {
        f[static_cast<std::size_t>(pos % cycle)] = lo;
        for (index_t j = 1; j < u; ++j) f[static_cast<std::size_t>((pos + j) % cycle)] = ladder(j);
        f[static_cast<std::size_t>((pos + u) % cycle)] = hi;
        for (index_t i = 1; i < d; ++i)
            f[static_cast<std::size_t>((pos + u + i) % cycle)] = ladder(d - i);
        pos += u + d;
    }
    if (pos != cycle) throw validation_error("arc lengths do not cover the cycle");
    return f;
}

}  // namespace detail

/// 2n-gon with two height functions sharing the same cyclic sequence of
/// local extremum values (so their sublevel filtrations are related by a
/// circle map) but differing in symmetry: the minima of the first form two
/// antipodal pairs while no two minima of the second are antipodal.
inline scenario_data gen_circle_rooms(index_t n) {
    if (n < 8 || n % 2 != 0) throw validation_error("circle-rooms needs an even n of at least 8");
    const index_t N = 2 * n;
    const value_t lo = -1.0, hi = -0.5;
    index_t den_log = 1;
    while ((index_t{1} << den_log) <= n - 5) ++den_log;
    const index_t den = index_t{1} << den_log;

    std::vector<value_t> phi = detail::lay_arcs(
        {{1, 2}, {2, n - 5}, {2, 1}, {3, n - 6}}, N, lo, hi, den);
    std::vector<value_t> psi = detail::lay_arcs(
        {{2, 1}, {1, n - 6}, {2, 2}, {3, n - 5}}, N, lo, hi, den);

    std::vector<simplex_t> edges;
    for (index_t i = 0; i < N; ++i) edges.push_back(sorted_simplex({i, (i + 1) % N}));
    simplicial_complex cx = make_complex(N, edges);

    auto as_grades = [](const std::vector<value_t>& f) {
        std::vector<grade_t> g(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) g[i] = {f[i]};
        return g;
    };
    scenario_data s;
    s.name = "circle-rooms";
    s.phi = build_filtered_complex(cx, make_vertex_function(1, as_grades(phi)));
    s.psi = build_filtered_complex(cx, make_vertex_function(1, as_grades(psi)));

    vertex_permutation antipodal(static_cast<std::size_t>(N));
    for (index_t i = 0; i < N; ++i) antipodal[static_cast<std::size_t>(i)] = (i + n) % N;
    s.h = make_group({identity_permutation(N), antipodal}, N);

    for (index_t r = 0; r < N; ++r) {
        vertex_permutation rot(static_cast<std::size_t>(N));
        for (index_t i = 0; i < N; ++i) rot[static_cast<std::size_t>(i)] = (i + r) % N;
        s.g_sample.push_back(std::move(rot));
    }
    s.witness = detail::value_matching(phi, psi);
    return s;
}

namespace detail {

struct sphere_mesh {
    index_t vertices = 0;
    std::vector<value_t> height;
    std::vector<vec3> pos;
    std::vector<simplex_t> triangles;
    index_t rings = 0, longitudes = 0;

    index_t ring_id(index_t t, index_t j) const {
        return 1 + t * longitudes + ((j % longitudes + longitudes) % longitudes);
    }
    index_t north() const { return vertices - 1; }

    // latitude mirror: simplicial because band diagonals flip across the equator
    index_t flip(index_t v) const {
        if (v == 0) return north();
        if (v == north()) return 0;
        const index_t t = (v - 1) / longitudes, j = (v - 1) % longitudes;
        return ring_id(2 * rings - 2 - t, j);
    }
    index_t rotate(index_t v, index_t s) const {
        if (v == 0 || v == north()) return v;
        const index_t t = (v - 1) / longitudes, j = (v - 1) % longitudes;
        return ring_id(t, j + s);
    }
};

// One sphere with poles at the extremes, 2m-1 equally spaced latitude rings
// (the middle one on the equator), and band diagonals mirrored across the
// equator so the latitude flip is simplicial.
inline sphere_mesh make_sphere(index_t m, index_t L) {
    sphere_mesh sm;
    sm.rings = m;
    sm.longitudes = L;
    sm.vertices = 2 + (2 * m - 1) * L;
    sm.height.assign(static_cast<std::size_t>(sm.vertices), 0.0);
    sm.pos.assign(static_cast<std::size_t>(sm.vertices), vec3{});
    sm.height[0] = -1.0;
    sm.pos[0] = {0.0, 0.0, -1.0};
    sm.height[static_cast<std::size_t>(sm.north())] = 1.0;
    sm.pos[static_cast<std::size_t>(sm.north())] = {0.0, 0.0, 1.0};
    const value_t pi = std::acos(-1.0);
    for (index_t t = 0; t < 2 * m - 1; ++t) {
        const value_t z = static_cast<value_t>(t - m + 1) / m;
        const value_t rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        for (index_t j = 0; j < L; ++j) {
            const std::size_t v = static_cast<std::size_t>(sm.ring_id(t, j));
            sm.height[v] = z;
            sm.pos[v] = {rho * std::cos(2 * pi * j / L), rho * std::sin(2 * pi * j / L), z};
        }
    }
    for (index_t j = 0; j < L; ++j) {
        sm.triangles.push_back(sorted_simplex({0, sm.ring_id(0, j), sm.ring_id(0, j + 1)}));
        sm.triangles.push_back(
            sorted_simplex({sm.north(), sm.ring_id(2 * m - 2, j), sm.ring_id(2 * m - 2, j + 1)}));
    }
    for (index_t t = 0; t < 2 * m - 2; ++t) {
        for (index_t j = 0; j < L; ++j) {
            const index_t a = sm.ring_id(t, j), b = sm.ring_id(t, j + 1);
            const index_t c = sm.ring_id(t + 1, j), d = sm.ring_id(t + 1, j + 1);
            if (t <= m - 2) {
                sm.triangles.push_back(sorted_simplex({a, b, d}));
                sm.triangles.push_back(sorted_simplex({a, d, c}));
            } else {
                sm.triangles.push_back(sorted_simplex({a, b, c}));
                sm.triangles.push_back(sorted_simplex({b, d, c}));
            }
        }
    }
    return sm;
}

}  // namespace detail

/// Two disjoint congruent spheres; the first field is the height on both, the
/// second is the height on one sphere and its negative on the other.  The
/// swap of the two spheres generates the symmetry subgroup; the permutation
/// sample is {rotation about the polar axis} x {identity, latitude flip} x
/// {identity, swap}, and the geometric payload supports isometry-sampled
/// bounds with rotations acting on one component's coordinates.
inline scenario_data gen_two_spheres(index_t rings, index_t longitudes) {
    if (rings < 2 || longitudes < 3)
        throw validation_error("two-spheres needs rings >= 2 and longitudes >= 3");
    const detail::sphere_mesh sm = detail::make_sphere(rings, longitudes);
    const index_t v1 = sm.vertices;
    const index_t n = 2 * v1;

    std::vector<simplex_t> tris;
    for (const simplex_t& t : sm.triangles) {
        tris.push_back(t);
        simplex_t shifted = t;
        for (index_t& v : shifted) v += v1;
        tris.push_back(shifted);
    }
    simplicial_complex cx = make_complex(n, tris);

    std::vector<grade_t> phi(static_cast<std::size_t>(n)), psi(static_cast<std::size_t>(n));
    for (index_t v = 0; v < v1; ++v) {
        const value_t z = sm.height[static_cast<std::size_t>(v)];
        phi[static_cast<std::size_t>(v)] = {z};
        phi[static_cast<std::size_t>(v + v1)] = {z};
        psi[static_cast<std::size_t>(v)] = {z};
        psi[static_cast<std::size_t>(v + v1)] = {-z};
    }

    scenario_data s;
    s.name = "two-spheres";
    s.phi = build_filtered_complex(cx, make_vertex_function(1, phi));
    s.psi = build_filtered_complex(cx, make_vertex_function(1, psi));

    vertex_permutation swap(static_cast<std::size_t>(n));
    for (index_t v = 0; v < v1; ++v) {
        swap[static_cast<std::size_t>(v)] = v + v1;
        swap[static_cast<std::size_t>(v + v1)] = v;
    }
    s.h = make_group({identity_permutation(n), swap}, n);

    for (index_t do_swap = 0; do_swap < 2; ++do_swap)
        for (index_t do_flip = 0; do_flip < 2; ++do_flip)
            for (index_t step = 0; step < longitudes; ++step) {
                vertex_permutation g(static_cast<std::size_t>(n));
                for (index_t comp = 0; comp < 2; ++comp)
                    for (index_t v = 0; v < v1; ++v) {
                        index_t u = sm.rotate(v, step);
                        if (do_flip) u = sm.flip(u);
                        const index_t c = do_swap ? 1 - comp : comp;
                        g[static_cast<std::size_t>(comp * v1 + v)] = c * v1 + u;
                    }
                s.g_sample.push_back(std::move(g));
            }

    // witness: swap composed with the latitude flip on the first sphere,
    // plain swap on the second; pulls psi back to phi exactly
    s.witness.assign(static_cast<std::size_t>(n), 0);
    for (index_t v = 0; v < v1; ++v) {
        s.witness[static_cast<std::size_t>(v)] = sm.flip(v) + v1;
        s.witness[static_cast<std::size_t>(v + v1)] = v;
    }

    s.points = sm.pos;
    s.phi_channels = {sm.height, sm.height};
    s.psi_channels = {[](const vec3& p) { return p[2]; }, [](const vec3& p) { return -p[2]; }};
    return s;
}

struct random_instance {
    filtered_complex fc;
    group_action h;
};

/// Deterministic fuzz instance: a closure-completed random complex of at most
/// `cell_cap` simplices with dyadic vertex values in [-1, 1] and the trivial
/// group.  Identical seeds give identical output.
inline random_instance gen_random_instance(std::uint32_t seed, index_t cell_cap = 30) {
    std::mt19937 rng(seed);
    const index_t nv = 3 + static_cast<index_t>(rng() % 6);

    std::vector<simplex_t> top;
    for (index_t v = 0; v < nv; ++v) top.push_back({v});
    const index_t tries = 2 + static_cast<index_t>(rng() % 9);
    for (index_t i = 0; i < tries; ++i) {
        const index_t want = 2 + static_cast<index_t>(rng() % 3);
        std::vector<index_t> pool(static_cast<std::size_t>(nv));
        std::iota(pool.begin(), pool.end(), 0);
        for (std::size_t j = pool.size() - 1; j > 0; --j)
            std::swap(pool[j], pool[rng() % (j + 1)]);
        simplex_t cell(pool.begin(), pool.begin() + std::min<index_t>(want, nv));
        std::sort(cell.begin(), cell.end());
        std::vector<simplex_t> probe = top;
        probe.push_back(cell);
        if (make_complex(nv, probe).size() <= static_cast<std::size_t>(cell_cap))
            top.push_back(cell);
    }
    simplicial_complex cx = make_complex(nv, top);

    std::vector<grade_t> values(static_cast<std::size_t>(nv));
    for (auto& g : values)
        g = {static_cast<value_t>(static_cast<long long>(rng() % 129) - 64) / 64.0};

    random_instance out;
    out.fc = build_filtered_complex(cx, make_vertex_function(1, std::move(values)));
    out.h = make_group({identity_permutation(nv)}, nv);
    return out;
}

/// Disjoint double of an instance with the copy-swap action: the canonical
/// free regular action available on any complex.
inline random_instance doubled_instance(const filtered_complex& fc) {
    const index_t v1 = fc.complex.vertex_count;
    std::vector<simplex_t> cells;
    for (const auto& layer : fc.complex.cells)
        for (const simplex_t& s : layer) {
            cells.push_back(s);
            simplex_t shifted = s;
            for (index_t& v : shifted) v += v1;
            cells.push_back(shifted);
        }
    simplicial_complex cx = make_complex(2 * v1, cells);

    std::vector<grade_t> values(static_cast<std::size_t>(2 * v1));
    for (index_t v = 0; v < v1; ++v) {
        values[static_cast<std::size_t>(v)] = fc.f.values[static_cast<std::size_t>(v)];
        values[static_cast<std::size_t>(v + v1)] = fc.f.values[static_cast<std::size_t>(v)];
    }

    vertex_permutation swap(static_cast<std::size_t>(2 * v1));
    for (index_t v = 0; v < v1; ++v) {
        swap[static_cast<std::size_t>(v)] = v + v1;
        swap[static_cast<std::size_t>(v + v1)] = v;
    }

    random_instance out;
    out.fc = build_filtered_complex(cx, make_vertex_function(fc.f.k, std::move(values)));
    out.h = make_group({identity_permutation(2 * v1), swap}, 2 * v1);
    return out;
}

}  // namespace symph
