#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

#include "symph/complex.hpp"
#include "symph/geometry.hpp"
#include "symph/group.hpp"

namespace symph {

// Sup-norm mismatch of two vertex fields under a vertex map:
// max over vertices x of ‖φ(x) − ψ(f(x))‖∞.  f need not be bijective, only a
// total vertex map, so degree-one circle maps and other simplicial witnesses
// are accepted as-is.
inline value_t classical_dHomeo_witness(const filtered_complex& fc_phi,
                                        const filtered_complex& fc_psi,
                                        const vertex_permutation& f) {
    if (fc_phi.complex.vertex_count != fc_psi.complex.vertex_count ||
        fc_phi.f.k != fc_psi.f.k)
        throw validation_error("field mismatch: different vertex counts or arities");
    const index_t n = fc_phi.complex.vertex_count;
    if (static_cast<index_t>(f.size()) != n)
        throw validation_error("vertex map has wrong size");
    value_t worst = 0.0;
    for (index_t x = 0; x < n; ++x) {
        const index_t y = f[static_cast<std::size_t>(x)];
        if (y < 0 || y >= n) throw validation_error("vertex map image out of range");
        const grade_t& a = fc_phi.f.values[static_cast<std::size_t>(x)];
        const grade_t& b = fc_psi.f.values[static_cast<std::size_t>(y)];
        for (index_t c = 0; c < fc_phi.f.k; ++c)
            worst = std::max(worst, std::fabs(a[static_cast<std::size_t>(c)] -
                                              b[static_cast<std::size_t>(c)]));
    }
    return worst;
}

struct sampled_bound {
    value_t value = std::numeric_limits<value_t>::infinity();
    std::size_t argmin = 0;
};

/// Upper bound for the natural pseudo-distance restricted to a finite sample
/// of vertex permutations: min over sampled g of max_x ‖φ(x) − ψ(g(x))‖∞.
/// Ties break toward the earliest sample element.
inline sampled_bound dG_upper_bound(const filtered_complex& fc_phi,
                                    const filtered_complex& fc_psi,
                                    const std::vector<vertex_permutation>& sample) {
    if (sample.empty()) throw validation_error("empty group sample");
    if (!(fc_phi.complex == fc_psi.complex))
        throw validation_error("complex mismatch between the two fields");
    sampled_bound best;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        if (!is_permutation(sample[i], fc_phi.complex.vertex_count))
            throw validation_error("sample element is not a vertex permutation");
        const value_t cost = classical_dHomeo_witness(fc_phi, fc_psi, sample[i]);
        if (cost < best.value) {
            best.value = cost;
            best.argmin = i;
        }
    }
    return best;
}

/// Geometric variant for candidate isometries that move points of the ambient
/// space rather than permuting vertices.  The space is a disjoint union of
/// congruent components sharing the sample points; channel c of `phi` holds
/// the first field on component c at those points, and `psi[c]` evaluates the
/// second field anywhere on component c.  A candidate element is a sampled
/// isometry combined with any permutation of the components, and its cost is
/// the sup-norm mismatch over all points and components; the bound minimizes
/// over everything.  Reported argmin indexes the isometry sample.
inline sampled_bound dg_upper_bound_sampled(
    const std::vector<vec3>& points, const std::vector<std::vector<value_t>>& phi,
    const std::vector<std::function<value_t(const vec3&)>>& psi,
    const std::vector<mat3>& sample) {
    if (sample.empty()) throw validation_error("empty isometry sample");
    if (phi.empty() || phi.size() != psi.size())
        throw validation_error("component channel mismatch");
    for (const auto& ch : phi)
        if (ch.size() != points.size())
            throw validation_error("field channel does not cover the sample points");

    const std::size_t nc = phi.size();
    std::vector<std::size_t> sigma(nc);
    std::vector<std::vector<value_t>> moved(nc, std::vector<value_t>(points.size()));
    sampled_bound best;
    for (std::size_t r = 0; r < sample.size(); ++r) {
        for (std::size_t c = 0; c < nc; ++c)
            for (std::size_t i = 0; i < points.size(); ++i)
                moved[c][i] = psi[c](apply(sample[r], points[i]));
        value_t cost = std::numeric_limits<value_t>::infinity();
        std::iota(sigma.begin(), sigma.end(), 0);
        do {
            value_t worst = 0.0;
            for (std::size_t c = 0; c < nc && worst < cost; ++c)
                for (std::size_t i = 0; i < points.size(); ++i)
                    worst = std::max(worst, std::fabs(phi[c][i] - moved[sigma[c]][i]));
            cost = std::min(cost, worst);
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        if (cost < best.value) {
            best.value = cost;
            best.argmin = r;
        }
    }
    return best;
}

/// The isometry sample used by the sphere scenarios: rotations about the three
/// coordinate axes in whole-degree steps, each composed with the identity and
/// the three half-turn flips.
inline std::vector<mat3> axis_step_rotations(int steps_per_axis = 360) {
    const value_t pi = std::acos(-1.0);
    const std::vector<mat3> flips{mat3::identity(), rot_x(pi), rot_y(pi), rot_z(pi)};
    std::vector<mat3> out;
    out.reserve(static_cast<std::size_t>(steps_per_axis) * 3 * flips.size());
    using maker = mat3 (*)(value_t);
    for (maker mk : {static_cast<maker>(rot_x), static_cast<maker>(rot_y),
                     static_cast<maker>(rot_z)}) {
        for (int k = 0; k < steps_per_axis; ++k) {
            const mat3 r0 = mk(2.0 * pi * k / steps_per_axis);
            for (const mat3& f : flips) out.push_back(r0 * f);
        }
    }
    return out;
}

}  // namespace symph
