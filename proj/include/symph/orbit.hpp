#pragma once

#include <map>
#include <ostream>
#include <utility>
#include <vector>

#include "symph/complex.hpp"
#include "symph/field.hpp"
#include "symph/group.hpp"

namespace symph {

// How the grade of an orbit chain is aggregated from its member simplices.
// grade_op::max grades sublevel filtrations; grade_op::mean is the averaged
// variant kept for contraction experiments and never drives a filtration.
enum class grade_op { max, mean };

inline const char* to_string(grade_op op) { return op == grade_op::max ? "max" : "mean"; }

struct orbit_member {
    simplex_t cell;  // h applied to the representative, sorted ascending
    int sign;        // parity of the sort that restored ascending order
};

// One basis element of the symmetric chain complex: the full H-orbit of its
// lexicographically smallest member, as the signed sum of member simplices.
struct orbit_basis_element {
    simplex_t rep;
    std::vector<orbit_member> members;  // parallel to the group's element order
    grade_t grade;
};

// Chain complex of H-symmetric chains with its boundary matrices over a
// fixed prime field.
struct orbit_chain_complex {
    field_spec field;
    grade_op op = grade_op::max;
    index_t k = 1;
    index_t vertex_count = 0;
    std::vector<std::vector<orbit_basis_element>> basis;  // by dimension
    // boundary[d]: columns over basis[d], entries (row into basis[d-1], coeff)
    std::vector<std::vector<std::vector<std::pair<index_t, std::uint32_t>>>> boundary;
    // orbit_of[d][i]: orbit owning the i-th d-simplex of the source complex
    std::vector<std::vector<index_t>> orbit_of;

    index_t dim() const { return static_cast<index_t>(basis.size()) - 1; }

    std::size_t size() const {
        std::size_t n = 0;
        for (const auto& layer : basis) n += layer.size();
        return n;
    }
};

/// Builds the complex of H-symmetric chains of a filtered complex.  Each
/// basis element is an orbit sum sum_h h.rep with signs from re-sorting the
/// permuted tuples; its boundary is read off the plain simplicial boundary
/// of that sum, which is again an orbit chain.  Requires H to act freely by
/// simplicial automorphisms.
inline orbit_chain_complex build_orbit_complex(const filtered_complex& fc,
                                               const group_action& h,
                                               grade_op op = grade_op::max,
                                               field_spec field = field_spec{2}) {
    const simplicial_complex& kx = fc.complex;
    const action_report rep = validate_action(kx, h);
    if (!rep.valid_for_orbit_complex())
        throw validation_error("group action rejected: " + rep.detail);

    orbit_chain_complex occ;
    occ.field = field;
    occ.op = op;
    occ.k = fc.f.k;
    occ.vertex_count = kx.vertex_count;
    occ.basis.resize(kx.cells.size());
    occ.boundary.resize(kx.cells.size());
    occ.orbit_of.resize(kx.cells.size());

    const double r = static_cast<double>(h.order());
    for (std::size_t d = 0; d < kx.cells.size(); ++d) {
        occ.orbit_of[d].assign(kx.cells[d].size(), -1);
        for (std::size_t i = 0; i < kx.cells[d].size(); ++i) {
            if (occ.orbit_of[d][i] >= 0) continue;  // already swept into an orbit
            orbit_basis_element e;
            e.rep = kx.cells[d][i];
            e.grade.assign(static_cast<std::size_t>(occ.k), 0.0);
            const index_t oid = static_cast<index_t>(occ.basis[d].size());
            bool first = true;
            for (const auto& g : h.elements) {
                orbit_member m{apply_permutation(g, e.rep), image_sign(g, e.rep)};
                const index_t ci = kx.index_of(m.cell);
                if (occ.orbit_of[d][static_cast<std::size_t>(ci)] == oid && !first) {
                    // unreachable once validate_action passed: two elements sending
                    // the rep to one cell would mean their quotient fixes it setwise
                    throw validation_error("orbit member repeated; action is not free");
                }
                occ.orbit_of[d][static_cast<std::size_t>(ci)] = oid;
                const grade_t& mg = fc.grades[d][static_cast<std::size_t>(ci)];
                for (index_t c = 0; c < occ.k; ++c) {
                    if (op == grade_op::max)
                        e.grade[c] = first ? mg[c] : std::max(e.grade[c], mg[c]);
                    else
                        e.grade[c] += mg[c] / r;
                }
                e.members.push_back(std::move(m));
                first = false;
            }
            occ.basis[d].push_back(std::move(e));
        }
    }

    for (std::size_t d = 1; d < kx.cells.size(); ++d) {
        occ.boundary[d].resize(occ.basis[d].size());
        for (std::size_t oi = 0; oi < occ.basis[d].size(); ++oi) {
            const orbit_basis_element& e = occ.basis[d][oi];
            // plain simplicial boundary of the orbit sum, as simplex -> coeff
            std::map<simplex_t, long long> chain;
            simplex_t face(e.rep.size() - 1);
            for (const auto& m : e.members) {
                for (std::size_t drop = 0; drop < m.cell.size(); ++drop) {
                    std::size_t w = 0;
                    for (std::size_t j = 0; j < m.cell.size(); ++j)
                        if (j != drop) face[w++] = m.cell[j];
                    chain[face] += (drop % 2 == 0 ? m.sign : -m.sign);
                }
            }
            // the invariant chain is determined by its representative coefficients
            std::map<index_t, long long> by_orbit;
            for (const auto& [s, c] : chain) {
                const index_t ci = kx.index_of(s);
                const index_t fo = occ.orbit_of[d - 1][static_cast<std::size_t>(ci)];
                if (occ.basis[d - 1][static_cast<std::size_t>(fo)].rep == s) by_orbit[fo] = c;
            }
            auto& col = occ.boundary[d][oi];
            for (const auto& [row, c] : by_orbit) {
                const std::uint32_t cf = fp_normalize(c, field);
                if (cf != 0) col.emplace_back(row, cf);
            }
        }
    }
    return occ;
}

// Pull-back of the vertex function along a simplicial automorphism:
// the new function sends v to f(g(v)).  Grades are rebuilt.
inline filtered_complex apply_group_element(const filtered_complex& fc,
                                            const vertex_permutation& g) {
    if (!is_simplicial_automorphism(fc.complex, g))
        throw validation_error("permutation is not a simplicial automorphism");
    std::vector<grade_t> pulled(fc.f.values.size());
    for (std::size_t v = 0; v < pulled.size(); ++v)
        pulled[v] = fc.f.values[static_cast<std::size_t>(g[v])];
    return build_filtered_complex(fc.complex, make_vertex_function(fc.f.k, std::move(pulled)));
}

// Debug dump: one "dim row col coeff" line per boundary entry.
inline void write_boundary_triplets(const orbit_chain_complex& occ, std::ostream& os) {
    for (std::size_t d = 1; d < occ.boundary.size(); ++d)
        for (std::size_t col = 0; col < occ.boundary[d].size(); ++col)
            for (const auto& [row, c] : occ.boundary[d][col])
                os << d << ' ' << row << ' ' << col << ' ' << c << '\n';
}

}  // namespace symph
