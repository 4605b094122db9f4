#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "symph/complex.hpp"
#include "symph/field.hpp"
#include "symph/group.hpp"
#include "symph/orbit.hpp"
#include "symph/persistence.hpp"

namespace symph {

// Brute-force verification oracles.  Everything here recomputes ranks by
// dense elimination straight from the definitions and shares no reduction
// code with the persistence engine.

namespace detail {

using dense_row = std::vector<std::uint32_t>;

// In-place reduced row echelon form mod p; returns the rank and, if asked,
// the pivot column of each nonzero row.
inline std::size_t dense_rref(std::vector<dense_row>& rows, const field_spec& f,
                              std::vector<std::size_t>* pivot_cols) {
    if (pivot_cols) pivot_cols->clear();
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        const std::uint32_t inv = fp_inv(rows[r][c], f);
        for (std::size_t j = c; j < cols; ++j) rows[r][j] = fp_mul(rows[r][j], inv, f);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const std::uint32_t lam = rows[i][c];
            for (std::size_t j = c; j < cols; ++j)
                rows[i][j] = fp_sub(rows[i][j], fp_mul(lam, rows[r][j], f), f);
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return r;
}

inline std::size_t dense_rank(std::vector<dense_row> rows, const field_spec& f) {
    return dense_rref(rows, f, nullptr);
}

// Kernel basis of the matrix whose rows are given (columns 0..cols-1): one
// vector per free column, read off the reduced echelon form.
inline std::vector<dense_row> dense_kernel(std::vector<dense_row> rows, std::size_t cols,
                                           const field_spec& f) {
    std::vector<std::size_t> pivots;
    const std::size_t r = dense_rref(rows, f, &pivots);
    std::vector<char> is_pivot(cols, 0);
    for (std::size_t c : pivots) is_pivot[c] = 1;
    std::vector<dense_row> kernel;
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        dense_row x(cols, 0);
        x[c] = 1;
        for (std::size_t t = 0; t < r; ++t)
            if (rows[t][c] != 0) x[pivots[t]] = fp_neg(rows[t][c], f);
        kernel.push_back(std::move(x));
    }
    return kernel;
}

}  // namespace detail

/// Rank of the inclusion-induced homology map between sublevels u and v,
/// computed from the definition: a kernel basis at u, boundary columns at v,
/// and two dense rank computations.  Thresholds need u componentwise <= v.
inline long brute_force_pbnf(const orbit_chain_complex& occ, index_t n, const grade_t& u,
                             const grade_t& v) {
    if (occ.size() > 2000)
        throw validation_error("instance too large for the brute-force oracle");
    if (static_cast<index_t>(u.size()) != occ.k || static_cast<index_t>(v.size()) != occ.k)
        throw validation_error("threshold arity mismatch");
    if (!grade_leq(u, v)) throw validation_error("thresholds need u componentwise at most v");
    if (n < 0 || n > occ.dim()) return 0;

    const auto& layer = occ.basis[static_cast<std::size_t>(n)];
    std::vector<index_t> at_u;
    for (std::size_t i = 0; i < layer.size(); ++i)
        if (grade_leq(layer[i].grade, u)) at_u.push_back(static_cast<index_t>(i));
    if (at_u.empty()) return 0;

    auto check_closed = [&occ](index_t d, index_t col, const grade_t& t) {
        for (const auto& [row, c] :
             occ.boundary[static_cast<std::size_t>(d)][static_cast<std::size_t>(col)]) {
            (void)c;
            if (!grade_leq(occ.basis[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(row)].grade, t))
                throw validation_error(
                    "sublevel set is not closed under the boundary; grades do not form a filtration");
        }
    };

    // cycles at u, scattered into full chain-group coordinates
    std::vector<detail::dense_row> z_vectors;
    if (n == 0) {
        for (index_t i : at_u) {
            detail::dense_row x(layer.size(), 0);
            x[static_cast<std::size_t>(i)] = 1;
            z_vectors.push_back(std::move(x));
        }
    } else {
        const std::size_t face_count = occ.basis[static_cast<std::size_t>(n - 1)].size();
        std::vector<detail::dense_row> mat(face_count, detail::dense_row(at_u.size(), 0));
        for (std::size_t j = 0; j < at_u.size(); ++j) {
            check_closed(n, at_u[j], u);
            for (const auto& [row, c] :
                 occ.boundary[static_cast<std::size_t>(n)][static_cast<std::size_t>(at_u[j])])
                mat[static_cast<std::size_t>(row)][j] = c;
        }
        for (const auto& combo : detail::dense_kernel(std::move(mat), at_u.size(), occ.field)) {
            detail::dense_row x(layer.size(), 0);
            for (std::size_t j = 0; j < at_u.size(); ++j)
                x[static_cast<std::size_t>(at_u[j])] = combo[j];
            z_vectors.push_back(std::move(x));
        }
    }

    // boundaries at v in the same coordinates
    std::vector<detail::dense_row> b_vectors;
    if (n + 1 <= occ.dim()) {
        const auto& next = occ.basis[static_cast<std::size_t>(n + 1)];
        for (std::size_t j = 0; j < next.size(); ++j) {
            if (!grade_leq(next[j].grade, v)) continue;
            check_closed(n + 1, static_cast<index_t>(j), v);
            detail::dense_row x(layer.size(), 0);
            for (const auto& [row, c] : occ.boundary[static_cast<std::size_t>(n + 1)][j])
                x[static_cast<std::size_t>(row)] = c;
            b_vectors.push_back(std::move(x));
        }
    }

    const long rank_b = static_cast<long>(detail::dense_rank(b_vectors, occ.field));
    std::vector<detail::dense_row> joint = std::move(b_vectors);
    joint.insert(joint.end(), z_vectors.begin(), z_vectors.end());
    const long rank_zb = static_cast<long>(detail::dense_rank(std::move(joint), occ.field));
    return rank_zb - rank_b;
}

/// Full diagram from rank queries alone: point multiplicities by inclusion-
/// exclusion over the grid of distinct grades, essential multiplicities
/// against the top grade.  Scalar grades only.
inline persistence_diagram brute_force_diagram(const orbit_chain_complex& occ) {
    if (occ.k != 1) throw validation_error("diagram oracle needs scalar grades");
    std::vector<value_t> g;
    for (const auto& layer : occ.basis)
        for (const auto& e : layer) g.push_back(e.grade[0]);
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    const std::size_t m = g.size();

    persistence_diagram out;
    out.field = occ.field;
    out.op = occ.op;
    out.degrees.resize(static_cast<std::size_t>(occ.dim()) + 1);
    for (index_t n = 0; n <= occ.dim(); ++n) {
        std::vector<long> memo((m + 1) * (m + 1), -1);
        auto beta = [&](std::size_t i, std::size_t j) -> long {
            if (i == 0) return 0;
            long& slot = memo[i * (m + 1) + j];
            if (slot < 0)
                slot = brute_force_pbnf(occ, n, {g[i - 1]}, {g[j - 1]});
            return slot;
        };
        auto& deg = out.degrees[static_cast<std::size_t>(n)];
        for (std::size_t i = 1; i <= m; ++i) {
            for (std::size_t j = i + 1; j <= m; ++j) {
                const long mu =
                    (beta(i, j - 1) - beta(i, j)) - (beta(i - 1, j - 1) - beta(i - 1, j));
                for (long t = 0; t < mu; ++t) deg.pairs.emplace_back(g[i - 1], g[j - 1]);
            }
            const long e = beta(i, m) - beta(i - 1, m);
            for (long t = 0; t < e; ++t) deg.essential.push_back(g[i - 1]);
        }
        deg.normalize();
    }
    return out;
}

// Simplicial quotient by a free regular action.
struct quotient_result {
    simplicial_complex complex;
    std::vector<index_t> vertex_map;           // original vertex -> quotient vertex
    std::vector<std::vector<index_t>> fibers;  // quotient vertex -> original vertices
};

/// Collapses each vertex orbit to one vertex.  Requires the action to be free
/// and regular, and additionally faithful on simplices (distinct simplex
/// orbits must keep distinct images); otherwise the quotient is not a
/// simplicial complex and the caller is pointed at barycentric subdivision.
inline quotient_result quotient_complex(const simplicial_complex& cx, const group_action& h) {
    const action_report rep = validate_action(cx, h);
    if (!rep.group_ok || !rep.automorphisms || !rep.free)
        throw validation_error("group action rejected: " + rep.detail);
    if (!rep.regular)
        throw validation_error(
            "action is not regular (a simplex holds two vertices of one orbit); "
            "apply barycentric_subdivide and transport the action with induced_permutation");

    quotient_result out;
    out.vertex_map = vertex_orbits(h, cx.vertex_count);
    index_t q = 0;
    for (index_t id : out.vertex_map) q = std::max(q, id + 1);
    out.fibers.assign(static_cast<std::size_t>(q), {});
    for (index_t v = 0; v < cx.vertex_count; ++v)
        out.fibers[static_cast<std::size_t>(out.vertex_map[static_cast<std::size_t>(v)])].push_back(v);

    std::vector<simplex_t> images;
    for (std::size_t d = 0; d < cx.cells.size(); ++d) {
        std::set<simplex_t> seen_image;
        std::set<simplex_t> seen_cell;
        std::size_t orbit_count = 0;
        for (const simplex_t& s : cx.cells[d]) {
            if (!seen_cell.count(s)) {
                ++orbit_count;
                for (const auto& g : h.elements) seen_cell.insert(apply_permutation(g, s));
            }
            simplex_t img = s;
            for (index_t& v : img) v = out.vertex_map[static_cast<std::size_t>(v)];
            img = sorted_simplex(std::move(img));
            seen_image.insert(std::move(img));
        }
        if (seen_image.size() != orbit_count)
            throw validation_error(
                "quotient identified two distinct simplex orbits; "
                "apply barycentric_subdivide and transport the action with induced_permutation");
        images.insert(images.end(), seen_image.begin(), seen_image.end());
    }
    out.complex = make_complex(q, images);
    return out;
}

/// Pushes a vertex function down to the quotient: componentwise max over each
/// fiber.
inline vertex_function quotient_function(const quotient_result& qr, const vertex_function& f) {
    std::vector<grade_t> values(qr.fibers.size());
    for (std::size_t w = 0; w < qr.fibers.size(); ++w) {
        grade_t g = f.values[static_cast<std::size_t>(qr.fibers[w][0])];
        for (std::size_t i = 1; i < qr.fibers[w].size(); ++i) {
            const grade_t& o = f.values[static_cast<std::size_t>(qr.fibers[w][i])];
            for (index_t c = 0; c < f.k; ++c)
                g[static_cast<std::size_t>(c)] =
                    std::max(g[static_cast<std::size_t>(c)], o[static_cast<std::size_t>(c)]);
        }
        values[w] = std::move(g);
    }
    return make_vertex_function(f.k, std::move(values));
}

}  // namespace symph
