#pragma once

#include <algorithm>
#include <unordered_map>
#include <utility>
#include <vector>

#include "symph/field.hpp"
#include "symph/orbit.hpp"

namespace symph {

struct degree_diagram {
    std::vector<std::pair<value_t, value_t>> pairs;  // (birth, death), death > birth
    std::vector<value_t> essential;                  // births of classes that never die

    void normalize() {
        std::sort(pairs.begin(), pairs.end());
        std::sort(essential.begin(), essential.end());
    }

    bool empty() const { return pairs.empty() && essential.empty(); }

    bool operator==(const degree_diagram&) const = default;
};

struct persistence_diagram {
    field_spec field;
    grade_op op = grade_op::max;
    std::vector<degree_diagram> degrees;

    const degree_diagram& degree(std::size_t n) const {
        static const degree_diagram none;
        return n < degrees.size() ? degrees[n] : none;
    }

    bool operator==(const persistence_diagram& o) const {
        const std::size_t n = std::max(degrees.size(), o.degrees.size());
        for (std::size_t d = 0; d < n; ++d)
            if (!(degree(d) == o.degree(d))) return false;
        return true;
    }
};

namespace detail {

using sparse_col = std::vector<std::pair<index_t, std::uint32_t>>;  // sorted by row

// c + lambda * other, rows ascending
inline sparse_col axpy(const sparse_col& c, std::uint32_t lambda, const sparse_col& other,
                       const field_spec& f) {
    sparse_col out;
    out.reserve(c.size() + other.size());
    std::size_t i = 0, j = 0;
    while (i < c.size() || j < other.size()) {
        if (j == other.size() || (i < c.size() && c[i].first < other[j].first)) {
            out.push_back(c[i++]);
        } else if (i == c.size() || other[j].first < c[i].first) {
            out.emplace_back(other[j].first, fp_mul(lambda, other[j].second, f));
            ++j;
        } else {
            const std::uint32_t v = fp_add(c[i].second, fp_mul(lambda, other[j].second, f), f);
            if (v != 0) out.emplace_back(c[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

// Left-to-right column elimination tracking, for each fed column, the
// combination of inputs it reduced to.  A column that cancels completely
// yields a kernel combination.
struct column_eliminator {
    field_spec f;
    std::vector<sparse_col> cols;
    std::vector<sparse_col> combos;
    std::vector<std::uint32_t> pivot_inv;
    std::unordered_map<index_t, std::size_t> slot_of_pivot;

    explicit column_eliminator(field_spec field) : f(field) {}

    // Returns the kernel combination when the column vanished, empty otherwise.
    sparse_col feed(sparse_col col, index_t tag) {
        sparse_col combo{{tag, 1u}};
        while (!col.empty()) {
            auto it = slot_of_pivot.find(col.back().first);
            if (it == slot_of_pivot.end()) {
                const std::size_t slot = cols.size();
                slot_of_pivot.emplace(col.back().first, slot);
                pivot_inv.push_back(fp_inv(col.back().second, f));
                cols.push_back(std::move(col));
                combos.push_back(std::move(combo));
                return {};
            }
            const std::size_t slot = it->second;
            const std::uint32_t lambda =
                fp_neg(fp_mul(col.back().second, pivot_inv[slot], f), f);
            col = axpy(col, lambda, cols[slot], f);
            combo = axpy(combo, lambda, combos[slot], f);
        }
        return combo;
    }

    std::size_t rank() const { return cols.size(); }
};

}  // namespace detail

/// Persistence of the symmetric chain complex by left-to-right column
/// reduction over GF(p).  Columns enter by (grade, dimension, representative
/// order); zero-persistence pairs are dropped and classes surviving the whole
/// filtration are reported as essential births.  Needs scalar grades (k = 1)
/// that form a genuine filtration.
inline persistence_diagram compute_persistence(const orbit_chain_complex& occ,
                                               field_spec field) {
    if (!(field == occ.field))
        throw validation_error("field mismatch: complex was built over a different field");
    if (occ.k != 1)
        throw validation_error("persistence needs scalar grades; use pbnf_rank for k > 1");
    for (std::size_t d = 1; d < occ.boundary.size(); ++d)
        for (std::size_t col = 0; col < occ.boundary[d].size(); ++col)
            for (const auto& [row, c] : occ.boundary[d][col])
                if (occ.basis[d - 1][static_cast<std::size_t>(row)].grade[0] >
                    occ.basis[d][col].grade[0])
                    throw validation_error(
                        "grades do not form a filtration (a face enters after its coface)");

    const index_t top = occ.dim();
    if (top < 0) return persistence_diagram{field, occ.op, {}};

    std::vector<std::vector<index_t>> order(static_cast<std::size_t>(top) + 1);
    std::vector<std::vector<index_t>> rank_of(static_cast<std::size_t>(top) + 1);
    for (index_t d = 0; d <= top; ++d) {
        auto& ord = order[static_cast<std::size_t>(d)];
        const auto& layer = occ.basis[static_cast<std::size_t>(d)];
        ord.resize(layer.size());
        for (std::size_t i = 0; i < ord.size(); ++i) ord[i] = static_cast<index_t>(i);
        std::stable_sort(ord.begin(), ord.end(), [&](index_t a, index_t b) {
            return layer[static_cast<std::size_t>(a)].grade[0] <
                   layer[static_cast<std::size_t>(b)].grade[0];
        });
        auto& rk = rank_of[static_cast<std::size_t>(d)];
        rk.resize(ord.size());
        for (std::size_t pos = 0; pos < ord.size(); ++pos)
            rk[static_cast<std::size_t>(ord[pos])] = static_cast<index_t>(pos);
    }

    std::vector<std::vector<bool>> is_cycle(static_cast<std::size_t>(top) + 1);
    std::vector<std::vector<bool>> paired(static_cast<std::size_t>(top) + 1);
    for (index_t d = 0; d <= top; ++d) {
        is_cycle[static_cast<std::size_t>(d)].assign(
            occ.basis[static_cast<std::size_t>(d)].size(), d == 0);
        paired[static_cast<std::size_t>(d)].assign(
            occ.basis[static_cast<std::size_t>(d)].size(), false);
    }

    persistence_diagram out{field, occ.op, {}};
    out.degrees.resize(static_cast<std::size_t>(top) + 1);

    for (index_t d = 1; d <= top; ++d) {
        const auto& cols = occ.boundary[static_cast<std::size_t>(d)];
        const auto& rrk = rank_of[static_cast<std::size_t>(d - 1)];
        const auto& rord = order[static_cast<std::size_t>(d - 1)];
        std::vector<detail::sparse_col> reduced(cols.size());
        std::vector<std::uint32_t> piv_inv(cols.size());
        std::vector<index_t> owner_of_pivot(rord.size(), -1);
        for (index_t cj : order[static_cast<std::size_t>(d)]) {
            detail::sparse_col col;
            col.reserve(cols[static_cast<std::size_t>(cj)].size());
            for (const auto& [row, c] : cols[static_cast<std::size_t>(cj)])
                col.emplace_back(rrk[static_cast<std::size_t>(row)], c);
            std::sort(col.begin(), col.end());
            while (!col.empty()) {
                const index_t own = owner_of_pivot[static_cast<std::size_t>(col.back().first)];
                if (own < 0) break;
                const std::uint32_t lambda = fp_neg(
                    fp_mul(col.back().second, piv_inv[static_cast<std::size_t>(own)], field),
                    field);
                col = detail::axpy(col, lambda, reduced[static_cast<std::size_t>(own)], field);
            }
            if (col.empty()) {
                is_cycle[static_cast<std::size_t>(d)][static_cast<std::size_t>(cj)] = true;
            } else {
                owner_of_pivot[static_cast<std::size_t>(col.back().first)] = cj;
                piv_inv[static_cast<std::size_t>(cj)] = fp_inv(col.back().second, field);
                const index_t relt = rord[static_cast<std::size_t>(col.back().first)];
                reduced[static_cast<std::size_t>(cj)] = std::move(col);
                paired[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(relt)] = true;
                const value_t birth = occ.basis[static_cast<std::size_t>(d - 1)]
                                               [static_cast<std::size_t>(relt)].grade[0];
                const value_t death =
                    occ.basis[static_cast<std::size_t>(d)][static_cast<std::size_t>(cj)].grade[0];
                if (birth != death)
                    out.degrees[static_cast<std::size_t>(d - 1)].pairs.emplace_back(birth, death);
            }
        }
    }

    for (index_t d = 0; d <= top; ++d)
        for (std::size_t i = 0; i < occ.basis[static_cast<std::size_t>(d)].size(); ++i)
            if (is_cycle[static_cast<std::size_t>(d)][i] && !paired[static_cast<std::size_t>(d)][i])
                out.degrees[static_cast<std::size_t>(d)].essential.push_back(
                    occ.basis[static_cast<std::size_t>(d)][i].grade[0]);

    for (auto& deg : out.degrees) deg.normalize();
    return out;
}

/// Rank of H_n(sublevel u) -> H_n(sublevel v) for u strictly below v
/// componentwise: dim Z_n^u - dim(Z_n^u on B_n^v), via dim(Z + B) - dim B.
/// Works for any grade arity k >= 1.
inline long pbnf_rank(const orbit_chain_complex& occ, index_t n, const grade_t& u,
                      const grade_t& v) {
    if (static_cast<index_t>(u.size()) != occ.k || static_cast<index_t>(v.size()) != occ.k)
        throw validation_error("threshold arity mismatch");
    if (!grade_less(u, v)) throw validation_error("pbnf_rank needs u strictly below v");
    if (n < 0 || n > occ.dim()) return 0;

    const field_spec f = occ.field;
    const auto& layer = occ.basis[static_cast<std::size_t>(n)];

    // kernel of the n-th boundary on the u-sublevel columns
    std::vector<detail::sparse_col> z_basis;
    {
        detail::column_eliminator elim(f);
        for (std::size_t i = 0; i < layer.size(); ++i) {
            if (!grade_leq(layer[i].grade, u)) continue;
            detail::sparse_col col;
            if (n > 0) {
                for (const auto& [row, c] : occ.boundary[static_cast<std::size_t>(n)][i]) {
                    if (!grade_leq(occ.basis[static_cast<std::size_t>(n - 1)]
                                       [static_cast<std::size_t>(row)].grade, u))
                        throw validation_error(
                            "sublevel set is not closed under the boundary; "
                            "grades do not form a filtration");
                    col.emplace_back(row, c);
                }
                std::sort(col.begin(), col.end());
            }
            detail::sparse_col combo = elim.feed(std::move(col), static_cast<index_t>(i));
            if (!combo.empty()) z_basis.push_back(std::move(combo));
        }
    }

    // boundaries from the v-sublevel one dimension up, then the joint span
    detail::column_eliminator b_rank(f);
    detail::column_eliminator zb_rank(f);
    if (n + 1 <= occ.dim()) {
        const auto& up = occ.basis[static_cast<std::size_t>(n + 1)];
        for (std::size_t j = 0; j < up.size(); ++j) {
            if (!grade_leq(up[j].grade, v)) continue;
            detail::sparse_col col;
            for (const auto& [row, c] : occ.boundary[static_cast<std::size_t>(n + 1)][j]) {
                if (!grade_leq(layer[static_cast<std::size_t>(row)].grade, v))
                    throw validation_error(
                        "sublevel set is not closed under the boundary; "
                        "grades do not form a filtration");
                col.emplace_back(row, c);
            }
            std::sort(col.begin(), col.end());
            b_rank.feed(col, static_cast<index_t>(j));
            zb_rank.feed(std::move(col), static_cast<index_t>(j));
        }
    }
    const long dim_b = static_cast<long>(b_rank.rank());
    for (std::size_t t = 0; t < z_basis.size(); ++t)
        zb_rank.feed(z_basis[t], static_cast<index_t>(t));

    return static_cast<long>(zb_rank.rank()) - dim_b;
}

}  // namespace symph
