#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "symph/common.hpp"

namespace symph {

// A simplex is its strictly ascending vertex tuple.
using simplex_t = std::vector<index_t>;

inline simplex_t sorted_simplex(simplex_t s) {
    std::sort(s.begin(), s.end());
    return s;
}

// Finite abstract simplicial complex.  cells[d] holds all d-simplices in
// lexicographic order, closed under taking faces.
struct simplicial_complex {
    index_t vertex_count = 0;
    std::vector<std::vector<simplex_t>> cells;

    index_t dim() const { return static_cast<index_t>(cells.size()) - 1; }

    std::size_t size() const {
        std::size_t n = 0;
        for (const auto& layer : cells) n += layer.size();
        return n;
    }

    // Index of s among the d-simplices, or -1.
    index_t index_of(const simplex_t& s) const {
        const index_t d = static_cast<index_t>(s.size()) - 1;
        if (d < 0 || d > dim()) return -1;
        const auto& layer = cells[d];
        auto it = std::lower_bound(layer.begin(), layer.end(), s);
        if (it == layer.end() || *it != s) return -1;
        return static_cast<index_t>(it - layer.begin());
    }

    bool contains(const simplex_t& s) const { return index_of(s) >= 0; }

    bool operator==(const simplicial_complex&) const = default;
};

namespace detail {

inline void add_with_faces(const simplex_t& s, std::set<simplex_t>& out) {
    // Subsets via bitmask; simplices in this library are tiny.
    const std::size_t n = s.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        simplex_t f;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) f.push_back(s[i]);
        out.insert(std::move(f));
    }
}

}  // namespace detail

// Builds the closure of the given cells.  Input tuples may be unsorted and
// may repeat; vertices 0..vertex_count-1 are always present.
inline simplicial_complex make_complex(index_t vertex_count,
                                       const std::vector<simplex_t>& top_cells) {
    if (vertex_count < 0) throw validation_error("negative vertex count");
    std::set<simplex_t> all;
    for (index_t v = 0; v < vertex_count; ++v) all.insert({v});
    for (const auto& raw : top_cells) {
        simplex_t s = sorted_simplex(raw);
        if (s.empty()) throw validation_error("empty simplex");
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] < 0 || s[i] >= vertex_count)
                throw validation_error("simplex vertex out of range");
            if (i > 0 && s[i] == s[i - 1])
                throw validation_error("repeated vertex in simplex");
        }
        detail::add_with_faces(s, all);
    }
    simplicial_complex k;
    k.vertex_count = vertex_count;
    for (const auto& s : all) {
        const std::size_t d = s.size() - 1;
        if (k.cells.size() <= d) k.cells.resize(d + 1);
        k.cells[d].push_back(s);
    }
    // std::set iterates lexicographically within equal length only after the
    // length split above; re-sort each layer to be explicit.
    for (auto& layer : k.cells) std::sort(layer.begin(), layer.end());
    return k;
}

// Vertex function with values in R^k.
struct vertex_function {
    index_t k = 1;
    std::vector<grade_t> values;  // one k-tuple per vertex

    bool operator==(const vertex_function&) const = default;
};

inline vertex_function make_vertex_function(index_t k, std::vector<grade_t> values) {
    if (k < 1) throw validation_error("k must be >= 1");
    for (const auto& v : values)
        if (static_cast<index_t>(v.size()) != k)
            throw validation_error("vertex value arity mismatch");
    return vertex_function{k, std::move(values)};
}

// Lower-star filtered complex: grade(s) = componentwise max of vertex values.
struct filtered_complex {
    simplicial_complex complex;
    vertex_function f;
    std::vector<std::vector<grade_t>> grades;  // parallel to complex.cells

    const grade_t& grade_of(index_t d, index_t i) const { return grades[d][i]; }

    bool operator==(const filtered_complex&) const = default;
};

inline grade_t lower_star_grade(const simplex_t& s, const vertex_function& f) {
    grade_t g = f.values[s[0]];
    for (std::size_t i = 1; i < s.size(); ++i)
        for (index_t c = 0; c < f.k; ++c)
            g[c] = std::max(g[c], f.values[s[i]][c]);
    return g;
}

inline filtered_complex build_filtered_complex(simplicial_complex k, vertex_function f) {
    if (static_cast<index_t>(f.values.size()) != k.vertex_count)
        throw validation_error("vertex function size does not match complex");
    filtered_complex fc{std::move(k), std::move(f), {}};
    fc.grades.resize(fc.complex.cells.size());
    for (std::size_t d = 0; d < fc.complex.cells.size(); ++d) {
        fc.grades[d].reserve(fc.complex.cells[d].size());
        for (const auto& s : fc.complex.cells[d])
            fc.grades[d].push_back(lower_star_grade(s, fc.f));
    }
    return fc;
}

// Full subcomplex on the cells with grade componentwise <= u.  Closed under
// faces because lower-star grades are monotone.
inline simplicial_complex sublevel_complex(const filtered_complex& fc, const grade_t& u) {
    if (static_cast<index_t>(u.size()) != fc.f.k)
        throw validation_error("threshold arity mismatch");
    simplicial_complex out;
    out.vertex_count = fc.complex.vertex_count;
    for (std::size_t d = 0; d < fc.complex.cells.size(); ++d) {
        std::vector<simplex_t> layer;
        for (std::size_t i = 0; i < fc.complex.cells[d].size(); ++i)
            if (grade_leq(fc.grades[d][i], u)) layer.push_back(fc.complex.cells[d][i]);
        if (!layer.empty()) {
            out.cells.resize(d + 1);
            out.cells[d] = std::move(layer);
        }
    }
    return out;
}

// Barycentric subdivision.  Every simplex of the input becomes a vertex whose
// value is the simplex grade, so lower-star persistence is preserved.
struct subdivision {
    filtered_complex fc;
    // vertex_of[d][i]: subdivision vertex representing input d-simplex i
    std::vector<std::vector<index_t>> vertex_of;
    // origin[w] = (d, i) inverse of the above
    std::vector<std::pair<index_t, index_t>> origin;
};

namespace detail {

// All maximal chains f_0 < f_1 < ... < s in the face poset, ending at s.
inline void flags_below(const simplicial_complex& k, const simplex_t& s,
                        std::vector<index_t>& chain,
                        const std::vector<std::vector<index_t>>& vid,
                        std::vector<simplex_t>& out) {
    const index_t d = static_cast<index_t>(s.size()) - 1;
    chain.push_back(vid[d][k.index_of(s)]);
    if (d == 0) {
        simplex_t flag(chain.rbegin(), chain.rend());
        out.push_back(sorted_simplex(std::move(flag)));
    } else {
        simplex_t face(s.size() - 1);
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            std::size_t w = 0;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop) face[w++] = s[i];
            flags_below(k, face, chain, vid, out);
        }
    }
    chain.pop_back();
}

}  // namespace detail

inline subdivision barycentric_subdivide(const filtered_complex& fc) {
    const simplicial_complex& k = fc.complex;
    subdivision sd;
    sd.vertex_of.resize(k.cells.size());
    index_t next = 0;
    for (std::size_t d = 0; d < k.cells.size(); ++d)
        for (std::size_t i = 0; i < k.cells[d].size(); ++i) {
            sd.vertex_of[d].push_back(next++);
            sd.origin.emplace_back(static_cast<index_t>(d), static_cast<index_t>(i));
        }

    // maximal cells: not a facet of anything present
    std::vector<simplex_t> tops;
    for (std::size_t d = 0; d < k.cells.size(); ++d)
        for (const auto& s : k.cells[d]) {
            bool maximal = true;
            if (d + 1 < k.cells.size()) {
                for (const auto& t : k.cells[d + 1]) {
                    if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                        maximal = false;
                        break;
                    }
                }
            }
            if (maximal) tops.push_back(s);
        }

    std::vector<simplex_t> flags;
    std::vector<index_t> chain;
    for (const auto& s : tops) detail::flags_below(k, s, chain, sd.vertex_of, flags);

    std::vector<grade_t> values(static_cast<std::size_t>(next));
    for (index_t w = 0; w < next; ++w) {
        auto [d, i] = sd.origin[w];
        values[w] = fc.grades[d][i];
    }
    sd.fc = build_filtered_complex(make_complex(next, flags),
                                   make_vertex_function(fc.f.k, std::move(values)));
    return sd;
}

}  // namespace symph
