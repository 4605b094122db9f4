#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "symph/complex.hpp"
#include "symph/common.hpp"

namespace symph {

// A vertex permutation as its image array: g[v] is where v goes.
using vertex_permutation = std::vector<index_t>;

inline bool is_permutation(const vertex_permutation& g, index_t n) {
    if (static_cast<index_t>(g.size()) != n) return false;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (index_t v : g) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

inline vertex_permutation identity_permutation(index_t n) {
    vertex_permutation id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), 0);
    return id;
}

// (g o h)(v) = g(h(v))
inline vertex_permutation compose(const vertex_permutation& g, const vertex_permutation& h) {
    vertex_permutation r(h.size());
    for (std::size_t v = 0; v < h.size(); ++v) r[v] = g[static_cast<std::size_t>(h[v])];
    return r;
}

inline vertex_permutation inverse(const vertex_permutation& g) {
    vertex_permutation r(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) r[static_cast<std::size_t>(g[v])] = static_cast<index_t>(v);
    return r;
}

inline simplex_t apply_permutation(const vertex_permutation& g, const simplex_t& s) {
    simplex_t img(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) img[i] = g[static_cast<std::size_t>(s[i])];
    return sorted_simplex(std::move(img));
}

// Parity of the permutation sorting g applied to the ascending tuple s.
// +1 if the images land in ascending order after an even shuffle, -1 else.
inline int image_sign(const vertex_permutation& g, const simplex_t& s) {
    std::vector<index_t> img(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) img[i] = g[static_cast<std::size_t>(s[i])];
    int sign = 1;
    for (std::size_t i = 0; i < img.size(); ++i)
        for (std::size_t j = i + 1; j < img.size(); ++j)
            if (img[i] > img[j]) sign = -sign;
    return sign;
}

// A finite group of vertex permutations, identity first, then BFS order by
// word length over the generators (deterministic).
struct group_action {
    std::vector<vertex_permutation> elements;

    std::size_t order() const { return elements.size(); }
};

inline group_action enumerate_group(const std::vector<vertex_permutation>& generators,
                                    index_t vertex_count, std::size_t cap = 4096) {
    for (const auto& g : generators)
        if (!is_permutation(g, vertex_count))
            throw validation_error("generator is not a permutation of the vertex set");
    group_action out;
    std::set<vertex_permutation> seen;
    out.elements.push_back(identity_permutation(vertex_count));
    seen.insert(out.elements.back());
    std::size_t head = 0;
    while (head < out.elements.size()) {
        vertex_permutation cur = out.elements[head++];
        for (const auto& g : generators) {
            vertex_permutation next = compose(g, cur);
            if (seen.insert(next).second) {
                out.elements.push_back(std::move(next));
                if (out.elements.size() > cap)
                    throw validation_error("group enumeration exceeded cap");
            }
        }
    }
    return out;
}

inline group_action make_group(std::vector<vertex_permutation> elements, index_t vertex_count) {
    group_action h{std::move(elements)};
    for (const auto& g : h.elements)
        if (!is_permutation(g, vertex_count))
            throw validation_error("group element is not a permutation of the vertex set");
    const std::set<vertex_permutation> all(h.elements.begin(), h.elements.end());
    if (all.size() != h.elements.size()) throw validation_error("duplicate group elements");
    if (!all.count(identity_permutation(vertex_count)))
        throw validation_error("group does not contain the identity");
    for (const auto& a : h.elements) {
        if (!all.count(inverse(a))) throw validation_error("group not closed under inverse");
        for (const auto& b : h.elements)
            if (!all.count(compose(a, b))) throw validation_error("group not closed under composition");
    }
    return h;
}

inline bool is_simplicial_automorphism(const simplicial_complex& k, const vertex_permutation& g) {
    if (!is_permutation(g, k.vertex_count)) return false;
    for (const auto& layer : k.cells)
        for (const auto& s : layer)
            if (!k.contains(apply_permutation(g, s))) return false;
    return true;
}

// Orbit id per vertex under the group.
inline std::vector<index_t> vertex_orbits(const group_action& h, index_t vertex_count) {
    std::vector<index_t> orbit(static_cast<std::size_t>(vertex_count), -1);
    index_t next = 0;
    for (index_t v = 0; v < vertex_count; ++v) {
        if (orbit[static_cast<std::size_t>(v)] >= 0) continue;
        for (const auto& g : h.elements) orbit[static_cast<std::size_t>(g[static_cast<std::size_t>(v)])] = next;
        ++next;
    }
    return orbit;
}

struct action_report {
    bool group_ok = true;        // closed, has identity and inverses
    bool automorphisms = true;   // every element maps simplices to simplices
    bool free = true;            // no non-identity element fixes a simplex setwise
    bool regular = true;         // no simplex holds two vertices of one orbit
    std::string detail;

    bool valid_for_orbit_complex() const { return group_ok && automorphisms && free; }
};

inline action_report validate_action(const simplicial_complex& k, const group_action& h) {
    action_report rep;
    try {
        make_group(h.elements, k.vertex_count);
    } catch (const validation_error& e) {
        rep.group_ok = false;
        rep.detail += std::string(e.what()) + "; ";
    }
    const vertex_permutation id = identity_permutation(k.vertex_count);
    for (const auto& g : h.elements) {
        if (!is_simplicial_automorphism(k, g)) {
            rep.automorphisms = false;
            rep.detail += "element is not a simplicial automorphism; ";
            break;
        }
    }
    if (rep.automorphisms) {
        for (const auto& g : h.elements) {
            if (g == id) continue;
            for (const auto& layer : k.cells)
                for (const auto& s : layer)
                    if (apply_permutation(g, s) == s) {
                        rep.free = false;
                        rep.detail += "non-identity element fixes a simplex; ";
                        goto free_done;
                    }
        }
    }
free_done:
    if (rep.group_ok) {
        const auto orbit = vertex_orbits(h, k.vertex_count);
        for (const auto& layer : k.cells)
            for (const auto& s : layer) {
                std::set<index_t> seen;
                for (index_t v : s)
                    if (!seen.insert(orbit[static_cast<std::size_t>(v)]).second) {
                        rep.regular = false;
                        rep.detail += "simplex holds two vertices of one orbit; ";
                        goto regular_done;
                    }
            }
    }
regular_done:
    return rep;
}

struct conjugation_report {
    bool closed = true;
    // (sample index, group index) pairs where g h g^-1 leaves the group
    std::vector<std::pair<index_t, index_t>> failures;
};

// Checks g h g^-1 in H for every sampled g and every h in H.
inline conjugation_report check_conjugation_closure(const group_action& h,
                                                    const std::vector<vertex_permutation>& sample) {
    conjugation_report rep;
    const std::set<vertex_permutation> members(h.elements.begin(), h.elements.end());
    for (std::size_t gi = 0; gi < sample.size(); ++gi) {
        const vertex_permutation gin = inverse(sample[gi]);
        for (std::size_t hi = 0; hi < h.elements.size(); ++hi) {
            if (!members.count(compose(sample[gi], compose(h.elements[hi], gin)))) {
                rep.closed = false;
                rep.failures.emplace_back(static_cast<index_t>(gi), static_cast<index_t>(hi));
            }
        }
    }
    return rep;
}

// Transport of a vertex permutation to the barycentric subdivision: the
// barycenter of s goes to the barycenter of g(s).
inline vertex_permutation induced_permutation(const simplicial_complex& base,
                                              const subdivision& sd,
                                              const vertex_permutation& g) {
    if (!is_simplicial_automorphism(base, g))
        throw validation_error("permutation is not an automorphism of the base complex");
    vertex_permutation out(sd.origin.size());
    for (std::size_t w = 0; w < sd.origin.size(); ++w) {
        auto [d, i] = sd.origin[w];
        const simplex_t img = apply_permutation(g, base.cells[d][i]);
        out[w] = sd.vertex_of[d][static_cast<std::size_t>(base.index_of(img))];
    }
    return out;
}

}  // namespace symph
