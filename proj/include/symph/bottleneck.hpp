#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

#include "symph/persistence.hpp"

namespace symph {

// Bottleneck matching between two diagrams of one degree.  Finite pairs may
// match finite pairs or the diagonal; essential births only match essential
// births, and a cardinality mismatch makes the distance infinite.
struct matching_result {
    bool infinite = false;
    value_t value = 0.0;
    std::vector<index_t> a_to_b;          // per finite pair of A: index into B or -1 (diagonal)
    std::vector<index_t> essential_a_to_b;  // per essential birth of A: index into B
};

namespace detail {

inline value_t pair_cost(const std::pair<value_t, value_t>& p,
                         const std::pair<value_t, value_t>& q) {
    return std::max(std::fabs(p.first - q.first), std::fabs(p.second - q.second));
}

inline value_t diag_cost(const std::pair<value_t, value_t>& p) {
    return (p.second - p.first) / 2.0;
}

// Augmenting-path bipartite matcher on an adjacency list.
struct bipartite_matcher {
    std::vector<std::vector<index_t>> adj;  // left -> rights
    std::vector<index_t> match_l, match_r;

    explicit bipartite_matcher(std::size_t nl, std::size_t nr)
        : adj(nl), match_l(nl, -1), match_r(nr, -1) {}

    bool augment(index_t u, std::vector<char>& used) {
        for (index_t w : adj[static_cast<std::size_t>(u)]) {
            if (used[static_cast<std::size_t>(w)]) continue;
            used[static_cast<std::size_t>(w)] = 1;
            if (match_r[static_cast<std::size_t>(w)] < 0 ||
                augment(match_r[static_cast<std::size_t>(w)], used)) {
                match_l[static_cast<std::size_t>(u)] = w;
                match_r[static_cast<std::size_t>(w)] = u;
                return true;
            }
        }
        return false;
    }

    std::size_t run() {
        std::size_t size = 0;
        for (std::size_t u = 0; u < adj.size(); ++u) {
            std::vector<char> used(match_r.size(), 0);
            if (augment(static_cast<index_t>(u), used)) ++size;
        }
        return size;
    }
};

// Perfect matching on the diagonal-augmented graph at threshold t.
// Left: A points then proxies of B points; right: B points then proxies of A.
inline bool feasible(const std::vector<std::pair<value_t, value_t>>& a,
                     const std::vector<std::pair<value_t, value_t>>& b, value_t t,
                     std::vector<index_t>* witness) {
    const std::size_t na = a.size(), nb = b.size();
    bipartite_matcher m(na + nb, nb + na);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < nb; ++j)
            if (pair_cost(a[i], b[j]) <= t) m.adj[i].push_back(static_cast<index_t>(j));
        if (diag_cost(a[i]) <= t) m.adj[i].push_back(static_cast<index_t>(nb + i));
    }
    for (std::size_t j = 0; j < nb; ++j) {
        if (diag_cost(b[j]) <= t) m.adj[na + j].push_back(static_cast<index_t>(j));
        for (std::size_t i = 0; i < na; ++i)
            m.adj[na + j].push_back(static_cast<index_t>(nb + i));  // proxy-proxy, free
    }
    if (m.run() != na + nb) return false;
    if (witness) {
        witness->assign(na, -1);
        for (std::size_t i = 0; i < na; ++i)
            if (m.match_l[i] >= 0 && m.match_l[i] < static_cast<index_t>(nb))
                (*witness)[i] = m.match_l[i];
    }
    return true;
}

}  // namespace detail

/// Exact bottleneck distance between two degree diagrams: binary search over
/// the finite set of candidate costs, with feasibility decided by bipartite
/// matching against the diagonal-augmented graph.
inline matching_result bottleneck_distance(const degree_diagram& a, const degree_diagram& b) {
    matching_result res;
    if (a.essential.size() != b.essential.size()) {
        res.infinite = true;
        res.value = std::numeric_limits<value_t>::infinity();
        return res;
    }

    // essential births live on a line; sorted order is bottleneck-optimal
    value_t cost_e = 0.0;
    {
        std::vector<index_t> ia(a.essential.size()), ib(b.essential.size());
        std::iota(ia.begin(), ia.end(), 0);
        std::iota(ib.begin(), ib.end(), 0);
        std::sort(ia.begin(), ia.end(), [&](index_t x, index_t y) {
            return a.essential[static_cast<std::size_t>(x)] < a.essential[static_cast<std::size_t>(y)];
        });
        std::sort(ib.begin(), ib.end(), [&](index_t x, index_t y) {
            return b.essential[static_cast<std::size_t>(x)] < b.essential[static_cast<std::size_t>(y)];
        });
        res.essential_a_to_b.assign(a.essential.size(), -1);
        for (std::size_t r = 0; r < ia.size(); ++r) {
            res.essential_a_to_b[static_cast<std::size_t>(ia[r])] = ib[r];
            cost_e = std::max(cost_e,
                              std::fabs(a.essential[static_cast<std::size_t>(ia[r])] -
                                        b.essential[static_cast<std::size_t>(ib[r])]));
        }
    }

    std::vector<value_t> candidates{0.0};
    for (const auto& p : a.pairs) {
        candidates.push_back(detail::diag_cost(p));
        for (const auto& q : b.pairs) candidates.push_back(detail::pair_cost(p, q));
    }
    for (const auto& q : b.pairs) candidates.push_back(detail::diag_cost(q));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (detail::feasible(a.pairs, b.pairs, candidates[mid], nullptr))
            hi = mid;
        else
            lo = mid + 1;
    }
    detail::feasible(a.pairs, b.pairs, candidates[lo], &res.a_to_b);
    res.value = std::max(candidates[lo], cost_e);
    return res;
}

inline matching_result bottleneck_distance(const persistence_diagram& a,
                                            const persistence_diagram& b, index_t degree) {
    return bottleneck_distance(a.degree(static_cast<std::size_t>(degree)),
                               b.degree(static_cast<std::size_t>(degree)));
}

struct aggregate_result {
    bool infinite = false;
    value_t value = 0.0;
    std::vector<std::pair<index_t, matching_result>> per_degree;
};

inline aggregate_result aggregate_bottleneck(const persistence_diagram& a,
                                             const persistence_diagram& b,
                                             const std::vector<index_t>& degrees) {
    aggregate_result out;
    for (index_t n : degrees) {
        matching_result r =
            bottleneck_distance(a.degree(static_cast<std::size_t>(n)),
                                b.degree(static_cast<std::size_t>(n)));
        out.infinite = out.infinite || r.infinite;
        out.value = std::max(out.value, r.value);
        out.per_degree.emplace_back(n, std::move(r));
    }
    if (out.infinite) out.value = std::numeric_limits<value_t>::infinity();
    return out;
}

inline std::vector<index_t> all_degrees(const persistence_diagram& a,
                                        const persistence_diagram& b) {
    const std::size_t n = std::max(a.degrees.size(), b.degrees.size());
    std::vector<index_t> degrees(n);
    std::iota(degrees.begin(), degrees.end(), 0);
    return degrees;
}

/// Stability check: the aggregate bottleneck distance must stay within the
/// provided upper bound, up to the given slack.
inline bool verify_stability(const persistence_diagram& a, const persistence_diagram& b,
                             value_t bound, const std::vector<index_t>& degrees,
                             value_t slack = 1e-9) {
    const aggregate_result r = aggregate_bottleneck(a, b, degrees);
    return !r.infinite && r.value <= bound + slack;
}

}  // namespace symph
