#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "symph/complex.hpp"
#include "symph/group.hpp"
#include "symph/persistence.hpp"

namespace symph {

using json = nlohmann::json;

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw io_error(path + ": " + e.what());
    }
}

inline void save_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw io_error("failed writing " + path);
}

namespace detail {

inline const json& need_field(const json& j, const char* key, const char* where) {
    if (!j.is_object() || !j.contains(key))
        throw io_error(std::string(where) + ": missing field '" + key + "'");
    return j.at(key);
}

inline index_t as_index(const json& j, const char* where) {
    if (!j.is_number_integer())
        throw io_error(std::string(where) + ": expected an integer");
    return j.get<index_t>();
}

inline std::vector<index_t> as_index_list(const json& j, const char* where) {
    if (!j.is_array()) throw io_error(std::string(where) + ": expected an array");
    std::vector<index_t> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(as_index(e, where));
    return out;
}

inline std::string shortest(value_t v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace detail

// ---- complexes and vertex functions ----
// {"vertices": N, "simplices": [[v0,...],...], "values": [[f1,...,fk],...]}
// Simplices may list top cells only; the closure is rebuilt on load, and the
// writer emits maximal cells only.  "values" is optional and may also live in
// its own file, either bare or wrapped in {"values": ...}; scalar functions
// may drop the inner brackets.

inline simplicial_complex complex_from_json(const json& j) {
    const index_t n = detail::as_index(detail::need_field(j, "vertices", "complex"), "vertices");
    const json& simp = detail::need_field(j, "simplices", "complex");
    if (!simp.is_array()) throw io_error("complex: 'simplices' must be an array");
    std::vector<simplex_t> cells;
    cells.reserve(simp.size());
    for (const auto& s : simp) cells.push_back(detail::as_index_list(s, "simplices"));
    return make_complex(n, cells);
}

inline vertex_function values_from_json(const json& j) {
    const json& vals = j.is_object() ? detail::need_field(j, "values", "values") : j;
    if (!vals.is_array()) throw io_error("values: expected an array");
    std::vector<grade_t> values;
    values.reserve(vals.size());
    index_t k = 1;
    for (const auto& row : vals) {
        if (row.is_number()) {
            values.push_back({row.get<value_t>()});
        } else if (row.is_array()) {
            grade_t g;
            for (const auto& e : row) {
                if (!e.is_number()) throw io_error("values: expected numbers");
                g.push_back(e.get<value_t>());
            }
            if (g.empty()) throw io_error("values: empty tuple");
            k = static_cast<index_t>(g.size());
            values.push_back(std::move(g));
        } else {
            throw io_error("values: expected a number or an array per vertex");
        }
    }
    return make_vertex_function(k, std::move(values));
}

inline std::vector<simplex_t> maximal_cells(const simplicial_complex& cx) {
    std::set<simplex_t> faces_of_higher;
    for (std::size_t d = 1; d < cx.cells.size(); ++d)
        for (const simplex_t& s : cx.cells[d]) {
            simplex_t f(s.size() - 1);
            for (std::size_t skip = 0; skip < s.size(); ++skip) {
                std::size_t t = 0;
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != skip) f[t++] = s[i];
                faces_of_higher.insert(f);
            }
        }
    std::vector<simplex_t> out;
    for (const auto& layer : cx.cells)
        for (const simplex_t& s : layer)
            if (!faces_of_higher.count(s)) out.push_back(s);
    return out;
}

inline json complex_to_json(const simplicial_complex& cx,
                            const vertex_function* f = nullptr) {
    json j;
    j["vertices"] = cx.vertex_count;
    j["simplices"] = json::array();
    for (const simplex_t& s : maximal_cells(cx)) j["simplices"].push_back(s);
    if (f) {
        json vals = json::array();
        for (const grade_t& g : f->values) vals.push_back(g);
        j["values"] = std::move(vals);
    }
    return j;
}

inline json values_to_json(const vertex_function& f) {
    json vals = json::array();
    for (const grade_t& g : f.values) vals.push_back(g);
    return json{{"values", std::move(vals)}};
}

// ---- groups and samples ----
// {"elements": [[perm...],...]} or {"generators": [[perm...],...], "cap": M}

inline group_action group_from_json(const json& j, index_t vertex_count) {
    if (j.contains("elements")) {
        const json& el = j.at("elements");
        if (!el.is_array()) throw io_error("group: 'elements' must be an array");
        std::vector<vertex_permutation> elements;
        for (const auto& g : el) elements.push_back(detail::as_index_list(g, "elements"));
        return make_group(std::move(elements), vertex_count);
    }
    if (j.contains("generators")) {
        const json& gen = j.at("generators");
        if (!gen.is_array()) throw io_error("group: 'generators' must be an array");
        std::vector<vertex_permutation> generators;
        for (const auto& g : gen) generators.push_back(detail::as_index_list(g, "generators"));
        index_t cap = 4096;
        if (j.contains("cap")) cap = detail::as_index(j.at("cap"), "cap");
        return enumerate_group(generators, vertex_count, cap);
    }
    throw io_error("group: need 'elements' or 'generators'");
}

inline json group_to_json(const group_action& h) {
    json el = json::array();
    for (const auto& g : h.elements) el.push_back(g);
    return json{{"elements", std::move(el)}};
}

inline std::vector<vertex_permutation> sample_from_json(const json& j) {
    const json& el = j.is_object() ? detail::need_field(j, "elements", "sample") : j;
    if (!el.is_array()) throw io_error("sample: expected an array of permutations");
    std::vector<vertex_permutation> out;
    for (const auto& g : el) out.push_back(detail::as_index_list(g, "sample"));
    return out;
}

inline json sample_to_json(const std::vector<vertex_permutation>& sample) {
    json el = json::array();
    for (const auto& g : sample) el.push_back(g);
    return json{{"elements", std::move(el)}};
}

// ---- diagrams ----
// {"degree_n": {"pairs": [[b,d],...], "essential": [b,...]}, "meta": {...}}

inline json diagram_to_json(const persistence_diagram& d) {
    json j;
    j["meta"] = {{"field", d.field.p},
                 {"operator", to_string(d.op)},
                 {"tiebreak", "grade, then dimension, then representative order"}};
    for (std::size_t n = 0; n < d.degrees.size(); ++n) {
        json deg;
        deg["pairs"] = json::array();
        for (const auto& [b, e] : d.degrees[n].pairs) deg["pairs"].push_back({b, e});
        deg["essential"] = d.degrees[n].essential;
        j["degree_" + std::to_string(n)] = std::move(deg);
    }
    return j;
}

inline persistence_diagram diagram_from_json(const json& j) {
    if (!j.is_object()) throw io_error("diagram: expected an object");
    persistence_diagram d;
    const json& meta = detail::need_field(j, "meta", "diagram");
    d.field = make_field(
        detail::as_index(detail::need_field(meta, "field", "diagram meta"), "field"));
    const std::string op = detail::need_field(meta, "operator", "diagram meta").get<std::string>();
    if (op == "max")
        d.op = grade_op::max;
    else if (op == "mean")
        d.op = grade_op::mean;
    else
        throw io_error("diagram meta: unknown operator '" + op + "'");

    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        if (key.rfind("degree_", 0) != 0) continue;
        index_t n = 0;
        const auto res =
            std::from_chars(key.data() + 7, key.data() + key.size(), n);
        if (res.ec != std::errc() || res.ptr != key.data() + key.size() || n < 0)
            throw io_error("diagram: bad degree key '" + key + "'");
        if (static_cast<std::size_t>(n) >= d.degrees.size())
            d.degrees.resize(static_cast<std::size_t>(n) + 1);
        degree_diagram& deg = d.degrees[static_cast<std::size_t>(n)];
        const json& pairs = detail::need_field(*it, "pairs", key.c_str());
        if (!pairs.is_array()) throw io_error(key + ": 'pairs' must be an array");
        for (const auto& p : pairs) {
            if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
                throw io_error(key + ": each pair must be [birth, death]");
            deg.pairs.emplace_back(p[0].get<value_t>(), p[1].get<value_t>());
        }
        const json& ess = detail::need_field(*it, "essential", key.c_str());
        if (!ess.is_array()) throw io_error(key + ": 'essential' must be an array");
        for (const auto& b : ess) {
            if (!b.is_number()) throw io_error(key + ": essential births must be numbers");
            deg.essential.push_back(b.get<value_t>());
        }
        deg.normalize();
    }
    return d;
}

inline std::string diagram_to_csv(const persistence_diagram& d) {
    std::ostringstream out;
    out << "degree,birth,death\n";
    for (std::size_t n = 0; n < d.degrees.size(); ++n) {
        for (const auto& [b, e] : d.degrees[n].pairs)
            out << n << ',' << detail::shortest(b) << ',' << detail::shortest(e) << '\n';
        for (value_t b : d.degrees[n].essential)
            out << n << ',' << detail::shortest(b) << ",inf\n";
    }
    return out.str();
}

/// Exact rational rendering for dyadic values (num/2^e with a small e), used
/// to print distances exactly when the inputs were dyadic.  Returns nothing
/// for values without a short dyadic form.
inline std::optional<std::string> exact_dyadic(value_t v) {
    if (!std::isfinite(v)) return std::nullopt;
    value_t scaled = v;
    for (int e = 0; e <= 40; ++e) {
        if (scaled == std::floor(scaled) && std::fabs(scaled) < 9.0e15) {
            const long long num = static_cast<long long>(scaled);
            if (e == 0) return std::to_string(num);
            return std::to_string(num) + "/" + std::to_string(1LL << e);
        }
        scaled *= 2.0;
    }
    return std::nullopt;
}

}  // namespace symph
