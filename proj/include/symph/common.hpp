#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace symph {

using value_t = double;
using index_t = int;

// Raised when inputs violate a documented precondition (bad group, non-free
// action, grade mismatch, ...).  CLI maps this to exit code 1.
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised on malformed files or unparseable payloads.  CLI maps this to exit
// code 2.
struct io_error : std::runtime_error {
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A k-tuple of filtration values.  Componentwise partial order throughout.
using grade_t = std::vector<value_t>;

inline bool grade_leq(const grade_t& a, const grade_t& b) {
    if (a.size() != b.size()) throw validation_error("grade arity mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] <= b[i])) return false;
    return true;
}

inline bool grade_less(const grade_t& a, const grade_t& b) {
    if (a.size() != b.size()) throw validation_error("grade arity mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] < b[i])) return false;
    return true;
}

// Lexicographic comparison, used only for deterministic tie-breaking.
inline bool grade_lex_less(const grade_t& a, const grade_t& b) {
    return a < b;
}

}  // namespace symph
