#pragma once

#include <cstdint>

#include "symph/common.hpp"

namespace symph {

// Prime field GF(p), p = 2 or an odd prime below 2^16.  Elements are stored
// as uint32_t in [0, p).
struct field_spec {
    std::uint32_t p = 2;

    bool operator==(const field_spec&) const = default;
};

inline bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline field_spec make_field(std::uint32_t p) {
    if (!is_prime(p) || p >= (1u << 16))
        throw validation_error("field characteristic must be a prime below 2^16");
    return field_spec{p};
}

inline std::uint32_t fp_normalize(long long v, const field_spec& f) {
    long long r = v % static_cast<long long>(f.p);
    if (r < 0) r += f.p;
    return static_cast<std::uint32_t>(r);
}

inline std::uint32_t fp_add(std::uint32_t a, std::uint32_t b, const field_spec& f) {
    std::uint32_t s = a + b;
    return s >= f.p ? s - f.p : s;
}

inline std::uint32_t fp_sub(std::uint32_t a, std::uint32_t b, const field_spec& f) {
    return a >= b ? a - b : a + f.p - b;
}

inline std::uint32_t fp_mul(std::uint32_t a, std::uint32_t b, const field_spec& f) {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % f.p);
}

inline std::uint32_t fp_neg(std::uint32_t a, const field_spec& f) {
    return a == 0 ? 0 : f.p - a;
}

inline std::uint32_t fp_pow(std::uint32_t a, std::uint64_t e, const field_spec& f) {
    std::uint32_t r = 1;
    while (e) {
        if (e & 1) r = fp_mul(r, a, f);
        a = fp_mul(a, a, f);
        e >>= 1;
    }
    return r;
}

inline std::uint32_t fp_inv(std::uint32_t a, const field_spec& f) {
    if (a == 0) throw validation_error("division by zero in GF(p)");
    return fp_pow(a, f.p - 2, f);
}

}  // namespace symph
