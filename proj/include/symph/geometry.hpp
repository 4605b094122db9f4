#pragma once

#include <array>
#include <cmath>

#include "symph/common.hpp"

namespace symph {

using vec3 = std::array<value_t, 3>;

struct mat3 {
    std::array<std::array<value_t, 3>, 3> m{};

    static mat3 identity() {
        mat3 r;
        for (int i = 0; i < 3; ++i) r.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1.0;
        return r;
    }
};

inline vec3 apply(const mat3& a, const vec3& v) {
    vec3 r{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) r[i] += a.m[i][j] * v[j];
    return r;
}

inline mat3 operator*(const mat3& a, const mat3& b) {
    mat3 r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            value_t s = 0.0;
            for (std::size_t k = 0; k < 3; ++k) s += a.m[i][k] * b.m[k][j];
            r.m[i][j] = s;
        }
    return r;
}

inline mat3 rot_x(value_t radians) {
    const value_t c = std::cos(radians), s = std::sin(radians);
    mat3 r = mat3::identity();
    r.m[1][1] = c; r.m[1][2] = -s;
    r.m[2][1] = s; r.m[2][2] = c;
    return r;
}

inline mat3 rot_y(value_t radians) {
    const value_t c = std::cos(radians), s = std::sin(radians);
    mat3 r = mat3::identity();
    r.m[0][0] = c; r.m[0][2] = s;
    r.m[2][0] = -s; r.m[2][2] = c;
    return r;
}

inline mat3 rot_z(value_t radians) {
    const value_t c = std::cos(radians), s = std::sin(radians);
    mat3 r = mat3::identity();
    r.m[0][0] = c; r.m[0][1] = -s;
    r.m[1][0] = s; r.m[1][1] = c;
    return r;
}

inline value_t degrees_to_radians(value_t deg) {
    return deg * std::acos(-1.0) / 180.0;
}

}  // namespace symph
