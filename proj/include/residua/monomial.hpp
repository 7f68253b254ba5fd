#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "residua/error.hpp"

namespace residua {

// Exponent vector. Exponents are small by construction (desk-scale degrees);
// additions are overflow-checked.
using Monomial = std::vector<std::int32_t>;

inline Monomial mono_one(std::size_t nvars) { return Monomial(nvars, 0); }

inline bool mono_is_one(const Monomial& m) {
    for (auto e : m) if (e != 0) return false;
    return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    check(a.size() == b.size(), "monomial arity");
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t s = std::int64_t(a[i]) + b[i];
        require(s <= INT32_MAX, "exponent overflow");
        r[i] = std::int32_t(s);
    }
    return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) { // a | b
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Monomial mono_div(const Monomial& b, const Monomial& a) { // b / a
    Monomial r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        check(b[i] >= a[i], "monomial division");
        r[i] = b[i] - a[i];
    }
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

inline std::int64_t mono_weighted_degree(const Monomial& m, const std::vector<int>& w) {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += std::int64_t(m[i]) * w[i];
    return d;
}

} // namespace residua
