#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "residua/error.hpp"

namespace residua {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class FieldKind { Rationals, PrimeField };

// An exact coefficient field: QQ or GF(p) for a machine-word prime p.
// Elements are stored as Rat in canonical form: reduced fraction with
// positive denominator over QQ, least non-negative residue (denominator 1)
// over GF(p). All arithmetic goes through the field so canonical form is
// preserved.
class Field {
public:
    static Field rationals() { return Field(FieldKind::Rationals, 0); }
    static Field prime(std::uint64_t p);

    FieldKind kind() const { return kind_; }
    std::uint64_t characteristic() const { return p_; }

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    Rat zero() const { return Rat(0); }
    Rat one() const { return Rat(1); }

    // Canonicalize an arbitrary rational into this field.
    Rat reduce(const Rat& v) const;
    Rat from_int(long long n) const { return reduce(Rat(n)); }

    bool is_zero(const Rat& v) const { return v.is_zero(); }

    Rat add(const Rat& a, const Rat& b) const { return reduce_sum(a + b); }
    Rat sub(const Rat& a, const Rat& b) const { return reduce_sum(a - b); }
    Rat neg(const Rat& a) const { return a.is_zero() ? a : reduce_sum(-a); }
    Rat mul(const Rat& a, const Rat& b) const;
    Rat inv(const Rat& a) const;
    Rat div(const Rat& a, const Rat& b) const { return mul(a, inv(b)); }

    std::string describe() const;

private:
    Field(FieldKind k, std::uint64_t p) : kind_(k), p_(p) {}

    // Sums of canonical elements stay canonical over QQ; over GF(p) they may
    // leave [0,p) but the denominator stays 1.
    Rat reduce_sum(const Rat& v) const;

    FieldKind kind_;
    std::uint64_t p_;
};

} // namespace residua
