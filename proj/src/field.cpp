#include "residua/field.hpp"

namespace residua {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Int mod_p(const Int& v, const Int& p) {
    Int r = v % p;
    if (r < 0) r += p;
    return r;
}

} // namespace

Field Field::prime(std::uint64_t p) {
    require(p >= 2 && p < (1ull << 62), "field modulus out of range");
    require(is_prime_u64(p), "field modulus must be prime");
    return Field(FieldKind::PrimeField, p);
}

Rat Field::reduce(const Rat& v) const {
    if (kind_ == FieldKind::Rationals) return v; // cpp_rational is always reduced
    Int p(p_);
    Int num = mod_p(numerator(v), p);
    Int den = mod_p(denominator(v), p);
    if (den == 1) return Rat(num);
    require(den != 0, "division by multiple of the characteristic");
    // num * den^{-1} mod p via Fermat
    Int inv = boost::multiprecision::powm(den, p - 2, p);
    return Rat(mod_p(num * inv, p));
}

Rat Field::reduce_sum(const Rat& v) const {
    if (kind_ == FieldKind::Rationals) return v;
    Int num = numerator(v); // denominator is 1 for canonical GF(p) inputs
    Int p(p_);
    if (num >= 0 && num < p) return v;
    return Rat(mod_p(num, p));
}

Rat Field::mul(const Rat& a, const Rat& b) const {
    if (kind_ == FieldKind::Rationals) return a * b;
    return reduce_sum(a * b);
}

Rat Field::inv(const Rat& a) const {
    require(!a.is_zero(), "inverse of zero");
    if (kind_ == FieldKind::Rationals) return 1 / a;
    Int p(p_);
    return Rat(boost::multiprecision::powm(numerator(a), p - 2, p));
}

std::string Field::describe() const {
    if (kind_ == FieldKind::Rationals) return "QQ";
    return "GF(" + std::to_string(p_) + ")";
}

} // namespace residua
