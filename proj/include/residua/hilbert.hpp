#pragma once

#include <map>
#include <string>
#include <vector>

#include "residua/field.hpp"

namespace residua {

// Integer Laurent polynomial in one variable t.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly term(Int c, std::int64_t e);
    static LaurentPoly one() { return term(1, 0); }

    bool is_zero() const { return c_.empty(); }
    const std::map<std::int64_t, Int>& coeffs() const { return c_; }
    Int coeff(std::int64_t e) const;
    std::int64_t min_exp() const;
    std::int64_t max_exp() const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly shifted(std::int64_t e) const;  // * t^e
    LaurentPoly reversed() const;               // t -> 1/t
    bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }

    Int eval_one() const; // value at t = 1

    // Exact division by (1 - t^a); throws if not divisible.
    LaurentPoly divided_by_one_minus_power(std::int64_t a) const;
    // Multiplicity of the root t = 1.
    int order_at_one() const;

    std::string str() const;

private:
    void trim();
    std::map<std::int64_t, Int> c_;
};

// Hilbert series as numerator over ∏_i (1 - t^{d_i}), one factor per variable.
struct HilbertSeries {
    LaurentPoly numerator;
    std::vector<int> denom_degrees;

    bool operator==(const HilbertSeries& o) const;

    // Krull dimension of the module: #vars minus the order of vanishing of the
    // numerator at t = 1.
    int dimension() const;

    // Reduced form P(t) with series = P(t)/(1-t^a)^dim, a = lcm of degrees.
    LaurentPoly reduced_numerator(int dim, int a) const;

    // Multiplicity: P(1) of the reduced numerator (length when dim = 0).
    Int multiplicity() const;

    // Coefficients of the power series expansion for exponents in [lo, hi].
    std::vector<Int> expand(std::int64_t lo, std::int64_t hi) const;
    Int coefficient(std::int64_t n) const;

    // Formal substitution t -> 1/t of the rational function, renormalized to
    // the same denominator: H(1/t) * (-1)^{#vars} * t^{Σ d_i} has numerator
    // reversed(numerator) * t^{Σ d_i}... exposed for the duality tests.
    std::string str() const;
};

HilbertSeries hs_zero(const std::vector<int>& denom);
HilbertSeries hs_sum(const HilbertSeries& a, const HilbertSeries& b);
HilbertSeries hs_shift(const HilbertSeries& a, std::int64_t e);

} // namespace residua
