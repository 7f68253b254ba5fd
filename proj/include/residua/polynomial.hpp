#pragma once

#include <optional>
#include <string>
#include <vector>

#include "residua/ring.hpp"

namespace residua {

struct Term {
    Monomial mono;
    Rat coeff;
};

// Sparse multivariate polynomial. Terms are kept strictly descending in the
// ring's monomial order with nonzero canonical coefficients. Values are
// immutable after construction and safe to share across threads.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
    // Takes any term list; sorts, merges, drops zeros, canonicalizes.
    Polynomial(Ring ring, std::vector<Term> terms);

    static Polynomial zero(const Ring& ring) { return Polynomial(ring); }
    static Polynomial constant(const Ring& ring, const Rat& c);
    static Polynomial variable(const Ring& ring, std::size_t i, int exp = 1);
    static Polynomial monomial(const Ring& ring, Monomial m, const Rat& c);

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t nterms() const { return terms_.size(); }

    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const Rat& leading_coeff() const { return leading_term().coeff; }

    bool is_homogeneous() const { return is_zero() || hom_degree_.has_value(); }
    // Weighted degree; requires a nonzero homogeneous polynomial.
    std::int64_t degree() const;
    // Weighted degree of the highest term (any nonzero polynomial).
    std::int64_t top_degree() const;
    std::optional<std::int64_t> homogeneous_degree() const { return hom_degree_; }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rat& c) const;
    Polynomial times_monomial(const Monomial& m, const Rat& c) const;
    Polynomial pow(unsigned e) const;
    Polynomial monic() const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string str() const;

private:
    void canonicalize(); // sort/merge/strip, compute hom degree
    Ring ring_;
    std::vector<Term> terms_;
    std::optional<std::int64_t> hom_degree_;
};

Polynomial parse_polynomial(const Ring& ring, const std::string& text);

} // namespace residua
