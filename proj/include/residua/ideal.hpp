#pragma once

#include <limits>
#include <memory>
#include <mutex>
#include <vector>

#include "residua/groebner.hpp"

namespace residua {

inline constexpr int kCodimInfinite = std::numeric_limits<int>::max();

// Homogeneous ideal with write-once caches for the reduced Groebner basis and
// the codimension. Cheap to copy; caches are shared and thread-safe.
class Ideal {
public:
    Ideal() = default;
    Ideal(Ring ring, std::vector<Polynomial> gens);

    static Ideal zero(const Ring& ring) { return Ideal(ring, {}); }
    static Ideal unit(const Ring& ring);

    const Ring& ring() const;
    const std::vector<Polynomial>& gens() const;

    // Reduced Groebner basis: monic, pairwise non-divisible leads, descending.
    const std::vector<Polynomial>& groebner() const;

    Polynomial normal_form(const Polynomial& f) const;
    bool contains(const Polynomial& f) const;
    bool contains_ideal(const Ideal& o) const;
    bool equals(const Ideal& o) const;

    bool is_zero() const { return groebner().empty(); }
    bool is_unit() const;

    // #vars - dim(R/I); kCodimInfinite for the unit ideal.
    int codim() const;

    // Minimal generators of the ideal (prunes the given generating set).
    std::vector<Polynomial> minimal_gens() const;

    std::vector<std::string> gens_str() const;

private:
    struct Data;
    std::shared_ptr<Data> d_;
};

// Dimension of R / (monomial ideal): the largest coordinate subspace meeting
// the ideal trivially. Used for codim via leading terms.
int monomial_quotient_dim(const Ring& ring, const std::vector<Monomial>& lead_monos);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
// Single-element colon (a : f) via syzygies.
Ideal ideal_colon_elem(const Ideal& a, const Polynomial& f);
// (a : b) = ∩_i (a : b_i).
Ideal ideal_colon(const Ideal& a, const Ideal& b);
// (a : b^∞) by iterating colon until stable.
Ideal ideal_saturation(const Ideal& a, const Ideal& b);

} // namespace residua
