#pragma once

// Shared helpers for the test suites: seeded random algebra elements and the
// independent brute-force membership oracle.

#include "residua/families.hpp"
#include "residua/linalg.hpp"
#include "residua/presentation.hpp"
#include "residua/rng.hpp"

#include <map>

namespace residua {

using TestRng = SplitRng;

inline Rat random_field_elem(const Field& F, TestRng& rng) {
    if (F.kind() == FieldKind::PrimeField)
        return Rat(std::int64_t(rng.next(F.characteristic())));
    std::int64_t num = std::int64_t(rng.next(41)) - 20;
    std::int64_t den = 1 + std::int64_t(rng.next(7));
    return Rat(num, den);
}

inline Rat random_nonzero_field_elem(const Field& F, TestRng& rng) {
    if (F.kind() == FieldKind::PrimeField)
        return Rat(1 + std::int64_t(rng.next(F.characteristic() - 1)));
    Rat v = random_field_elem(F, rng);
    return v.is_zero() ? Rat(1) : v;
}

// Random homogeneous polynomial of the given weighted degree (may be zero).
inline Polynomial random_homogeneous(const Ring& ring, int degree, TestRng& rng) {
    std::vector<Term> terms;
    for (const auto& m : monomials_of_degree(ring, degree))
        if (rng.next(3) != 0)
            terms.push_back(Term{m, random_field_elem(ring->field(), rng)});
    return Polynomial(ring, std::move(terms));
}

// Random homogeneous element of I of the given degree.
inline Polynomial random_element_of(const Ideal& I, int degree, TestRng& rng) {
    const Ring& ring = I.ring();
    Polynomial acc(ring);
    for (const auto& g : I.gens()) {
        std::int64_t gap = degree - g.degree();
        if (gap < 0) continue;
        Polynomial c = random_homogeneous(ring, int(gap), rng);
        acc = acc + c * g;
    }
    return acc;
}

// Degreewise linear-algebra membership oracle: f lies in I iff f is a field
// combination of {m·g : g generator, m monomial of matching degree}.
inline bool brute_force_membership(const Ideal& I, const Polynomial& f) {
    const Ring& ring = I.ring();
    if (f.is_zero()) return true;
    std::int64_t d = f.degree();
    std::vector<Monomial> basis = monomials_of_degree(ring, d);
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;

    std::vector<Polynomial> spanners;
    for (const auto& g : I.gens())
        for (const auto& m : monomials_of_degree(ring, d - g.degree()))
            spanners.push_back(g.times_monomial(m, Rat(1)));
    Mat A(ring->field(), basis.size(), spanners.size());
    for (std::size_t j = 0; j < spanners.size(); ++j)
        for (const auto& t : spanners[j].terms()) A.set(index.at(t.mono), j, t.coeff);
    std::vector<Rat> b(basis.size(), Rat(0));
    for (const auto& t : f.terms()) b[index.at(t.mono)] = t.coeff;
    return A.solve(b).has_value();
}

} // namespace residua
