#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "residua/polynomial.hpp"

namespace residua {

// Graded free module F = ⊕_i R(-degs[i]); degs are generator degrees.
struct FreeModule {
    Ring ring;
    std::vector<std::int64_t> degs;

    std::size_t rank() const { return degs.size(); }
    bool operator==(const FreeModule& o) const {
        return same_ring(ring, o.ring) && degs == o.degs;
    }
};

inline FreeModule free_module(Ring ring, std::vector<std::int64_t> degs) {
    return FreeModule{std::move(ring), std::move(degs)};
}

// Element of a free module: one polynomial per basis position.
using Vec = std::vector<Polynomial>;

Vec vec_zero(const FreeModule& F);
bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);
Vec vec_scaled(const Vec& a, const Rat& c);
Vec vec_times_monomial(const Vec& a, const Monomial& m, const Rat& c);
Vec vec_times_poly(const Vec& a, const Polynomial& p);
bool vec_equal(const Vec& a, const Vec& b);
std::string vec_str(const Vec& v);

// Degree of a homogeneous element w.r.t. the twists; throws on zero or
// inhomogeneous input.
std::int64_t vec_degree(const FreeModule& F, const Vec& v);
bool vec_is_homogeneous(const FreeModule& F, const Vec& v);

// A degree-0 graded map of free modules, stored by columns: column j is the
// image of the j-th source generator. Entry (i,j) is homogeneous of degree
// source.degs[j] - target.degs[i].
struct FreeModuleMap {
    FreeModule target;
    std::vector<std::int64_t> source_degs;
    std::vector<Vec> cols;

    std::size_t source_rank() const { return cols.size(); }
    std::size_t target_rank() const { return target.rank(); }
    FreeModule source() const { return FreeModule{target.ring, source_degs}; }

    Vec apply(const Vec& v) const; // v in source coordinates
    void validate() const;         // grading + shape invariants
};

FreeModuleMap zero_map(FreeModule target, std::vector<std::int64_t> source_degs);
FreeModuleMap compose(const FreeModuleMap& f, const FreeModuleMap& g); // f ∘ g

} // namespace residua
