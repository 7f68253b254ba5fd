#pragma once

#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "residua/field.hpp"
#include "residua/monomial.hpp"

namespace residua {

enum class MonomialOrder { Grevlex, Lex, GradedLex };

class RingData;
using Ring = std::shared_ptr<const RingData>;

// Immutable descriptor of a graded polynomial ring over an exact field.
class RingData {
public:
    RingData(Field field, std::vector<std::string> vars, std::vector<int> degrees,
             MonomialOrder order);

    const Field& field() const { return field_; }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<int>& degrees() const { return degrees_; }
    MonomialOrder order() const { return order_; }
    std::size_t nvars() const { return vars_.size(); }

    bool standard_graded() const { return standard_graded_; }
    // lcm of the variable degrees (the constant a of the reciprocity formulas).
    int degree_lcm() const { return degree_lcm_; }
    int degree_sum() const { return degree_sum_; }

    std::int64_t degree(const Monomial& m) const { return mono_weighted_degree(m, degrees_); }

    // Total order on monomials; returns <0, 0, >0 for a<b, a==b, a>b.
    int compare(const Monomial& a, const Monomial& b) const;

    bool same_as(const RingData& o) const;

    int var_index(const std::string& name) const; // -1 if absent
    std::string describe() const;

private:
    Field field_;
    std::vector<std::string> vars_;
    std::vector<int> degrees_;
    MonomialOrder order_;
    bool standard_graded_;
    int degree_lcm_;
    int degree_sum_;
};

Ring ring_new(Field field, std::vector<std::string> vars, std::vector<int> degrees,
              MonomialOrder order = MonomialOrder::Grevlex);

inline bool same_ring(const Ring& a, const Ring& b) {
    return a == b || (a && b && a->same_as(*b));
}

inline void require_same_ring(const Ring& a, const Ring& b) {
    require(same_ring(a, b), "ring mismatch");
}

} // namespace residua
