#pragma once

#include <memory>
#include <mutex>

#include "residua/ideal.hpp"

namespace residua {

// Cokernel presentation of a graded module: coker(relations: F1 -> F0).
// Presentations may be non-minimal; minimized() prunes unit entries.
class ModulePresentation {
public:
    ModulePresentation() = default;
    ModulePresentation(FreeModule gens, std::vector<Vec> relations);

    static ModulePresentation free_module_presentation(FreeModule F);
    static ModulePresentation quotient_ring(const Ideal& I); // R/I, generator in degree 0
    static ModulePresentation zero(const Ring& ring);

    const Ring& ring() const { return d_->gens.ring; }
    const FreeModule& gens() const { return d_->gens; }
    const std::vector<Vec>& relations() const { return d_->relations; }
    std::size_t ngens() const { return d_->gens.rank(); }

    FreeModuleMap relations_map() const;

    const ModulePresentation& minimized() const;
    std::size_t min_gens() const { return minimized().ngens(); } // μ
    bool is_zero_module() const { return min_gens() == 0; }
    bool is_free() const { return minimized().relations().empty(); }

    // Membership in the relation submodule of F0 via a cached module GB.
    bool in_relations(const Vec& v) const;
    Vec nf(const Vec& v) const;
    const std::vector<GBElem>& relations_gb() const;
    const ModuleOrderCtx& order_ctx() const;

    // Twist the module by t: all generator degrees shift by +t (M(-t) if t>0).
    ModulePresentation twisted(std::int64_t t) const;

    // Direct sum.
    static ModulePresentation direct_sum(const std::vector<ModulePresentation>& parts);

    std::string describe() const;

private:
    struct Data {
        FreeModule gens;
        std::vector<Vec> relations;
        mutable std::mutex mu;
        mutable std::shared_ptr<const ModulePresentation> minimized;
        mutable bool have_gb = false;
        mutable std::vector<GBElem> gb;
        mutable std::unique_ptr<ModuleOrderCtx> ctx;
    };
    std::shared_ptr<Data> d_;
};

// Presentation of (span A)/(span B) inside the free module F; B must lie in
// the span of A. Generators are the columns of A.
ModulePresentation subquotient(const FreeModule& F, const std::vector<Vec>& A,
                               const std::vector<Vec>& B);

// Exact annihilator ideal of the presented module.
Ideal annihilator(const ModulePresentation& P);

// All monomials of the given weighted degree, descending in the ring order.
std::vector<Monomial> monomials_of_degree(const Ring& ring, std::int64_t d);

} // namespace residua
