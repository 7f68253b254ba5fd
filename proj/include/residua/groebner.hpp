#pragma once

#include <optional>
#include <vector>

#include "residua/module_elem.hpp"

namespace residua {

// Order on module terms (position, monomial). A plain context compares
// monomials in the ring order with ties to the lower position; a Schreyer
// context compares images under the previous level's leading terms, with ties
// walking down the index paths. Both are multiplicative well-orders.
class ModuleOrderCtx {
public:
    static ModuleOrderCtx top(const FreeModule& F);

    std::size_t rank() const { return anchor_.size(); }
    const Ring& ring() const { return ring_; }

    // <0, 0, >0 for (pi,mi) < = > (pj,mj)
    int compare(std::size_t pi, const Monomial& mi, std::size_t pj, const Monomial& mj) const;

    // Context for the free module on `leads`, ordered by Schreyer induction.
    ModuleOrderCtx induced(const std::vector<std::pair<std::size_t, Monomial>>& leads) const;

private:
    Ring ring_;
    std::vector<Monomial> anchor_;
    std::vector<std::int64_t> anchor_deg_;
    std::vector<std::vector<int>> path_;
};

struct LeadTerm {
    std::size_t pos = 0;
    Monomial mono;
    Rat coeff;
};

// Leading term of a nonzero element under the context.
LeadTerm vec_lead(const Vec& v, const ModuleOrderCtx& ctx);

struct GBElem {
    Vec v;
    LeadTerm lead;
};

struct GroebnerResult {
    std::vector<GBElem> elems;        // reduced GB, leads strictly descending
    std::vector<Vec> trace;           // elems[k].v = Σ_t trace[k][t]·input[t]
};

// Reduced Groebner basis of the submodule generated by `gens`.
GroebnerResult buchberger(const std::vector<Vec>& gens, const ModuleOrderCtx& ctx,
                          bool with_trace = false);

// Remainder of v modulo G; no remainder term is divisible by a lead of G.
// If trace is non-null it receives cofactors: v = Σ trace[k]·G[k].v + result.
Vec normal_form(const Vec& v, const std::vector<GBElem>& G, const ModuleOrderCtx& ctx,
                std::vector<Polynomial>* trace = nullptr);

struct SchreyerStep {
    std::vector<Vec> syzygies;  // elements of the free module over G
    std::vector<std::int64_t> degs;
    ModuleOrderCtx ctx;         // Schreyer context; syzygies form a GB under it
};

// Syzygies of a Groebner basis via S-pair reductions (Schreyer's theorem).
SchreyerStep schreyer_syzygies(const std::vector<GBElem>& G, const ModuleOrderCtx& ctx);

// Generators of the full syzygy module of arbitrary generators.
FreeModuleMap syzygies(const FreeModule& F, const std::vector<Vec>& gens);

} // namespace residua
