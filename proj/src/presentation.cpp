#include "residua/presentation.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace residua {

ModulePresentation::ModulePresentation(FreeModule gens, std::vector<Vec> relations)
    : d_(std::make_shared<Data>()) {
    d_->gens = std::move(gens);
    for (auto& r : relations) {
        check(r.size() == d_->gens.rank(), "relation arity");
        require(vec_is_homogeneous(d_->gens, r), "relations must be homogeneous");
        if (!vec_is_zero(r)) d_->relations.push_back(std::move(r));
    }
}

ModulePresentation ModulePresentation::free_module_presentation(FreeModule F) {
    return ModulePresentation(std::move(F), {});
}

ModulePresentation ModulePresentation::quotient_ring(const Ideal& I) {
    FreeModule F{I.ring(), {0}};
    std::vector<Vec> rels;
    for (const auto& g : I.gens()) rels.push_back(Vec{g});
    return ModulePresentation(std::move(F), std::move(rels));
}

ModulePresentation ModulePresentation::zero(const Ring& ring) {
    return ModulePresentation(FreeModule{ring, {}}, {});
}

FreeModuleMap ModulePresentation::relations_map() const {
    FreeModuleMap m;
    m.target = d_->gens;
    for (const auto& r : d_->relations) {
        m.source_degs.push_back(vec_degree(d_->gens, r));
        m.cols.push_back(r);
    }
    return m;
}

namespace {

bool entry_is_unit(const Polynomial& p) {
    return !p.is_zero() && p.nterms() == 1 && mono_is_one(p.leading_monomial());
}

} // namespace

const ModulePresentation& ModulePresentation::minimized() const {
    std::lock_guard<std::mutex> lock(d_->mu);
    if (d_->minimized) return *d_->minimized;

    const Ring& ring = d_->gens.ring;
    const Field& F = ring->field();
    std::vector<std::int64_t> degs = d_->gens.degs;
    std::vector<Vec> cols = d_->relations;

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t j = 0; j < cols.size() && !changed; ++j) {
            for (std::size_t i = 0; i < degs.size() && !changed; ++i) {
                if (!entry_is_unit(cols[j][i])) continue;
                Rat pivot = cols[j][i].leading_coeff();
                // clear row i in the other columns, then drop row i / column j
                for (std::size_t c = 0; c < cols.size(); ++c) {
                    if (c == j || cols[c][i].is_zero()) continue;
                    Polynomial f = cols[c][i].scaled(F.inv(pivot));
                    for (std::size_t r = 0; r < degs.size(); ++r)
                        cols[c][r] = cols[c][r] - cols[j][r] * f;
                }
                cols.erase(cols.begin() + j);
                degs.erase(degs.begin() + std::ptrdiff_t(i));
                for (auto& c : cols) c.erase(c.begin() + std::ptrdiff_t(i));
                changed = true;
            }
        }
    }
    // discard zero columns
    std::vector<Vec> kept;
    for (auto& c : cols)
        if (!vec_is_zero(c)) kept.push_back(std::move(c));
    d_->minimized = std::make_shared<const ModulePresentation>(
        FreeModule{ring, std::move(degs)}, std::move(kept));
    return *d_->minimized;
}

const std::vector<GBElem>& ModulePresentation::relations_gb() const {
    std::lock_guard<std::mutex> lock(d_->mu);
    if (!d_->have_gb) {
        d_->ctx = std::make_unique<ModuleOrderCtx>(ModuleOrderCtx::top(d_->gens));
        auto gb = buchberger(d_->relations, *d_->ctx);
        d_->gb = std::move(gb.elems);
        d_->have_gb = true;
    }
    return d_->gb;
}

const ModuleOrderCtx& ModulePresentation::order_ctx() const {
    relations_gb();
    return *d_->ctx;
}

Vec ModulePresentation::nf(const Vec& v) const {
    const auto& gb = relations_gb();
    return normal_form(v, gb, *d_->ctx);
}

bool ModulePresentation::in_relations(const Vec& v) const { return vec_is_zero(nf(v)); }

ModulePresentation ModulePresentation::twisted(std::int64_t t) const {
    FreeModule F = d_->gens;
    for (auto& d : F.degs) d += t;
    return ModulePresentation(std::move(F), d_->relations);
}

ModulePresentation ModulePresentation::direct_sum(const std::vector<ModulePresentation>& parts) {
    require(!parts.empty(), "direct sum of nothing");
    const Ring& ring = parts[0].ring();
    FreeModule F{ring, {}};
    for (const auto& p : parts)
        F.degs.insert(F.degs.end(), p.gens().degs.begin(), p.gens().degs.end());
    std::vector<Vec> rels;
    std::size_t offset = 0;
    for (const auto& p : parts) {
        for (const auto& r : p.relations()) {
            Vec v(F.rank(), Polynomial(ring));
            for (std::size_t i = 0; i < r.size(); ++i) v[offset + i] = r[i];
            rels.push_back(std::move(v));
        }
        offset += p.ngens();
    }
    return ModulePresentation(std::move(F), std::move(rels));
}

std::string ModulePresentation::describe() const {
    std::ostringstream os;
    os << "presentation: " << ngens() << " generators (degrees";
    for (auto d : d_->gens.degs) os << " " << d;
    os << "), " << d_->relations.size() << " relations";
    return os.str();
}

ModulePresentation subquotient(const FreeModule& F, const std::vector<Vec>& A,
                               const std::vector<Vec>& B) {
    const Ring& ring = F.ring;
    std::vector<Vec> all = A;
    all.insert(all.end(), B.begin(), B.end());
    FreeModuleMap syz = syzygies(F, all);
    FreeModule G{ring, {}};
    for (const auto& a : A) G.degs.push_back(vec_is_zero(a) ? 0 : vec_degree(F, a));
    std::vector<Vec> rels;
    for (const auto& col : syz.cols) {
        Vec head(col.begin(), col.begin() + std::ptrdiff_t(A.size()));
        if (!vec_is_zero(head)) rels.push_back(std::move(head));
    }
    // B lies in span(A): each B column yields a relation via its syzygy with A,
    // which the full syzygy computation above already produced.
    return ModulePresentation(std::move(G), std::move(rels));
}

Ideal annihilator(const ModulePresentation& P) {
    const Ring& ring = P.ring();
    if (P.ngens() == 0) return Ideal::unit(ring);
    bool first = true;
    Ideal result;
    for (std::size_t g = 0; g < P.ngens(); ++g) {
        // (relations : e_g) via syzygies of [relations | e_g]
        std::vector<Vec> rows = P.relations();
        Vec eg = vec_zero(P.gens());
        eg[g] = Polynomial::constant(ring, Rat(1));
        rows.push_back(eg);
        FreeModuleMap syz = syzygies(P.gens(), rows);
        std::vector<Polynomial> gens;
        std::size_t last = P.relations().size();
        for (const auto& col : syz.cols)
            if (!col[last].is_zero()) gens.push_back(col[last]);
        Ideal quot(ring, std::move(gens));
        result = first ? quot : ideal_intersection(result, quot);
        first = false;
        if (result.is_zero()) break;
    }
    return result;
}

std::vector<Monomial> monomials_of_degree(const Ring& ring, std::int64_t d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    Monomial cur = mono_one(ring->nvars());
    const auto& w = ring->degrees();
    // enumerate exponent vectors with weighted degree d
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t rem) {
        if (i + 1 == ring->nvars()) {
            if (rem % w[i] == 0) {
                cur[i] = std::int32_t(rem / w[i]);
                out.push_back(cur);
                cur[i] = 0;
            }
            return;
        }
        for (std::int64_t e = 0; e * w[i] <= rem; ++e) {
            cur[i] = std::int32_t(e);
            rec(i + 1, rem - e * w[i]);
        }
        cur[i] = 0;
    };
    rec(0, d);
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return ring->compare(a, b) > 0;
    });
    return out;
}

} // namespace residua
