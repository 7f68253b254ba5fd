#include "residua/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace residua {

ModuleOrderCtx ModuleOrderCtx::top(const FreeModule& F) {
    ModuleOrderCtx ctx;
    ctx.ring_ = F.ring;
    ctx.anchor_.assign(F.rank(), mono_one(F.ring->nvars()));
    ctx.anchor_deg_.assign(F.rank(), 0);
    ctx.path_.resize(F.rank());
    for (std::size_t i = 0; i < F.rank(); ++i) ctx.path_[i] = {int(i)};
    return ctx;
}

int ModuleOrderCtx::compare(std::size_t pi, const Monomial& mi, std::size_t pj,
                            const Monomial& mj) const {
    if (pi == pj) return ring_->compare(mi, mj);
    // quick degree test covers the common graded case
    std::int64_t di = ring_->degree(mi) + anchor_deg_[pi];
    std::int64_t dj = ring_->degree(mj) + anchor_deg_[pj];
    Monomial a = mono_mul(mi, anchor_[pi]);
    Monomial b = mono_mul(mj, anchor_[pj]);
    int c;
    if (di != dj && ring_->order() != MonomialOrder::Lex) {
        c = di < dj ? -1 : 1;
    } else {
        c = ring_->compare(a, b);
    }
    if (c != 0) return c;
    // equal total monomials: walk the index paths, lower index is greater
    const auto& P = path_[pi];
    const auto& Q = path_[pj];
    for (std::size_t k = 0; k < std::min(P.size(), Q.size()); ++k)
        if (P[k] != Q[k]) return P[k] < Q[k] ? 1 : -1;
    if (P.size() != Q.size()) return P.size() < Q.size() ? 1 : -1;
    return 0;
}

ModuleOrderCtx ModuleOrderCtx::induced(
    const std::vector<std::pair<std::size_t, Monomial>>& leads) const {
    ModuleOrderCtx ctx;
    ctx.ring_ = ring_;
    ctx.anchor_.reserve(leads.size());
    ctx.path_.reserve(leads.size());
    for (std::size_t i = 0; i < leads.size(); ++i) {
        const auto& [pos, mono] = leads[i];
        ctx.anchor_.push_back(mono_mul(mono, anchor_[pos]));
        ctx.anchor_deg_.push_back(ring_->degree(mono) + anchor_deg_[pos]);
        auto p = path_[pos];
        p.push_back(int(i));
        ctx.path_.push_back(std::move(p));
    }
    return ctx;
}

LeadTerm vec_lead(const Vec& v, const ModuleOrderCtx& ctx) {
    bool found = false;
    LeadTerm best;
    for (std::size_t p = 0; p < v.size(); ++p) {
        if (v[p].is_zero()) continue;
        const Term& t = v[p].leading_term();
        if (!found || ctx.compare(p, t.mono, best.pos, best.mono) > 0) {
            best = LeadTerm{p, t.mono, t.coeff};
            found = true;
        }
    }
    require(found, "lead of zero element");
    return best;
}

Vec normal_form(const Vec& v, const std::vector<GBElem>& G, const ModuleOrderCtx& ctx,
                std::vector<Polynomial>* trace) {
    const Ring& ring = ctx.ring();
    const Field& F = ring->field();
    if (trace) trace->assign(G.size(), Polynomial(ring));
    Vec h = v;
    Vec rem(v.size(), Polynomial(ring));
    while (!vec_is_zero(h)) {
        LeadTerm lt = vec_lead(h, ctx);
        bool reduced = false;
        for (std::size_t k = 0; k < G.size(); ++k) {
            const GBElem& g = G[k];
            if (g.lead.pos != lt.pos || !mono_divides(g.lead.mono, lt.mono)) continue;
            Monomial q = mono_div(lt.mono, g.lead.mono);
            Rat c = F.div(lt.coeff, g.lead.coeff);
            h = vec_sub(h, vec_times_monomial(g.v, q, c));
            if (trace)
                (*trace)[k] = (*trace)[k] + Polynomial::monomial(ring, std::move(q), c);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem[lt.pos] = rem[lt.pos] + Polynomial::monomial(ring, lt.mono, lt.coeff);
            h[lt.pos] = h[lt.pos] - Polynomial::monomial(ring, lt.mono, lt.coeff);
        }
    }
    return rem;
}

namespace {

struct Pair {
    std::size_t i, j;  // i < j
    std::size_t pos;
    Monomial lcm;
};

// S-vector of two monic elements with a common leading position.
Vec s_vector(const GBElem& a, const GBElem& b, const Monomial& lcm, const Ring& ring) {
    const Field& F = ring->field();
    Vec s = vec_times_monomial(a.v, mono_div(lcm, a.lead.mono), F.inv(a.lead.coeff));
    Vec t = vec_times_monomial(b.v, mono_div(lcm, b.lead.mono), F.inv(b.lead.coeff));
    return vec_sub(s, t);
}

} // namespace

GroebnerResult buchberger(const std::vector<Vec>& gens, const ModuleOrderCtx& ctx,
                          bool with_trace) {
    const Ring& ring = ctx.ring();
    const Field& F = ring->field();
    const bool rank1 = ctx.rank() == 1;

    GroebnerResult R;
    std::vector<Vec>& traces = R.trace;

    auto push_elem = [&](Vec v, Vec tr) {
        Rat lc = vec_lead(v, ctx).coeff;
        Rat inv = F.inv(lc);
        v = vec_scaled(v, inv);
        if (with_trace) traces.push_back(vec_scaled(tr, inv));
        R.elems.push_back(GBElem{std::move(v), LeadTerm{}});
        R.elems.back().lead = vec_lead(R.elems.back().v, ctx);
    };

    for (std::size_t t = 0; t < gens.size(); ++t) {
        if (vec_is_zero(gens[t])) continue;
        Vec tr(gens.size(), Polynomial(ring));
        if (with_trace) tr[t] = Polynomial::constant(ring, Rat(1));
        push_elem(gens[t], std::move(tr));
    }

    auto pair_less = [&](const Pair& a, const Pair& b) {
        int c = ctx.compare(a.pos, a.lcm, b.pos, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    std::vector<Pair> queue;
    std::set<std::pair<std::size_t, std::size_t>> pending;
    auto add_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (R.elems[i].lead.pos != R.elems[j].lead.pos) continue;
            if (rank1 && mono_coprime(R.elems[i].lead.mono, R.elems[j].lead.mono))
                continue; // product criterion (valid for ideals)
            queue.push_back(Pair{i, j, R.elems[j].lead.pos,
                                 mono_lcm(R.elems[i].lead.mono, R.elems[j].lead.mono)});
            pending.insert({i, j});
        }
    };
    for (std::size_t j = 0; j < R.elems.size(); ++j) add_pairs_for(j);

    while (!queue.empty()) {
        auto it = std::min_element(queue.begin(), queue.end(), pair_less);
        Pair pr = *it;
        queue.erase(it);
        pending.erase({pr.i, pr.j});

        // chain criterion
        bool skip = false;
        for (std::size_t k = 0; k < R.elems.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            const auto& gk = R.elems[k];
            if (gk.lead.pos != pr.pos || !mono_divides(gk.lead.mono, pr.lcm)) continue;
            auto key_ik = std::minmax(pr.i, k);
            auto key_jk = std::minmax(pr.j, k);
            if (!pending.count({key_ik.first, key_ik.second}) &&
                !pending.count({key_jk.first, key_jk.second}))
                skip = true;
        }
        if (skip) continue;

        Vec s = s_vector(R.elems[pr.i], R.elems[pr.j], pr.lcm, ring);
        std::vector<Polynomial> cof;
        Vec rem = normal_form(s, R.elems, ctx, with_trace ? &cof : nullptr);
        if (vec_is_zero(rem)) continue;
        Vec tr;
        if (with_trace) {
            const Monomial mi = mono_div(pr.lcm, R.elems[pr.i].lead.mono);
            const Monomial mj = mono_div(pr.lcm, R.elems[pr.j].lead.mono);
            tr = vec_sub(vec_times_monomial(traces[pr.i], mi, F.inv(R.elems[pr.i].lead.coeff)),
                         vec_times_monomial(traces[pr.j], mj, F.inv(R.elems[pr.j].lead.coeff)));
            for (std::size_t k = 0; k < cof.size(); ++k)
                if (!cof[k].is_zero()) tr = vec_sub(tr, vec_times_poly(traces[k], cof[k]));
        }
        push_elem(std::move(rem), std::move(tr));
        add_pairs_for(R.elems.size() - 1);
    }

    // Reduced basis: drop redundant leads, tail-reduce, sort descending.
    std::vector<char> keep(R.elems.size(), 1);
    for (std::size_t i = 0; i < R.elems.size(); ++i) {
        for (std::size_t j = 0; j < R.elems.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            if (R.elems[j].lead.pos == R.elems[i].lead.pos &&
                mono_divides(R.elems[j].lead.mono, R.elems[i].lead.mono) &&
                (R.elems[j].lead.mono != R.elems[i].lead.mono || j < i))
                keep[i] = 0;
        }
    }
    std::vector<GBElem> kept;
    std::vector<Vec> kept_tr;
    for (std::size_t i = 0; i < R.elems.size(); ++i) {
        if (!keep[i]) continue;
        kept.push_back(std::move(R.elems[i]));
        if (with_trace) kept_tr.push_back(std::move(traces[i]));
    }
    R.elems = std::move(kept);
    traces = std::move(kept_tr);

    for (std::size_t i = 0; i < R.elems.size(); ++i) {
        std::vector<GBElem> others;
        std::vector<std::size_t> omap;
        for (std::size_t j = 0; j < R.elems.size(); ++j)
            if (j != i) { others.push_back(R.elems[j]); omap.push_back(j); }
        std::vector<Polynomial> cof;
        Vec red = normal_form(R.elems[i].v, others, ctx, with_trace ? &cof : nullptr);
        check(!vec_is_zero(red), "reduced GB element vanished");
        R.elems[i].v = std::move(red);
        R.elems[i].lead = vec_lead(R.elems[i].v, ctx);
        if (with_trace)
            for (std::size_t k = 0; k < cof.size(); ++k)
                if (!cof[k].is_zero())
                    traces[i] = vec_sub(traces[i], vec_times_poly(traces[omap[k]], cof[k]));
    }

    std::vector<std::size_t> order(R.elems.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return ctx.compare(R.elems[a].lead.pos, R.elems[a].lead.mono, R.elems[b].lead.pos,
                           R.elems[b].lead.mono) > 0;
    });
    std::vector<GBElem> sorted;
    std::vector<Vec> sorted_tr;
    for (auto idx : order) {
        sorted.push_back(std::move(R.elems[idx]));
        if (with_trace) sorted_tr.push_back(std::move(traces[idx]));
    }
    R.elems = std::move(sorted);
    R.trace = std::move(sorted_tr);
    return R;
}

SchreyerStep schreyer_syzygies(const std::vector<GBElem>& G, const ModuleOrderCtx& ctx) {
    const Ring& ring = ctx.ring();
    const Field& F = ring->field();
    SchreyerStep step;
    std::vector<std::pair<std::size_t, Monomial>> leads;
    leads.reserve(G.size());
    for (const auto& g : G) leads.emplace_back(g.lead.pos, g.lead.mono);
    step.ctx = ctx.induced(leads);

    // Candidate pairs with a divisible-lead prune: the syzygy of (i,j) leads
    // with (lcm_ij / lm_i)·e_i for i < j, so for a fixed i only the minimal
    // lcms are kept.
    std::map<std::size_t, std::vector<Pair>> by_i;
    for (std::size_t j = 0; j < G.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) {
            if (G[i].lead.pos != G[j].lead.pos) continue;
            by_i[i].push_back(Pair{i, j, G[i].lead.pos,
                                   mono_lcm(G[i].lead.mono, G[j].lead.mono)});
        }
    std::vector<Pair> pairs;
    for (auto& [i, list] : by_i) {
        std::vector<char> keep(list.size(), 1);
        for (std::size_t a = 0; a < list.size(); ++a)
            for (std::size_t b = 0; b < list.size() && keep[a]; ++b) {
                if (a == b || !keep[b]) continue;
                if (mono_divides(list[b].lcm, list[a].lcm) &&
                    (list[b].lcm != list[a].lcm || b < a))
                    keep[a] = 0;
            }
        for (std::size_t a = 0; a < list.size(); ++a)
            if (keep[a]) pairs.push_back(list[a]);
    }

    for (const auto& pr : pairs) {
        Vec s = s_vector(G[pr.i], G[pr.j], pr.lcm, ring);
        std::vector<Polynomial> cof;
        Vec rem = normal_form(s, G, ctx, &cof);
        check(vec_is_zero(rem), "S-pair of a Groebner basis must reduce to zero");
        Vec syz(G.size(), Polynomial(ring));
        syz[pr.i] = Polynomial::monomial(ring, mono_div(pr.lcm, G[pr.i].lead.mono),
                                         F.inv(G[pr.i].lead.coeff));
        syz[pr.j] = syz[pr.j] - Polynomial::monomial(ring, mono_div(pr.lcm, G[pr.j].lead.mono),
                                                     F.inv(G[pr.j].lead.coeff));
        for (std::size_t k = 0; k < cof.size(); ++k)
            if (!cof[k].is_zero()) syz[k] = syz[k] - cof[k];
        step.syzygies.push_back(std::move(syz));
    }

    return step;
}

FreeModuleMap syzygies(const FreeModule& F, const std::vector<Vec>& gens) {
    const Ring& ring = F.ring;
    ModuleOrderCtx ctx = ModuleOrderCtx::top(F);
    GroebnerResult gb = buchberger(gens, ctx, /*with_trace=*/true);

    FreeModuleMap result;
    result.target.ring = ring;
    for (const auto& g : gens)
        result.target.degs.push_back(vec_is_zero(g) ? 0 : vec_degree(F, g));

    auto push_col = [&](Vec col) {
        if (vec_is_zero(col)) return;
        result.source_degs.push_back(vec_degree(result.target, col));
        result.cols.push_back(std::move(col));
    };

    // Schreyer syzygies of the GB, written in the original generators via the
    // trace GB = U·gens: s ↦ Σ_k s_k U_k.
    SchreyerStep step = schreyer_syzygies(gb.elems, ctx);
    for (const auto& s : step.syzygies) {
        Vec in_gens(gens.size(), Polynomial(ring));
        for (std::size_t k = 0; k < s.size(); ++k)
            if (!s[k].is_zero())
                in_gens = vec_add(in_gens, vec_times_poly(gb.trace[k], s[k]));
        push_col(std::move(in_gens));
    }

    // Redundancy syzygies e_t - V_t·U from gens = V·GB.
    for (std::size_t t = 0; t < gens.size(); ++t) {
        Vec syz(gens.size(), Polynomial(ring));
        syz[t] = Polynomial::constant(ring, Rat(1));
        if (!vec_is_zero(gens[t])) {
            std::vector<Polynomial> cof;
            Vec rem = normal_form(gens[t], gb.elems, ctx, &cof);
            check(vec_is_zero(rem), "generator must reduce to zero against its own GB");
            for (std::size_t k = 0; k < cof.size(); ++k)
                if (!cof[k].is_zero())
                    syz = vec_sub(syz, vec_times_poly(gb.trace[k], cof[k]));
        }
        push_col(std::move(syz));
    }
    return result;
}

} // namespace residua
