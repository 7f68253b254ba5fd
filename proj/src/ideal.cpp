#include "residua/ideal.hpp"

#include <algorithm>

namespace residua {

struct Ideal::Data {
    Ring ring;
    std::vector<Polynomial> gens;
    mutable std::mutex mu;
    mutable bool have_gb = false;
    mutable std::vector<Polynomial> gb;
    mutable bool have_codim = false;
    mutable int codim = 0;
};

Ideal::Ideal(Ring ring, std::vector<Polynomial> gens) : d_(std::make_shared<Data>()) {
    d_->ring = std::move(ring);
    for (auto& g : gens) {
        require_same_ring(d_->ring, g.ring());
        require(g.is_homogeneous(), "ideal generators must be homogeneous");
        if (!g.is_zero()) d_->gens.push_back(std::move(g));
    }
}

Ideal Ideal::unit(const Ring& ring) {
    return Ideal(ring, {Polynomial::constant(ring, Rat(1))});
}

const Ring& Ideal::ring() const { return d_->ring; }
const std::vector<Polynomial>& Ideal::gens() const { return d_->gens; }

const std::vector<Polynomial>& Ideal::groebner() const {
    std::lock_guard<std::mutex> lock(d_->mu);
    if (!d_->have_gb) {
        FreeModule F{d_->ring, {0}};
        std::vector<Vec> vecs;
        for (const auto& g : d_->gens) vecs.push_back(Vec{g});
        auto gb = buchberger(vecs, ModuleOrderCtx::top(F));
        for (auto& e : gb.elems) d_->gb.push_back(std::move(e.v[0]));
        d_->have_gb = true;
    }
    return d_->gb;
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
    require_same_ring(d_->ring, f.ring());
    const auto& gb = groebner();
    FreeModule F{d_->ring, {0}};
    ModuleOrderCtx ctx = ModuleOrderCtx::top(F);
    std::vector<GBElem> G;
    G.reserve(gb.size());
    for (const auto& g : gb)
        G.push_back(GBElem{Vec{g}, LeadTerm{0, g.leading_monomial(), g.leading_coeff()}});
    return residua::normal_form(Vec{f}, G, ctx)[0];
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

bool Ideal::contains_ideal(const Ideal& o) const {
    for (const auto& g : o.gens())
        if (!contains(g)) return false;
    return true;
}

bool Ideal::equals(const Ideal& o) const { return contains_ideal(o) && o.contains_ideal(*this); }

bool Ideal::is_unit() const {
    const auto& gb = groebner();
    return gb.size() == 1 && gb[0].nterms() == 1 && mono_is_one(gb[0].leading_monomial());
}

int monomial_quotient_dim(const Ring& ring, const std::vector<Monomial>& lead_monos) {
    std::size_t n = ring->nvars();
    require(n <= 24, "too many variables for combinatorial dimension");
    for (const auto& m : lead_monos)
        if (mono_is_one(m)) return -1; // unit ideal: empty variety
    std::vector<std::uint32_t> supports;
    supports.reserve(lead_monos.size());
    for (const auto& m : lead_monos) {
        std::uint32_t s = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (m[i] > 0) s |= (1u << i);
        supports.push_back(s);
    }
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (auto s : supports)
            if ((s & ~mask) == 0) { ok = false; break; } // generator supported inside mask
        if (ok) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

int Ideal::codim() const {
    {
        std::lock_guard<std::mutex> lock(d_->mu);
        if (d_->have_codim) return d_->codim;
    }
    const auto& gb = groebner();
    std::vector<Monomial> leads;
    leads.reserve(gb.size());
    for (const auto& g : gb) leads.push_back(g.leading_monomial());
    int dim = monomial_quotient_dim(d_->ring, leads);
    int result = dim < 0 ? kCodimInfinite : int(d_->ring->nvars()) - dim;
    std::lock_guard<std::mutex> lock(d_->mu);
    d_->codim = result;
    d_->have_codim = true;
    return result;
}

std::vector<Polynomial> Ideal::minimal_gens() const {
    // Discard generators lying in the ideal of the others, lowest degree first.
    std::vector<Polynomial> sorted = d_->gens;
    std::stable_sort(sorted.begin(), sorted.end(), [](const Polynomial& a, const Polynomial& b) {
        return a.degree() < b.degree();
    });
    std::vector<Polynomial> kept;
    for (const auto& g : sorted) {
        Ideal part(d_->ring, kept);
        if (!part.contains(g)) kept.push_back(g);
    }
    return kept;
}

std::vector<std::string> Ideal::gens_str() const {
    std::vector<std::string> out;
    for (const auto& g : d_->gens) out.push_back(g.str());
    return out;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring());
    std::vector<Polynomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring());
    std::vector<Polynomial> gens;
    for (const auto& f : a.gens())
        for (const auto& g : b.gens()) gens.push_back(f * g);
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring());
    const Ring& ring = a.ring();
    if (a.is_zero() || b.is_zero()) return Ideal::zero(ring);
    // Syzygies of the concatenated generators: the a-part of each syzygy is an
    // element of a ∩ b, and these generate it.
    std::vector<Vec> rows;
    for (const auto& f : a.gens()) rows.push_back(Vec{f});
    for (const auto& g : b.gens()) rows.push_back(Vec{g});
    FreeModule F{ring, {0}};
    FreeModuleMap syz = syzygies(F, rows);
    std::vector<Polynomial> gens;
    for (const auto& col : syz.cols) {
        Polynomial e(ring);
        for (std::size_t i = 0; i < a.gens().size(); ++i) e = e + col[i] * a.gens()[i];
        if (!e.is_zero()) gens.push_back(std::move(e));
    }
    return Ideal(ring, std::move(gens));
}

Ideal ideal_colon_elem(const Ideal& a, const Polynomial& f) {
    const Ring& ring = a.ring();
    require(!f.is_zero(), "colon by zero element");
    if (a.is_zero()) return Ideal::zero(ring); // domain: (0 : f) = 0
    std::vector<Vec> rows;
    for (const auto& g : a.gens()) rows.push_back(Vec{g});
    rows.push_back(Vec{f});
    FreeModule F{ring, {0}};
    FreeModuleMap syz = syzygies(F, rows);
    std::vector<Polynomial> gens;
    std::size_t last = a.gens().size();
    for (const auto& col : syz.cols)
        if (!col[last].is_zero()) gens.push_back(col[last]);
    return Ideal(ring, std::move(gens));
}

Ideal ideal_colon(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring());
    if (b.is_zero()) return Ideal::unit(a.ring());
    bool first = true;
    Ideal result;
    for (const auto& f : b.gens()) {
        Ideal c = ideal_colon_elem(a, f);
        result = first ? c : ideal_intersection(result, c);
        first = false;
    }
    return result;
}

Ideal ideal_saturation(const Ideal& a, const Ideal& b) {
    Ideal cur = a;
    for (int guard = 0; guard < 256; ++guard) {
        Ideal next = ideal_colon(cur, b);
        if (next.equals(cur)) return cur;
        cur = next;
    }
    throw std::logic_error("saturation did not stabilize");
}

} // namespace residua
