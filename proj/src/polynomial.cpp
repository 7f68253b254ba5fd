#include "residua/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace residua {

Polynomial::Polynomial(Ring ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
    canonicalize();
}

void Polynomial::canonicalize() {
    const auto& F = ring_->field();
    for (auto& t : terms_) {
        check(t.mono.size() == ring_->nvars(), "term arity");
        t.coeff = F.reduce(t.coeff);
    }
    std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
        return ring_->compare(a.mono, b.mono) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff = F.add(out.back().coeff, t.coeff);
            if (F.is_zero(out.back().coeff)) out.pop_back();
        } else if (!F.is_zero(t.coeff)) {
            out.push_back(std::move(t));
        }
    }
    terms_ = std::move(out);
    hom_degree_.reset();
    if (!terms_.empty()) {
        std::int64_t d = ring_->degree(terms_.front().mono);
        bool hom = true;
        for (const auto& t : terms_)
            if (ring_->degree(t.mono) != d) { hom = false; break; }
        if (hom) hom_degree_ = d;
    }
}

Polynomial Polynomial::constant(const Ring& ring, const Rat& c) {
    return Polynomial(ring, {Term{mono_one(ring->nvars()), c}});
}

Polynomial Polynomial::variable(const Ring& ring, std::size_t i, int exp) {
    require(i < ring->nvars(), "variable index out of range");
    Monomial m = mono_one(ring->nvars());
    m[i] = exp;
    return Polynomial(ring, {Term{std::move(m), Rat(1)}});
}

Polynomial Polynomial::monomial(const Ring& ring, Monomial m, const Rat& c) {
    return Polynomial(ring, {Term{std::move(m), c}});
}

const Term& Polynomial::leading_term() const {
    require(!terms_.empty(), "zero polynomial has no leading term");
    return terms_.front();
}

std::int64_t Polynomial::degree() const {
    require(!is_zero(), "degree of zero polynomial");
    require(hom_degree_.has_value(), "inhomogeneous polynomial");
    return *hom_degree_;
}

std::int64_t Polynomial::top_degree() const {
    require(!is_zero(), "degree of zero polynomial");
    std::int64_t d = ring_->degree(terms_.front().mono);
    for (const auto& t : terms_) d = std::max(d, ring_->degree(t.mono));
    return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_);
    const auto& F = ring_->field();
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ring_->compare(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) out.push_back(terms_[i++]);
        else if (c < 0) out.push_back(o.terms_[j++]);
        else {
            Rat s = F.add(terms_[i].coeff, o.terms_[j].coeff);
            if (!F.is_zero(s)) out.push_back(Term{terms_[i].mono, std::move(s)});
            ++i; ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    Polynomial r(ring_);
    r.terms_ = std::move(out);
    // merged lists of canonical terms stay canonical; recompute grading only
    r.hom_degree_.reset();
    if (!r.terms_.empty()) {
        std::int64_t d = ring_->degree(r.terms_.front().mono);
        bool hom = true;
        for (const auto& t : r.terms_)
            if (ring_->degree(t.mono) != d) { hom = false; break; }
        if (hom) r.hom_degree_ = d;
    }
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    r.terms_ = terms_;
    const auto& F = ring_->field();
    for (auto& t : r.terms_) t.coeff = F.neg(t.coeff);
    r.hom_degree_ = hom_degree_;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::times_monomial(const Monomial& m, const Rat& c) const {
    const auto& F = ring_->field();
    Rat cc = F.reduce(c);
    if (F.is_zero(cc) || is_zero()) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        r.terms_.push_back(Term{mono_mul(t.mono, m), F.mul(t.coeff, cc)});
    if (hom_degree_) r.hom_degree_ = *hom_degree_ + ring_->degree(m);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_);
    Polynomial acc(ring_);
    const Polynomial& big = terms_.size() >= o.terms_.size() ? *this : o;
    const Polynomial& small = terms_.size() >= o.terms_.size() ? o : *this;
    for (const auto& t : small.terms_)
        acc = acc + big.times_monomial(t.mono, t.coeff);
    return acc;
}

Polynomial Polynomial::scaled(const Rat& c) const {
    return times_monomial(mono_one(ring_->nvars()), c);
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = Polynomial::constant(ring_, Rat(1));
    Polynomial base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = e > 1 ? base * base : base;
        e >>= 1;
    }
    return r;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(ring_->field().inv(leading_coeff()));
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rat c = t.coeff;
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (neg) c = -c;
        bool unit_coeff = (c == 1);
        bool printed = false;
        if (!unit_coeff || mono_is_one(t.mono)) {
            os << c.str();
            printed = true;
        }
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            if (t.mono[i] == 0) continue;
            if (printed) os << "*";
            os << ring_->vars()[i];
            if (t.mono[i] != 1) os << "^" << t.mono[i];
            printed = true;
        }
    }
    return os.str();
}

} // namespace residua
