#include "residua/hilbert.hpp"

#include <algorithm>
#include <sstream>

#include "residua/error.hpp"

namespace residua {

LaurentPoly LaurentPoly::term(Int c, std::int64_t e) {
    LaurentPoly p;
    if (c != 0) p.c_[e] = std::move(c);
    return p;
}

void LaurentPoly::trim() {
    for (auto it = c_.begin(); it != c_.end();)
        it = it->second == 0 ? c_.erase(it) : std::next(it);
}

Int LaurentPoly::coeff(std::int64_t e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Int(0) : it->second;
}

std::int64_t LaurentPoly::min_exp() const {
    require(!c_.empty(), "exponent of zero Laurent polynomial");
    return c_.begin()->first;
}

std::int64_t LaurentPoly::max_exp() const {
    require(!c_.empty(), "exponent of zero Laurent polynomial");
    return c_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.c_) r.c_[e] += c;
    r.trim();
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.c_) r.c_[e] -= c;
    r.trim();
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : c_)
        for (const auto& [e2, c2] : o.c_) r.c_[e1 + e2] += c1 * c2;
    r.trim();
    return r;
}

LaurentPoly LaurentPoly::shifted(std::int64_t e) const {
    LaurentPoly r;
    for (const auto& [k, c] : c_) r.c_[k + e] = c;
    return r;
}

LaurentPoly LaurentPoly::reversed() const {
    LaurentPoly r;
    for (const auto& [k, c] : c_) r.c_[-k] = c;
    return r;
}

Int LaurentPoly::eval_one() const {
    Int s = 0;
    for (const auto& [e, c] : c_) s += c;
    return s;
}

LaurentPoly LaurentPoly::divided_by_one_minus_power(std::int64_t a) const {
    // q(t) = p(t) / (1 - t^a), processing exponents from the top
    if (is_zero()) return {};
    LaurentPoly rem = *this;
    LaurentPoly q;
    while (!rem.is_zero()) {
        std::int64_t e = rem.max_exp();
        Int c = rem.coeff(e);
        // match the top term with -c * t^{e-a} * (1 - t^a)
        q = q + LaurentPoly::term(-c, e - a);
        rem = rem - (LaurentPoly::term(-c, e - a) - LaurentPoly::term(-c, e));
        require(rem.is_zero() || rem.max_exp() < e, "not divisible by 1 - t^a");
    }
    return q;
}

int LaurentPoly::order_at_one() const {
    if (is_zero()) return -1;
    LaurentPoly p = *this;
    int order = 0;
    while (p.eval_one() == 0) {
        p = p.divided_by_one_minus_power(1);
        ++order;
    }
    return order;
}

std::string LaurentPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : c_) {
        Int v = c;
        if (first) {
            if (v < 0) { os << "-"; v = -v; }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        first = false;
        if (e == 0) os << v.str();
        else {
            if (v != 1) os << v.str() << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

bool HilbertSeries::operator==(const HilbertSeries& o) const {
    LaurentPoly lhs = numerator, rhs = o.numerator;
    for (int d : o.denom_degrees)
        lhs = lhs * (LaurentPoly::one() - LaurentPoly::term(1, d));
    for (int d : denom_degrees)
        rhs = rhs * (LaurentPoly::one() - LaurentPoly::term(1, d));
    return lhs == rhs;
}

int HilbertSeries::dimension() const {
    if (numerator.is_zero()) return -1; // zero module
    return int(denom_degrees.size()) - numerator.order_at_one();
}

LaurentPoly HilbertSeries::reduced_numerator(int dim, int a) const {
    // numerator / ∏(1-t^{d_i}) == P / (1-t^a)^dim
    LaurentPoly P = numerator;
    for (int i = 0; i < dim; ++i) P = P * (LaurentPoly::one() - LaurentPoly::term(1, a));
    for (int d : denom_degrees) P = P.divided_by_one_minus_power(d);
    return P;
}

Int HilbertSeries::multiplicity() const {
    for (int d : denom_degrees)
        require(d == 1, "multiplicity requires a standard graded ring");
    int dim = dimension();
    if (dim < 0) return 0;
    // HS = N/(1-t)^d = [N/(1-t)^{d-dim}] / (1-t)^dim; e = that bracket at t=1
    LaurentPoly P = numerator;
    for (std::size_t i = 0; i + std::size_t(dim) < denom_degrees.size(); ++i)
        P = P.divided_by_one_minus_power(1);
    return P.eval_one();
}

std::vector<Int> HilbertSeries::expand(std::int64_t lo, std::int64_t hi) const {
    check(hi >= lo, "bad expansion window");
    std::vector<Int> out(std::size_t(hi - lo + 1), Int(0));
    if (numerator.is_zero()) return out;
    std::int64_t base = std::min(lo, numerator.min_exp());
    std::vector<Int> acc(std::size_t(hi - base + 1), Int(0));
    for (const auto& [e, c] : numerator.coeffs())
        if (e <= hi) acc[std::size_t(e - base)] += c;
    for (int d : denom_degrees)
        for (std::size_t n = std::size_t(d); n < acc.size(); ++n) acc[n] += acc[n - d];
    for (std::int64_t n = lo; n <= hi; ++n) out[std::size_t(n - lo)] = acc[std::size_t(n - base)];
    return out;
}

Int HilbertSeries::coefficient(std::int64_t n) const { return expand(n, n)[0]; }

std::string HilbertSeries::str() const {
    std::ostringstream os;
    os << "(" << numerator.str() << ")";
    if (!denom_degrees.empty()) {
        os << " / (";
        for (std::size_t i = 0; i < denom_degrees.size(); ++i) {
            if (i) os << "*";
            os << "(1-t" << (denom_degrees[i] == 1 ? "" : "^" + std::to_string(denom_degrees[i]))
               << ")";
        }
        os << ")";
    }
    return os.str();
}

HilbertSeries hs_zero(const std::vector<int>& denom) { return HilbertSeries{{}, denom}; }

HilbertSeries hs_sum(const HilbertSeries& a, const HilbertSeries& b) {
    check(a.denom_degrees == b.denom_degrees, "mismatched denominators");
    return HilbertSeries{a.numerator + b.numerator, a.denom_degrees};
}

HilbertSeries hs_shift(const HilbertSeries& a, std::int64_t e) {
    return HilbertSeries{a.numerator.shifted(e), a.denom_degrees};
}

} // namespace residua
