#include "residua/module_elem.hpp"

#include <sstream>

namespace residua {

Vec vec_zero(const FreeModule& F) {
    return Vec(F.rank(), Polynomial(F.ring));
}

bool vec_is_zero(const Vec& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
    check(a.size() == b.size(), "vec arity");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    check(a.size() == b.size(), "vec arity");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_neg(const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

Vec vec_scaled(const Vec& a, const Rat& c) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i].scaled(c);
    return r;
}

Vec vec_times_monomial(const Vec& a, const Monomial& m, const Rat& c) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i].times_monomial(m, c);
    return r;
}

Vec vec_times_poly(const Vec& a, const Polynomial& p) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * p;
    return r;
}

bool vec_equal(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

std::string vec_str(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i].str();
    }
    os << ")";
    return os.str();
}

std::int64_t vec_degree(const FreeModule& F, const Vec& v) {
    check(v.size() == F.rank(), "vec arity");
    bool found = false;
    std::int64_t deg = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        require(v[i].is_homogeneous(), "inhomogeneous module element");
        std::int64_t d = v[i].degree() + F.degs[i];
        if (!found) { deg = d; found = true; }
        else require(d == deg, "inhomogeneous module element");
    }
    require(found, "degree of zero module element");
    return deg;
}

bool vec_is_homogeneous(const FreeModule& F, const Vec& v) {
    if (vec_is_zero(v)) return true;
    bool found = false;
    std::int64_t deg = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!v[i].is_homogeneous()) return false;
        std::int64_t d = v[i].degree() + F.degs[i];
        if (!found) { deg = d; found = true; }
        else if (d != deg) return false;
    }
    return true;
}

Vec FreeModuleMap::apply(const Vec& v) const {
    check(v.size() == cols.size(), "map application arity");
    Vec r = vec_zero(target);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (v[j].is_zero()) continue;
        r = vec_add(r, vec_times_poly(cols[j], v[j]));
    }
    return r;
}

void FreeModuleMap::validate() const {
    check(cols.size() == source_degs.size(), "map columns vs source degs");
    for (std::size_t j = 0; j < cols.size(); ++j) {
        check(cols[j].size() == target.rank(), "map column length");
        for (std::size_t i = 0; i < target.rank(); ++i) {
            const auto& e = cols[j][i];
            if (e.is_zero()) continue;
            require(e.is_homogeneous() && e.degree() == source_degs[j] - target.degs[i],
                    "map entry degree violates grading");
        }
    }
}

FreeModuleMap zero_map(FreeModule target, std::vector<std::int64_t> source_degs) {
    FreeModuleMap m;
    m.cols.assign(source_degs.size(), vec_zero(target));
    m.target = std::move(target);
    m.source_degs = std::move(source_degs);
    return m;
}

FreeModuleMap compose(const FreeModuleMap& f, const FreeModuleMap& g) {
    check(g.target.rank() == f.source_rank(), "compose shape");
    FreeModuleMap r;
    r.target = f.target;
    r.source_degs = g.source_degs;
    r.cols.reserve(g.cols.size());
    for (const auto& c : g.cols) r.cols.push_back(f.apply(c));
    return r;
}

} // namespace residua
