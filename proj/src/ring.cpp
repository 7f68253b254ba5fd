#include "residua/ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace residua {

RingData::RingData(Field field, std::vector<std::string> vars, std::vector<int> degrees,
                   MonomialOrder order)
    : field_(field), vars_(std::move(vars)), degrees_(std::move(degrees)), order_(order) {
    require(!vars_.empty(), "ring needs at least one variable");
    require(vars_.size() == degrees_.size(), "one degree per variable");
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        require(!v.empty(), "empty variable name");
        require(seen.insert(v).second, "duplicate variable name: " + v);
    }
    for (int d : degrees_) require(d >= 1, "variable degree must be positive");
    standard_graded_ = std::all_of(degrees_.begin(), degrees_.end(), [](int d) { return d == 1; });
    degree_lcm_ = 1;
    for (int d : degrees_) degree_lcm_ = std::lcm(degree_lcm_, d);
    degree_sum_ = std::accumulate(degrees_.begin(), degrees_.end(), 0);
}

int RingData::compare(const Monomial& a, const Monomial& b) const {
    switch (order_) {
        case MonomialOrder::Lex: {
            for (std::size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
            return 0;
        }
        case MonomialOrder::GradedLex: {
            auto da = degree(a), db = degree(b);
            if (da != db) return da < db ? -1 : 1;
            for (std::size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
            return 0;
        }
        case MonomialOrder::Grevlex:
        default: {
            auto da = degree(a), db = degree(b);
            if (da != db) return da < db ? -1 : 1;
            // last variable where they differ: smaller exponent wins
            for (std::size_t i = a.size(); i-- > 0;)
                if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
            return 0;
        }
    }
}

bool RingData::same_as(const RingData& o) const {
    return field_ == o.field_ && vars_ == o.vars_ && degrees_ == o.degrees_ && order_ == o.order_;
}

int RingData::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return int(i);
    return -1;
}

std::string RingData::describe() const {
    std::ostringstream os;
    os << field_.describe() << "[";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i) os << ",";
        os << vars_[i];
        if (degrees_[i] != 1) os << "(" << degrees_[i] << ")";
    }
    os << "]";
    return os.str();
}

Ring ring_new(Field field, std::vector<std::string> vars, std::vector<int> degrees,
              MonomialOrder order) {
    return std::make_shared<const RingData>(field, std::move(vars), std::move(degrees), order);
}

} // namespace residua
