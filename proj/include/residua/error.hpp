#pragma once

#include <stdexcept>
#include <string>

namespace residua {

// Raised for contract violations: ring mismatches, bad constructions,
// unsupported inputs. Internal assertion failures use check() below and
// indicate a bug, never a valid outcome.
class AlgebraError : public std::runtime_error {
public:
    explicit AlgebraError(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw AlgebraError(msg);
}

// Internal invariant; failure means an implementation bug.
inline void check(bool cond, const std::string& msg) {
    if (!cond) throw std::logic_error("internal invariant violated: " + msg);
}

} // namespace residua
