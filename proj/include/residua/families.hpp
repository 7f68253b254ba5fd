#pragma once

#include "residua/ideal.hpp"

namespace residua {

// 2x2 minors of the 2x(n-1) Hankel matrix on the ring's variables
// (x1 ... xn arranged as rows (x1..x_{n-1}), (x2..x_n)).
Ideal hankel_minors_ideal(const Ring& ring);

// (x_{i1},...,x_{ik})^e for the given variable indices.
Ideal power_of_variables_ideal(const Ring& ring, const std::vector<std::size_t>& vars,
                               unsigned exponent);

// Complete intersection of pure variable powers x_{i}^{e_i}.
Ideal variable_power_ci_ideal(const Ring& ring, const std::vector<std::size_t>& vars,
                              const std::vector<unsigned>& exps);

} // namespace residua
