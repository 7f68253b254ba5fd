#include "residua/families.hpp"
#include "residua/presentation.hpp"

namespace residua {

Ideal hankel_minors_ideal(const Ring& ring) {
    std::size_t n = ring->nvars();
    require(n >= 3, "Hankel minors need at least 3 variables");
    auto x = [&](std::size_t i) { return Polynomial::variable(ring, i); };
    // rows (x_0 .. x_{n-2}) and (x_1 .. x_{n-1}); minors over column pairs
    std::vector<Polynomial> gens;
    for (std::size_t a = 0; a + 1 < n; ++a)
        for (std::size_t b = a + 1; b + 1 < n; ++b)
            gens.push_back(x(a) * x(b + 1) - x(a + 1) * x(b));
    return Ideal(ring, std::move(gens));
}

Ideal power_of_variables_ideal(const Ring& ring, const std::vector<std::size_t>& vars,
                               unsigned exponent) {
    require(exponent >= 1, "power must be positive");
    std::vector<Polynomial> lin;
    for (auto v : vars) lin.push_back(Polynomial::variable(ring, v));
    Ideal I(ring, lin);
    Ideal result = I;
    for (unsigned e = 1; e < exponent; ++e) result = ideal_product(result, I);
    return Ideal(ring, result.minimal_gens());
}

Ideal variable_power_ci_ideal(const Ring& ring, const std::vector<std::size_t>& vars,
                              const std::vector<unsigned>& exps) {
    require(vars.size() == exps.size(), "one exponent per variable");
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < vars.size(); ++i)
        gens.push_back(Polynomial::variable(ring, vars[i], int(exps[i])));
    return Ideal(ring, std::move(gens));
}

} // namespace residua
