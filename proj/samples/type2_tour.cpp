// A short tour: a few type 2 values, one p-adic integral, one identity check.

#include "specnum/families.hpp"
#include "specnum/identity_suite.hpp"
#include "specnum/padic_numeric.hpp"
#include "specnum/serialize.hpp"

#include <iostream>

using namespace specnum;

int main() {
    const auto b = type2_bernoulli_numbers(8);
    const auto e = type2_euler_numbers(8);
    for (unsigned n = 0; n <= 8; n += 2) std::cout << "b_" << n << " = " << b[n] << "   E_" << n << " = " << e[n] << '\n';

    // x^2 - lambda^2/6 - 1/12
    std::cout << "b_2,lambda(x) = " << value_to_csv(carlitz_degenerate_type2_bernoulli_poly(2)) << '\n';

    const UniPoly sq = UniPoly::monomial(Var::x, 1, 2);
    const auto rep = convergence_check(sq, 5, Measure::bosonic, 4);
    std::cout << "integral of x^2 = " << rep.exact << '\n';
    for (const auto& row : rep.rows)
        std::cout << "  N=" << row.N << "  v_5(error) = " << (row.valuation ? std::to_string(*row.valuation) : "inf")
                  << '\n';

    const auto t = verify("T2.6");
    std::cout << t.id << ": " << to_string(t.status) << " (" << t.checked << " checks)\n";
    return t.status == Status::pass ? 0 : 1;
}
