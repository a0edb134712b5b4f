#include "discroot/disc_adic.hpp"

#include "discroot/prime_field.hpp"

namespace discroot {

bool char3_depressed_residue_is_rootless() {
    // Residue field F_3(q); the residue cubic is t^3 + q.  A root x
    // would give x^3 = -q, but v_q(x^3) = 3 v_q(x) while v_q(-q) = 1.
    auto vars = VarSet::make({"q"});
    using F = RationalFunction<PrimeFieldElement>;
    PrimeFieldElement zero3(0, 3);
    F q = F::variable(vars, 0, zero3);
    F minus_q = -q;
    Valuation v = pi_adic_valuation(minus_q, q.num());
    return !v.infinite && v.v % 3 != 0;
}

} // namespace discroot
