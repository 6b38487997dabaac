#include <cmath>

#include "braidqi/gates.hpp"
#include "doctest.h"

using namespace braidqi;

TEST_CASE("state constructors enforce normalization unless told otherwise") {
    CHECK_NOTHROW((void)make_qubit(1.0, 0.0));
    CHECK_THROWS_AS((void)make_qubit(1.0, 1.0), std::invalid_argument);
    CHECK_NOTHROW((void)make_qubit(1.0, 1.0, true));
    CHECK_THROWS_AS((void)make_two_qubit(0.5, 0.5, 0.5, 0.6), std::invalid_argument);
    const TwoQubitState s = make_two_qubit(0.5, 0.5, 0.5, 0.5);
    CHECK(state_norm(s) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("display-order constructor swaps the middle amplitudes") {
    const TwoQubitState s = two_qubit_from_display_order(0.1, 0.2, 0.3, 0.4, true);
    CHECK(s.amp[0] == cxd{0.1, 0.0});  // |00>
    CHECK(s.amp[1] == cxd{0.3, 0.0});  // |01> is the third display slot
    CHECK(s.amp[2] == cxd{0.2, 0.0});  // |10> is the second display slot
    CHECK(s.amp[3] == cxd{0.4, 0.0});  // |11>
}

TEST_CASE("tensor product of qubit states orders amplitudes as |ab>") {
    const QubitState a = make_qubit(0.6, 0.8);
    const QubitState b = make_qubit(0.0, 1.0);
    const TwoQubitState t = tensor(a, b);
    CHECK(t.amp[0] == cxd{0.0, 0.0});
    CHECK(t.amp[1] == cxd{0.6, 0.0});
    CHECK(t.amp[2] == cxd{0.0, 0.0});
    CHECK(t.amp[3] == cxd{0.8, 0.0});
}

TEST_CASE("gate application rejects non-unitary matrices") {
    ComplexMatrix bad = ComplexMatrix::identity(2);
    bad.at(0, 0) = 2.0;
    CHECK_THROWS_AS((void)apply_gate(bad, {cxd{1.0, 0.0}, cxd{0.0, 0.0}}), std::invalid_argument);
    const GateApplication out = apply_gate(not_gate(), {cxd{1.0, 0.0}, cxd{0.0, 0.0}});
    CHECK(out.state[0] == cxd{0.0, 0.0});
    CHECK(out.state[1] == cxd{1.0, 0.0});
    CHECK(!out.renormalized);
}

TEST_CASE("square root of NOT squares to NOT with zero error") {
    const ComplexMatrix s = sqrt_not_gate();
    CHECK(s.at(0, 0) == cxd{0.5, 0.5});
    CHECK(s.at(0, 1) == cxd{0.5, -0.5});
    CHECK(s.at(1, 0) == cxd{0.5, -0.5});
    CHECK(s.at(1, 1) == cxd{0.5, 0.5});
    CHECK(matmul(s, s) == not_gate());
    CHECK(sqrt_not_square_residual() == 0.0);
    CHECK(max_abs_entry(sub(matmul(s, s), not_gate())) == 0.0);
}

TEST_CASE("gamma matrices satisfy the metric anticommutation relations exactly") {
    const DiracMatrices dm = dirac_matrices();
    CHECK(dm.gamma0.at(0, 1) == cxd{1.0, 0.0});
    CHECK(dm.gamma0.at(1, 0) == cxd{-1.0, 0.0});
    CHECK(dm.gamma1.at(0, 0) == cxd{1.0, 0.0});
    CHECK(dm.gamma1.at(1, 1) == cxd{-1.0, 0.0});
    CHECK(dm.eta.at(0, 0) == cxd{-1.0, 0.0});
    CHECK(dm.eta.at(1, 1) == cxd{1.0, 0.0});
    // {g0, g0} = -2 I, {g1, g1} = +2 I, {g0, g1} = 0, all bit-exact.
    const ComplexMatrix a00 = add(matmul(dm.gamma0, dm.gamma0), matmul(dm.gamma0, dm.gamma0));
    CHECK(a00 == scale(-2.0, ComplexMatrix::identity(2)));
    const ComplexMatrix a11 = add(matmul(dm.gamma1, dm.gamma1), matmul(dm.gamma1, dm.gamma1));
    CHECK(a11 == scale(2.0, ComplexMatrix::identity(2)));
    const ComplexMatrix a01 = add(matmul(dm.gamma0, dm.gamma1), matmul(dm.gamma1, dm.gamma0));
    CHECK(max_abs_entry(a01) == 0.0);
    CHECK(clifford_relations_exact());
}

TEST_CASE("projectors split the identity and are idempotent") {
    const DiracMatrices dm = dirac_matrices();
    CHECK(add(dm.projector0, dm.projector1) == ComplexMatrix::identity(2));
    CHECK(max_abs_entry(matmul(dm.projector0, dm.projector1)) == 0.0);
    CHECK(matmul(dm.projector0, dm.projector0) == dm.projector0);
    CHECK(matmul(dm.projector1, dm.projector1) == dm.projector1);
}

TEST_CASE("controlled-NOT squares to the identity exactly") {
    const ComplexMatrix c = cnot_gate();
    CHECK(matmul(c, c) == ComplexMatrix::identity(4));
    CHECK(c.at(2, 3) == cxd{1.0, 0.0});
    CHECK(c.at(3, 2) == cxd{1.0, 0.0});
    CHECK(c.at(2, 2) == cxd{0.0, 0.0});
}

TEST_CASE("displayed CNOT factorization misses the gate by the documented distances") {
    const CnotDecomposition cd = cnot_decomposition();
    CHECK(cd.displayed_vs_cnot.frobenius_distance ==
          doctest::Approx(1.3256542961423672).epsilon(1e-12));
    CHECK(cd.r_fixed_only_vs_cnot.frobenius_distance ==
          doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-12));
    CHECK(cd.corrected_vs_cnot.frobenius_distance < 1e-12);
}

TEST_CASE("factor defects: the rotation block is singular, the last factor is scaled") {
    const CnotDecomposition cd = cnot_decomposition();
    CHECK(!cd.m1.altered);
    CHECK(!cd.m2.altered);
    CHECK(!cd.n1.altered);
    CHECK(cd.n2.altered);
    CHECK(cd.r.altered);
    CHECK(cd.m1.displayed_unitarity_residual < 1e-12);
    CHECK(cd.m2.displayed_unitarity_residual < 1e-12);
    CHECK(cd.n1.displayed_unitarity_residual < 1e-12);
    CHECK(cd.n2.displayed_unitarity_residual ==
          doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(cd.n2.corrected_unitarity_residual == 0.0);
    CHECK(cd.r.displayed_unitarity_residual ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(cd.r.corrected_unitarity_residual < 1e-12);
    CHECK(std::abs(determinant(cd.r.displayed)) < 1e-14);
    // Corrected corner entry.
    CHECK(cd.r.corrected.at(3, 0) == cxd{-1.0 / std::sqrt(2.0), 0.0});
}

TEST_CASE("corrected tensor factors are unitary at strict tolerance") {
    const CnotDecomposition cd = cnot_decomposition();
    CHECK(is_unitary(kron(cd.m1.corrected, cd.m2.corrected)).residual < 1e-12);
    CHECK(is_unitary(kron(cd.n1.corrected, cd.n2.corrected)).residual < 1e-12);
    CHECK(is_unitary(cd.r.corrected).residual < 1e-12);
}
