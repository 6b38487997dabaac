#include <cmath>

#include "braidqi/entangle.hpp"
#include "doctest.h"

using namespace braidqi;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

}  // namespace

TEST_CASE("product states are decomposable, entangled states are not") {
    const TwoQubitState product = tensor(make_qubit(0.6, 0.8), make_qubit(0.0, 1.0));
    const DecomposabilityResult pr = is_decomposable(product);
    CHECK(pr.decomposable);
    CHECK(pr.witness < 1e-15);

    const TwoQubitState bell = make_two_qubit(kInvSqrt2, 0.0, 0.0, kInvSqrt2);
    const DecomposabilityResult br = is_decomposable(bell);
    CHECK(!br.decomposable);
    CHECK(br.witness == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("amplitude-permutation map acts on the basis as documented") {
    const std::array<cxd, 4> a = {cxd{1.0, 0.0}, std::polar(1.0, 0.3), std::polar(1.0, 1.2),
                                  std::polar(1.0, -0.5)};
    const RbarMap rb = rbar_map(a);
    CHECK(rb.unitary);
    CHECK(rb.unitarity_residual < 1e-12);
    // |00> -> a0|00>, |01> -> a3|10>, |10> -> a2|01>, |11> -> a1|11>.
    CHECK(std::abs(rb.basis_action[0][0] - a[0]) < 1e-15);
    CHECK(std::abs(rb.basis_action[1][2] - a[3]) < 1e-15);
    CHECK(std::abs(rb.basis_action[2][1] - a[2]) < 1e-15);
    CHECK(std::abs(rb.basis_action[3][3] - a[1]) < 1e-15);
    CHECK(std::abs(rb.basis_action[0][1]) == 0.0);
    CHECK(std::abs(rb.basis_action[1][0]) == 0.0);
}

TEST_CASE("amplitude-permutation map with equal amplitudes one half is not unitary") {
    const RbarMap rb = rbar_map({cxd{0.5, 0.0}, cxd{0.5, 0.0}, cxd{0.5, 0.0}, cxd{0.5, 0.0}});
    CHECK(!rb.unitary);
    CHECK(rb.unitarity_residual == doctest::Approx(1.5).epsilon(1e-14));
}

TEST_CASE("deformed states at phase zero reduce to the standard maximally entangled basis") {
    const auto plus = bell_states(BraidSign::plus, 0.0);
    // (|00> + |11>)/sqrt2
    CHECK(std::abs(plus[0].amp[0] - kInvSqrt2) < 1e-15);
    CHECK(std::abs(plus[0].amp[3] - kInvSqrt2) < 1e-15);
    CHECK(std::abs(plus[0].amp[1]) == 0.0);
    // (|10> + |01>)/sqrt2
    CHECK(std::abs(plus[1].amp[1] - kInvSqrt2) < 1e-15);
    CHECK(std::abs(plus[1].amp[2] - kInvSqrt2) < 1e-15);
    // (-|01> + |10>)/sqrt2
    CHECK(std::abs(plus[2].amp[1] + kInvSqrt2) < 1e-15);
    CHECK(std::abs(plus[2].amp[2] - kInvSqrt2) < 1e-15);
    // (-|00> + |11>)/sqrt2
    CHECK(std::abs(plus[3].amp[0] + kInvSqrt2) < 1e-15);
    CHECK(std::abs(plus[3].amp[3] - kInvSqrt2) < 1e-15);
}

TEST_CASE("deformed states carry the phase on the corner amplitudes") {
    const double phi = 1.3;
    const cxd q = std::polar(1.0, phi);
    const auto st = bell_states(BraidSign::minus, phi);
    CHECK(std::abs(st[0].amp[3] - kInvSqrt2 * q) < 1e-15);
    CHECK(std::abs(st[3].amp[0] + kInvSqrt2 * std::conj(q)) < 1e-15);
    // Minus family: second state (|10> - |01>)/sqrt2, third (+|01> + |10>)/sqrt2.
    CHECK(std::abs(st[1].amp[1] + kInvSqrt2) < 1e-15);
    CHECK(std::abs(st[1].amp[2] - kInvSqrt2) < 1e-15);
    CHECK(std::abs(st[2].amp[1] - kInvSqrt2) < 1e-15);
    CHECK(std::abs(st[2].amp[2] - kInvSqrt2) < 1e-15);
}

TEST_CASE("every deformed state stays maximally entangled across phases and signs") {
    for (const double phi : {0.0, 0.4, 1.1, 2.0, 3.0}) {
        for (const BraidSign sign : {BraidSign::plus, BraidSign::minus}) {
            for (const TwoQubitState& s : bell_states(sign, phi)) {
                CHECK(std::abs(entanglement_entropy(s) - 1.0) < 1e-10);
                CHECK(!is_decomposable(s).decomposable);
            }
        }
    }
}

TEST_CASE("density matrix of a pure state is a valid projector") {
    const TwoQubitState s = make_two_qubit(kInvSqrt2, 0.0, 0.0, cxd{0.0, kInvSqrt2});
    const ComplexMatrix rho = density_matrix(s);
    const DensityCheck chk = check_density_matrix(rho);
    CHECK(chk.valid);
    CHECK(chk.trace_deviation < 1e-14);
    CHECK(chk.hermiticity_residual < 1e-14);
    CHECK(frobenius_distance(matmul(rho, rho), rho) < 1e-14);
}

TEST_CASE("partial trace of a maximally entangled state is maximally mixed") {
    const TwoQubitState s = make_two_qubit(kInvSqrt2, 0.0, 0.0, kInvSqrt2);
    const ComplexMatrix rho = density_matrix(s);
    for (const KeepSide side : {KeepSide::first, KeepSide::second}) {
        const ComplexMatrix marginal = partial_trace(rho, side);
        CHECK(frobenius_distance(marginal, scale(0.5, ComplexMatrix::identity(2))) < 1e-14);
    }
}

TEST_CASE("partial trace of a product state recovers the factors") {
    const QubitState a = make_qubit(0.6, 0.8);
    const QubitState b = make_qubit(kInvSqrt2, cxd{0.0, kInvSqrt2});
    const ComplexMatrix rho = density_matrix(tensor(a, b));
    const ComplexMatrix first = partial_trace(rho, KeepSide::first);
    const ComplexMatrix second = partial_trace(rho, KeepSide::second);
    CHECK(frobenius_distance(first, density_matrix(a)) < 1e-14);
    CHECK(frobenius_distance(second, density_matrix(b)) < 1e-14);
}

TEST_CASE("entropies follow the closed forms and validate their inputs") {
    CHECK(shannon_entropy({0.5, 0.5}) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(shannon_entropy({1.0, 0.0}) == 0.0);
    CHECK(shannon_entropy({0.25, 0.25, 0.25, 0.25}) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK_THROWS_AS((void)shannon_entropy({0.7, 0.7}), std::invalid_argument);
    CHECK_THROWS_AS((void)shannon_entropy({1.5, -0.5}), std::invalid_argument);
    const ComplexMatrix mixed = scale(0.5, ComplexMatrix::identity(2));
    CHECK(von_neumann_entropy(mixed) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(bits_to_nats(1.0) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(nats_to_bits(std::log(2.0)) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("seeded generators are reproducible and respect their contracts") {
    const auto a = random_states(5, 123);
    const auto b = random_states(5, 123);
    const auto c = random_states(5, 124);
    REQUIRE(a.size() == 5);
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(state_norm(a[i]) == doctest::Approx(1.0).epsilon(1e-12));
        for (int j = 0; j < 4; ++j)
            CHECK(a[i].amp[static_cast<size_t>(j)] == b[i].amp[static_cast<size_t>(j)]);
    }
    // A different seed produces a different first state.
    bool any_diff = false;
    for (int j = 0; j < 4; ++j)
        any_diff = any_diff || (a[0].amp[static_cast<size_t>(j)] != c[0].amp[static_cast<size_t>(j)]);
    CHECK(any_diff);

    for (const TwoQubitState& s : random_product_states(10, 77)) {
        CHECK(is_decomposable(s).decomposable);
        CHECK(entanglement_entropy(s) < 1e-8);
    }
}
