#pragma once

#include <array>
#include <cstdint>

#include "braidqi/braid.hpp"
#include "braidqi/gates.hpp"
#include "braidqi/linalg.hpp"

namespace braidqi {

struct DecomposabilityResult {
    bool decomposable = false;
    double witness = 0.0;  // |a00*a11 - a01*a10|
};

// A pure two-qubit state is a product state exactly when the 2x2 matrix of
// its amplitudes has zero determinant; `witness` is that determinant's
// magnitude.
DecomposabilityResult is_decomposable(const TwoQubitState& s, double tol);
DecomposabilityResult is_decomposable(const TwoQubitState& s);

struct RbarMap {
    ComplexMatrix matrix;  // a0 at (1,1), a3 at (2,3), a2 at (3,2), a1 at (4,4)
    bool unitary = false;
    double unitarity_residual = 0.0;
    // Output amplitudes for each basis input, reading the display convention:
    // |00> -> a0|00>, |01> -> a3|10>, |10> -> a2|01>, |11> -> a1|11>.
    std::array<std::array<cxd, 4>, 4> basis_action{};
};

RbarMap rbar_map(const std::array<cxd, 4>& a, double tol = 1e-12);

// The four phase-deformed Bell states, exactly as displayed:
//   (|00> + e^{i phi}|11>)/sqrt2,
//   (|10> +- |01>)/sqrt2,
//   (-+|01> + |10>)/sqrt2,
//   (-e^{-i phi}|00> + |11>)/sqrt2.
// At phi = 0 these span the standard Bell basis.
std::array<TwoQubitState, 4> bell_states(BraidSign sign, double phi);

// rho = |psi><psi|.
ComplexMatrix density_matrix(const QubitState& s);
ComplexMatrix density_matrix(const TwoQubitState& s);

struct DensityCheck {
    bool valid = false;
    double hermiticity_residual = 0.0;
    double trace_deviation = 0.0;   // |tr(rho) - 1|
    double min_eigenvalue = 0.0;
};
DensityCheck check_density_matrix(const ComplexMatrix& rho);

enum class KeepSide { first, second };
ComplexMatrix partial_trace(const ComplexMatrix& rho4, KeepSide keep);

// Entropies in bits (log base 2). Probabilities/eigenvalues within -1e-10 of
// zero are clamped to zero; anything more negative is an error.
double shannon_entropy(const std::vector<double>& probabilities);
double von_neumann_entropy(const ComplexMatrix& rho);

// von Neumann entropy of the one-qubit marginal of a pure two-qubit state:
// 0 for product states, 1 bit for Bell states.
double entanglement_entropy(const TwoQubitState& s);

// Seeded deterministic test-state generators.
std::vector<TwoQubitState> random_states(int count, uint64_t seed);
std::vector<TwoQubitState> random_product_states(int count, uint64_t seed);

double bits_to_nats(double bits);
double nats_to_bits(double nats);

}  // namespace braidqi
