#pragma once

#include <array>

#include "braidqi/linalg.hpp"

namespace braidqi {

// Single-qubit state |psi> = a0|0> + a1|1>.
struct QubitState {
    std::array<cxd, 2> amp{};
};

// Two-qubit state with amplitudes ordered |00>, |01>, |10>, |11>.
struct TwoQubitState {
    std::array<cxd, 4> amp{};
};

double state_norm(const QubitState& s);
double state_norm(const TwoQubitState& s);

// Validating constructors: amplitudes must be finite and the norm must equal
// 1 within 1e-12 unless `allow_unnormalized` is set.
QubitState make_qubit(cxd a0, cxd a1, bool allow_unnormalized = false);
TwoQubitState make_two_qubit(cxd a00, cxd a01, cxd a10, cxd a11,
                             bool allow_unnormalized = false);

// Constructor matching the display ordering a0|00> + a1|10> + a2|01> + a3|11>.
TwoQubitState two_qubit_from_display_order(cxd a0, cxd a1, cxd a2, cxd a3,
                                           bool allow_unnormalized = false);

TwoQubitState tensor(const QubitState& a, const QubitState& b);

struct GateApplication {
    std::vector<cxd> state;
    bool renormalized = false;  // set only when norm drift exceeded 1e-12
};

// u must be unitary within 1e-10 and match the state dimension.
GateApplication apply_gate(const ComplexMatrix& u, const std::vector<cxd>& state);

ComplexMatrix not_gate();        // sigma_x
ComplexMatrix sqrt_not_gate();   // ((1+i)I + (1-i) sigma_x) / 2; squares to NOT exactly
ComplexMatrix hadamard();
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix cnot_gate();       // control = first qubit

struct DiracMatrices {
    ComplexMatrix gamma0;  // i*sigma_y = [[0,1],[-1,0]]
    ComplexMatrix gamma1;  // sigma_z
    ComplexMatrix gamma5;  // gamma0 * gamma1
    ComplexMatrix eta;     // metric diag(-1, 1)
    ComplexMatrix projector0;  // (1 + gamma1)/2 = diag(1,0)
    ComplexMatrix projector1;  // (1 - gamma1)/2 = diag(0,1)
};
DiracMatrices dirac_matrices();

// Defect table for one printed factor of the CNOT product.
struct FactorCheck {
    ComplexMatrix displayed;    // matrix exactly as printed
    ComplexMatrix corrected;    // minimally repaired unitary form
    double displayed_unitarity_residual = 0.0;
    double corrected_unitarity_residual = 0.0;
    bool altered = false;       // corrected differs from displayed
};

struct CnotDecomposition {
    FactorCheck m1, m2, n1, n2, r;
    ComplexMatrix assembled_displayed;  // (M1 x M2) R (N1 x N2), printed factors
    ComplexMatrix assembled_corrected;  // same product with corrected factors
    PhaseComparison displayed_vs_cnot;
    PhaseComparison corrected_vs_cnot;
    PhaseComparison r_fixed_only_vs_cnot;  // corrected R, printed N2
};

// Evaluate the displayed factorization CNOT = (M1 x M2) R (N1 x N2) both
// verbatim and with the two minimal repairs (sign of R's last row, prefactor
// of N2). Every alteration is flagged in the corresponding FactorCheck.
CnotDecomposition cnot_decomposition();

// ||(sqrt NOT)^2 - NOT||_F, exact zero in double arithmetic.
double sqrt_not_square_residual();

// Exact (bit-identical) algebra on integer-valued matrices:
// {gamma_mu, gamma_nu} = 2 eta_{mu nu} I for mu, nu in {0,1}; gamma5
// anticommutes with both gammas; P0 + P1 = I, P0 P1 = 0, P^2 = P; and
// CNOT^2 = I. Returns true only if every identity holds with zero error.
bool clifford_relations_exact();

}  // namespace braidqi
