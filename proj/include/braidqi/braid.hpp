#pragma once

#include <functional>

#include "braidqi/linalg.hpp"

namespace braidqi {

enum class BraidSign { plus, minus };

// Convention for the eight-vertex braid operator:
//  - normalized: corrected form, unitary, with the 1/sqrt(2) prefactor and
//    the (3,4)/(4,3) entries set to zero;
//  - verbatim: the form exactly as displayed in the source formulas (no
//    prefactor, stray unit entry at row 3, column 4), kept for comparisons.
enum class BraidConvention { normalized, verbatim };

struct BraidOperator {
    ComplexMatrix matrix;  // 4x4
    BraidSign sign = BraidSign::plus;
    double phi = 0.0;
    BraidConvention convention = BraidConvention::normalized;
};

// Eight-vertex solution b_{+-}(phi) of the braid relation on two qubits.
BraidOperator eight_vertex_braid(BraidSign sign, double phi,
                                 BraidConvention convention = BraidConvention::normalized);

// Product of the two distinct eigenvalues of the braid operator, computed
// from the determinant of its corner 2x2 block (never hard-coded).
cxd eigenvalue_pair_product(const BraidOperator& b);

// I^{(pos-1)} (x) b (x) I^{(strands-1-pos)} acting on `strands` qubits;
// `position` is 1-based and the operator couples strands position, position+1.
ComplexMatrix embed_on_strands(const ComplexMatrix& b_two_site, int position, int strands);

// ||b1 b2 b1 - b2 b1 b2||_F on three strands.
double braid_relation_residual(const ComplexMatrix& b_two_site);

// ||b1 b3 - b3 b1||_F on four strands.
double far_commutativity_residual(const ComplexMatrix& b_two_site);

// Spectral-parameter extension R(x) = b + x * L1 * L2 * b^{-1}, where L1, L2
// are the two distinct eigenvalues of b. Returns b itself when x == 0 with no
// arithmetic applied. Requires the normalized convention.
ComplexMatrix yang_baxterize(const BraidOperator& b, double x);

// Literal reading of the displayed extension "b + x L1 L2" with the scalar
// term taken as a multiple of the identity; used only for comparisons.
ComplexMatrix yang_baxterize_scalar_reading(const BraidOperator& b, double x);

// Trigonometric form R(theta) = cos(theta) b + sin(theta) b^{-1} (normalized
// convention).
ComplexMatrix trig_extension(BraidSign sign, double theta, double phi);

struct SpectralParams {
    double cos_theta = 0.0;
    double sin_theta = 0.0;
    double theta = 0.0;
};

// Map from the multiplicative spectral parameter x >= 0 to the angle theta
// with cos = 1/sqrt(1+x^2), sin = x/sqrt(1+x^2).
SpectralParams spectral_params(double x);

// Residual of the parameter-dependent relation
//   R1(x) R2(xy) R1(y) = R2(y) R1(xy) R2(x)
// on three strands, for a family x -> R(x) of 4x4 matrices.
double qybe_residual(const std::function<ComplexMatrix(double)>& family, double x, double y);

// Local Hamiltonian H = -(i/2) b^2 built from the normalized braid operator.
ComplexMatrix braid_hamiltonian(BraidSign sign, double phi);

// The 4x4 matrix displayed for H_{+-}(phi) in the source formulas, used as
// the comparison target for braid_hamiltonian.
ComplexMatrix braid_hamiltonian_displayed(BraidSign sign, double phi);

// exp(-i H t) for Hermitian H via its eigendecomposition.
ComplexMatrix evolution_operator(const ComplexMatrix& hamiltonian, double t);

}  // namespace braidqi
