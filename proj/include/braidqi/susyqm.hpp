#pragma once

#include <functional>
#include <string>
#include <vector>

#include "braidqi/linalg.hpp"

namespace braidqi {

struct SuperpotentialProblem {
    std::vector<double> v;  // superpotential samples on a uniform grid
    double dx = 0.0;
    int n_points = 0;
};

// Centered uniform grid x_j = (j - (n-1)/2) dx with v(x) = x. Pass a spacing
// that is a power of two: every matrix entry and every entry of the product
// chains below is then exactly representable, so the algebraic identities
// hold bit-exactly in double arithmetic.
SuperpotentialProblem linear_superpotential(int n_points, double dx);
SuperpotentialProblem constant_superpotential(double c, int n_points, double dx);

struct SusyPair {
    ComplexMatrix a_minus;  // forward difference + diag(v): (psi_{j+1}-psi_j)/dx + v_j psi_j
    ComplexMatrix a_plus;   // exact matrix adjoint of a_minus
    ComplexMatrix h0;       // a_plus * a_minus
    ComplexMatrix h1;       // a_minus * a_plus
    int n = 0;
    double dx = 0.0;
};

SusyPair build_susy_pair(const SuperpotentialProblem& p);

// Block operators on the doubled space (dim 2n):
// Q- = [[0,0],[A-,0]], Q+ = [[0,A+],[0,0]], grading = sigma_z (x) I.
ComplexMatrix supercharge_minus(const SusyPair& pair);
ComplexMatrix supercharge_plus(const SusyPair& pair);
ComplexMatrix supercharge(const SusyPair& pair);  // Q = Q+ + Q-
ComplexMatrix grading_operator(const SusyPair& pair);
ComplexMatrix block_hamiltonian(const SusyPair& pair);  // diag(h0, h1)

struct IntertwiningResiduals {
    double h0_aplus = 0.0;   // ||H0 A+ - A+ H1||_F
    double h1_aminus = 0.0;  // ||H1 A- - A- H0||_F
};

// Both residuals vanish in exact arithmetic by associativity of the defining
// products H0 = A+A-, H1 = A-A+.
IntertwiningResiduals check_intertwining(const SusyPair& pair);

// Lowest eigenvalues of h0/h1 through the real tridiagonal solver.
std::vector<double> partner_spectrum(const ComplexMatrix& h, int k_lowest);

struct DegeneracyRow {
    int k = 0;
    double e0 = 0.0;
    double e1 = 0.0;
    double rel_gap = 0.0;
};

struct DegeneracyReport {
    std::vector<double> h0_below_floor;  // zero modes / sub-floor levels of h0
    std::vector<double> h1_below_floor;
    std::vector<DegeneracyRow> pairs;    // ascending greedy match above floor
    std::vector<double> h0_unmatched;
    std::vector<double> h1_unmatched;
};

DegeneracyReport spectrum_degeneracy_report(const SusyPair& pair, int k_lowest,
                                            double energy_floor, double tol_rel);

// Apply Q to a state on the doubled space.
std::vector<cxd> supercharge_action(const SusyPair& pair, const std::vector<cxd>& state);

struct SqrtNotCorrespondence {
    double anticommutator_residual = 0.0;  // ||{M-, sigma_z}||_F, exactly 0
    double square_residual = 0.0;          // ||(sqrt M-)^2 - M-||_F, exactly 0
    double double_action_residual = 0.0;   // || sqrtM- sqrtM- |1> - |0> ||
    // Two-level ladder table: lowering component maps |0> -> |1>,
    // raising component maps |1> -> |0>.
    std::vector<std::string> table;
};

// Two-level truncation linking the graded ladder structure to the square
// root of the NOT gate.
SqrtNotCorrespondence sqrt_not_correspondence();

}  // namespace braidqi
