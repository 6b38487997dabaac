#pragma once

#include <array>

#include "braidqi/entangle.hpp"
#include "braidqi/linalg.hpp"

namespace braidqi {

// Flavor-basis encoding |K> -> |0>, |Kbar> -> |1> (and |S> -> |0>, |L> -> |1>
// for the short/long-lived labels in the contaminated-source model).
struct KaonMixture {
    cxd epsilon{0.0, 0.0};  // CP-admixture parameter
    double lambda = 0.0;    // mixing fraction in [0, 1]
};

// t = |epsilon| / (1 + |epsilon|^2).
double mixture_t(const KaonMixture& m);

// The four maximally entangled flavor states:
// Phi1 = (|KK> + |KbKb>)/sqrt2, Phi2 = (|KK> - |KbKb>)/sqrt2,
// Phi3 = (|KKb> + |KbK>)/sqrt2, Phi4 = (|KKb> - |KbK>)/sqrt2.
std::array<TwoQubitState, 4> kaon_bell_states();

// Phase-deformed variants; identical amplitudes to bell_states(sign, phi)
// under the flavor encoding.
std::array<TwoQubitState, 4> deformed_kaon_states(BraidSign sign, double phi);

struct MixtureDensity {
    ComplexMatrix rho;               // 4x4
    std::vector<double> eigenvalues; // ascending
    bool physical = false;           // min eigenvalue >= -1e-10
};

// rho(eps, lambda) = 1/4 [ I + lambda c (sz x I - I x sz)
//                          + (1 - 2 lambda) sz x sz
//                          - 2 lambda t (sx x sx + sy x sy) ],
// with c = (1-|eps|^2)/(1+|eps|^2) and t as above. Non-physical spectra are
// reported through `physical`, never silently clamped.
MixtureDensity rho_mixture(const KaonMixture& m);

// max{ (2 lambda - 1)^2 + 4 lambda^2 t^2, 8 lambda^2 t^2 }; a CHSH-type Bell
// inequality is violable exactly when this exceeds 1.
double horodecki_M(const KaonMixture& m);

struct ViolationThreshold {
    double verbatim_lambda = 0.0;  // the displayed closed form 1/(2(1-t))
    double derived_lambda = 0.0;   // infimum of lambda with horodecki_M > 1 (1 if none)
};
ViolationThreshold violation_threshold(cxd epsilon);

// lambda = 1 - 2 eta, for eta in [0, 1/2].
double lambda_from_eta(double eta);

struct ContaminatedSource {
    double alpha = 0.0;  // single-kaon admixture weight in [0, 1]
    double v = 0.0;      // entangled-pair purity weight in [0, 1]
};

// Natural-log entropies from the displayed closed forms; terms with zero
// coefficient or zero argument contribute 0.
// Composite system, verbatim coefficients (third term alpha(1-alpha)):
double entropy_pair(const ContaminatedSource& src);
// Same formula with the third coefficient repaired to (1-alpha), which makes
// the coefficients sum to 1 and matches the assembled operator's spectrum:
double entropy_pair_corrected(const ContaminatedSource& src);
// Single-kaon system (depends on alpha only):
double entropy_single(const ContaminatedSource& src);

struct EntanglementBoundary {
    bool verbatim_found = false;      // root of entropy_pair - entropy_single
    double alpha_star_verbatim = 0.0;
    bool corrected_found = false;     // root of entropy_pair_corrected - entropy_single
    double alpha_star_corrected = 0.0;
    double criterion_alpha = 0.0;     // (1/sqrt2)/v from the displayed inequality
    double quoted_alpha = 0.71033;    // the displayed standalone numeric reading
};

// Bisection (bracket [1e-6, 1-1e-6], tolerance 1e-10, largest root if several)
// for the alpha at which composite and single entropies cross, on both the
// verbatim and the repaired composite formula.
EntanglementBoundary entanglement_boundary(double v);

struct SourceAssembly {
    // Pair block (4x4, basis {SSb, SL, LS, LLb} under the S/L encoding).
    ComplexMatrix rho_e;                    // pure entangled component
    ComplexMatrix rho_r_symmetrized;        // displayed four-dyad mixture, (X+X^dag)/2, trace-normalized
    std::vector<double> rho_r_eigenvalues;  // spectrum of the symmetrized mixture
    bool rho_r_physical = false;            // false: the displayed mixture is not positive semidefinite
    ComplexMatrix rho_r_corrected;          // I/4, the unique uniform mixture on the block

    // Single-particle sector. The displayed single-kaon term is a commutator
    // of operators with orthogonal ranges and evaluates to the zero operator,
    // leaving the assembled trace at alpha instead of 1.
    double verbatim_single_block_trace = 0.0;
    double verbatim_trace_deficit = 0.0;    // 1 - alpha

    // Assembled operator on the documented direct sum: pair block (dim 4)
    // (+) single-particle block (dim 4), with the corrected uniform single
    // block (1-alpha)/4 I.
    ComplexMatrix assembled_corrected;       // 8x8
    std::vector<double> assembled_eigenvalues;
    DensityCheck assembled_check;
    double entropy_direct = 0.0;             // -sum p ln p over the assembled spectrum

    double entropy_formula_verbatim = 0.0;   // entropy_pair
    double entropy_formula_corrected = 0.0;  // entropy_pair_corrected
    std::string layout;
};

SourceAssembly contaminated_source(const ContaminatedSource& src);

}  // namespace braidqi
