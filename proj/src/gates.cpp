#include "braidqi/gates.hpp"

#include <cmath>

namespace braidqi {

double state_norm(const QubitState& s) {
    return std::sqrt(std::norm(s.amp[0]) + std::norm(s.amp[1]));
}

double state_norm(const TwoQubitState& s) {
    double n = 0.0;
    for (const cxd& a : s.amp) n += std::norm(a);
    return std::sqrt(n);
}

static void require_finite(const cxd& z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::invalid_argument("state amplitudes must be finite");
}

QubitState make_qubit(cxd a0, cxd a1, bool allow_unnormalized) {
    require_finite(a0);
    require_finite(a1);
    QubitState s{{a0, a1}};
    if (!allow_unnormalized && std::abs(state_norm(s) - 1.0) > 1e-12)
        throw std::invalid_argument("make_qubit: state is not normalized");
    return s;
}

TwoQubitState make_two_qubit(cxd a00, cxd a01, cxd a10, cxd a11, bool allow_unnormalized) {
    for (const cxd& z : {a00, a01, a10, a11}) require_finite(z);
    TwoQubitState s{{a00, a01, a10, a11}};
    if (!allow_unnormalized && std::abs(state_norm(s) - 1.0) > 1e-12)
        throw std::invalid_argument("make_two_qubit: state is not normalized");
    return s;
}

TwoQubitState two_qubit_from_display_order(cxd a0, cxd a1, cxd a2, cxd a3,
                                           bool allow_unnormalized) {
    return make_two_qubit(a0, a2, a1, a3, allow_unnormalized);
}

TwoQubitState tensor(const QubitState& a, const QubitState& b) {
    TwoQubitState s;
    s.amp[0] = a.amp[0] * b.amp[0];
    s.amp[1] = a.amp[0] * b.amp[1];
    s.amp[2] = a.amp[1] * b.amp[0];
    s.amp[3] = a.amp[1] * b.amp[1];
    return s;
}

GateApplication apply_gate(const ComplexMatrix& u, const std::vector<cxd>& state) {
    if (u.rows != u.cols || static_cast<size_t>(u.cols) != state.size())
        throw std::invalid_argument("apply_gate: gate/state dimension mismatch");
    const UnitarityCheck chk = is_unitary(u, 1e-10);
    if (!chk.unitary)
        throw std::invalid_argument("apply_gate: gate is not unitary (residual " +
                                    std::to_string(chk.residual) + ")");
    GateApplication out;
    out.state = matvec(u, state);
    double nin = 0.0, nout = 0.0;
    for (const cxd& z : state) nin += std::norm(z);
    for (const cxd& z : out.state) nout += std::norm(z);
    nin = std::sqrt(nin);
    nout = std::sqrt(nout);
    if (std::abs(nout - nin) > 1e-12 && nout > 0.0) {
        const double f = nin / nout;
        for (cxd& z : out.state) z *= f;
        out.renormalized = true;
    }
    return out;
}

ComplexMatrix not_gate() { return pauli_x(); }

ComplexMatrix sqrt_not_gate() {
    ComplexMatrix m(2, 2);
    m.at(0, 0) = cxd{0.5, 0.5};
    m.at(0, 1) = cxd{0.5, -0.5};
    m.at(1, 0) = cxd{0.5, -0.5};
    m.at(1, 1) = cxd{0.5, 0.5};
    return m;
}

ComplexMatrix hadamard() {
    const double v = 1.0 / std::sqrt(2.0);
    ComplexMatrix m(2, 2);
    m.at(0, 0) = v;
    m.at(0, 1) = v;
    m.at(1, 0) = v;
    m.at(1, 1) = -v;
    return m;
}

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m.at(0, 1) = 1.0;
    m.at(1, 0) = 1.0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m.at(0, 1) = cxd{0.0, -1.0};
    m.at(1, 0) = cxd{0.0, 1.0};
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m.at(0, 0) = 1.0;
    m.at(1, 1) = -1.0;
    return m;
}

ComplexMatrix cnot_gate() {
    ComplexMatrix m = ComplexMatrix::identity(4);
    m.at(2, 2) = 0.0;
    m.at(3, 3) = 0.0;
    m.at(2, 3) = 1.0;
    m.at(3, 2) = 1.0;
    return m;
}

DiracMatrices dirac_matrices() {
    DiracMatrices d;
    d.gamma0 = ComplexMatrix(2, 2);
    d.gamma0.at(0, 1) = 1.0;
    d.gamma0.at(1, 0) = -1.0;
    d.gamma1 = pauli_z();
    d.gamma5 = matmul(d.gamma0, d.gamma1);
    d.eta = ComplexMatrix(2, 2);
    d.eta.at(0, 0) = -1.0;
    d.eta.at(1, 1) = 1.0;
    d.projector0 = ComplexMatrix(2, 2);
    d.projector0.at(0, 0) = 1.0;
    d.projector1 = ComplexMatrix(2, 2);
    d.projector1.at(1, 1) = 1.0;
    return d;
}

namespace {

FactorCheck check_factor(ComplexMatrix displayed, ComplexMatrix corrected) {
    FactorCheck f;
    f.displayed_unitarity_residual = is_unitary(displayed).residual;
    f.corrected_unitarity_residual = is_unitary(corrected).residual;
    f.altered = !(displayed == corrected);
    f.displayed = std::move(displayed);
    f.corrected = std::move(corrected);
    return f;
}

}  // namespace

CnotDecomposition cnot_decomposition() {
    const double v = 1.0 / std::sqrt(2.0);

    ComplexMatrix m1(2, 2);
    m1.at(0, 0) = v;
    m1.at(0, 1) = v;
    m1.at(1, 0) = v;
    m1.at(1, 1) = -v;

    ComplexMatrix m2(2, 2);
    m2.at(0, 0) = -v;
    m2.at(0, 1) = v;
    m2.at(1, 0) = cxd{0.0, v};
    m2.at(1, 1) = cxd{0.0, v};

    ComplexMatrix n1(2, 2);
    n1.at(0, 0) = v;
    n1.at(0, 1) = cxd{0.0, v};
    n1.at(1, 0) = v;
    n1.at(1, 1) = cxd{0.0, -v};

    // N2 as printed carries a 1/sqrt(2) prefactor that makes it non-unitary;
    // the repaired form drops that prefactor.
    ComplexMatrix n2_displayed(2, 2);
    n2_displayed.at(0, 0) = -v;
    n2_displayed.at(1, 1) = cxd{0.0, -v};
    ComplexMatrix n2_corrected(2, 2);
    n2_corrected.at(0, 0) = -1.0;
    n2_corrected.at(1, 1) = cxd{0.0, -1.0};

    // R as printed repeats row (1,0,0,1)/sqrt(2) in the last row, which makes
    // it singular; the repaired form flips the sign of its first entry.
    ComplexMatrix r_displayed(4, 4);
    r_displayed.at(0, 0) = v;
    r_displayed.at(0, 3) = v;
    r_displayed.at(1, 1) = v;
    r_displayed.at(1, 2) = -v;
    r_displayed.at(2, 1) = v;
    r_displayed.at(2, 2) = v;
    r_displayed.at(3, 0) = v;
    r_displayed.at(3, 3) = v;
    ComplexMatrix r_corrected = r_displayed;
    r_corrected.at(3, 0) = -v;

    CnotDecomposition d;
    d.m1 = check_factor(m1, m1);
    d.m2 = check_factor(m2, m2);
    d.n1 = check_factor(n1, n1);
    d.n2 = check_factor(n2_displayed, n2_corrected);
    d.r = check_factor(r_displayed, r_corrected);

    const ComplexMatrix outer = kron(d.m1.displayed, d.m2.displayed);
    d.assembled_displayed =
        matmul(matmul(outer, d.r.displayed), kron(d.n1.displayed, d.n2.displayed));
    d.assembled_corrected =
        matmul(matmul(outer, d.r.corrected), kron(d.n1.corrected, d.n2.corrected));
    const ComplexMatrix r_fixed_only =
        matmul(matmul(outer, d.r.corrected), kron(d.n1.displayed, d.n2.displayed));

    const ComplexMatrix target = cnot_gate();
    d.displayed_vs_cnot = distance_up_to_phase(d.assembled_displayed, target);
    d.corrected_vs_cnot = distance_up_to_phase(d.assembled_corrected, target);
    d.r_fixed_only_vs_cnot = distance_up_to_phase(r_fixed_only, target);
    return d;
}

double sqrt_not_square_residual() {
    const ComplexMatrix s = sqrt_not_gate();
    return frobenius_distance(matmul(s, s), not_gate());
}

bool clifford_relations_exact() {
    // Every matrix involved has entries in {0, +-1}, so all products and sums
    // below are exact in double arithmetic and can be compared bit-exactly.
    const DiracMatrices d = dirac_matrices();
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    const ComplexMatrix zero2(2, 2);
    const std::array<const ComplexMatrix*, 2> gamma{&d.gamma0, &d.gamma1};

    const auto anticommutator = [](const ComplexMatrix& a, const ComplexMatrix& b) {
        return add(matmul(a, b), matmul(b, a));
    };

    for (int mu = 0; mu < 2; ++mu)
        for (int nu = 0; nu < 2; ++nu) {
            const ComplexMatrix expected = scale(2.0 * d.eta.at(mu, nu), i2);
            if (!(anticommutator(*gamma[mu], *gamma[nu]) == expected)) return false;
        }
    if (!(anticommutator(d.gamma5, d.gamma0) == zero2)) return false;
    if (!(anticommutator(d.gamma5, d.gamma1) == zero2)) return false;

    if (!(add(d.projector0, d.projector1) == i2)) return false;
    if (!(matmul(d.projector0, d.projector1) == zero2)) return false;
    if (!(matmul(d.projector0, d.projector0) == d.projector0)) return false;
    if (!(matmul(d.projector1, d.projector1) == d.projector1)) return false;

    const ComplexMatrix c = cnot_gate();
    return matmul(c, c) == ComplexMatrix::identity(4);
}

}  // namespace braidqi
