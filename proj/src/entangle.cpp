#include "braidqi/entangle.hpp"

#include <cmath>
#include <random>

namespace braidqi {

DecomposabilityResult is_decomposable(const TwoQubitState& s, double tol) {
    DecomposabilityResult r;
    r.witness = std::abs(s.amp[0] * s.amp[3] - s.amp[1] * s.amp[2]);
    r.decomposable = r.witness < tol;
    return r;
}

DecomposabilityResult is_decomposable(const TwoQubitState& s) {
    return is_decomposable(s, default_tolerances().algebraic);
}

RbarMap rbar_map(const std::array<cxd, 4>& a, double tol) {
    RbarMap m;
    m.matrix = ComplexMatrix(4, 4);
    m.matrix.at(0, 0) = a[0];
    m.matrix.at(1, 2) = a[3];
    m.matrix.at(2, 1) = a[2];
    m.matrix.at(3, 3) = a[1];
    const UnitarityCheck chk = is_unitary(m.matrix, tol);
    m.unitary = chk.unitary;
    m.unitarity_residual = chk.residual;
    m.basis_action[0] = {a[0], 0.0, 0.0, 0.0};  // |00> -> a0|00>
    m.basis_action[1] = {0.0, 0.0, a[3], 0.0};  // |01> -> a3|10>
    m.basis_action[2] = {0.0, a[2], 0.0, 0.0};  // |10> -> a2|01>
    m.basis_action[3] = {0.0, 0.0, 0.0, a[1]};  // |11> -> a1|11>
    return m;
}

std::array<TwoQubitState, 4> bell_states(BraidSign sign, double phi) {
    const double v = 1.0 / std::sqrt(2.0);
    const cxd q = std::exp(kI * phi);
    const double s = sign == BraidSign::plus ? 1.0 : -1.0;
    std::array<TwoQubitState, 4> out;
    out[0] = make_two_qubit(v, 0.0, 0.0, v * q);
    out[1] = make_two_qubit(0.0, s * v, v, 0.0);
    out[2] = make_two_qubit(0.0, -s * v, v, 0.0);
    out[3] = make_two_qubit(-v * std::conj(q), 0.0, 0.0, v);
    return out;
}

ComplexMatrix density_matrix(const QubitState& s) {
    ComplexMatrix rho(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) rho.at(i, j) = s.amp[i] * std::conj(s.amp[j]);
    return rho;
}

ComplexMatrix density_matrix(const TwoQubitState& s) {
    ComplexMatrix rho(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) rho.at(i, j) = s.amp[i] * std::conj(s.amp[j]);
    return rho;
}

DensityCheck check_density_matrix(const ComplexMatrix& rho) {
    DensityCheck c;
    c.hermiticity_residual = frobenius_distance(rho, dagger(rho));
    c.trace_deviation = std::abs(trace(rho) - cxd{1.0, 0.0});
    const ComplexMatrix h = scale(0.5, add(rho, dagger(rho)));
    const EigenDecomposition eig = hermitian_eigen(h);
    c.min_eigenvalue = eig.values.empty() ? 0.0 : eig.values.front();
    c.valid = c.hermiticity_residual < 1e-12 && c.trace_deviation < 1e-12 &&
              c.min_eigenvalue >= -1e-10;
    return c;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho4, KeepSide keep) {
    if (rho4.rows != 4 || rho4.cols != 4)
        throw std::invalid_argument("partial_trace: expected a 4x4 density matrix");
    ComplexMatrix out(2, 2);
    // Basis index i = 2*first + second.
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            cxd s{0.0, 0.0};
            for (int k = 0; k < 2; ++k) {
                if (keep == KeepSide::first)
                    s += rho4.at(2 * a + k, 2 * b + k);
                else
                    s += rho4.at(2 * k + a, 2 * k + b);
            }
            out.at(a, b) = s;
        }
    return out;
}

namespace {

double entropy_bits_from_probs(const std::vector<double>& p, bool require_normalized) {
    double sum = 0.0;
    double h = 0.0;
    for (double x : p) {
        if (x < -1e-10)
            throw std::invalid_argument("entropy: negative probability beyond tolerance");
        const double xc = x < 0.0 ? 0.0 : x;
        sum += xc;
        if (xc > 0.0) h -= xc * std::log2(xc);
    }
    if (require_normalized && std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("entropy: probabilities do not sum to 1");
    return h;
}

}  // namespace

double shannon_entropy(const std::vector<double>& probabilities) {
    return entropy_bits_from_probs(probabilities, true);
}

double von_neumann_entropy(const ComplexMatrix& rho) {
    const EigenDecomposition eig = hermitian_eigen(rho);
    return entropy_bits_from_probs(eig.values, true);
}

double entanglement_entropy(const TwoQubitState& s) {
    const ComplexMatrix marginal = partial_trace(density_matrix(s), KeepSide::first);
    return von_neumann_entropy(marginal);
}

namespace {

cxd random_amp(std::mt19937_64& rng, std::normal_distribution<double>& dist) {
    return cxd{dist(rng), dist(rng)};
}

}  // namespace

std::vector<TwoQubitState> random_states(int count, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    std::vector<TwoQubitState> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        std::array<cxd, 4> a;
        double n = 0.0;
        do {
            for (cxd& z : a) z = random_amp(rng, dist);
            n = 0.0;
            for (const cxd& z : a) n += std::norm(z);
        } while (n < 1e-12);
        const double inv = 1.0 / std::sqrt(n);
        out.push_back(make_two_qubit(a[0] * inv, a[1] * inv, a[2] * inv, a[3] * inv, true));
    }
    return out;
}

std::vector<TwoQubitState> random_product_states(int count, uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x517cc1b727220a95ULL);
    std::normal_distribution<double> dist(0.0, 1.0);
    std::vector<TwoQubitState> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        std::array<cxd, 2> u, w;
        double nu = 0.0, nw = 0.0;
        do {
            for (cxd& z : u) z = random_amp(rng, dist);
            nu = std::norm(u[0]) + std::norm(u[1]);
        } while (nu < 1e-12);
        do {
            for (cxd& z : w) z = random_amp(rng, dist);
            nw = std::norm(w[0]) + std::norm(w[1]);
        } while (nw < 1e-12);
        const double iu = 1.0 / std::sqrt(nu), iw = 1.0 / std::sqrt(nw);
        const QubitState qa = make_qubit(u[0] * iu, u[1] * iu, true);
        const QubitState qb = make_qubit(w[0] * iw, w[1] * iw, true);
        out.push_back(tensor(qa, qb));
    }
    return out;
}

double bits_to_nats(double bits) { return bits * std::log(2.0); }
double nats_to_bits(double nats) { return nats / std::log(2.0); }

}  // namespace braidqi
