#include "braidqi/kaon.hpp"

#include <cmath>
#include <functional>

namespace braidqi {

double mixture_t(const KaonMixture& m) {
    const double e = std::abs(m.epsilon);
    return e / (1.0 + e * e);
}

std::array<TwoQubitState, 4> kaon_bell_states() {
    const double v = 1.0 / std::sqrt(2.0);
    std::array<TwoQubitState, 4> out;
    out[0] = make_two_qubit(v, 0.0, 0.0, v);
    out[1] = make_two_qubit(v, 0.0, 0.0, -v);
    out[2] = make_two_qubit(0.0, v, v, 0.0);
    out[3] = make_two_qubit(0.0, v, -v, 0.0);
    return out;
}

std::array<TwoQubitState, 4> deformed_kaon_states(BraidSign sign, double phi) {
    return bell_states(sign, phi);
}

namespace {

void validate_mixture(const KaonMixture& m) {
    if (!(m.lambda >= 0.0 && m.lambda <= 1.0))
        throw std::invalid_argument("mixture: lambda must lie in [0, 1]");
    if (!std::isfinite(m.epsilon.real()) || !std::isfinite(m.epsilon.imag()))
        throw std::invalid_argument("mixture: epsilon must be finite");
}

}  // namespace

MixtureDensity rho_mixture(const KaonMixture& m) {
    validate_mixture(m);
    const double e = std::abs(m.epsilon);
    const double c = (1.0 - e * e) / (1.0 + e * e);
    const double t = mixture_t(m);
    const double lam = m.lambda;

    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    const ComplexMatrix sx = pauli_x(), sy = pauli_y(), sz = pauli_z();

    ComplexMatrix sum = ComplexMatrix::identity(4);
    sum = add(sum, scale(lam * c, sub(kron(sz, i2), kron(i2, sz))));
    sum = add(sum, scale(1.0 - 2.0 * lam, kron(sz, sz)));
    sum = add(sum, scale(-2.0 * lam * t, add(kron(sx, sx), kron(sy, sy))));

    MixtureDensity out;
    out.rho = scale(0.25, sum);
    out.eigenvalues = hermitian_eigen(out.rho).values;
    out.physical = out.eigenvalues.front() >= -1e-10;
    return out;
}

double horodecki_M(const KaonMixture& m) {
    validate_mixture(m);
    const double t = mixture_t(m);
    const double lam = m.lambda;
    const double a = (2.0 * lam - 1.0) * (2.0 * lam - 1.0) + 4.0 * lam * lam * t * t;
    const double b = 8.0 * lam * lam * t * t;
    return std::max(a, b);
}

ViolationThreshold violation_threshold(cxd epsilon) {
    KaonMixture m;
    m.epsilon = epsilon;
    const double t = mixture_t(m);

    ViolationThreshold out;
    out.verbatim_lambda = 0.5 / (1.0 - t);

    const auto violates = [&](double lam) {
        KaonMixture probe{epsilon, lam};
        return horodecki_M(probe) > 1.0;
    };
    if (!violates(1.0)) {
        out.derived_lambda = 1.0;
        return out;
    }
    // M(0) = 1 exactly (not a violation) and M is increasing past the
    // threshold, so the predicate is monotone on [0, 1] and bisection on the
    // infimum is valid.
    double lo = 0.0, hi = 1.0;
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        (violates(mid) ? hi : lo) = mid;
    }
    out.derived_lambda = 0.5 * (lo + hi);
    return out;
}

double lambda_from_eta(double eta) {
    if (!(eta >= 0.0 && eta <= 0.5))
        throw std::invalid_argument("lambda_from_eta: eta must lie in [0, 1/2]");
    return 1.0 - 2.0 * eta;
}

namespace {

void validate_source(const ContaminatedSource& src) {
    if (!(src.alpha >= 0.0 && src.alpha <= 1.0))
        throw std::invalid_argument("source: alpha must lie in [0, 1]");
    if (!(src.v >= 0.0 && src.v <= 1.0))
        throw std::invalid_argument("source: v must lie in [0, 1]");
}

// coefficient * ln(argument), with the x ln x -> 0 convention whenever the
// coefficient or the argument vanishes (or is nonpositive).
double coeff_log_term(double coefficient, double argument) {
    if (coefficient <= 0.0 || argument <= 0.0) return 0.0;
    return coefficient * std::log(argument);
}

double entropy_pair_impl(double alpha, double v, bool corrected_third_term) {
    const double third = corrected_third_term ? (1.0 - alpha) : alpha * (1.0 - alpha);
    const double neg_s = coeff_log_term(0.75 * alpha * (1.0 - v), alpha * (1.0 - v) / 4.0) +
                         coeff_log_term(0.25 * alpha * (1.0 + 3.0 * v), alpha * (1.0 + 3.0 * v) / 4.0) +
                         coeff_log_term(third, (1.0 - alpha) / 4.0);
    return -neg_s;
}

}  // namespace

double entropy_pair(const ContaminatedSource& src) {
    validate_source(src);
    return entropy_pair_impl(src.alpha, src.v, false);
}

double entropy_pair_corrected(const ContaminatedSource& src) {
    validate_source(src);
    return entropy_pair_impl(src.alpha, src.v, true);
}

double entropy_single(const ContaminatedSource& src) {
    validate_source(src);
    const double a = src.alpha;
    const double neg_s = coeff_log_term((1.0 + a) / 2.0, (1.0 + a) / 4.0) +
                         coeff_log_term((1.0 - a) / 2.0, (1.0 - a) / 4.0);
    return -neg_s;
}

namespace {

// Largest sign-change root of g on [1e-6, 1-1e-6] by bisection to 1e-10;
// returns false when g has no sign change on the scanned subintervals.
bool largest_root(const std::function<double(double)>& g, double& root) {
    const double lo_end = 1e-6, hi_end = 1.0 - 1e-6;
    const int cells = 4096;
    double a_found = 0.0, b_found = 0.0;
    bool found = false;
    double prev_x = lo_end, prev_g = g(lo_end);
    for (int i = 1; i <= cells; ++i) {
        const double x = lo_end + (hi_end - lo_end) * i / cells;
        const double gx = g(x);
        if (prev_g == 0.0 || (prev_g < 0.0) != (gx < 0.0)) {
            a_found = prev_x;
            b_found = x;
            found = true;  // keep scanning: the last bracket wins
        }
        prev_x = x;
        prev_g = gx;
    }
    if (!found) return false;
    double lo = a_found, hi = b_found;
    double glo = g(lo);
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        const double gm = g(mid);
        if (gm == 0.0) {
            lo = hi = mid;
            break;
        }
        if ((glo < 0.0) != (gm < 0.0)) {
            hi = mid;
        } else {
            lo = mid;
            glo = gm;
        }
    }
    root = 0.5 * (lo + hi);
    return true;
}

}  // namespace

EntanglementBoundary entanglement_boundary(double v) {
    if (!(v > 0.0 && v <= 1.0))
        throw std::invalid_argument("entanglement_boundary: v must lie in (0, 1]");
    EntanglementBoundary out;
    out.criterion_alpha = (1.0 / std::sqrt(2.0)) / v;

    const auto gap_verbatim = [v](double a) {
        return entropy_pair_impl(a, v, false) -
               entropy_single(ContaminatedSource{a, v});
    };
    const auto gap_corrected = [v](double a) {
        return entropy_pair_impl(a, v, true) -
               entropy_single(ContaminatedSource{a, v});
    };
    out.verbatim_found = largest_root(gap_verbatim, out.alpha_star_verbatim);
    out.corrected_found = largest_root(gap_corrected, out.alpha_star_corrected);
    return out;
}

SourceAssembly contaminated_source(const ContaminatedSource& src) {
    validate_source(src);
    SourceAssembly out;
    const double alpha = src.alpha, v = src.v;

    // |E> = (|SSb> - |LLb>)/sqrt(2) on the pair block basis {SSb, SL, LS, LLb}
    // (the displayed 1/2 prefactor is normalized away to unit trace).
    const double r2 = 1.0 / std::sqrt(2.0);
    std::array<cxd, 4> e_state{r2, 0.0, 0.0, -r2};
    out.rho_e = ComplexMatrix(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out.rho_e.at(i, j) = e_state[i] * std::conj(e_state[j]);

    // Displayed random-source mixture: 1/4 (|SSb><SbS| + |SL><LS| + |LS><SL|
    // + |LLb><LbL|). The reversed-label bras land outside the ket basis for
    // the diagonal dyads (mapped back onto the same label) and swap the two
    // middle labels; symmetrize and normalize.
    ComplexMatrix x(4, 4);
    x.at(0, 0) = 0.25;
    x.at(1, 2) = 0.25;
    x.at(2, 1) = 0.25;
    x.at(3, 3) = 0.25;
    ComplexMatrix xs = scale(0.5, add(x, dagger(x)));
    const double xtrace = trace(xs).real();
    out.rho_r_symmetrized = scale(1.0 / xtrace, xs);
    out.rho_r_eigenvalues = hermitian_eigen(out.rho_r_symmetrized).values;
    out.rho_r_physical = out.rho_r_eigenvalues.front() >= -1e-10;
    out.rho_r_corrected = scale(0.25, ComplexMatrix::identity(4));

    // The displayed single-kaon contribution is (rho_LS rho_V - rho_V rho_LS)/2
    // with rho_LS = |S><Sb| + |L><Lb| and rho_V = |0><0| built on orthogonal
    // ranges: both products vanish identically, so the term is the zero
    // operator and the assembled trace comes up short by (1 - alpha).
    out.verbatim_single_block_trace = 0.0;
    out.verbatim_trace_deficit = 1.0 - alpha;

    // Corrected assembly on pair (dim 4) + single-particle (dim 4): uniform
    // (1-alpha)/4 I on the second block restores unit trace.
    const ComplexMatrix pair_corrected =
        add(scale(v, out.rho_e), scale(1.0 - v, out.rho_r_corrected));
    out.assembled_corrected = ComplexMatrix(8, 8);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            out.assembled_corrected.at(i, j) = alpha * pair_corrected.at(i, j);
    for (int i = 4; i < 8; ++i) out.assembled_corrected.at(i, i) = (1.0 - alpha) / 4.0;

    out.assembled_eigenvalues = hermitian_eigen(out.assembled_corrected).values;
    out.assembled_check = check_density_matrix(out.assembled_corrected);
    double s = 0.0;
    for (double p : out.assembled_eigenvalues)
        if (p > 0.0) s -= p * std::log(p);
    out.entropy_direct = s;

    out.entropy_formula_verbatim = entropy_pair(src);
    out.entropy_formula_corrected = entropy_pair_corrected(src);
    out.layout = "pair block (dim 4) direct-sum single-particle block (dim 4)";
    return out;
}

}  // namespace braidqi
