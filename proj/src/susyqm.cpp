#include "braidqi/susyqm.hpp"

#include <cmath>

#include "braidqi/gates.hpp"

namespace braidqi {

SuperpotentialProblem linear_superpotential(int n_points, double dx) {
    SuperpotentialProblem p;
    p.n_points = n_points;
    p.dx = dx;
    p.v.resize(n_points);
    const double mid = 0.5 * (n_points - 1);
    for (int j = 0; j < n_points; ++j) p.v[j] = (j - mid) * dx;
    return p;
}

SuperpotentialProblem constant_superpotential(double c, int n_points, double dx) {
    SuperpotentialProblem p;
    p.n_points = n_points;
    p.dx = dx;
    p.v.assign(n_points, c);
    return p;
}

SusyPair build_susy_pair(const SuperpotentialProblem& p) {
    if (p.n_points < 3 || !(p.dx > 0.0) || p.v.size() != static_cast<size_t>(p.n_points))
        throw std::invalid_argument("build_susy_pair: invalid problem");
    const int n = p.n_points;
    const double inv = 1.0 / p.dx;

    SusyPair pair;
    pair.n = n;
    pair.dx = p.dx;
    pair.a_minus = ComplexMatrix(n, n);
    for (int j = 0; j < n; ++j) {
        pair.a_minus.at(j, j) = -inv + p.v[j];
        if (j + 1 < n) pair.a_minus.at(j, j + 1) = inv;
    }
    pair.a_plus = dagger(pair.a_minus);
    pair.h0 = matmul(pair.a_plus, pair.a_minus);
    pair.h1 = matmul(pair.a_minus, pair.a_plus);
    return pair;
}

namespace {

ComplexMatrix block_2x2(const ComplexMatrix* b00, const ComplexMatrix* b01,
                        const ComplexMatrix* b10, const ComplexMatrix* b11, int n) {
    ComplexMatrix out(2 * n, 2 * n);
    const auto put = [&](const ComplexMatrix* b, int ro, int co) {
        if (!b) return;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out.at(ro + i, co + j) = b->at(i, j);
    };
    put(b00, 0, 0);
    put(b01, 0, n);
    put(b10, n, 0);
    put(b11, n, n);
    return out;
}

}  // namespace

ComplexMatrix supercharge_minus(const SusyPair& pair) {
    return block_2x2(nullptr, nullptr, &pair.a_minus, nullptr, pair.n);
}

ComplexMatrix supercharge_plus(const SusyPair& pair) {
    return block_2x2(nullptr, &pair.a_plus, nullptr, nullptr, pair.n);
}

ComplexMatrix supercharge(const SusyPair& pair) {
    return block_2x2(nullptr, &pair.a_plus, &pair.a_minus, nullptr, pair.n);
}

ComplexMatrix grading_operator(const SusyPair& pair) {
    return kron(pauli_z(), ComplexMatrix::identity(pair.n));
}

ComplexMatrix block_hamiltonian(const SusyPair& pair) {
    return block_2x2(&pair.h0, nullptr, nullptr, &pair.h1, pair.n);
}

IntertwiningResiduals check_intertwining(const SusyPair& pair) {
    IntertwiningResiduals r;
    r.h0_aplus = frobenius_distance(matmul(pair.h0, pair.a_plus), matmul(pair.a_plus, pair.h1));
    r.h1_aminus = frobenius_distance(matmul(pair.h1, pair.a_minus), matmul(pair.a_minus, pair.h0));
    return r;
}

namespace {

void real_tridiagonal_parts(const ComplexMatrix& h, std::vector<double>& diag,
                            std::vector<double>& off) {
    const int n = h.rows;
    diag.resize(n);
    off.assign(n > 0 ? n - 1 : 0, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const cxd z = h.at(i, j);
            if (z.imag() != 0.0)
                throw std::invalid_argument("partner_spectrum: operator is not real");
            if (std::abs(i - j) > 1 && z.real() != 0.0)
                throw std::invalid_argument("partner_spectrum: operator is not tridiagonal");
        }
        diag[i] = h.at(i, i).real();
        if (i + 1 < n) off[i] = h.at(i, i + 1).real();
    }
}

}  // namespace

std::vector<double> partner_spectrum(const ComplexMatrix& h, int k_lowest) {
    std::vector<double> diag, off;
    real_tridiagonal_parts(h, diag, off);
    std::vector<double> all = tridiagonal_eigenvalues(diag, off);
    if (k_lowest < static_cast<int>(all.size())) all.resize(k_lowest);
    return all;
}

DegeneracyReport spectrum_degeneracy_report(const SusyPair& pair, int k_lowest,
                                            double energy_floor, double tol_rel) {
    const std::vector<double> e0 = partner_spectrum(pair.h0, k_lowest);
    const std::vector<double> e1 = partner_spectrum(pair.h1, k_lowest);

    DegeneracyReport rep;
    std::vector<double> p0, p1;
    for (double e : e0) (e < energy_floor ? rep.h0_below_floor : p0).push_back(e);
    for (double e : e1) (e < energy_floor ? rep.h1_below_floor : p1).push_back(e);

    const size_t m = std::min(p0.size(), p1.size());
    for (size_t k = 0; k < m; ++k) {
        DegeneracyRow row;
        row.k = static_cast<int>(k);
        row.e0 = p0[k];
        row.e1 = p1[k];
        row.rel_gap = std::abs(p0[k] - p1[k]) / std::max({std::abs(p0[k]), std::abs(p1[k]), 1e-300});
        if (row.rel_gap > tol_rel) {
            // A gap beyond tolerance means the ascending match broke down;
            // everything from here on is reported unmatched.
            for (size_t i = k; i < p0.size(); ++i) rep.h0_unmatched.push_back(p0[i]);
            for (size_t i = k; i < p1.size(); ++i) rep.h1_unmatched.push_back(p1[i]);
            return rep;
        }
        rep.pairs.push_back(row);
    }
    for (size_t i = m; i < p0.size(); ++i) rep.h0_unmatched.push_back(p0[i]);
    for (size_t i = m; i < p1.size(); ++i) rep.h1_unmatched.push_back(p1[i]);
    return rep;
}

std::vector<cxd> supercharge_action(const SusyPair& pair, const std::vector<cxd>& state) {
    const int n = pair.n;
    if (state.size() != static_cast<size_t>(2 * n))
        throw std::invalid_argument("supercharge_action: state dimension must be 2n");
    const std::vector<cxd> upper(state.begin(), state.begin() + n);
    const std::vector<cxd> lower(state.begin() + n, state.end());
    const std::vector<cxd> top = matvec(pair.a_plus, lower);
    const std::vector<cxd> bottom = matvec(pair.a_minus, upper);
    std::vector<cxd> out;
    out.reserve(2 * n);
    out.insert(out.end(), top.begin(), top.end());
    out.insert(out.end(), bottom.begin(), bottom.end());
    return out;
}

SqrtNotCorrespondence sqrt_not_correspondence() {
    SqrtNotCorrespondence c;
    const ComplexMatrix m_minus = not_gate();
    const ComplexMatrix sz = pauli_z();
    c.anticommutator_residual =
        frobenius_norm(add(matmul(m_minus, sz), matmul(sz, m_minus)));
    c.square_residual = sqrt_not_square_residual();

    const std::vector<cxd> one{0.0, 1.0};
    const ComplexMatrix s = sqrt_not_gate();
    const std::vector<cxd> twice = matvec(s, matvec(s, one));
    c.double_action_residual = std::sqrt(std::norm(twice[0] - cxd{1.0, 0.0}) + std::norm(twice[1]));

    c.table = {
        "lowering charge: |0> -> |1> (two-level ladder, grading -1 sector)",
        "raising charge: |1> -> |0> (two-level ladder, grading +1 sector)",
        "sqrt-NOT applied twice: |1> -> |0>, |0> -> |1> (NOT gate)",
        "grading sigma_z anticommutes with the NOT gate exactly",
    };
    return c;
}

}  // namespace braidqi
