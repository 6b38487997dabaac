#include "braidqi/qlattice.hpp"

#include <cmath>

namespace braidqi {

std::vector<double> forward_derivative(const std::vector<double>& f, double dx0) {
    if (f.size() < 2) throw std::invalid_argument("forward_derivative: need at least 2 samples");
    if (!(dx0 > 0.0)) throw std::invalid_argument("forward_derivative: dx0 must be positive");
    std::vector<double> d(f.size() - 1);
    for (size_t i = 0; i + 1 < f.size(); ++i) d[i] = (f[i + 1] - f[i]) / dx0;
    return d;
}

std::vector<double> backward_derivative(const std::vector<double>& f, double dx0) {
    if (f.size() < 2) throw std::invalid_argument("backward_derivative: need at least 2 samples");
    if (!(dx0 > 0.0)) throw std::invalid_argument("backward_derivative: dx0 must be positive");
    std::vector<double> d(f.size() - 1);
    // d[i] is the backward derivative at sample i+1.
    for (size_t i = 0; i + 1 < f.size(); ++i) d[i] = (f[i + 1] - f[i]) / dx0;
    return d;
}

double shift_commutation_residual(const std::vector<double>& f, double dx0) {
    const int n = static_cast<int>(f.size());
    if (n < 3) throw std::invalid_argument("shift_commutation_residual: need at least 3 samples");
    if (!(dx0 > 0.0)) throw std::invalid_argument("shift_commutation_residual: dx0 must be positive");

    // S shifts sample j to slot j+1 (S[i][j] = delta_{i, j+1}, zero fill);
    // M_f is diagonal multiplication. The identity is M_f S = S M_{f+}, where
    // f+ is f advanced by one step (f+ beyond the last sample is irrelevant:
    // S kills the last slot).
    ComplexMatrix s(n, n), mf(n, n), mfp(n, n);
    for (int i = 0; i + 1 < n; ++i) s.at(i + 1, i) = 1.0;
    for (int i = 0; i < n; ++i) mf.at(i, i) = f[i];
    for (int i = 0; i < n; ++i) mfp.at(i, i) = (i + 1 < n) ? f[i + 1] : 0.0;
    return frobenius_distance(matmul(mf, s), matmul(s, mfp));
}

double q_derivative(const std::function<double(double)>& f, double q_squared, double y) {
    if (y == 0.0) throw std::invalid_argument("q_derivative: y must be nonzero");
    if (q_squared == 1.0 || !(q_squared > 0.0))
        throw std::invalid_argument("q_derivative: q^2 must be positive and != 1");
    return (f(q_squared * y) - f(y)) / ((q_squared - 1.0) * y);
}

double q_left_derivative(const std::function<double(double)>& f, double q_squared, double y) {
    if (y == 0.0) throw std::invalid_argument("q_left_derivative: y must be nonzero");
    if (q_squared == 1.0 || !(q_squared > 0.0))
        throw std::invalid_argument("q_left_derivative: q^2 must be positive and != 1");
    return (f(y) - f(q_squared * y)) / ((1.0 - 1.0 / q_squared) * y);
}

double q_bracket(int n, double k) {
    if (k == 1.0) return static_cast<double>(n);
    return (std::pow(k, n) - 1.0) / (k - 1.0);
}

static LatticeProblem interior_grid(double a, double b, int n_points,
                                    const std::function<double(double)>& potential) {
    if (!(b > a)) throw std::invalid_argument("lattice problem: domain must have b > a");
    if (n_points < 3) throw std::invalid_argument("lattice problem: need at least 3 points");
    LatticeProblem p;
    p.n_points = n_points;
    p.dx0 = (b - a) / (n_points + 1);
    p.x_min = a + p.dx0;
    p.potential.resize(n_points);
    for (int j = 0; j < n_points; ++j) p.potential[j] = potential(a + (j + 1) * p.dx0);
    return p;
}

LatticeProblem box_problem(double a, double b, int n_points) {
    return interior_grid(a, b, n_points, [](double) { return 0.0; });
}

LatticeProblem harmonic_problem(double a, double b, int n_points) {
    return interior_grid(a, b, n_points, [](double x) { return 0.5 * x * x; });
}

LatticeProblem potential_problem(double a, double b, int n_points,
                                 const std::function<double(double)>& potential) {
    return interior_grid(a, b, n_points, potential);
}

LatticeSolution solve_lattice_schrodinger(const LatticeProblem& p, int k_lowest) {
    if (p.n_points < 3 || !(p.dx0 > 0.0) ||
        p.potential.size() != static_cast<size_t>(p.n_points))
        throw std::invalid_argument("solve_lattice_schrodinger: invalid problem");
    if (k_lowest < 1 || k_lowest > p.n_points)
        throw std::invalid_argument("solve_lattice_schrodinger: invalid eigenpair count");

    const double kin = 1.0 / (2.0 * p.dx0 * p.dx0);
    std::vector<double> diag(p.n_points), off(p.n_points - 1, -kin);
    for (int j = 0; j < p.n_points; ++j) diag[j] = 2.0 * kin + p.potential[j];

    const TridiagonalPairs pairs = tridiagonal_lowest_pairs(diag, off, k_lowest);
    LatticeSolution sol;
    sol.energies = pairs.values;
    sol.functions.resize(k_lowest);
    const double weight = 1.0 / std::sqrt(p.dx0);
    for (int k = 0; k < k_lowest; ++k) {
        sol.functions[k] = pairs.vectors[k];
        for (double& v : sol.functions[k]) v *= weight;
    }
    return sol;
}

std::vector<ConvergenceRow> continuum_limit_study(
    const std::function<LatticeProblem(double)>& family, const std::vector<double>& spacings,
    int level_index, double analytic_energy) {
    if (spacings.size() < 3)
        throw std::invalid_argument("continuum_limit_study: need at least 3 spacings");
    std::vector<ConvergenceRow> rows;
    rows.reserve(spacings.size());
    for (double dx : spacings) {
        const LatticeProblem p = family(dx);
        const LatticeSolution sol = solve_lattice_schrodinger(p, level_index + 1);
        ConvergenceRow row;
        row.dx0 = p.dx0;
        row.energy = sol.energies[level_index];
        row.abs_error = std::abs(row.energy - analytic_energy);
        rows.push_back(row);
    }
    for (size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].abs_error > 0.0 && rows[i - 1].abs_error > 0.0 &&
            rows[i].dx0 != rows[i - 1].dx0) {
            rows[i].observed_order = std::log(rows[i - 1].abs_error / rows[i].abs_error) /
                                     std::log(rows[i - 1].dx0 / rows[i].dx0);
            rows[i].has_order = true;
        }
    }
    return rows;
}

}  // namespace braidqi
