#pragma once

#include <functional>
#include <string>
#include <vector>

#include "braidqi/linalg.hpp"

namespace braidqi {

// Forward difference (df)(x) = [f(x + dx0) - f(x)]/dx0, defined on the first
// n-1 samples; backward difference on the last n-1 samples. On the shared
// interior the backward value at x equals the forward value at x - dx0
// bit-identically (same expression, re-indexed).
std::vector<double> forward_derivative(const std::vector<double>& f, double dx0);
std::vector<double> backward_derivative(const std::vector<double>& f, double dx0);

// Frobenius residual of M_f S - S M_{f shifted}, where M is diagonal
// multiplication by the samples and S is the one-step shift with zero fill;
// this is the matrix form of f(x) dx = dx f(x + dx0).
double shift_commutation_residual(const std::vector<double>& f, double dx0);

// Difference quotients on the multiplicative lattice:
//   right: [f(q^2 y) - f(y)] / ((q^2 - 1) y)
//   left:  [f(y) - f(q^2 y)] / ((1 - q^{-2}) y)
double q_derivative(const std::function<double(double)>& f, double q_squared, double y);
double q_left_derivative(const std::function<double(double)>& f, double q_squared, double y);

// [n]_k = (k^n - 1)/(k - 1), the expected q-derivative coefficient of y^n.
double q_bracket(int n, double k);

struct LatticeProblem {
    double dx0 = 0.0;               // spacing
    int n_points = 0;               // interior points (Dirichlet walls excluded)
    double x_min = 0.0;             // first interior coordinate
    std::vector<double> potential;  // U at the interior points
};

// Interior-point problems on [a, b] with Dirichlet walls at the endpoints:
// dx0 = (b - a)/(n + 1), x_j = a + (j + 1) dx0.
LatticeProblem box_problem(double a, double b, int n_points);
LatticeProblem harmonic_problem(double a, double b, int n_points);  // U = x^2/2
LatticeProblem potential_problem(double a, double b, int n_points,
                                 const std::function<double(double)>& potential);

struct LatticeSolution {
    std::vector<double> energies;                  // lowest k, ascending
    std::vector<std::vector<double>> functions;    // L2-normalized with weight dx0
};

// Lowest k eigenpairs of (-1/(2 dx0^2)) [psi_{n+1} - 2 psi_n + psi_{n-1}]
// + U_n psi_n = E psi_n with Dirichlet ends.
LatticeSolution solve_lattice_schrodinger(const LatticeProblem& p, int k_lowest);

struct ConvergenceRow {
    double dx0 = 0.0;
    double energy = 0.0;
    double abs_error = 0.0;
    double observed_order = 0.0;  // log2(err_prev/err); meaningless on the first row
    bool has_order = false;
};

// Energies of one level across a decreasing spacing sequence, with errors
// against the analytic value and the observed convergence order between
// consecutive rows.
std::vector<ConvergenceRow> continuum_limit_study(
    const std::function<LatticeProblem(double)>& family, const std::vector<double>& spacings,
    int level_index, double analytic_energy);

}  // namespace braidqi
