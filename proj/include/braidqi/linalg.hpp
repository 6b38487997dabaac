#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidqi {

using cxd = std::complex<double>;

inline constexpr cxd kI{0.0, 1.0};

// Tolerance defaults used across the library. Callers may pass explicit
// tolerances to individual checks; these are the central fallbacks.
struct Tolerances {
    double algebraic = 1e-12;  // exact algebraic identities (unitarity, braid relations)
    double eigen = 1e-10;      // iterative eigensolver residuals
};

Tolerances& default_tolerances();

// Dense complex matrix, row-major storage.
struct ComplexMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<cxd> data;

    ComplexMatrix() = default;
    ComplexMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {
        if (r < 0 || c < 0) throw std::invalid_argument("matrix dimensions must be nonnegative");
    }

    static ComplexMatrix identity(int n);
    static ComplexMatrix zero(int r, int c) { return ComplexMatrix(r, c); }

    cxd& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
    const cxd& at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }

    bool square() const { return rows == cols; }
    bool all_finite() const;
};

bool operator==(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix sub(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(cxd s, const ComplexMatrix& a);
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix dagger(const ComplexMatrix& a);
ComplexMatrix transpose(const ComplexMatrix& a);

std::vector<cxd> matvec(const ComplexMatrix& a, const std::vector<cxd>& v);

cxd trace(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs_entry(const ComplexMatrix& a);

// LU-based routines with partial pivoting. A matrix is treated as singular
// when its smallest pivot magnitude falls below 1e-12 times the largest.
cxd determinant(const ComplexMatrix& a);
ComplexMatrix inverse(const ComplexMatrix& a);

// |det(a - lambda*I)| as a cheap membership residual for claimed eigenvalues.
double eigenvalue_residual(const ComplexMatrix& a, cxd lambda);

struct UnitarityCheck {
    bool unitary = false;
    double residual = 0.0;  // ||a^dag a - I||_F
};
UnitarityCheck is_unitary(const ComplexMatrix& a, double tol);
UnitarityCheck is_unitary(const ComplexMatrix& a);

struct EigenDecomposition {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // columns are the corresponding eigenvectors
};

// Cyclic complex Jacobi iteration; intended for the small Hermitian matrices
// (dimension <= 16) that arise here. Rejects inputs whose anti-Hermitian part
// exceeds 1e-10 times the matrix norm.
EigenDecomposition hermitian_eigen(const ComplexMatrix& h);

// Real symmetric tridiagonal eigenvalues (implicit-shift QL), ascending.
std::vector<double> tridiagonal_eigenvalues(std::vector<double> diag, std::vector<double> off);

struct TridiagonalPairs {
    std::vector<double> values;                 // k lowest, ascending
    std::vector<std::vector<double>> vectors;   // unit 2-norm, matching order
};

// k lowest eigenpairs of a real symmetric tridiagonal matrix: QL for the
// values, inverse iteration (with reorthogonalization inside near-degenerate
// clusters) for the vectors.
TridiagonalPairs tridiagonal_lowest_pairs(const std::vector<double>& diag,
                                          const std::vector<double>& off, int k);

struct PhaseComparison {
    double frobenius_distance = 0.0;   // ||a*e^{i delta} - b||_F at the optimal delta
    double best_global_phase = 0.0;    // delta in (-pi, pi]
    double max_entry_deviation = 0.0;  // max_ij |a_ij e^{i delta} - b_ij|
};

// Distance between matrices modulo a global phase: delta = arg tr(a^dag b),
// taken as 0 when that trace vanishes.
PhaseComparison distance_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b);

std::string dims_to_string(const ComplexMatrix& a);

}  // namespace braidqi
