#include "braidqi/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace braidqi {

Tolerances& default_tolerances() {
    static Tolerances tols;
    return tols;
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

bool ComplexMatrix::all_finite() const {
    for (const cxd& z : data)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
}

static void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument(std::string(op) + ": shape mismatch " + dims_to_string(a) +
                                    " vs " + dims_to_string(b));
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "add");
    ComplexMatrix c(a.rows, a.cols);
    for (size_t i = 0; i < a.data.size(); ++i) c.data[i] = a.data[i] + b.data[i];
    return c;
}

ComplexMatrix sub(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "sub");
    ComplexMatrix c(a.rows, a.cols);
    for (size_t i = 0; i < a.data.size(); ++i) c.data[i] = a.data[i] - b.data[i];
    return c;
}

ComplexMatrix scale(cxd s, const ComplexMatrix& a) {
    ComplexMatrix c(a.rows, a.cols);
    for (size_t i = 0; i < a.data.size(); ++i) c.data[i] = s * a.data[i];
    return c;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols != b.rows)
        throw std::invalid_argument("matmul: inner dimension mismatch " + dims_to_string(a) +
                                    " vs " + dims_to_string(b));
    ComplexMatrix c(a.rows, b.cols);
    // i-k-j loop order with a skip on structural zeros: the braid and ladder
    // matrices used here are sparse, and skipping zero terms keeps otherwise
    // exact integer/dyadic arithmetic exact.
    for (int i = 0; i < a.rows; ++i) {
        for (int k = 0; k < a.cols; ++k) {
            const cxd v = a.at(i, k);
            if (v.real() == 0.0 && v.imag() == 0.0) continue;
            const cxd* brow = &b.data[static_cast<size_t>(k) * b.cols];
            cxd* crow = &c.data[static_cast<size_t>(i) * c.cols];
            for (int j = 0; j < b.cols; ++j) crow[j] += v * brow[j];
        }
    }
    return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.rows * b.rows, a.cols * b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) {
            const cxd v = a.at(i, j);
            if (v.real() == 0.0 && v.imag() == 0.0) continue;
            for (int p = 0; p < b.rows; ++p)
                for (int q = 0; q < b.cols; ++q)
                    c.at(i * b.rows + p, j * b.cols + q) = v * b.at(p, q);
        }
    return c;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
    ComplexMatrix c(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) c.at(j, i) = std::conj(a.at(i, j));
    return c;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
    ComplexMatrix c(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) c.at(j, i) = a.at(i, j);
    return c;
}

std::vector<cxd> matvec(const ComplexMatrix& a, const std::vector<cxd>& v) {
    if (static_cast<size_t>(a.cols) != v.size())
        throw std::invalid_argument("matvec: dimension mismatch");
    std::vector<cxd> out(a.rows, cxd{0.0, 0.0});
    for (int i = 0; i < a.rows; ++i) {
        cxd s{0.0, 0.0};
        const cxd* row = &a.data[static_cast<size_t>(i) * a.cols];
        for (int j = 0; j < a.cols; ++j) {
            const cxd w = row[j];
            if (w.real() == 0.0 && w.imag() == 0.0) continue;
            s += w * v[j];
        }
        out[i] = s;
    }
    return out;
}

cxd trace(const ComplexMatrix& a) {
    if (!a.square()) throw std::invalid_argument("trace: matrix must be square");
    cxd t{0.0, 0.0};
    for (int i = 0; i < a.rows; ++i) t += a.at(i, i);
    return t;
}

double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (const cxd& z : a.data) s += std::norm(z);
    return std::sqrt(s);
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "frobenius_distance");
    double s = 0.0;
    for (size_t i = 0; i < a.data.size(); ++i) s += std::norm(a.data[i] - b.data[i]);
    return std::sqrt(s);
}

double max_abs_entry(const ComplexMatrix& a) {
    double m = 0.0;
    for (const cxd& z : a.data) m = std::max(m, std::abs(z));
    return m;
}

namespace {

struct LuResult {
    ComplexMatrix lu;        // packed L (unit diagonal) and U
    std::vector<int> perm;   // row permutation
    int sign = 1;
    double min_pivot = 0.0;
    double max_pivot = 0.0;
};

LuResult lu_factor(const ComplexMatrix& a) {
    if (!a.square()) throw std::invalid_argument("lu_factor: matrix must be square");
    const int n = a.rows;
    LuResult r;
    r.lu = a;
    r.perm.resize(n);
    std::iota(r.perm.begin(), r.perm.end(), 0);
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(r.lu.at(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double m = std::abs(r.lu.at(i, k));
            if (m > best) {
                best = m;
                piv = i;
            }
        }
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(r.lu.at(k, j), r.lu.at(piv, j));
            std::swap(r.perm[k], r.perm[piv]);
            r.sign = -r.sign;
        }
        const double pmag = std::abs(r.lu.at(k, k));
        if (k == 0) {
            r.min_pivot = r.max_pivot = pmag;
        } else {
            r.min_pivot = std::min(r.min_pivot, pmag);
            r.max_pivot = std::max(r.max_pivot, pmag);
        }
        if (pmag == 0.0) continue;  // leave the zero pivot; callers inspect min_pivot
        const cxd pk = r.lu.at(k, k);
        for (int i = k + 1; i < n; ++i) {
            const cxd f = r.lu.at(i, k) / pk;
            r.lu.at(i, k) = f;
            if (f.real() == 0.0 && f.imag() == 0.0) continue;
            for (int j = k + 1; j < n; ++j) r.lu.at(i, j) -= f * r.lu.at(k, j);
        }
    }
    return r;
}

bool lu_singular(const LuResult& r) {
    return r.max_pivot == 0.0 || r.min_pivot < 1e-12 * r.max_pivot;
}

}  // namespace

cxd determinant(const ComplexMatrix& a) {
    const LuResult r = lu_factor(a);
    cxd det{static_cast<double>(r.sign), 0.0};
    for (int i = 0; i < a.rows; ++i) det *= r.lu.at(i, i);
    return det;
}

ComplexMatrix inverse(const ComplexMatrix& a) {
    const LuResult r = lu_factor(a);
    if (lu_singular(r))
        throw std::runtime_error("inverse: matrix is singular to working precision");
    const int n = a.rows;
    ComplexMatrix inv(n, n);
    std::vector<cxd> col(n), y(n);
    for (int c = 0; c < n; ++c) {
        for (int i = 0; i < n; ++i) col[i] = (r.perm[i] == c) ? cxd{1.0, 0.0} : cxd{0.0, 0.0};
        for (int i = 0; i < n; ++i) {
            cxd s = col[i];
            for (int j = 0; j < i; ++j) s -= r.lu.at(i, j) * y[j];
            y[i] = s;
        }
        for (int i = n - 1; i >= 0; --i) {
            cxd s = y[i];
            for (int j = i + 1; j < n; ++j) s -= r.lu.at(i, j) * col[j];
            col[i] = s / r.lu.at(i, i);
        }
        for (int i = 0; i < n; ++i) inv.at(i, c) = col[i];
    }
    return inv;
}

double eigenvalue_residual(const ComplexMatrix& a, cxd lambda) {
    if (!a.square()) throw std::invalid_argument("eigenvalue_residual: matrix must be square");
    ComplexMatrix shifted = a;
    for (int i = 0; i < a.rows; ++i) shifted.at(i, i) -= lambda;
    return std::abs(determinant(shifted));
}

UnitarityCheck is_unitary(const ComplexMatrix& a, double tol) {
    if (!a.square()) throw std::invalid_argument("is_unitary: matrix must be square");
    const ComplexMatrix g = matmul(dagger(a), a);
    UnitarityCheck chk;
    chk.residual = frobenius_distance(g, ComplexMatrix::identity(a.rows));
    chk.unitary = chk.residual < tol;
    return chk;
}

UnitarityCheck is_unitary(const ComplexMatrix& a) {
    return is_unitary(a, default_tolerances().algebraic);
}

EigenDecomposition hermitian_eigen(const ComplexMatrix& h) {
    if (!h.square()) throw std::invalid_argument("hermitian_eigen: matrix must be square");
    const double hnorm = frobenius_norm(h);
    if (frobenius_distance(h, dagger(h)) > 1e-10 * std::max(hnorm, 1e-300) && hnorm > 0.0)
        throw std::invalid_argument("hermitian_eigen: input is not Hermitian to tolerance");

    const int n = h.rows;
    ComplexMatrix a = h;
    ComplexMatrix v = ComplexMatrix::identity(n);

    // Cyclic Jacobi sweeps with complex rotations. Each (p,q) step conjugates
    // by U = diag(1, conj(f)) * R(c, s), where f is the phase of a_pq, which
    // reduces the pivot to the standard real symmetric 2x2 rotation.
    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += std::norm(a.at(p, q));
        off = std::sqrt(2.0 * off);
        if (off <= 1e-14 * std::max(hnorm, 1e-300)) break;

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cxd g = a.at(p, q);
                const double gmag = std::abs(g);
                if (gmag <= 1e-18 * std::max(hnorm, 1e-300)) continue;
                const cxd f = g / gmag;
                const double app = a.at(p, p).real();
                const double aqq = a.at(q, q).real();
                const double tau = (aqq - app) / (2.0 * gmag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(tau * tau + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                // Columns: col_p' = c*col_p - conj(f)*s*col_q ; col_q' = s*col_p + conj(f)*c*col_q.
                for (int r = 0; r < n; ++r) {
                    const cxd arp = a.at(r, p), arq = a.at(r, q);
                    a.at(r, p) = c * arp - std::conj(f) * s * arq;
                    a.at(r, q) = s * arp + std::conj(f) * c * arq;
                }
                // Rows: row_p' = c*row_p - f*s*row_q ; row_q' = s*row_p + f*c*row_q.
                for (int r = 0; r < n; ++r) {
                    const cxd apr = a.at(p, r), aqr = a.at(q, r);
                    a.at(p, r) = c * apr - f * s * aqr;
                    a.at(q, r) = s * apr + f * c * aqr;
                }
                a.at(p, q) = 0.0;
                a.at(q, p) = 0.0;
                a.at(p, p) = cxd{a.at(p, p).real(), 0.0};
                a.at(q, q) = cxd{a.at(q, q).real(), 0.0};

                for (int r = 0; r < n; ++r) {
                    const cxd vrp = v.at(r, p), vrq = v.at(r, q);
                    v.at(r, p) = c * vrp - std::conj(f) * s * vrq;
                    v.at(r, q) = s * vrp + std::conj(f) * c * vrq;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a.at(i, i).real() < a.at(j, j).real(); });

    EigenDecomposition out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n, n);
    for (int c = 0; c < n; ++c) {
        out.values[c] = a.at(order[c], order[c]).real();
        for (int r = 0; r < n; ++r) out.vectors.at(r, c) = v.at(r, order[c]);
    }
    return out;
}

std::vector<double> tridiagonal_eigenvalues(std::vector<double> diag, std::vector<double> off) {
    const int n = static_cast<int>(diag.size());
    if (n == 0) return {};
    if (off.size() + 1 != diag.size())
        throw std::invalid_argument("tridiagonal_eigenvalues: off-diagonal size must be n-1");

    // Implicit-shift QL; e[i] couples d[i] and d[i+1], e[n-1] is a sentinel.
    std::vector<double> d = std::move(diag);
    std::vector<double> e(n, 0.0);
    for (int i = 0; i + 1 < n; ++i) e[i] = off[i];

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 2.3e-16 * dd) break;
            }
            if (m != l) {
                if (iter++ == 60)
                    throw std::runtime_error("tridiagonal_eigenvalues: QL failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i = m - 1;
                for (; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    std::sort(d.begin(), d.end());
    return d;
}

namespace {

// One inverse-iteration solve of (T - lambda I) x = b for tridiagonal T,
// using Gaussian elimination with partial pivoting (two superdiagonals fill).
void tridiag_shifted_solve(const std::vector<double>& diag, const std::vector<double>& off,
                           double lambda, std::vector<double>& x) {
    const int n = static_cast<int>(diag.size());
    std::vector<double> a(n, 0.0), b(n, 0.0), c(n, 0.0);  // sub, main, super
    std::vector<double> c2(n, 0.0);                       // second superdiagonal fill
    for (int i = 0; i < n; ++i) b[i] = diag[i] - lambda;
    for (int i = 0; i < n - 1; ++i) {
        a[i + 1] = off[i];
        c[i] = off[i];
    }
    double scale = 0.0;
    for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(diag[i]) + std::abs(lambda));
    for (int i = 0; i + 1 < n; ++i) scale = std::max(scale, std::abs(off[i]));
    const double tiny = 1e-300 + 1e-18 * scale;

    for (int k = 0; k < n - 1; ++k) {
        if (std::abs(a[k + 1]) > std::abs(b[k])) {
            std::swap(b[k], a[k + 1]);
            std::swap(c[k], b[k + 1]);
            std::swap(c2[k], c[k + 1]);
            std::swap(x[k], x[k + 1]);
        }
        if (std::abs(b[k]) < tiny) b[k] = (b[k] >= 0.0 ? tiny : -tiny);
        const double m = a[k + 1] / b[k];
        b[k + 1] -= m * c[k];
        c[k + 1] -= m * c2[k];
        x[k + 1] -= m * x[k];
    }
    if (std::abs(b[n - 1]) < tiny) b[n - 1] = (b[n - 1] >= 0.0 ? tiny : -tiny);
    x[n - 1] /= b[n - 1];
    if (n >= 2) {
        x[n - 2] = (x[n - 2] - c[n - 2] * x[n - 1]) / b[n - 2];
        for (int i = n - 3; i >= 0; --i)
            x[i] = (x[i] - c[i] * x[i + 1] - c2[i] * x[i + 2]) / b[i];
    }
}

}  // namespace

TridiagonalPairs tridiagonal_lowest_pairs(const std::vector<double>& diag,
                                          const std::vector<double>& off, int k) {
    const int n = static_cast<int>(diag.size());
    if (k < 0 || k > n)
        throw std::invalid_argument("tridiagonal_lowest_pairs: invalid eigenpair count");
    const std::vector<double> all = tridiagonal_eigenvalues(diag, off);

    double scale = 1e-300;
    for (double v : all) scale = std::max(scale, std::abs(v));

    TridiagonalPairs out;
    out.values.assign(all.begin(), all.begin() + k);
    out.vectors.resize(k);

    for (int idx = 0; idx < k; ++idx) {
        double lambda = out.values[idx];
        // Perturb exact repeats slightly so inverse iteration can separate them.
        if (idx > 0 && std::abs(lambda - out.values[idx - 1]) < 1e-14 * scale)
            lambda += 1e-12 * scale;

        std::vector<double> x(n);
        unsigned long long state = 0x9e3779b97f4a7c15ULL + 1000ULL * idx;
        for (int i = 0; i < n; ++i) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            x[i] = (static_cast<double>(state >> 11) / 9007199254740992.0) - 0.5;
        }

        for (int it = 0; it < 4; ++it) {
            tridiag_shifted_solve(diag, off, lambda, x);
            // Reorthogonalize within near-degenerate clusters.
            for (int j = 0; j < idx; ++j) {
                if (std::abs(out.values[j] - out.values[idx]) > 1e-8 * scale) continue;
                double dot = 0.0;
                for (int i = 0; i < n; ++i) dot += out.vectors[j][i] * x[i];
                for (int i = 0; i < n; ++i) x[i] -= dot * out.vectors[j][i];
            }
            double nrm = 0.0;
            for (double xv : x) nrm += xv * xv;
            nrm = std::sqrt(nrm);
            if (nrm == 0.0) {
                x.assign(n, 0.0);
                x[idx % n] = 1.0;
                continue;
            }
            for (double& xv : x) xv /= nrm;
        }
        out.vectors[idx] = std::move(x);
    }
    return out;
}

PhaseComparison distance_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "distance_up_to_phase");
    cxd overlap{0.0, 0.0};
    for (size_t i = 0; i < a.data.size(); ++i) overlap += std::conj(a.data[i]) * b.data[i];

    PhaseComparison cmp;
    cmp.best_global_phase = (std::abs(overlap) == 0.0) ? 0.0 : std::arg(overlap);
    const cxd phase = std::exp(kI * cmp.best_global_phase);
    double s = 0.0;
    for (size_t i = 0; i < a.data.size(); ++i) {
        const double dev = std::abs(a.data[i] * phase - b.data[i]);
        s += dev * dev;
        cmp.max_entry_deviation = std::max(cmp.max_entry_deviation, dev);
    }
    cmp.frobenius_distance = std::sqrt(s);
    return cmp;
}

std::string dims_to_string(const ComplexMatrix& a) {
    return std::to_string(a.rows) + "x" + std::to_string(a.cols);
}

}  // namespace braidqi
