#include "braidqi/braid.hpp"

#include <cmath>

namespace braidqi {

BraidOperator eight_vertex_braid(BraidSign sign, double phi, BraidConvention convention) {
    BraidOperator b;
    b.sign = sign;
    b.phi = phi;
    b.convention = convention;

    const cxd q = std::exp(kI * phi);
    const double s = sign == BraidSign::plus ? 1.0 : -1.0;

    ComplexMatrix m(4, 4);
    m.at(0, 0) = 1.0;
    m.at(0, 3) = q;
    m.at(1, 1) = 1.0;
    m.at(1, 2) = s;
    m.at(2, 1) = -s;
    m.at(2, 2) = 1.0;
    m.at(3, 0) = -std::conj(q);
    m.at(3, 3) = 1.0;

    if (convention == BraidConvention::verbatim) {
        // As displayed: no 1/sqrt(2) prefactor and a stray unit entry at
        // row 3, column 4.
        m.at(2, 3) = 1.0;
    } else {
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        m = scale(inv_sqrt2, m);
    }
    b.matrix = m;
    return b;
}

cxd eigenvalue_pair_product(const BraidOperator& b) {
    // The operator acts block-diagonally on span{|00>,|11>} and span{|01>,|10>}
    // with the same eigenvalue pair; their product is the corner block's
    // determinant.
    const ComplexMatrix& m = b.matrix;
    return m.at(0, 0) * m.at(3, 3) - m.at(0, 3) * m.at(3, 0);
}

ComplexMatrix embed_on_strands(const ComplexMatrix& b_two_site, int position, int strands) {
    if (b_two_site.rows != 4 || b_two_site.cols != 4)
        throw std::invalid_argument("embed_on_strands: operator must be 4x4");
    if (strands < 2 || strands > 10)
        throw std::invalid_argument("embed_on_strands: strand count must be in [2, 10]");
    if (position < 1 || position + 1 > strands)
        throw std::invalid_argument("embed_on_strands: position out of range");

    ComplexMatrix out = ComplexMatrix::identity(1 << (position - 1));
    out = kron(out, b_two_site);
    out = kron(out, ComplexMatrix::identity(1 << (strands - position - 1)));
    return out;
}

double braid_relation_residual(const ComplexMatrix& b_two_site) {
    const ComplexMatrix b1 = embed_on_strands(b_two_site, 1, 3);
    const ComplexMatrix b2 = embed_on_strands(b_two_site, 2, 3);
    const ComplexMatrix lhs = matmul(matmul(b1, b2), b1);
    const ComplexMatrix rhs = matmul(matmul(b2, b1), b2);
    return frobenius_distance(lhs, rhs);
}

double far_commutativity_residual(const ComplexMatrix& b_two_site) {
    const ComplexMatrix b1 = embed_on_strands(b_two_site, 1, 4);
    const ComplexMatrix b3 = embed_on_strands(b_two_site, 3, 4);
    return frobenius_distance(matmul(b1, b3), matmul(b3, b1));
}

ComplexMatrix yang_baxterize(const BraidOperator& b, double x) {
    if (b.convention != BraidConvention::normalized)
        throw std::invalid_argument("yang_baxterize: requires the normalized convention");
    if (x == 0.0) return b.matrix;
    const cxd ll = eigenvalue_pair_product(b);
    return add(b.matrix, scale(x * ll, inverse(b.matrix)));
}

ComplexMatrix yang_baxterize_scalar_reading(const BraidOperator& b, double x) {
    const cxd ll = eigenvalue_pair_product(b);
    return add(b.matrix, scale(x * ll, ComplexMatrix::identity(4)));
}

ComplexMatrix trig_extension(BraidSign sign, double theta, double phi) {
    const BraidOperator b = eight_vertex_braid(sign, phi, BraidConvention::normalized);
    return add(scale(std::cos(theta), b.matrix), scale(std::sin(theta), inverse(b.matrix)));
}

SpectralParams spectral_params(double x) {
    if (x < 0.0) throw std::invalid_argument("spectral_params: x must be nonnegative");
    SpectralParams p;
    const double r = std::sqrt(1.0 + x * x);
    p.cos_theta = 1.0 / r;
    p.sin_theta = x / r;
    p.theta = std::atan(x);
    return p;
}

double qybe_residual(const std::function<ComplexMatrix(double)>& family, double x, double y) {
    const auto at = [&](double u, int position) {
        ComplexMatrix r = family(u);
        if (r.rows != 4 || r.cols != 4)
            throw std::invalid_argument("qybe_residual: family must produce 4x4 matrices");
        return embed_on_strands(r, position, 3);
    };
    const ComplexMatrix lhs = matmul(matmul(at(x, 1), at(x * y, 2)), at(y, 1));
    const ComplexMatrix rhs = matmul(matmul(at(y, 2), at(x * y, 1)), at(x, 2));
    return frobenius_distance(lhs, rhs);
}

ComplexMatrix braid_hamiltonian(BraidSign sign, double phi) {
    const BraidOperator b = eight_vertex_braid(sign, phi, BraidConvention::normalized);
    const ComplexMatrix b2 = matmul(b.matrix, b.matrix);
    return scale(cxd{0.0, -0.5}, b2);
}

ComplexMatrix braid_hamiltonian_displayed(BraidSign sign, double phi) {
    const cxd q = std::exp(kI * phi);
    const double s = sign == BraidSign::plus ? 1.0 : -1.0;
    ComplexMatrix m(4, 4);
    m.at(0, 3) = -q;
    m.at(1, 2) = -s;
    m.at(2, 1) = s;
    m.at(3, 0) = std::conj(q);
    return scale(cxd{0.0, 0.5}, m);
}

ComplexMatrix evolution_operator(const ComplexMatrix& hamiltonian, double t) {
    const EigenDecomposition eig = hermitian_eigen(hamiltonian);
    const int n = hamiltonian.rows;
    ComplexMatrix phases(n, n);
    for (int i = 0; i < n; ++i) phases.at(i, i) = std::exp(-kI * eig.values[i] * t);
    return matmul(matmul(eig.vectors, phases), dagger(eig.vectors));
}

}  // namespace braidqi
