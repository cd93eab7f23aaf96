#pragma once

#include <vector>

#include "types.hpp"

namespace harmonika {

/// Finite-dimensional unitary space with a possibly non-orthonormal basis,
/// described by its Gram matrix. The operator algebra over it is the
/// reference H+-algebra used as an oracle for the group-algebra modules.
struct UnitarySpace {
    int dim;
    CMatrix gram;      // Gamma_ij = <e_i|e_j>
    CMatrix gram_inv;  // Gamma^ij
};

inline UnitarySpace make_unitary_space(const CMatrix& gram) {
    const int n = static_cast<int>(gram.rows());
    if (n < 1 || n > 16 || gram.cols() != n) throw SchemaError("Gram matrix must be square, 1 <= n <= 16");
    if ((gram - gram.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw PreconditionError("Gram matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<CMatrix> es(gram);
    if (es.eigenvalues().minCoeff() < 1e-10)
        throw PreconditionError("Gram matrix is not positive definite", -es.eigenvalues().minCoeff());
    return {n, gram, gram.inverse()};
}

enum class BasisKind { Mixed, Covariant };  // e_j^i resp. e_ij

struct BasisOperator {
    BasisKind kind;
    int i, j;
    CMatrix matrix;
};

/// Mixed basis operator e_lower^upper, matrix entries
/// (e_j^i)^a_b = d^i_b d^a_j, i.e. a single 1 at row `lower`, column `upper`.
inline CMatrix mixed_basis_op(const UnitarySpace& s, int lower, int upper) {
    CMatrix m = CMatrix::Zero(s.dim, s.dim);
    m(lower, upper) = 1.0;
    return m;
}

/// Covariant basis operator e_ij = sum_k Gamma_jk e_i^k.
inline CMatrix covariant_basis_op(const UnitarySpace& s, int i, int j) {
    CMatrix m = CMatrix::Zero(s.dim, s.dim);
    for (int k = 0; k < s.dim; ++k) m(i, k) = s.gram(j, k);
    return m;
}

/// All n^2 operators of each kind, mixed first, row-major in (i,j).
inline std::vector<BasisOperator> adapted_basis(const UnitarySpace& s) {
    std::vector<BasisOperator> ops;
    ops.reserve(2 * s.dim * s.dim);
    for (int i = 0; i < s.dim; ++i)
        for (int j = 0; j < s.dim; ++j)
            ops.push_back({BasisKind::Mixed, i, j, mixed_basis_op(s, i, j)});
    for (int i = 0; i < s.dim; ++i)
        for (int j = 0; j < s.dim; ++j)
            ops.push_back({BasisKind::Covariant, i, j, covariant_basis_op(s, i, j)});
    return ops;
}

/// Gamma-adjoint: the x+ with <x phi|psi> = <phi|x+ psi> under the Gram
/// inner product, i.e. x+ = Gamma^{-1} x^dag Gamma.
inline CMatrix hplus_involution(const UnitarySpace& s, const CMatrix& x) {
    return s.gram_inv * x.adjoint() * s.gram;
}

inline Complex hplus_scalar(const UnitarySpace& s, const CMatrix& x, const CMatrix& y) {
    return (hplus_involution(s, x) * y).trace();
}

inline double hplus_norm(const UnitarySpace& s, const CMatrix& x) {
    return std::sqrt(std::abs(hplus_scalar(s, x, x)));
}

/// The j-th minimal left ideal M_j, spanned by {e_ij : i = 0..n-1}.
inline std::vector<CMatrix> minimal_left_ideal(const UnitarySpace& s, int j) {
    std::vector<CMatrix> span;
    span.reserve(s.dim);
    for (int i = 0; i < s.dim; ++i) span.push_back(covariant_basis_op(s, i, j));
    return span;
}

inline std::vector<std::vector<CMatrix>> minimal_left_ideals(const UnitarySpace& s) {
    std::vector<std::vector<CMatrix>> out;
    out.reserve(s.dim);
    for (int j = 0; j < s.dim; ++j) out.push_back(minimal_left_ideal(s, j));
    return out;
}

}  // namespace harmonika
