#pragma once

#include <string>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include "spectral.hpp"

namespace harmonika {

/// Hermitian element of the group algebra (a physical quantity).
struct Observable {
    AlgebraElement element;
};

inline Observable make_observable(const GroupTable& g, const AlgebraElement& f, double tol = 1e-10) {
    AlgebraElement adj = involution(g, f);
    double dev = (adj.values - f.values).cwiseAbs().maxCoeff();
    if (dev > tol) throw PreconditionError("observable must be Hermitian (f+ = f)", dev);
    return {f};
}

/// Hermitian, trace-one, positive element; pure iff idempotent.
struct DensityState {
    AlgebraElement element;
    bool pure = false;
};

/// Positivity is decided by the finite criterion: every spectral block of rho
/// is positive semidefinite (eigenvalue floor -1e-10).
inline DensityState make_state(const GroupTable& g, const std::vector<Irrep>& irreps,
                               const AlgebraElement& f, double tol = 1e-10) {
    AlgebraElement adj = involution(g, f);
    double dev = (adj.values - f.values).cwiseAbs().maxCoeff();
    if (dev > tol) throw PreconditionError("state must be Hermitian (rho+ = rho)", dev);
    Complex tr = trace_functional(g, f);
    if (std::abs(tr - Complex(1.0)) > tol)
        throw PreconditionError("state must have unit trace", std::abs(tr - Complex(1.0)));
    SpectralBlocks b = peter_weyl_forward(g, irreps, f);
    for (const auto& [label, blk] : b.blocks) {
        Eigen::SelfAdjointEigenSolver<CMatrix> es(((blk + blk.adjoint()) / 2.0).eval());
        double mineig = es.eigenvalues().minCoeff();
        if (mineig < -tol)
            throw PreconditionError("state block " + label + " is not positive semidefinite", -mineig);
    }
    AlgebraElement sq = convolve(g, f, f);
    bool pure = l2_norm(g, {g.label, sq.values - f.values}) <= tol;
    return {f, pure};
}

/// <A>_rho = Tr(A*rho) = (A,rho); real for Hermitian inputs.
inline double expectation(const GroupTable& g, const Observable& a, const DensityState& rho,
                          double tol = 1e-10) {
    Complex v = scalar_product(g, a.element, rho.element);
    if (std::abs(v.imag()) > tol)
        throw PreconditionError("expectation value has a non-negligible imaginary part",
                                std::abs(v.imag()));
    return v.real();
}

/// Probability that a measurement on rho detects the pure state rho0.
inline double transition_probability(const GroupTable& g, const DensityState& rho,
                                     const DensityState& rho0, double tol = 1e-10) {
    if (!rho0.pure) throw PreconditionError("reference state must be pure");
    Complex v = scalar_product(g, rho.element, rho0.element);
    if (std::abs(v.imag()) > tol)
        throw PreconditionError("transition probability has a non-negligible imaginary part",
                                std::abs(v.imag()));
    double p = v.real();
    if (p < -tol || p > 1.0 + tol)
        throw PreconditionError("transition probability out of [0,1]", std::max(-p, p - 1.0));
    return std::clamp(p, 0.0, 1.0);
}

enum class TranslationKind { Left, Right, Auto };

/// Permutation matrix of a regular translation acting on wave-function
/// vectors in canonical element order:
///   L[g]f = f(g^{-1} x),  R[g]f = f(x g^{-1}),  A[g] = L[g] R[g^{-1}].
inline CMatrix translation_operator(const GroupTable& g, TranslationKind kind, int elem) {
    if (elem < 0 || elem >= g.order) throw SchemaError("element index out of range");
    CMatrix m = CMatrix::Zero(g.order, g.order);
    const int ginv = g.inv[elem];
    for (int x = 0; x < g.order; ++x) {
        switch (kind) {
            case TranslationKind::Left: m(x, g.op(ginv, x)) = 1.0; break;
            case TranslationKind::Right: m(x, g.op(x, ginv)) = 1.0; break;
            case TranslationKind::Auto: m(x, g.op(g.op(ginv, x), elem)) = 1.0; break;
        }
    }
    return m;
}

enum class ConvolutionKind { L, R, Rt };

/// Dense matrix of a one-sided convolution operator:
///   L{F}f = F*f,  R{F}f = f*F,  Rt{F} = R{F^T} with F^T(g) = F(g^{-1}).
inline CMatrix convolution_operator(const GroupTable& g, ConvolutionKind kind, const AlgebraElement& f) {
    check_element(g, f);
    CMatrix m = CMatrix::Zero(g.order, g.order);
    const double w = 1.0 / static_cast<double>(g.order);
    for (int x = 0; x < g.order; ++x)
        for (int k = 0; k < g.order; ++k) {
            switch (kind) {
                case ConvolutionKind::L: m(x, k) = w * f.values[g.op(x, g.inv[k])]; break;
                case ConvolutionKind::R: m(x, k) = w * f.values[g.op(g.inv[k], x)]; break;
                case ConvolutionKind::Rt: m(x, k) = w * f.values[g.inv[g.op(g.inv[k], x)]]; break;
            }
        }
    return m;
}

enum class TwoSidedKind { T, Tt };

/// Two-sided operators act on L^2(G x G) as N^2 x N^2 matrices (row index
/// g1*N+g2), making the composition and unitarity laws exact matrix
/// identities:
///   Tt{F} = (1/N^2) sum F(g1,g2) L[g1] kron R[g2^{-1}]
///   T{F}  = (1/N^2) sum F(g1,g2) L[g1] kron R[g2]
inline CMatrix two_sided_operator(const GroupTable& g, TwoSidedKind kind, const CMatrix& f) {
    if (f.rows() != g.order || f.cols() != g.order)
        throw SchemaError("two-sided symbol must be an N x N array over G x G");
    const int n = g.order;
    CMatrix m = CMatrix::Zero(n * n, n * n);
    const double w = 1.0 / static_cast<double>(n * n);
    for (int g1 = 0; g1 < n; ++g1)
        for (int g2 = 0; g2 < n; ++g2) {
            if (f(g1, g2) == Complex(0.0)) continue;
            CMatrix l = translation_operator(g, TranslationKind::Left, g1);
            CMatrix r = translation_operator(g, TranslationKind::Right,
                                             kind == TwoSidedKind::Tt ? g.inv[g2] : g2);
            m += w * f(g1, g2) * Eigen::kroneckerProduct(l, r).eval();
        }
    return m;
}

/// Convolution on G x G with the normalized product measure:
/// (F*H)(g1,g2) = (1/N^2) sum F(h1,h2) H(h1^{-1}g1, h2^{-1}g2).
inline CMatrix product_convolve(const GroupTable& g, const CMatrix& f, const CMatrix& h) {
    const int n = g.order;
    CMatrix out = CMatrix::Zero(n, n);
    for (int g1 = 0; g1 < n; ++g1)
        for (int g2 = 0; g2 < n; ++g2) {
            Complex s = 0.0;
            for (int h1 = 0; h1 < n; ++h1)
                for (int h2 = 0; h2 < n; ++h2)
                    s += f(h1, h2) * h(g.op(g.inv[h1], g1), g.op(g.inv[h2], g2));
            out(g1, g2) = s / static_cast<double>(n * n);
        }
    return out;
}

/// Transposed-in-the-second-slot convolution used by T{F}:
/// (F(*t)H)(g1,g2) = (1/N^2) sum F(h1,h2) H(h1^{-1}g1, g2 h2^{-1}).
inline CMatrix product_convolve_t(const GroupTable& g, const CMatrix& f, const CMatrix& h) {
    const int n = g.order;
    CMatrix out = CMatrix::Zero(n, n);
    for (int g1 = 0; g1 < n; ++g1)
        for (int g2 = 0; g2 < n; ++g2) {
            Complex s = 0.0;
            for (int h1 = 0; h1 < n; ++h1)
                for (int h2 = 0; h2 < n; ++h2)
                    s += f(h1, h2) * h(g.op(g.inv[h1], g1), g.op(g2, g.inv[h2]));
            out(g1, g2) = s / static_cast<double>(n * n);
        }
    return out;
}

/// The inner-automorphism action on functions, (A[g]f)(x) = f(g^{-1} x g).
inline AlgebraElement auto_translate(const GroupTable& g, int elem, const AlgebraElement& f) {
    AlgebraElement out = zero_element(g);
    const int ginv = g.inv[elem];
    for (int x = 0; x < g.order; ++x) out.values[x] = f.values[g.op(g.op(ginv, x), elem)];
    return out;
}

/// Conjugation of convolution-type operators by regular translations:
///   L[g] L{F} L[g]^{-1} = L{A[g]F}
///   R[g] L{F} R[g]^{-1} = L{F}
///   L[g] R{F} L[g]^{-1} = R{F}
///   R[g^{-1}] R{F} R[g^{-1}]^{-1} = R{A[g]F}
/// Returns the symbol of the conjugated operator.
inline AlgebraElement conjugate_operator_symbol(const GroupTable& g, TranslationKind by, int elem,
                                                ConvolutionKind kind, const AlgebraElement& f) {
    if (by == TranslationKind::Auto) throw SchemaError("conjugation is by left or right translations");
    if (kind == ConvolutionKind::L)
        return by == TranslationKind::Left ? auto_translate(g, elem, f) : f;
    // R{F} (and Rt{F}): invariant under left conjugation; R[g^{-1}]-conjugation applies A[g]
    return by == TranslationKind::Left ? f : auto_translate(g, elem, f);
}

/// True iff f+ * f = delta within tol; equivalently all spectral blocks of f
/// are unitary, equivalently L{f} is a unitary matrix.
inline bool unitarity_check(const GroupTable& g, const AlgebraElement& f, double tol = 1e-10) {
    AlgebraElement prod = convolve(g, involution(g, f), f);
    AlgebraElement delta = delta_element(g);
    return (prod.values - delta.values).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace harmonika
