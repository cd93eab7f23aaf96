#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "irreps.hpp"

namespace harmonika {

/// Peter-Weyl image of an AlgebraElement: one n(a) x n(a) matrix per irrep,
/// keyed by irrep label.
struct SpectralBlocks {
    std::string group;
    std::map<std::string, CMatrix> blocks;
};

inline void check_complete(const GroupTable& g, const std::vector<Irrep>& irreps) {
    int total = 0;
    for (const auto& d : irreps) total += d.dim * d.dim;
    if (total != g.order)
        throw PreconditionError("incomplete irrep list: sum n(a)^2 != N");
}

/// F(a)_nm = (1/N) sum_g conj(D(a)_nm(g)) f(g), so that
/// f = sum_a sum_nm F(a)_nm eps(a)_nm with eps(a)_nm = n(a) D(a)_nm.
inline SpectralBlocks peter_weyl_forward(const GroupTable& g, const std::vector<Irrep>& irreps,
                                         const AlgebraElement& f) {
    check_element(g, f);
    check_complete(g, irreps);
    SpectralBlocks out{g.label, {}};
    for (const auto& d : irreps) {
        CMatrix b = CMatrix::Zero(d.dim, d.dim);
        for (int e = 0; e < g.order; ++e) b += d.at(e).conjugate() * f.values[e];
        out.blocks[d.label] = b / static_cast<double>(g.order);
    }
    return out;
}

/// f(g) = sum_a n(a) sum_nm F(a)_nm D(a)_nm(g).
inline AlgebraElement peter_weyl_inverse(const GroupTable& g, const std::vector<Irrep>& irreps,
                                         const SpectralBlocks& b) {
    check_complete(g, irreps);
    AlgebraElement out = zero_element(g);
    for (const auto& d : irreps) {
        auto it = b.blocks.find(d.label);
        if (it == b.blocks.end()) throw SchemaError("missing spectral block for irrep " + d.label);
        const CMatrix& blk = it->second;
        if (blk.rows() != d.dim || blk.cols() != d.dim)
            throw SchemaError("spectral block dimension mismatch for irrep " + d.label);
        for (int e = 0; e < g.order; ++e)
            out.values[e] += static_cast<double>(d.dim) * blk.cwiseProduct(d.at(e)).sum();
    }
    return out;
}

inline void check_same_shape(const SpectralBlocks& a, const SpectralBlocks& b) {
    if (a.group != b.group || a.blocks.size() != b.blocks.size())
        throw PreconditionError("spectral blocks belong to different groups");
}

/// Convolution is blockwise matrix multiplication.
inline SpectralBlocks spectral_convolve(const SpectralBlocks& a, const SpectralBlocks& b) {
    check_same_shape(a, b);
    SpectralBlocks out{a.group, {}};
    for (const auto& [label, blk] : a.blocks) out.blocks[label] = blk * b.blocks.at(label);
    return out;
}

/// Tr f = f(e) = sum_a n(a) Tr F(a). The n(a) weight keeps this identical to
/// trace_functional of the inverse transform.
inline Complex spectral_trace(const SpectralBlocks& b) {
    Complex t = 0.0;
    for (const auto& [label, blk] : b.blocks) t += static_cast<double>(blk.rows()) * blk.trace();
    return t;
}

/// (F,G) = sum_a n(a) Tr(F(a)^+ G(a)).
inline Complex spectral_scalar(const SpectralBlocks& a, const SpectralBlocks& b) {
    check_same_shape(a, b);
    Complex t = 0.0;
    for (const auto& [label, blk] : a.blocks)
        t += static_cast<double>(blk.rows()) * (blk.adjoint() * b.blocks.at(label)).trace();
    return t;
}

/// Blockwise Hermitian conjugate; matches involution() through the transform.
inline SpectralBlocks spectral_involution(const SpectralBlocks& b) {
    SpectralBlocks out{b.group, {}};
    for (const auto& [label, blk] : b.blocks) out.blocks[label] = blk.adjoint();
    return out;
}

/// eps(a)_ij = n(a) D(a)_ij as an AlgebraElement.
inline AlgebraElement epsilon_element(const GroupTable& g, const Irrep& d, int i, int j) {
    if (i < 0 || i >= d.dim || j < 0 || j >= d.dim) throw SchemaError("epsilon index out of range");
    AlgebraElement f = zero_element(g);
    for (int e = 0; e < g.order; ++e) f.values[e] = static_cast<double>(d.dim) * d.at(e)(i, j);
    return f;
}

/// Canonical complete system for one irrep, row-major over (i,j).
struct EpsilonBasis {
    std::string irrep_label;
    int dim;
    std::vector<AlgebraElement> functions;  // index i*dim + j

    const AlgebraElement& at(int i, int j) const { return functions[i * dim + j]; }
};

inline std::vector<EpsilonBasis> epsilon_basis(const GroupTable& g, const std::vector<Irrep>& irreps) {
    check_complete(g, irreps);
    std::vector<EpsilonBasis> out;
    out.reserve(irreps.size());
    for (const auto& d : irreps) {
        EpsilonBasis eb{d.label, d.dim, {}};
        for (int i = 0; i < d.dim; ++i)
            for (int j = 0; j < d.dim; ++j) eb.functions.push_back(epsilon_element(g, d, i, j));
        out.push_back(std::move(eb));
    }
    return out;
}

/// Central idempotent eps(a) = n(a) chi(a); projects onto M(a) by convolution.
inline AlgebraElement central_idempotent(const GroupTable& g, const Irrep& d) {
    AlgebraElement f = zero_element(g);
    for (int e = 0; e < g.order; ++e) f.values[e] = static_cast<double>(d.dim) * d.at(e).trace();
    return f;
}

/// Orthogonal projection of f onto the ideal M(a): keep the a-block, zero the
/// rest (equals eps(a)*f).
inline AlgebraElement project_ideal(const GroupTable& g, const std::vector<Irrep>& irreps,
                                    const AlgebraElement& f, const std::string& alpha) {
    SpectralBlocks b = peter_weyl_forward(g, irreps, f);
    bool found = false;
    for (auto& [label, blk] : b.blocks)
        if (label == alpha)
            found = true;
        else
            blk.setZero();
    if (!found) throw SchemaError("unknown irrep label: " + alpha);
    return peter_weyl_inverse(g, irreps, b);
}

/// One spectral eigenvalue with its total multiplicity in the regular
/// representation (block multiplicity times n(a)).
struct SpectrumEntry {
    Complex value;
    int multiplicity;
};

/// Union over irreps of block eigenvalues; each block eigenvalue carries
/// multiplicity n(a). Numerically coincident values are clustered at 1e-8.
inline std::vector<SpectrumEntry> spectrum(const GroupTable& g, const std::vector<Irrep>& irreps,
                                           const AlgebraElement& f, double cluster_tol = 1e-8) {
    SpectralBlocks b = peter_weyl_forward(g, irreps, f);
    std::vector<Complex> raw;
    for (const auto& d : irreps) {
        const CMatrix& blk = b.blocks.at(d.label);
        Eigen::ComplexEigenSolver<CMatrix> es(blk);
        if (es.info() != Eigen::Success)
            throw PreconditionError("eigenvalue solver failed to converge on block " + d.label);
        for (int i = 0; i < d.dim; ++i)
            for (int copy = 0; copy < d.dim; ++copy) raw.push_back(es.eigenvalues()[i]);
    }
    std::sort(raw.begin(), raw.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    std::vector<SpectrumEntry> out;
    for (const Complex& v : raw) {
        if (!out.empty() && std::abs(v - out.back().value) <= cluster_tol)
            ++out.back().multiplicity;
        else
            out.push_back({v, 1});
    }
    return out;
}

/// For Hermitian a and lambda in its spectrum, a canonical normalized
/// eigen-density rho with a*rho = rho*a = lambda rho, Tr rho = 1:
/// the rank-one block v v^+ built from a block eigenvector, placed in the
/// first (canonical order) irrep whose block carries lambda.
inline std::optional<AlgebraElement> eigen_density(const GroupTable& g, const std::vector<Irrep>& irreps,
                                                   const AlgebraElement& a, double lambda,
                                                   double tol = 1e-8) {
    AlgebraElement adj = involution(g, a);
    double herm = (adj.values - a.values).cwiseAbs().maxCoeff();
    if (herm > 1e-10) throw PreconditionError("element is not Hermitian", herm);
    SpectralBlocks b = peter_weyl_forward(g, irreps, a);
    for (const auto& d : irreps) {
        CMatrix blk = b.blocks.at(d.label);
        blk = ((blk + blk.adjoint()) / 2.0).eval();  // Hermitian up to rounding
        Eigen::SelfAdjointEigenSolver<CMatrix> es(blk);
        for (int i = 0; i < d.dim; ++i) {
            if (std::abs(es.eigenvalues()[i] - lambda) > tol) continue;
            CVector v = es.eigenvectors().col(i);
            // fix the phase: largest-|entry| component real positive
            int imax = 0;
            for (int k = 1; k < d.dim; ++k)
                if (std::abs(v[k]) > std::abs(v[imax])) imax = k;
            v *= std::conj(v[imax]) / std::abs(v[imax]);
            SpectralBlocks rb{g.label, {}};
            for (const auto& dd : irreps) rb.blocks[dd.label] = CMatrix::Zero(dd.dim, dd.dim);
            // Tr rho = n(a) * |v|^2 must be 1
            rb.blocks[d.label] = v * v.adjoint() / (static_cast<double>(d.dim) * v.squaredNorm());
            return peter_weyl_inverse(g, irreps, rb);
        }
    }
    return std::nullopt;
}

}  // namespace harmonika
