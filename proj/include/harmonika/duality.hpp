#pragma once

#include <numbers>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "group.hpp"

namespace harmonika {

/// Character group of a finite abelian group given in product-of-cyclics
/// form. Characters are indexed by tuples (k_1..k_r) in the same mixed-radix
/// layout as the group elements; evaluation is
/// <chi_k|g> = exp(2 pi i sum k_i g_i / n_i).
struct DualGroup {
    std::string group;
    std::vector<int> factors;
    CMatrix table;  // table(chi, g) = <chi|g>

    int size() const { return static_cast<int>(table.rows()); }
};

inline DualGroup dual_group(const GroupTable& g) {
    if (!g.is_abelian()) throw PreconditionError("dual group requires an abelian group");
    auto factors = cyclic_factors_of(g.label);
    if (factors.empty())
        throw SchemaError("dual group requires a product-of-cyclics descriptor, got: " + g.label);
    const int N = g.order;
    const int r = static_cast<int>(factors.size());
    auto digits = [&](int idx) {
        std::vector<int> d(r);
        for (int i = r - 1; i >= 0; --i) {
            d[i] = idx % factors[i];
            idx /= factors[i];
        }
        return d;
    };
    DualGroup dg{g.label, factors, CMatrix(N, N)};
    for (int c = 0; c < N; ++c) {
        auto kd = digits(c);
        for (int e = 0; e < N; ++e) {
            auto gd = digits(e);
            double phase = 0.0;
            for (int i = 0; i < r; ++i) phase += 2.0 * std::numbers::pi * kd[i] * gd[i] / factors[i];
            dg.table(c, e) = std::polar(1.0, phase);
        }
    }
    return dg;
}

/// Function on the character group, indexed like DualGroup characters.
struct DualFunction {
    std::string group;
    CVector values;
};

/// Fourier transform: Psi^(chi) = (1/N) sum_g conj(<chi|g>) Psi(g).
inline DualFunction pontryagin_forward(const DualGroup& dg, const AlgebraElement& psi) {
    if (psi.group != dg.group || psi.values.size() != dg.size())
        throw SchemaError("function does not match the dual group");
    return {dg.group, dg.table.conjugate() * psi.values / static_cast<double>(dg.size())};
}

/// Inverse transform with counting measure on the dual:
/// Psi(g) = sum_chi <chi|g> Psi^(chi).
inline AlgebraElement pontryagin_inverse(const DualGroup& dg, const DualFunction& f) {
    if (f.group != dg.group || f.values.size() != dg.size())
        throw SchemaError("dual function length mismatch");
    return {dg.group, dg.table.transpose() * f.values};
}

/// Band-limited delta: delta{U}(g) = sum_{chi in U} <chi|g>. Acts as the
/// convolution identity on functions whose transform is supported in U.
inline AlgebraElement band_delta(const DualGroup& dg, const std::vector<int>& chi_indices) {
    if (chi_indices.empty()) throw SchemaError("band_delta requires a nonempty character subset");
    AlgebraElement out{dg.group, CVector::Zero(dg.size())};
    for (int c : chi_indices) {
        if (c < 0 || c >= dg.size()) throw SchemaError("character index out of range");
        out.values += dg.table.row(c).transpose();
    }
    return out;
}

/// The chi-th character as a function on the group.
inline AlgebraElement character_element(const DualGroup& dg, int chi) {
    if (chi < 0 || chi >= dg.size()) throw SchemaError("character index out of range");
    return {dg.group, dg.table.row(chi).transpose()};
}

}  // namespace harmonika
