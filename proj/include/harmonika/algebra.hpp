#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "group.hpp"
#include "types.hpp"

namespace harmonika {

/// A complex-valued function on a finite group, stored in canonical element
/// order. All algebra operations use the normalized Haar weight 1/N.
struct AlgebraElement {
    std::string group;
    CVector values;

    int size() const { return static_cast<int>(values.size()); }
};

inline void check_same_group(const AlgebraElement& f, const AlgebraElement& h) {
    if (f.group != h.group || f.values.size() != h.values.size())
        throw PreconditionError("algebra elements belong to different groups");
}

inline void check_element(const GroupTable& g, const AlgebraElement& f) {
    if (f.values.size() != g.order)
        throw SchemaError("algebra element length does not match group order");
    for (int i = 0; i < g.order; ++i)
        if (!std::isfinite(f.values[i].real()) || !std::isfinite(f.values[i].imag()))
            throw SchemaError("algebra element has non-finite entries");
}

inline AlgebraElement zero_element(const GroupTable& g) {
    return {g.label, CVector::Zero(g.order)};
}

/// The convolution identity: N at e, zero elsewhere.
inline AlgebraElement delta_element(const GroupTable& g) {
    AlgebraElement f = zero_element(g);
    f.values[g.identity] = static_cast<double>(g.order);
    return f;
}

/// Point delta concentrated at element h; convolving with it is the
/// h-translation on the left.
inline AlgebraElement point_delta(const GroupTable& g, int h) {
    if (h < 0 || h >= g.order) throw SchemaError("element index out of range");
    AlgebraElement f = zero_element(g);
    f.values[h] = static_cast<double>(g.order);
    return f;
}

/// Normalized Haar integral (1/N) sum_x f(x).
inline Complex haar_integral(const GroupTable& g, const AlgebraElement& f) {
    check_element(g, f);
    return f.values.sum() / static_cast<double>(g.order);
}

/// (f*h)(g) = (1/N) sum_k f(k) h(k^{-1} g).
inline AlgebraElement convolve(const GroupTable& g, const AlgebraElement& f, const AlgebraElement& h) {
    check_same_group(f, h);
    check_element(g, f);
    AlgebraElement out = zero_element(g);
    for (int k = 0; k < g.order; ++k) {
        const Complex fk = f.values[k];
        if (fk == Complex(0.0)) continue;
        const int kinv = g.inv[k];
        for (int x = 0; x < g.order; ++x) out.values[x] += fk * h.values[g.op(kinv, x)];
    }
    out.values /= static_cast<double>(g.order);
    return out;
}

/// f^+(x) = conj(f(x^{-1})).
inline AlgebraElement involution(const GroupTable& g, const AlgebraElement& f) {
    check_element(g, f);
    AlgebraElement out = zero_element(g);
    for (int x = 0; x < g.order; ++x) out.values[x] = std::conj(f.values[g.inv[x]]);
    return out;
}

/// Tr f = f(e).
inline Complex trace_functional(const GroupTable& g, const AlgebraElement& f) {
    check_element(g, f);
    return f.values[g.identity];
}

/// (f,h) = Tr(f^+ * h) = (1/N) sum_x conj(f(x)) h(x).
inline Complex scalar_product(const GroupTable& g, const AlgebraElement& f, const AlgebraElement& h) {
    check_same_group(f, h);
    check_element(g, f);
    return f.values.dot(h.values) / static_cast<double>(g.order);
}

inline double l2_norm(const GroupTable& g, const AlgebraElement& f) {
    return std::sqrt(std::abs(scalar_product(g, f, f)));
}

inline double l1_norm(const GroupTable& g, const AlgebraElement& f) {
    double s = 0.0;
    for (int x = 0; x < g.order; ++x) s += std::abs(f.values[x]);
    return s / static_cast<double>(g.order);
}

/// Element of the unitalization B x C with product
/// (x,a)(y,b) = (x*y + a y + b x, ab) and norm |x|_1 + |a|.
struct UnitalizedElement {
    AlgebraElement base;
    Complex scalar;
};

inline UnitalizedElement adjoin_unit(const AlgebraElement& f, Complex lambda) {
    return {f, lambda};
}

inline UnitalizedElement unital_identity(const GroupTable& g) {
    return {zero_element(g), Complex(1.0)};
}

inline UnitalizedElement unital_product(const GroupTable& g, const UnitalizedElement& x,
                                        const UnitalizedElement& y) {
    AlgebraElement base = convolve(g, x.base, y.base);
    base.values += x.scalar * y.base.values + y.scalar * x.base.values;
    return {std::move(base), x.scalar * y.scalar};
}

inline double unital_norm(const GroupTable& g, const UnitalizedElement& x) {
    return l1_norm(g, x.base) + std::abs(x.scalar);
}

}  // namespace harmonika
