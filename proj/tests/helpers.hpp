#pragma once

#include <random>

#include <harmonika/harmonika.hpp>

namespace testutil {

/// Deterministic random complex function on a group.
inline harmonika::AlgebraElement random_element(const harmonika::GroupTable& g, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    harmonika::AlgebraElement f = harmonika::zero_element(g);
    for (int i = 0; i < g.order; ++i) f.values[i] = harmonika::Complex(u(rng), u(rng));
    return f;
}

inline harmonika::AlgebraElement random_hermitian_element(const harmonika::GroupTable& g,
                                                          std::mt19937& rng) {
    harmonika::AlgebraElement f = random_element(g, rng);
    harmonika::AlgebraElement adj = harmonika::involution(g, f);
    f.values = (f.values + adj.values) / 2.0;
    return f;
}

inline harmonika::CMatrix random_matrix(int rows, int cols, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    harmonika::CMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m(r, c) = harmonika::Complex(u(rng), u(rng));
    return m;
}

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
    return m.cwiseAbs().maxCoeff();
}

}  // namespace testutil
