#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include "group.hpp"
#include "types.hpp"

namespace harmonika {

/// One unitary irreducible representation: a matrix per group element, in
/// canonical element order.
struct Irrep {
    std::string label;
    int dim = 1;
    std::vector<CMatrix> matrices;

    const CMatrix& at(int g) const { return matrices[g]; }
};

/// Character values per conjugacy class (class order as produced by
/// conjugacy_classes).
struct Character {
    std::string irrep_label;
    std::vector<Complex> values;
};

namespace detail {

/// Nearest unitary matrix (polar factor), used to kill rounding drift in the
/// hand-built representation matrices.
inline CMatrix unitarize(const CMatrix& a) {
    Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd.matrixU() * svd.matrixV().adjoint();
}

/// Orthonormal basis of the sum-zero subspace of R^n, as columns of an
/// n x (n-1) matrix.
inline RMatrix sum_zero_basis(int n) {
    RMatrix b(n, n - 1);
    for (int k = 0; k < n - 1; ++k) {
        RVector v = RVector::Zero(n);
        for (int i = 0; i <= k; ++i) v[i] = 1.0;
        v[k + 1] = -(k + 1.0);
        b.col(k) = v / std::sqrt((k + 1.0) * (k + 2.0));
    }
    return b;
}

inline RMatrix perm_matrix(const std::vector<int>& sigma) {
    const int n = static_cast<int>(sigma.size());
    RMatrix p = RMatrix::Zero(n, n);
    for (int j = 0; j < n; ++j) p(sigma[j], j) = 1.0;
    return p;
}

inline int perm_sign(std::vector<int> sigma) {
    int sgn = 1;
    for (std::size_t i = 0; i < sigma.size(); ++i)
        while (sigma[i] != static_cast<int>(i)) {
            std::swap(sigma[i], sigma[sigma[i]]);
            sgn = -sgn;
        }
    return sgn;
}

/// Standard (n-1)-dimensional irrep of S_n: permutation action restricted to
/// the sum-zero subspace.
inline CMatrix standard_rep(const std::vector<int>& sigma, const RMatrix& basis) {
    RMatrix d = basis.transpose() * perm_matrix(sigma) * basis;
    return d.cast<Complex>();
}

inline std::vector<Irrep> irreps_cyclic_product(const GroupTable& g, const std::vector<int>& ns) {
    const int N = g.order;
    const int r = static_cast<int>(ns.size());
    auto digits = [&](int idx) {
        std::vector<int> d(r);
        for (int i = r - 1; i >= 0; --i) {
            d[i] = idx % ns[i];
            idx /= ns[i];
        }
        return d;
    };
    std::vector<Irrep> out;
    out.reserve(N);
    for (int kidx = 0; kidx < N; ++kidx) {
        auto kd = digits(kidx);
        Irrep d;
        d.label = "chi";
        for (int i = 0; i < r; ++i) d.label += "_" + std::to_string(kd[i]);
        d.dim = 1;
        d.matrices.resize(N, CMatrix::Zero(1, 1));
        for (int gidx = 0; gidx < N; ++gidx) {
            auto gd = digits(gidx);
            double phase = 0.0;
            for (int i = 0; i < r; ++i) phase += 2.0 * std::numbers::pi * kd[i] * gd[i] / ns[i];
            d.matrices[gidx](0, 0) = std::polar(1.0, phase);
        }
        out.push_back(std::move(d));
    }
    return out;
}

inline std::vector<Irrep> irreps_dihedral(const GroupTable& g, int n) {
    // element index b*n+k encodes s^b r^k
    const int N = 2 * n;
    std::vector<Irrep> out;
    auto one_dim = [&](const std::string& label, double chi_r, double chi_s) {
        Irrep d{label, 1, {}};
        d.matrices.resize(N, CMatrix::Zero(1, 1));
        for (int b = 0; b < 2; ++b)
            for (int k = 0; k < n; ++k)
                d.matrices[b * n + k](0, 0) = ((k % 2) ? chi_r : 1.0) * (b ? chi_s : 1.0);
        return d;
    };
    out.push_back(one_dim("triv", 1.0, 1.0));
    out.push_back(one_dim("sgn", 1.0, -1.0));
    if (n % 2 == 0 && n >= 2) {
        out.push_back(one_dim("rot", -1.0, 1.0));
        out.push_back(one_dim("rotsgn", -1.0, -1.0));
    }
    const Complex I(0.0, 1.0);
    for (int h = 1; 2 * h < n; ++h) {
        Irrep d{"E" + std::to_string(h), 2, {}};
        d.matrices.resize(N, CMatrix::Zero(2, 2));
        CMatrix sw(2, 2);
        sw << 0.0, 1.0, 1.0, 0.0;
        for (int k = 0; k < n; ++k) {
            const Complex wk = std::exp(2.0 * std::numbers::pi * I * static_cast<double>(h * k) / static_cast<double>(n));
            CMatrix rk(2, 2);
            rk << wk, 0.0, 0.0, std::conj(wk);
            d.matrices[k] = rk;
            d.matrices[n + k] = sw * rk;  // s r^k
        }
        out.push_back(std::move(d));
    }
    return out;
}

inline std::vector<Irrep> irreps_symmetric(const GroupTable& g, int n) {
    auto perms = perms_lex(n);
    const int N = g.order;
    std::vector<Irrep> out;

    Irrep triv{"triv", 1, {}};
    triv.matrices.resize(N, CMatrix::Ones(1, 1));
    out.push_back(triv);
    if (n == 1) return out;

    Irrep sgn{"sgn", 1, {}};
    sgn.matrices.resize(N, CMatrix::Zero(1, 1));
    for (int a = 0; a < N; ++a) sgn.matrices[a](0, 0) = static_cast<double>(perm_sign(perms[a]));
    out.push_back(sgn);
    if (n == 2) return out;

    RMatrix basis = sum_zero_basis(n);
    Irrep std_rep{"std", n - 1, {}};
    std_rep.matrices.resize(N);
    for (int a = 0; a < N; ++a) std_rep.matrices[a] = standard_rep(perms[a], basis);

    if (n == 3) {
        out.push_back(std_rep);
        return out;
    }

    // n == 4: dims 1,1,2,3,3. The 2-dim irrep factors through the quotient
    // map S4 -> S3 given by the action on the three pair-partitions
    // {01|23, 02|13, 03|12}; partition id = partner of point 0 minus 1.
    auto partition_action = [&](const std::vector<int>& s) {
        std::vector<int> pi(3);
        for (int p = 0; p < 3; ++p) {
            int a = s[0], b = s[p + 1];
            int partner_of_0;
            if (a == 0)
                partner_of_0 = b;
            else if (b == 0)
                partner_of_0 = a;
            else
                partner_of_0 = 6 - a - b;  // 0 pairs with the remaining point
            pi[p] = partner_of_0 - 1;
        }
        return pi;
    };
    RMatrix basis3 = sum_zero_basis(3);
    Irrep two{"E", 2, {}};
    two.matrices.resize(N);
    for (int a = 0; a < N; ++a) two.matrices[a] = standard_rep(partition_action(perms[a]), basis3);
    out.push_back(two);

    out.push_back(std_rep);

    Irrep std_sgn{"stdsgn", n - 1, {}};
    std_sgn.matrices.resize(N);
    for (int a = 0; a < N; ++a)
        std_sgn.matrices[a] = std_rep.matrices[a] * static_cast<double>(perm_sign(perms[a]));
    out.push_back(std_sgn);
    return out;
}

inline std::vector<Irrep> irreps_quaternion8(const GroupTable&) {
    // element order: 1, i, -1, -i, j, k, -j, -k
    std::vector<Irrep> out;
    auto one_dim = [&](const std::string& label, double ci, double cj) {
        // factors through Q8/{+-1} = Z2 x Z2
        Irrep d{label, 1, {}};
        d.matrices.resize(8, CMatrix::Zero(1, 1));
        const double vals[8] = {1.0, ci, 1.0, ci, cj, ci * cj, cj, ci * cj};
        for (int t = 0; t < 8; ++t) d.matrices[t](0, 0) = vals[t];
        return d;
    };
    out.push_back(one_dim("triv", 1.0, 1.0));
    out.push_back(one_dim("chi_i", 1.0, -1.0));
    out.push_back(one_dim("chi_j", -1.0, 1.0));
    out.push_back(one_dim("chi_k", -1.0, -1.0));

    const Complex I(0.0, 1.0);
    CMatrix mi(2, 2), mj(2, 2);
    mi << I, 0.0, 0.0, -I;
    mj << 0.0, 1.0, -1.0, 0.0;
    const CMatrix id = CMatrix::Identity(2, 2);
    const CMatrix mk = mi * mj;
    Irrep e{"E", 2, {}};
    e.matrices = {id, mi, -id, -mi, mj, mk, -mj, -mk};
    out.push_back(e);
    return out;
}

}  // namespace detail

/// Complete list of pairwise non-equivalent unitary irreps of a catalog
/// group, in a fixed canonical order. Throws for non-catalog groups.
inline std::vector<Irrep> irreps_of(const GroupTable& g) {
    std::vector<Irrep> out;
    auto factors = cyclic_factors_of(g.label);
    if (!factors.empty()) {
        out = detail::irreps_cyclic_product(g, factors);
    } else if (g.label.rfind("dihedral:", 0) == 0) {
        out = detail::irreps_dihedral(g, g.order / 2);
    } else if (g.label.rfind("symmetric:", 0) == 0) {
        int n = 1, fact = 1;
        while (fact < g.order) fact *= ++n;
        out = detail::irreps_symmetric(g, n);
    } else if (g.label == "quaternion:8") {
        out = detail::irreps_quaternion8(g);
    } else {
        throw SchemaError("irreps are only available for catalog groups, got: " + g.label);
    }
    int total = 0;
    for (auto& d : out) {
        for (auto& m : d.matrices) m = detail::unitarize(m);
        total += d.dim * d.dim;
    }
    if (total != g.order) throw PreconditionError("irrep catalog incomplete: sum of squared dims != N");
    return out;
}

/// True iff the commutant {X : X D(g) = D(g) X for all g} is one-dimensional,
/// computed as the nullity of the stacked commutation system.
inline bool check_irreducible(const Irrep& d, const GroupTable& g) {
    if (static_cast<int>(d.matrices.size()) != g.order)
        throw SchemaError("irrep has wrong number of matrices for the group");
    const int n = d.dim;
    const CMatrix id = CMatrix::Identity(n, n);
    CMatrix sys(g.order * n * n, n * n);
    for (int e = 0; e < g.order; ++e) {
        const CMatrix& m = d.at(e);
        // vec(XM - MX) = (M^T kron I - I kron M) vec(X)
        sys.block(e * n * n, 0, n * n, n * n) =
            Eigen::kroneckerProduct(m.transpose(), id).eval() - Eigen::kroneckerProduct(id, m).eval();
    }
    Eigen::JacobiSVD<CMatrix> svd(sys);
    const auto& sv = svd.singularValues();
    const double thresh = 1e-8 * std::max(1.0, sv.size() > 0 ? sv[0] : 1.0);
    int nullity = n * n - static_cast<int>(sv.size());
    for (int i = 0; i < sv.size(); ++i)
        if (sv[i] < thresh) ++nullity;
    return nullity == 1;
}

/// Character of an irrep: trace per conjugacy class.
inline Character character_of(const Irrep& d, const GroupTable& g) {
    auto classes = conjugacy_classes(g);
    Character chi{d.label, {}};
    chi.values.reserve(classes.size());
    for (const auto& c : classes) chi.values.push_back(d.at(c.front()).trace());
    return chi;
}

/// Character as a class function on the whole group.
inline CVector character_function(const Irrep& d, const GroupTable& g) {
    CVector v(g.order);
    for (int e = 0; e < g.order; ++e) v[e] = d.at(e).trace();
    return v;
}

}  // namespace harmonika
