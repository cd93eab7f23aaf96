#include <catch2/catch_amalgamated.hpp>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "helpers.hpp"

using namespace harmonika;
using namespace harmonika::su2;
using testutil::max_abs;

namespace {

/// Spin operators in the ascending-m basis (index (tm + tj)/2).
CMatrix jz_op(int tj) {
    CMatrix m = CMatrix::Zero(tj + 1, tj + 1);
    for (int a = 0; a <= tj; ++a) m(a, a) = (2.0 * a - tj) / 2.0;
    return m;
}

CMatrix jplus_op(int tj) {
    CMatrix m = CMatrix::Zero(tj + 1, tj + 1);
    const double j = tj / 2.0;
    for (int a = 0; a + 1 <= tj; ++a) {
        const double mm = (2.0 * a - tj) / 2.0;
        m(a + 1, a) = std::sqrt(j * (j + 1.0) - mm * (mm + 1.0));
    }
    return m;
}

CMatrix jy_op(int tj) {
    CMatrix jp = jplus_op(tj);
    return (jp - jp.adjoint().eval()) / Complex(0.0, 2.0);
}

}  // namespace

TEST_CASE("wigner little-d basics") {
    REQUIRE(wigner_d_small(make_spin(0), 1.234)(0, 0) == 1.0);
    for (int tj : {1, 2, 3, 4}) {
        RMatrix d0 = wigner_d_small(make_spin(tj), 0.0);
        REQUIRE(max_abs(d0.cast<Complex>() - CMatrix::Identity(tj + 1, tj + 1)) < 1e-14);
        // orthogonality and one-parameter subgroup property
        std::mt19937 rng(107);
        std::uniform_real_distribution<double> u(0.0, std::numbers::pi);
        for (int trial = 0; trial < 10; ++trial) {
            double b1 = u(rng), b2 = u(rng);
            RMatrix d1 = wigner_d_small(make_spin(tj), b1);
            REQUIRE(max_abs((d1.transpose() * d1 - RMatrix::Identity(tj + 1, tj + 1)).cast<Complex>()) < 1e-12);
            RMatrix prod = d1 * wigner_d_small(make_spin(tj), b2);
            REQUIRE(max_abs((prod - wigner_d_small(make_spin(tj), b1 + b2)).cast<Complex>()) < 1e-12);
        }
    }
}

TEST_CASE("little-d equals the exponential of the spin-y generator") {
    // ascending-m basis: d^{1/2}(pi) maps |+1/2> -> |-1/2> with a plus sign
    REQUIRE(std::abs(wigner_d_small(make_spin(1), std::numbers::pi)(0, 1) - 1.0) < 1e-14);
    REQUIRE(std::abs(wigner_d_small(make_spin(1), std::numbers::pi)(1, 0) + 1.0) < 1e-14);
    std::mt19937 rng(109);
    std::uniform_real_distribution<double> u(0.0, std::numbers::pi);
    for (int tj : {1, 2, 3, 4, 5}) {
        for (int trial = 0; trial < 5; ++trial) {
            double beta = u(rng);
            CMatrix gen = (-Complex(0.0, 1.0) * beta * jy_op(tj)).exp();
            REQUIRE(max_abs(wigner_d_small(make_spin(tj), beta).cast<Complex>() - gen) < 1e-12);
        }
    }
}

TEST_CASE("wigner D-matrix") {
    std::mt19937 rng(113);
    std::uniform_real_distribution<double> ua(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> ub(0.0, std::numbers::pi);
    std::uniform_real_distribution<double> ug(0.0, 4.0 * std::numbers::pi);
    REQUIRE(max_abs(wigner_D(make_spin(2), 0.0, 0.0, 0.0) - CMatrix::Identity(3, 3)) < 1e-14);
    for (int trial = 0; trial < 20; ++trial) {
        double a = ua(rng), b = ub(rng), c = ug(rng);
        // j=1/2: closed-form SU(2) matrix, det 1
        CMatrix d = wigner_D(make_spin(1), a, b, c);
        const Complex I(0.0, 1.0);
        // ascending basis: row/col 0 is m=-1/2
        CMatrix want(2, 2);
        want << std::exp(I * (a + c) / 2.0) * std::cos(b / 2.0),
            std::exp(I * (a - c) / 2.0) * std::sin(b / 2.0),
            -std::exp(-I * (a - c) / 2.0) * std::sin(b / 2.0),
            std::exp(-I * (a + c) / 2.0) * std::cos(b / 2.0);
        REQUIRE(max_abs(d - want) < 1e-13);
        REQUIRE(std::abs(d.determinant() - Complex(1.0)) < 1e-13);
        // unitarity across spins
        for (int tj : {1, 2, 3, 4}) {
            CMatrix dj = wigner_D(make_spin(tj), a, b, c);
            REQUIRE(max_abs(dj.adjoint() * dj - CMatrix::Identity(tj + 1, tj + 1)) < 1e-12);
        }
    }
    // homomorphism on sampled products: D(g1)D(g2) = D(g1 g2) with the group
    // product computed in the faithful j=1/2 representation and Euler angles
    // recovered from its entries.
    for (int trial = 0; trial < 20; ++trial) {
        double a1 = ua(rng), b1 = ub(rng), c1 = ug(rng);
        double a2 = ua(rng), b2 = ub(rng), c2 = ug(rng);
        CMatrix u = wigner_D(make_spin(1), a1, b1, c1) * wigner_D(make_spin(1), a2, b2, c2);
        // u(1,1) = e^{-i(alpha+gamma)/2} cos(b/2), u(1,0) = -e^{-i(alpha-gamma)/2} sin(b/2)
        double beta = 2.0 * std::atan2(std::abs(u(1, 0)), std::abs(u(1, 1)));
        double pa = -std::arg(u(1, 1)), pb = std::numbers::pi - std::arg(u(1, 0));
        double alpha = pa + pb, gamma = pa - pb;
        // the recovered angles reproduce the product in every spin, up to the
        // global double-cover sign in half-integer spins
        for (int tj : {1, 2, 3, 4}) {
            CMatrix prod = wigner_D(make_spin(tj), a1, b1, c1) * wigner_D(make_spin(tj), a2, b2, c2);
            CMatrix re = wigner_D(make_spin(tj), alpha, beta, gamma);
            double same = max_abs(re - prod), flipped = max_abs(re + prod);
            if (tj % 2 == 0)
                REQUIRE(same < 1e-10);
            else
                REQUIRE(std::min(same, flipped) < 1e-10);
        }
    }
}

TEST_CASE("quadrature integrates band-limited functions exactly") {
    // weight normalization
    for (int tJ : {0, 1, 2, 4}) {
        double total = 0.0;
        for (const auto& node : quadrature(tJ)) total += node.weight;
        REQUIRE(std::abs(total - 1.0) < 1e-13);
    }
    REQUIRE_THROWS_AS(quadrature(26), SchemaError);
    // mean of a nontrivial irrep vanishes
    auto nodes = quadrature(4);
    for (int tj : {1, 2, 3, 4}) {
        CMatrix mean = CMatrix::Zero(tj + 1, tj + 1);
        for (const auto& node : nodes)
            mean += node.weight * wigner_D(make_spin(tj), node.alpha, node.beta, node.gamma);
        REQUIRE(max_abs(mean) < 1e-12);
    }
    // orthogonality of matrix elements for j <= 2 (band 2J = 4)
    for (int tj1 : {0, 1, 2, 3, 4})
        for (int tj2 : {0, 1, 2, 3, 4}) {
            std::vector<CMatrix> d1(nodes.size()), d2(nodes.size());
            for (std::size_t q = 0; q < nodes.size(); ++q) {
                d1[q] = wigner_D(make_spin(tj1), nodes[q].alpha, nodes[q].beta, nodes[q].gamma);
                d2[q] = wigner_D(make_spin(tj2), nodes[q].alpha, nodes[q].beta, nodes[q].gamma);
            }
            for (int a = 0; a <= tj1; ++a)
                for (int b = 0; b <= tj1; ++b)
                    for (int c = 0; c <= tj2; ++c)
                        for (int e = 0; e <= tj2; ++e) {
                            Complex s = 0.0;
                            for (std::size_t q = 0; q < nodes.size(); ++q)
                                s += nodes[q].weight * std::conj(d1[q](a, b)) * d2[q](c, e);
                            Complex want = 0.0;
                            if (tj1 == tj2 && a == c && b == e) want = 1.0 / (tj1 + 1.0);
                            REQUIRE(std::abs(s - want) < 1e-8);
                        }
        }
}

TEST_CASE("Clebsch-Gordan coefficients: selection rules and exact values") {
    // structural zeros are exact
    REQUIRE(clebsch_gordan_coefficient(1, 1, 1, 1, 0, 0) == 0.0);   // m mismatch
    REQUIRE(clebsch_gordan_coefficient(1, 1, 1, -1, 4, 0) == 0.0);  // j out of range
    REQUIRE_THROWS_AS(clebsch_gordan_coefficient(1, 0, 1, 1, 2, 1), SchemaError);  // parity
    // singlet/triplet of two spin-1/2, Condon-Shortley signs
    const double r = 1.0 / std::sqrt(2.0);
    REQUIRE(std::abs(clebsch_gordan_coefficient(1, 1, 1, -1, 0, 0) - r) < 1e-14);
    REQUIRE(std::abs(clebsch_gordan_coefficient(1, -1, 1, 1, 0, 0) + r) < 1e-14);
    REQUIRE(std::abs(clebsch_gordan_coefficient(1, 1, 1, -1, 2, 0) - r) < 1e-14);
    REQUIRE(std::abs(clebsch_gordan_coefficient(1, -1, 1, 1, 2, 0) - r) < 1e-14);
    REQUIRE(std::abs(clebsch_gordan_coefficient(1, 1, 1, 1, 2, 2) - 1.0) < 1e-14);
    // (1 1; 1/2 -1/2 | 1/2 1/2) = sqrt(2/3), (1 0; 1/2 1/2 | 1/2 1/2) = -sqrt(1/3)
    REQUIRE(std::abs(clebsch_gordan_coefficient(2, 2, 1, -1, 1, 1) - std::sqrt(2.0 / 3.0)) < 1e-14);
    REQUIRE(std::abs(clebsch_gordan_coefficient(2, 0, 1, 1, 1, 1) + std::sqrt(1.0 / 3.0)) < 1e-14);
    // coupling with the trivial spin: identity table
    CGTable t0 = clebsch_gordan(3, 0);
    REQUIRE(max_abs((t0.matrix - RMatrix::Identity(4, 4)).cast<Complex>()) < 1e-14);
}

TEST_CASE("CG tables are orthogonal and match the total-spin diagonalization oracle") {
    for (int tj1 = 0; tj1 <= 3; ++tj1)
        for (int tj2 = 0; tj2 <= 3; ++tj2) {
            CGTable t = clebsch_gordan(tj1, tj2);
            const int dim = (tj1 + 1) * (tj2 + 1);
            REQUIRE(max_abs((t.matrix * t.matrix.transpose() - RMatrix::Identity(dim, dim)).cast<Complex>()) <
                    1e-12);
            // oracle: simultaneously diagonalize J^2 and Jz on the product
            // space; the row of U for (j,m) is the eigenvector with those
            // quantum numbers, CS-phase-fixed by requiring the highest-m1
            // component positive.
            CMatrix jz = Eigen::kroneckerProduct(jz_op(tj1), CMatrix::Identity(tj2 + 1, tj2 + 1)).eval() +
                         Eigen::kroneckerProduct(CMatrix::Identity(tj1 + 1, tj1 + 1), jz_op(tj2)).eval();
            CMatrix jp = Eigen::kroneckerProduct(jplus_op(tj1), CMatrix::Identity(tj2 + 1, tj2 + 1)).eval() +
                         Eigen::kroneckerProduct(CMatrix::Identity(tj1 + 1, tj1 + 1), jplus_op(tj2)).eval();
            CMatrix jm = jp.adjoint();
            CMatrix j2 = jm * jp + jz * jz + jz;
            for (int tj = std::abs(tj1 - tj2); tj <= tj1 + tj2; tj += 2)
                for (int tm = -tj; tm <= tj; tm += 2) {
                    RVector row = t.matrix.row(t.coupled_index(tj, tm));
                    CVector v = row.cast<Complex>();
                    const double j = tj / 2.0, m = tm / 2.0;
                    REQUIRE(max_abs(j2 * v - j * (j + 1.0) * v) < 1e-10);
                    REQUIRE(max_abs(jz * v - m * v) < 1e-10);
                    // Condon-Shortley: the component on the largest admissible
                    // m1 is strictly positive
                    for (int tm1 = tj1; tm1 >= -tj1; tm1 -= 2) {
                        int tm2 = tm - tm1;
                        if (std::abs(tm2) > tj2) continue;
                        double lead = row[t.product_index(tm1, tm2)];
                        REQUIRE(lead > 1e-12);
                        break;
                    }
                    // ladder consistency: J- maps the (j,m) row to the
                    // (j,m-1) row with the standard coefficient
                    if (tm - 2 >= -tj) {
                        CVector lowered = jm * v;
                        RVector below = t.matrix.row(t.coupled_index(tj, tm - 2));
                        double c = std::sqrt(j * (j + 1.0) - m * (m - 1.0));
                        REQUIRE(max_abs(lowered - c * below.cast<Complex>()) < 1e-10);
                    }
                }
        }
}

TEST_CASE("pointwise product expansion") {
    std::mt19937 rng(127);
    std::uniform_real_distribution<double> ua(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> ub(0.0, std::numbers::pi);
    std::uniform_real_distribution<double> ug(0.0, 4.0 * std::numbers::pi);
    // trivial second factor: single term with coefficient 1
    auto terms0 = pointwise_product_expand(2, 0, 2, 0, 0, 0);
    REQUIRE(terms0.size() == 1);
    REQUIRE(std::abs(terms0.at(2)(1, 2) - 1.0) < 1e-14);
    // identity at 50 random rotations for all index tuples, j1, j2 <= 1
    for (int tj1 : {1, 2})
        for (int tj2 : {1, 2})
            for (int ta = -tj1; ta <= tj1; ta += 2)
                for (int tb = -tj1; tb <= tj1; tb += 2)
                    for (int tr = -tj2; tr <= tj2; tr += 2)
                        for (int ts = -tj2; ts <= tj2; ts += 2) {
                            auto terms = pointwise_product_expand(tj1, ta, tb, tj2, tr, ts);
                            // dimension count of the decomposition
                            int total = 0;
                            for (const auto& [tk, c] : terms) total += tk + 1;
                            REQUIRE(total == (tj1 + 1) * (tj2 + 1));
                            for (int trial = 0; trial < 50; ++trial) {
                                double a = ua(rng), b = ub(rng), c = ug(rng);
                                CMatrix d1 = wigner_D(make_spin(tj1), a, b, c);
                                CMatrix d2 = wigner_D(make_spin(tj2), a, b, c);
                                Complex lhs = d1((ta + tj1) / 2, (tb + tj1) / 2) *
                                              d2((tr + tj2) / 2, (ts + tj2) / 2);
                                Complex rhs = 0.0;
                                for (const auto& [tk, coef] : terms) {
                                    CMatrix dk = wigner_D(make_spin(tk), a, b, c);
                                    for (int kk = 0; kk <= tk; ++kk)
                                        for (int ll = 0; ll <= tk; ++ll) rhs += coef(kk, ll) * dk(kk, ll);
                                }
                                REQUIRE(std::abs(lhs - rhs) < 1e-9);
                            }
                        }
}

TEST_CASE("structure constants of the normalized basis carry the dimension factor") {
    // With eps(j) = (2j+1) D(j), the pointwise product satisfies
    // eps(j1)_ab eps(j2)_rs = sum n(j1)n(j2)/n(k) CG CG eps(k)_kl; verify the
    // factor numerically against quadrature projections.
    auto nodes = quadrature(4);
    const int tj1 = 1, tj2 = 2, ta = 1, tb = -1, tr = 0, ts = 2;
    auto terms = pointwise_product_expand(tj1, ta, tb, tj2, tr, ts);
    for (const auto& [tk, coef] : terms) {
        const double factor = (tj1 + 1.0) * (tj2 + 1.0) / (tk + 1.0);
        for (int kk = 0; kk <= tk; ++kk)
            for (int ll = 0; ll <= tk; ++ll) {
                // project eps(j1)eps(j2) onto eps(k)_kl: (eps(k)_kl, f) / n(k)
                Complex proj = 0.0;
                for (const auto& node : nodes) {
                    CMatrix d1 = wigner_D(make_spin(tj1), node.alpha, node.beta, node.gamma);
                    CMatrix d2 = wigner_D(make_spin(tj2), node.alpha, node.beta, node.gamma);
                    CMatrix dk = wigner_D(make_spin(tk), node.alpha, node.beta, node.gamma);
                    Complex f = (tj1 + 1.0) * d1((ta + tj1) / 2, (tb + tj1) / 2) * (tj2 + 1.0) *
                                d2((tr + tj2) / 2, (ts + tj2) / 2);
                    proj += node.weight * std::conj((tk + 1.0) * dk(kk, ll)) * f;
                }
                proj /= (tk + 1.0);  // (eps_kl, eps_kl) = n(k); normalize
                Complex want = factor * coef(kk, ll);
                REQUIRE(std::abs(proj - want) < 1e-9);
            }
    }
}
