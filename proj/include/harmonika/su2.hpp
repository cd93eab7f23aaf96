#pragma once

#include <cmath>
#include <map>
#include <numbers>
#include <vector>

#include "types.hpp"

namespace harmonika::su2 {

/// Spins are half-integers stored as twice-j to avoid float-equality traps.
/// Matrix indices run over m = -j..j ascending, index = (twice_m + twice_j)/2.
struct SpinLabel {
    int twice_j;

    int dim() const { return twice_j + 1; }
};

inline SpinLabel make_spin(int twice_j) {
    if (twice_j < 0) throw SchemaError("spin must be non-negative");
    return {twice_j};
}

namespace detail {

inline double ln_factorial(int n) {
    if (n < 0) throw SchemaError("negative factorial argument");
    return std::lgamma(n + 1.0);
}

}  // namespace detail

/// Wigner little-d matrix d^j(beta) via the factorial sum formula with
/// log-factorial evaluation. Real orthogonal; d(0) = I. Rows are m' and
/// columns m, both ascending from -j.
inline RMatrix wigner_d_small(SpinLabel j, double beta) {
    if (j.twice_j > 100) throw SchemaError("spin out of supported range (j <= 50)");
    const int n = j.dim();
    const double c = std::cos(beta / 2.0), s = std::sin(beta / 2.0);
    RMatrix d(n, n);
    for (int a = 0; a < n; ++a) {      // row: twice_mp = 2a - twice_j
        for (int b = 0; b < n; ++b) {  // col: twice_m = 2b - twice_j
            const int twice_mp = 2 * a - j.twice_j;
            const int twice_m = 2 * b - j.twice_j;
            // all factorial arguments below are integers
            const int jpm = (j.twice_j + twice_m) / 2;
            const int jmm = (j.twice_j - twice_m) / 2;
            const int jpmp = (j.twice_j + twice_mp) / 2;
            const int jmmp = (j.twice_j - twice_mp) / 2;
            const double lognorm = 0.5 * (detail::ln_factorial(jpm) + detail::ln_factorial(jmm) +
                                          detail::ln_factorial(jpmp) + detail::ln_factorial(jmmp));
            const int dm = (twice_mp - twice_m) / 2;  // m' - m
            double sum = 0.0;
            const int kmin = std::max(0, -dm);
            const int kmax = std::min(jpm, jmmp);
            for (int k = kmin; k <= kmax; ++k) {
                const double logden = detail::ln_factorial(jpm - k) + detail::ln_factorial(k) +
                                      detail::ln_factorial(jmmp - k) + detail::ln_factorial(dm + k);
                const int pc = jpm - k + jmmp - k;  // exponent of cos(beta/2)
                const int ps = dm + 2 * k;          // exponent of sin(beta/2)
                double term = std::exp(lognorm - logden);
                term *= std::pow(c, pc) * std::pow(s, ps);
                sum += ((dm + k) % 2 == 0 ? term : -term);
            }
            d(a, b) = sum;
        }
    }
    return d;
}

/// Full Wigner D-matrix in ZYZ Euler angles,
/// D^j_{m'm}(alpha,beta,gamma) = exp(-i m' alpha) d^j_{m'm}(beta) exp(-i m gamma).
inline CMatrix wigner_D(SpinLabel j, double alpha, double beta, double gamma) {
    const int n = j.dim();
    RMatrix d = wigner_d_small(j, beta);
    CMatrix out(n, n);
    const Complex I(0.0, 1.0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const double mp = (2 * a - j.twice_j) / 2.0;
            const double m = (2 * b - j.twice_j) / 2.0;
            out(a, b) = std::exp(-I * mp * alpha) * d(a, b) * std::exp(-I * m * gamma);
        }
    return out;
}

struct QuadratureNode {
    double alpha, beta, gamma;
    double weight;
};

namespace detail {

/// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on P_n.
inline void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.resize(n);
    w.resize(n);
    for (int i = 0; i < n; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int k = 0; k < n; ++k) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k + 1.0) * z * p1 - k * p2) / (k + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[n - 1 - i] = z;
        w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
}

}  // namespace detail

/// Product quadrature on SU(2) (ZYZ Euler angles, gamma over [0,4pi)) exact
/// for band-limited integrands up to band 2J; weights sum to 1.
inline std::vector<QuadratureNode> quadrature(int twice_J) {
    if (twice_J < 0 || twice_J > 25) throw SchemaError("band out of supported range (J <= 25/2)");
    const int na = 2 * twice_J + 1;  // >= 2*(2J)+1 uniform points in alpha and gamma
    const int nb = twice_J + 1;      // >= 2J+1 Gauss-Legendre points in cos(beta)
    std::vector<double> x, w;
    detail::gauss_legendre(nb, x, w);
    std::vector<QuadratureNode> nodes;
    nodes.reserve(static_cast<std::size_t>(na) * na * nb);
    for (int ia = 0; ia < na; ++ia)
        for (int ib = 0; ib < nb; ++ib)
            for (int ic = 0; ic < na; ++ic)
                nodes.push_back({2.0 * std::numbers::pi * ia / na, std::acos(x[ib]),
                                 4.0 * std::numbers::pi * ic / na,
                                 w[ib] / 2.0 / static_cast<double>(na) / static_cast<double>(na)});
    return nodes;
}

/// Clebsch-Gordan coefficient <j1 m1 j2 m2 | j m> in the Condon-Shortley
/// convention, via the Racah closed-form sum with log-factorial evaluation.
/// All spins and projections are given as twice their value. Selection rules
/// return an exact 0.
inline double clebsch_gordan_coefficient(int tj1, int tm1, int tj2, int tm2, int tj, int tm) {
    if (tj1 < 0 || tj2 < 0 || tj < 0) throw SchemaError("negative spin");
    if (tj1 + tj2 > 50) throw SchemaError("spin out of supported range (j1+j2 <= 25)");
    if (std::abs(tm1) > tj1 || std::abs(tm2) > tj2 || std::abs(tm) > tj) return 0.0;
    if ((tj1 + tm1) % 2 != 0 || (tj2 + tm2) % 2 != 0 || (tj + tm) % 2 != 0)
        throw SchemaError("projection parity does not match spin");
    if (tm1 + tm2 != tm) return 0.0;
    if (tj < std::abs(tj1 - tj2) || tj > tj1 + tj2 || (tj1 + tj2 + tj) % 2 != 0) return 0.0;

    auto lf = [](int twice) { return detail::ln_factorial(twice / 2); };
    const double logpre =
        0.5 * (std::log(tj + 1.0) + lf(tj + tj1 - tj2) + lf(tj - tj1 + tj2) + lf(tj1 + tj2 - tj) -
               lf(tj1 + tj2 + tj + 2) + lf(tj + tm) + lf(tj - tm) + lf(tj1 - tm1) + lf(tj1 + tm1) +
               lf(tj2 - tm2) + lf(tj2 + tm2));
    // k runs over integers with all factorial arguments non-negative
    const int kmin = std::max({0, (tj2 - tj - tm1) / 2, (tj1 - tj + tm2) / 2});
    const int kmax = std::min({(tj1 + tj2 - tj) / 2, (tj1 - tm1) / 2, (tj2 + tm2) / 2});
    double sum = 0.0;
    for (int k = kmin; k <= kmax; ++k) {
        const double logden = detail::ln_factorial(k) + lf(tj1 + tj2 - tj - 2 * k) +
                              lf(tj1 - tm1 - 2 * k) + lf(tj2 + tm2 - 2 * k) +
                              lf(tj - tj2 + tm1 + 2 * k) + lf(tj - tj1 - tm2 + 2 * k);
        const double term = std::exp(logpre - logden);
        sum += (k % 2 == 0 ? term : -term);
    }
    return sum;
}

/// Clebsch-Gordan table for (j1, j2): the real orthogonal change of basis
/// from the product basis |m1 m2> (row-major, m1 outer and m2 inner, both
/// ascending) to the coupled basis |j m> (j ascending from |j1-j2|, m
/// ascending within each j). U(coupled, product) = <j1 m1 j2 m2 | j m>.
struct CGTable {
    int twice_j1, twice_j2;
    RMatrix matrix;  // rows: coupled (j,m); cols: product (m1,m2)

    int coupled_index(int tj, int tm) const {
        int row = 0;
        for (int t = std::abs(twice_j1 - twice_j2); t < tj; t += 2) row += t + 1;
        return row + (tm + tj) / 2;
    }
    int product_index(int tm1, int tm2) const {
        return ((tm1 + twice_j1) / 2) * (twice_j2 + 1) + (tm2 + twice_j2) / 2;
    }
};

inline CGTable clebsch_gordan(int twice_j1, int twice_j2) {
    const int dim = (twice_j1 + 1) * (twice_j2 + 1);
    CGTable t{twice_j1, twice_j2, RMatrix::Zero(dim, dim)};
    int row = 0;
    for (int tj = std::abs(twice_j1 - twice_j2); tj <= twice_j1 + twice_j2; tj += 2)
        for (int tm = -tj; tm <= tj; tm += 2, ++row)
            for (int tm1 = -twice_j1; tm1 <= twice_j1; tm1 += 2) {
                const int tm2 = tm - tm1;
                if (std::abs(tm2) > twice_j2) continue;
                t.matrix(row, t.product_index(tm1, tm2)) =
                    clebsch_gordan_coefficient(twice_j1, tm1, twice_j2, tm2, tj, tm);
            }
    return t;
}

/// Coefficients of the pointwise-product expansion
///   D^{j1}_{ab} D^{j2}_{rs} = sum_{kappa,k,l} c(kappa)_{kl} D^{kappa}_{kl}
/// with c(kappa)_{kl} = <j1 j2 a r|kappa k><j1 j2 b s|kappa l>. Indices are
/// twice the m-values; the result maps twice-kappa to its coefficient matrix
/// (rows k, cols l, m ascending).
inline std::map<int, RMatrix> pointwise_product_expand(int tj1, int ta, int tb, int tj2, int tr, int ts) {
    if (std::abs(ta) > tj1 || std::abs(tb) > tj1 || std::abs(tr) > tj2 || std::abs(ts) > tj2)
        throw SchemaError("projection index out of range");
    std::map<int, RMatrix> out;
    for (int tk = std::abs(tj1 - tj2); tk <= tj1 + tj2; tk += 2) {
        RMatrix c = RMatrix::Zero(tk + 1, tk + 1);
        for (int tkk = -tk; tkk <= tk; tkk += 2)
            for (int tll = -tk; tll <= tk; tll += 2)
                c((tkk + tk) / 2, (tll + tk) / 2) =
                    clebsch_gordan_coefficient(tj1, ta, tj2, tr, tk, tkk) *
                    clebsch_gordan_coefficient(tj1, tb, tj2, ts, tk, tll);
        out[tk] = c;
    }
    return out;
}

}  // namespace harmonika::su2
