#ifndef SPINRWA_WIGNER_HPP
#define SPINRWA_WIGNER_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <vector>

#include "spinrwa/errors.hpp"
#include "spinrwa/field.hpp"
#include "spinrwa/spin.hpp"

namespace spinrwa {

namespace detail {

// ln(n!) by direct summation of logs, in extended precision. Factorials up
// to (2s)! overflow any fixed-width integer long before s = 65/2, so all
// factorial arithmetic stays in log space.
inline long double log_factorial(int n) {
    static const std::vector<long double> table = [] {
        std::vector<long double> t(4096, 0.0L);
        for (std::size_t i = 2; i < t.size(); ++i)
            t[i] = t[i - 1] + std::log(static_cast<long double>(i));
        return t;
    }();
    if (n < 0 || static_cast<std::size_t>(n) >= table.size())
        throw std::invalid_argument("log_factorial: argument out of range");
    return table[static_cast<std::size_t>(n)];
}

// Compensated (Kahan) accumulator; the k-sum alternates in sign with terms
// that can exceed 1e8 at s = 65/2 while the result stays below 1.
struct KahanSum {
    long double sum = 0.0L;
    long double comp = 0.0L;
    void add(long double term) {
        const long double y = term - comp;
        const long double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

// One matrix element of the reduced rotation matrix, indices in exact
// twice-integer bookkeeping. ch = cos(beta/2), sh = sin(beta/2).
//
// The alternating sum runs over max(0, m-m') <= k <= min(s+m, s-m'), the
// range on which no factorial argument is negative. Only the first term is
// exponentiated from the log-factorial table; successive terms follow from
// the exact integer ratio
//   t_{k+1}/t_k = -[(s+m-k)(s-m'-k)] / [(k+1)(k+1-m+m')] * tan^2(beta/2),
// which keeps the differential rounding between the large cancelling terms
// near machine epsilon. Evaluating every term through exp/log instead
// loses ~1e-9 absolute at s = 65/2, beta = pi/2.
inline long double wigner_d_element(int twice_s, int twice_mp, int twice_m,
                                    long double ch, long double sh) {
    const int spm = (twice_s + twice_m) / 2;   // s + m
    const int smm = (twice_s - twice_m) / 2;   // s - m
    const int spmp = (twice_s + twice_mp) / 2; // s + m'
    const int smmp = (twice_s - twice_mp) / 2; // s - m'
    const int dm = (twice_m - twice_mp) / 2;   // m - m', exact integer
    const int kmin = std::max(0, dm);
    const int kmax = std::min(spm, smmp);
    if (kmin > kmax)
        return 0.0L;

    const long double pref = 0.5L * (log_factorial(spm) + log_factorial(smm) +
                                     log_factorial(spmp) + log_factorial(smmp));

    const bool ch_zero = (ch == 0.0L);
    const bool sh_zero = (sh == 0.0L);
    if (ch_zero || sh_zero) {
        // An exact-zero base kills every term whose exponent on that base
        // is nonzero; at most one term survives (0^0 counts as 1).
        KahanSum acc;
        for (int k = kmin; k <= kmax; ++k) {
            const int a = spm - k + smmp - k; // cosine exponent
            const int b = 2 * k - dm;         // sine exponent
            if ((ch_zero && a != 0) || (sh_zero && b != 0))
                continue;
            long double term = std::exp(pref - log_factorial(spm - k) - log_factorial(k) -
                                        log_factorial(smmp - k) - log_factorial(k - dm));
            if (!ch_zero && a != 0)
                term *= std::pow(ch, static_cast<long double>(a));
            if (!sh_zero && b != 0)
                term *= std::pow(sh, static_cast<long double>(b));
            if ((k - dm) % 2 != 0)
                term = -term;
            acc.add(term);
        }
        return acc.sum;
    }

    int k = kmin;
    const int a0 = spm - k + smmp - k;
    const int b0 = 2 * k - dm;
    long double log_t = pref - log_factorial(spm - k) - log_factorial(k) -
                        log_factorial(smmp - k) - log_factorial(k - dm) +
                        a0 * std::log(std::abs(ch)) + b0 * std::log(std::abs(sh));
    int sign = ((k - dm) % 2 != 0) ? -1 : 1;
    if (ch < 0.0L && a0 % 2 != 0)
        sign = -sign;
    if (sh < 0.0L && b0 % 2 != 0)
        sign = -sign;
    long double term = sign * std::exp(log_t);
    const long double tansq = (sh / ch) * (sh / ch);

    KahanSum acc;
    for (;;) {
        acc.add(term);
        if (k == kmax)
            break;
        const long double ratio =
            -(static_cast<long double>(spm - k) * static_cast<long double>(smmp - k)) /
            (static_cast<long double>(k + 1) * static_cast<long double>(k + 1 - dm));
        term *= ratio * tansq;
        ++k;
    }
    return acc.sum;
}

} // namespace detail

/// The (2s+1)x(2s+1) real reduced rotation matrix d^(s)_{m',m}(beta),
/// rows m' and columns m both in descending order. Equals the matrix of
/// exp(-i beta S_y) in the |s,m> basis; real and orthogonal.
struct WignerMatrix {
    SpinQuantum spin;
    double beta;
    Eigen::MatrixXd entries;

    double operator()(int row, int col) const { return entries(row, col); }
};

inline WignerMatrix wigner_d(SpinQuantum spin, double beta) {
    if (!std::isfinite(beta))
        throw std::invalid_argument("wigner_d: beta must be finite");
    const int n = spin.dimension();
    const int twice_s = spin.twice();
    const long double half = 0.5L * static_cast<long double>(beta);
    const long double ch = std::cos(half);
    const long double sh = std::sin(half);
    Eigen::MatrixXd d(n, n);
    for (int r = 0; r < n; ++r) {
        const int tmp = spin.twice_m_at(r);
        for (int c = 0; c < n; ++c) {
            const int tm = spin.twice_m_at(c);
            d(r, c) = static_cast<double>(
                detail::wigner_d_element(twice_s, tmp, tm, ch, sh));
        }
    }
    return WignerMatrix{spin, beta, std::move(d)};
}

/// sin(beta/2) and cos(beta/2) of the mixing angle, both non-negative for
/// beta in (0, pi).
struct HalfAngle {
    double sin_half;
    double cos_half;
};

/// Half-angle functions straight from the field configuration:
///   sin(beta/2) = sqrt((Omega + omega - omega0) / (2 Omega))
///   cos(beta/2) = sqrt((Omega + omega0 - omega) / (2 Omega))
/// with Omega = sqrt((omega0 - omega)^2 + omega1^2).
inline HalfAngle half_angle_from_field(const FieldConfig& field) {
    require_driven(field);
    const double det = field.detuning();
    const double big_omega = std::hypot(det, field.omega1);
    if (big_omega == 0.0)
        throw DegenerateField("half angle: effective frequency is zero");
    const double sin_half = std::sqrt(std::max(0.0, (big_omega - det) / (2.0 * big_omega)));
    const double cos_half = std::sqrt(std::max(0.0, (big_omega + det) / (2.0 * big_omega)));
    return HalfAngle{sin_half, cos_half};
}

} // namespace spinrwa

#endif // SPINRWA_WIGNER_HPP
