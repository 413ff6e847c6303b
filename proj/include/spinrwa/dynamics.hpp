#ifndef SPINRWA_DYNAMICS_HPP
#define SPINRWA_DYNAMICS_HPP

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <vector>

#include "spinrwa/errors.hpp"
#include "spinrwa/field.hpp"
#include "spinrwa/spin.hpp"
#include "spinrwa/wigner.hpp"

namespace spinrwa {

/// Quantities of the doubly rotated frame: the effective precession
/// frequency Omega, the mixing angle beta that diagonalizes the
/// rotating-frame Hamiltonian, and the period T = 2*pi/Omega of the
/// probability motion.
struct DerivedFrame {
    double big_omega;
    double beta;
    double period;
};

/// Omega = sqrt((omega0 - omega)^2 + omega1^2), beta = atan2(omega1,
/// omega0 - omega). omega1 > 0 pins beta to (0, pi), the branch on which
/// both half-angle radicals are non-negative.
inline DerivedFrame derive_frame(const FieldConfig& field) {
    require_driven(field);
    const double det = field.detuning();
    const double big_omega = std::hypot(det, field.omega1);
    if (big_omega == 0.0)
        throw DegenerateField("derive_frame: effective frequency is zero");
    const double beta = std::atan2(field.omega1, det);
    return DerivedFrame{big_omega, beta, 2.0 * std::numbers::pi / big_omega};
}

/// Whether evolve() rejects initial states whose norm deviates from 1 by
/// more than 1e-9. Bypass exists for linearity checks on raw amplitudes.
enum class NormGate { enforce, bypass };

namespace detail {

inline void require_normalized(const StateVector& state) {
    if (std::abs(state.norm_squared() - 1.0) > 1e-9)
        throw NotNormalized("initial state: |norm^2 - 1| = " +
                            std::to_string(std::abs(state.norm_squared() - 1.0)) +
                            " exceeds 1e-9");
}

// Amplitudes at time t given the precomputed d-matrix and the rotated-frame
// image w0 = D^T C(0). This is the four-exponential chain evaluated
// inside-out:
//   C(t) = diag(e^{-i m w t}) . D . diag(e^{-i m'' Omega t}) . D^T . C(0).
inline Eigen::VectorXcd propagate(SpinQuantum spin, const Eigen::MatrixXcd& d_matrix,
                                  const Eigen::VectorXcd& w0, const FieldConfig& field,
                                  double big_omega, double t) {
    const int n = spin.dimension();
    Eigen::VectorXcd w(n);
    for (int j = 0; j < n; ++j)
        w(j) = w0(j) * std::polar(1.0, -spin.m_at(j) * big_omega * t);
    Eigen::VectorXcd c = d_matrix * w;
    for (int i = 0; i < n; ++i)
        c(i) *= std::polar(1.0, -spin.m_at(i) * field.omega * t);
    return c;
}

} // namespace detail

/// Exact closed-form evolution of all substate amplitudes:
///   C_m(t) = e^{-i m w t} sum_{m',m''} C_{m'}(0) e^{-i m'' Omega t}
///            d^(s)_{m,m''}(beta) d^(s)_{m',m''}(beta).
/// The leading phase cancels in |C_m|^2 but is kept exact; the adiabatic
/// comparison and the harmonic decomposition need it.
inline StateVector evolve(SpinQuantum spin, const StateVector& initial,
                          const FieldConfig& field, double t,
                          NormGate gate = NormGate::enforce) {
    if (gate == NormGate::enforce)
        detail::require_normalized(initial);
    const DerivedFrame frame = derive_frame(field);
    const Eigen::MatrixXcd d = wigner_d(spin, frame.beta).entries.cast<std::complex<double>>();
    const Eigen::VectorXcd w0 = d.transpose() * initial.amplitudes();
    return StateVector(spin, detail::propagate(spin, d, w0, field, frame.big_omega, t));
}

/// |C_m|^2 for each substate, descending m.
inline std::vector<double> probabilities(const StateVector& state) {
    std::vector<double> p(static_cast<std::size_t>(state.dimension()));
    for (int i = 0; i < state.dimension(); ++i)
        p[static_cast<std::size_t>(i)] = std::norm(state.amplitude(i));
    return p;
}

/// Sampled |C_m(tau)|^2 curves over the reduced time tau = t/T.
struct TimeSeries {
    SpinQuantum spin;
    FieldConfig field;
    std::vector<double> taus;
    std::vector<std::vector<double>> probabilities; // one row per tau, descending m
    std::optional<std::vector<Eigen::VectorXcd>> amplitudes;
};

/// Uniform sampling of the evolution over tau in [0, n_periods] with
/// `samples` points including both endpoints.
inline TimeSeries evolve_series(SpinQuantum spin, const StateVector& initial,
                                const FieldConfig& field, double n_periods, int samples,
                                bool keep_amplitudes = false) {
    if (!(n_periods > 0.0))
        throw std::invalid_argument("evolve_series: n_periods must be positive");
    if (samples < 2)
        throw std::invalid_argument("evolve_series: need at least 2 samples");
    detail::require_normalized(initial);

    const DerivedFrame frame = derive_frame(field);
    const Eigen::MatrixXcd d = wigner_d(spin, frame.beta).entries.cast<std::complex<double>>();
    const Eigen::VectorXcd w0 = d.transpose() * initial.amplitudes();

    TimeSeries series{spin, field, {}, {}, std::nullopt};
    series.taus.reserve(static_cast<std::size_t>(samples));
    series.probabilities.reserve(static_cast<std::size_t>(samples));
    if (keep_amplitudes)
        series.amplitudes.emplace();

    for (int i = 0; i < samples; ++i) {
        const double tau = n_periods * static_cast<double>(i) / (samples - 1);
        const double t = tau * frame.period;
        Eigen::VectorXcd c = detail::propagate(spin, d, w0, field, frame.big_omega, t);
        series.taus.push_back(tau);
        std::vector<double> row(static_cast<std::size_t>(c.size()));
        for (int j = 0; j < c.size(); ++j)
            row[static_cast<std::size_t>(j)] = std::norm(c(j));
        series.probabilities.push_back(std::move(row));
        if (keep_amplitudes)
            series.amplitudes->push_back(std::move(c));
    }
    return series;
}

/// No-transition (adiabatic) amplitudes
///   C_m^ad(t) = C_m(0) e^{-i m w t} e^{-i m Omega t} |d^(s)_{m,m}(beta)|^2.
/// The first exponential is the dynamic phase; at t = T the second has
/// advanced by the geometric phase m*Omega*T. The |d_{m,m}|^2 weight is
/// applied as-is and does not preserve normalization away from beta = 0.
inline StateVector adiabatic_evolve(SpinQuantum spin, const StateVector& initial,
                                    const FieldConfig& field, double t) {
    const DerivedFrame frame = derive_frame(field);
    const WignerMatrix d = wigner_d(spin, frame.beta);
    const int n = spin.dimension();
    Eigen::VectorXcd c(n);
    for (int i = 0; i < n; ++i) {
        const double m = spin.m_at(i);
        const double dmm = d.entries(i, i);
        c(i) = initial.amplitude(i) *
               std::polar(1.0, -m * (field.omega + frame.big_omega) * t) * (dmm * dmm);
    }
    return StateVector(spin, std::move(c));
}

/// Coefficients K[m][m''] of the finite harmonic expansion
///   C_m(t) e^{+i m w t} = sum_{m''} K[m][m''] e^{-i m'' Omega t},
///   K[m][m''] = sum_{m'} C_{m'}(0) d^(s)_{m,m''}(beta) d^(s)_{m',m''}(beta).
/// Rows are m, columns m'', both descending. Row sums reproduce C_m(0).
inline Eigen::MatrixXcd hall_klemm_coefficients(SpinQuantum spin, const StateVector& initial,
                                                const FieldConfig& field) {
    detail::require_normalized(initial);
    const DerivedFrame frame = derive_frame(field);
    const Eigen::MatrixXcd d = wigner_d(spin, frame.beta).entries.cast<std::complex<double>>();
    const Eigen::VectorXcd w0 = d.transpose() * initial.amplitudes();
    return d * w0.asDiagonal();
}

} // namespace spinrwa

#endif // SPINRWA_DYNAMICS_HPP
