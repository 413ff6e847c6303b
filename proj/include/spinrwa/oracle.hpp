#ifndef SPINRWA_ORACLE_HPP
#define SPINRWA_ORACLE_HPP

// Brute-force validators, deliberately independent of the closed-form
// machinery: this header must not include wigner.hpp or dynamics.hpp
// (enforced by a compile check in the test suite). Everything here works
// straight from the spin matrices and the lab-frame Hamiltonian.

#include <Eigen/Dense>

#include <cmath>
#include <complex>

#include "spinrwa/errors.hpp"
#include "spinrwa/field.hpp"
#include "spinrwa/spin.hpp"

namespace spinrwa::oracle {

/// exp(-i * theta * G) for Hermitian G, via eigendecomposition. Unitary up
/// to eigensolver accuracy; no series truncation to tune.
inline Eigen::MatrixXcd hermitian_phase_exp(const Eigen::MatrixXcd& generator, double theta) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(generator);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("hermitian_phase_exp: eigendecomposition failed");
    const Eigen::VectorXd& lambda = es.eigenvalues();
    Eigen::VectorXcd phases(lambda.size());
    for (int i = 0; i < lambda.size(); ++i)
        phases(i) = std::polar(1.0, -theta * lambda(i));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

/// Lab-frame Hamiltonian of the rotating-wave drive:
///   H(t) = omega0 Sz + omega1 (Sx cos wt + Sy sin wt).
inline Eigen::MatrixXcd lab_hamiltonian(SpinQuantum spin, const FieldConfig& field, double t) {
    const SpinOperators ops = spin_matrices(spin);
    return field.omega0 * ops.sz +
           field.omega1 * (std::cos(field.omega * t) * ops.sx +
                           std::sin(field.omega * t) * ops.sy);
}

/// Fixed-step classical RK4. Fixed stepping keeps the convergence-order
/// measurement clean; the trajectories are smooth and bounded so nothing
/// adaptive is needed.
struct IntegratorConfig {
    double step = 1e-3;
};

/// Integrate i dpsi/dt = H(t) psi in the lab frame, with `initial` the
/// state at t_start. Rejects steps too coarse to resolve the Larmor phase
/// or the effective precession (step * omega0 and step * Omega must not
/// exceed 1e-2).
inline StateVector integrate_from(SpinQuantum spin, const StateVector& initial,
                                  const FieldConfig& field, double t_start, double t_final,
                                  const IntegratorConfig& config = {}) {
    if (!(config.step > 0.0))
        throw std::invalid_argument("integrate: step must be positive");
    if (!(t_final >= t_start))
        throw std::invalid_argument("integrate: t_final must not precede t_start");
    if (std::abs(initial.norm_squared() - 1.0) > 1e-9)
        throw NotNormalized("integrate: initial state is not normalized");
    const double big_omega = std::hypot(field.detuning(), field.omega1);
    if (config.step * std::abs(field.omega0) > 1e-2 || config.step * big_omega > 1e-2)
        throw StepTooLarge("integrate: step " + std::to_string(config.step) +
                           " cannot resolve the fastest phase");

    const SpinOperators ops = spin_matrices(spin);
    const std::complex<double> minus_i(0.0, -1.0);
    const auto deriv = [&](double t, const Eigen::VectorXcd& psi) -> Eigen::VectorXcd {
        const double c = field.omega1 * std::cos(field.omega * t);
        const double s = field.omega1 * std::sin(field.omega * t);
        return minus_i * (field.omega0 * (ops.sz * psi) + c * (ops.sx * psi) +
                          s * (ops.sy * psi));
    };

    Eigen::VectorXcd psi = initial.amplitudes();
    const double span = t_final - t_start;
    if (span == 0.0)
        return StateVector(spin, psi);
    const long n_steps = static_cast<long>(std::ceil(span / config.step - 1e-12));
    const double h = span / static_cast<double>(n_steps);
    for (long i = 0; i < n_steps; ++i) {
        const double t = t_start + h * static_cast<double>(i);
        const Eigen::VectorXcd k1 = deriv(t, psi);
        const Eigen::VectorXcd k2 = deriv(t + 0.5 * h, psi + (0.5 * h) * k1);
        const Eigen::VectorXcd k3 = deriv(t + 0.5 * h, psi + (0.5 * h) * k2);
        const Eigen::VectorXcd k4 = deriv(t + h, psi + h * k3);
        psi += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return StateVector(spin, std::move(psi));
}

/// Trajectory from the usual t = 0 start.
inline StateVector integrate(SpinQuantum spin, const StateVector& initial,
                             const FieldConfig& field, double t_final,
                             const IntegratorConfig& config = {}) {
    return integrate_from(spin, initial, field, 0.0, t_final, config);
}

/// Residual of the z-rotation identity
///   e^{-i Sz phi} Sx e^{+i Sz phi} = Sx cos(phi) + Sy sin(phi)
/// in the max norm. Certifies that conjugating by the drive phase really
/// turns the static transverse coupling into the rotating one.
inline double rotation_identity_residual(SpinQuantum spin, double phi) {
    const SpinOperators ops = spin_matrices(spin);
    const Eigen::MatrixXcd u = hermitian_phase_exp(ops.sz, phi); // e^{-i Sz phi}
    const Eigen::MatrixXcd rotated = u * ops.sx * u.adjoint();
    const Eigen::MatrixXcd expected = std::cos(phi) * ops.sx + std::sin(phi) * ops.sy;
    return (rotated - expected).cwiseAbs().maxCoeff();
}

/// Residual of the claim that the y-rotation by the mixing angle
/// diagonalizes the rotating-frame Hamiltonian:
///   e^{+i beta Sy} ((omega0 - omega) Sz + omega1 Sx) e^{-i beta Sy} = Omega Sz.
inline double rotated_diagonalization_residual(SpinQuantum spin, const FieldConfig& field) {
    const double det = field.detuning();
    const double big_omega = std::hypot(det, field.omega1);
    if (big_omega == 0.0)
        throw DegenerateField("rotated_diagonalization_residual: Omega is zero");
    const double beta = std::atan2(field.omega1, det);
    const SpinOperators ops = spin_matrices(spin);
    const Eigen::MatrixXcd u = hermitian_phase_exp(ops.sy, -beta); // e^{+i beta Sy}
    const Eigen::MatrixXcd h_eff = det * ops.sz + field.omega1 * ops.sx;
    const Eigen::MatrixXcd rotated = u * h_eff * u.adjoint();
    return (rotated - big_omega * ops.sz).cwiseAbs().maxCoeff();
}

} // namespace spinrwa::oracle

#endif // SPINRWA_ORACLE_HPP
