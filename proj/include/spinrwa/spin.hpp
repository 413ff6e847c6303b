#ifndef SPINRWA_SPIN_HPP
#define SPINRWA_SPIN_HPP

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "spinrwa/errors.hpp"

namespace spinrwa {

/// Spin quantum number s, stored exactly as the integer 2s so that
/// half-integer spins need no floating point. s = 0 is accepted (one
/// substate, trivial dynamics).
class SpinQuantum {
public:
    explicit SpinQuantum(int twice_s) : twice_s_(twice_s) {
        if (twice_s < 0)
            throw std::invalid_argument("spin: 2s must be non-negative, got " +
                                        std::to_string(twice_s));
    }

    /// Accepts "3/2", "1.5" or "2". Anything not exactly representable as
    /// k/2 is rejected.
    static SpinQuantum parse(std::string_view text);

    int twice() const { return twice_s_; }
    double value() const { return 0.5 * twice_s_; }
    int dimension() const { return twice_s_ + 1; }

    /// m of the substate at row/column `index` in the descending-m order
    /// used for every matrix and state vector in this library.
    double m_at(int index) const { return 0.5 * (twice_s_ - 2 * index); }
    int twice_m_at(int index) const { return twice_s_ - 2 * index; }

    /// Decimal rendering of m at `index` ("2", "0.5", "-4.5").
    std::string m_label(int index) const;

    friend bool operator==(SpinQuantum a, SpinQuantum b) { return a.twice_s_ == b.twice_s_; }
    friend bool operator!=(SpinQuantum a, SpinQuantum b) { return !(a == b); }

private:
    int twice_s_;
};

/// All twice_m values {2s, 2s-2, ..., -2s}, descending.
inline std::vector<int> enumerate_substates(SpinQuantum spin) {
    std::vector<int> tm(static_cast<std::size_t>(spin.dimension()));
    for (int i = 0; i < spin.dimension(); ++i)
        tm[static_cast<std::size_t>(i)] = spin.twice_m_at(i);
    return tm;
}

/// Complex amplitudes C_m indexed by m = s, s-1, ..., -s.
class StateVector {
public:
    StateVector(SpinQuantum spin, Eigen::VectorXcd amplitudes)
        : spin_(spin), amplitudes_(std::move(amplitudes)) {
        if (amplitudes_.size() != spin_.dimension())
            throw std::invalid_argument(
                "state vector: expected " + std::to_string(spin_.dimension()) +
                " amplitudes, got " + std::to_string(amplitudes_.size()));
    }

    /// Real non-negative amplitudes sqrt(p_m). The probabilities must sum
    /// to 1 within 1e-12.
    static StateVector from_probabilities(SpinQuantum spin, const std::vector<double>& probs);

    /// C_s = 1 (maximal projection).
    static StateVector stretched(SpinQuantum spin) {
        Eigen::VectorXcd c = Eigen::VectorXcd::Zero(spin.dimension());
        c(0) = 1.0;
        return StateVector(spin, std::move(c));
    }

    /// All amplitudes 1/sqrt(2s+1).
    static StateVector uniform(SpinQuantum spin) {
        const double a = 1.0 / std::sqrt(static_cast<double>(spin.dimension()));
        return StateVector(spin, Eigen::VectorXcd::Constant(spin.dimension(), a));
    }

    SpinQuantum spin() const { return spin_; }
    const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
    std::complex<double> amplitude(int index) const { return amplitudes_(index); }
    int dimension() const { return spin_.dimension(); }

    double norm_squared() const { return amplitudes_.squaredNorm(); }
    bool is_normalized(double tol = 1e-12) const {
        return std::abs(norm_squared() - 1.0) <= tol;
    }

    StateVector normalized() const {
        const double n = amplitudes_.norm();
        if (n == 0.0)
            throw NotNormalized("state vector: cannot normalize the zero vector");
        return StateVector(spin_, amplitudes_ / n);
    }

private:
    SpinQuantum spin_;
    Eigen::VectorXcd amplitudes_;
};

/// Dense (2s+1)-dimensional spin operator matrices, hbar = 1, indexed in
/// descending m. sz is diagonal with entries m; sx and sy come from the
/// ladder elements <s,m+-1|S+-|s,m> = sqrt(s(s+1) - m(m+-1)).
struct SpinOperators {
    SpinQuantum spin;
    Eigen::MatrixXcd sx, sy, sz;
};

inline SpinOperators spin_matrices(SpinQuantum spin) {
    const int n = spin.dimension();
    const double s = spin.value();
    Eigen::MatrixXcd sx = Eigen::MatrixXcd::Zero(n, n);
    Eigen::MatrixXcd sy = Eigen::MatrixXcd::Zero(n, n);
    Eigen::MatrixXcd sz = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        const double m = spin.m_at(i);
        sz(i, i) = m;
        if (i > 0) {
            // raising element connects column m to row m+1 (one index up)
            const double elem = std::sqrt(s * (s + 1.0) - m * (m + 1.0));
            sx(i - 1, i) += 0.5 * elem;
            sx(i, i - 1) += 0.5 * elem;
            sy(i - 1, i) += std::complex<double>(0.0, -0.5) * elem;
            sy(i, i - 1) += std::complex<double>(0.0, +0.5) * elem;
        }
    }
    return SpinOperators{spin, std::move(sx), std::move(sy), std::move(sz)};
}

inline StateVector StateVector::from_probabilities(SpinQuantum spin,
                                                   const std::vector<double>& probs) {
    if (static_cast<int>(probs.size()) != spin.dimension())
        throw std::invalid_argument("probabilities: expected " +
                                    std::to_string(spin.dimension()) + " entries, got " +
                                    std::to_string(probs.size()));
    double sum = 0.0;
    for (double p : probs) {
        if (!(p >= 0.0))
            throw std::invalid_argument("probabilities: entries must be non-negative");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw NotNormalized("probabilities: sum deviates from 1 by " +
                            std::to_string(sum - 1.0));
    Eigen::VectorXcd c(spin.dimension());
    for (int i = 0; i < spin.dimension(); ++i)
        c(i) = std::sqrt(probs[static_cast<std::size_t>(i)]);
    return StateVector(spin, std::move(c));
}

inline std::string SpinQuantum::m_label(int index) const {
    const int tm = twice_m_at(index);
    if (tm % 2 == 0)
        return std::to_string(tm / 2);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", 0.5 * tm);
    return buf;
}

inline SpinQuantum SpinQuantum::parse(std::string_view text) {
    const std::string str(text);
    const auto bad = [&] {
        return std::invalid_argument("spin: cannot parse '" + str + "'");
    };
    try {
        if (str.empty())
            throw bad();
        const auto slash = str.find('/');
        if (slash != std::string::npos) {
            // fraction form "k/2" (or "k/1")
            std::size_t pos = 0;
            const int num = std::stoi(str.substr(0, slash), &pos);
            if (pos != slash)
                throw bad();
            const std::string den_str = str.substr(slash + 1);
            const int den = std::stoi(den_str, &pos);
            if (pos != den_str.size() || (den != 1 && den != 2))
                throw std::invalid_argument("spin: denominator must be 1 or 2 in '" + str +
                                            "'");
            return SpinQuantum(den == 2 ? num : 2 * num);
        }
        std::size_t pos = 0;
        const double v = std::stod(str, &pos);
        if (pos != str.size())
            throw bad();
        const double twice = 2.0 * v;
        if (!(twice >= 0.0) || twice != std::floor(twice) || twice > 1e6)
            throw std::invalid_argument("spin: '" + str + "' is not a multiple of 1/2");
        return SpinQuantum(static_cast<int>(twice));
    } catch (const std::out_of_range&) {
        throw bad();
    } catch (const std::invalid_argument& e) {
        // std::stoi / std::stod report bare "stoi"/"stod"
        if (std::string_view(e.what()).find("sto") == 0)
            throw bad();
        throw;
    }
}

} // namespace spinrwa

#endif // SPINRWA_SPIN_HPP
