#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <thread>
#include <vector>

#include "spinrwa/dynamics.hpp"
#include "spinrwa/oracle.hpp"
#include "spinrwa/wigner.hpp"

using namespace spinrwa;
using Catch::Matchers::WithinAbs;

namespace {

double orthogonality_defect(const Eigen::MatrixXd& d) {
    const int n = static_cast<int>(d.rows());
    return (d.transpose() * d - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
}

} // namespace

TEST_CASE("zero rotation is the exact identity", "[wigner]") {
    for (int twice_s : {0, 1, 2, 5, 9, 65}) {
        const WignerMatrix d = wigner_d(SpinQuantum(twice_s), 0.0);
        const int n = twice_s + 1;
        CHECK((d.entries - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() <= 1e-15);
    }
}

TEST_CASE("spin-1/2 reduced rotation matrix in closed form", "[wigner]") {
    std::mt19937 gen(2024);
    std::uniform_real_distribution<double> angle(-6.0, 6.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double beta = angle(gen);
        const WignerMatrix d = wigner_d(SpinQuantum(1), beta);
        CHECK_THAT(d(0, 0), WithinAbs(std::cos(beta / 2), 1e-15));
        CHECK_THAT(d(0, 1), WithinAbs(-std::sin(beta / 2), 1e-15));
        CHECK_THAT(d(1, 0), WithinAbs(std::sin(beta / 2), 1e-15));
        CHECK_THAT(d(1, 1), WithinAbs(std::cos(beta / 2), 1e-15));
    }
}

TEST_CASE("matches the exponential of the y generator", "[wigner]") {
    // strongest sign-convention check: d^(s)(beta) must equal exp(-i beta Sy)
    std::mt19937 gen(7);
    std::uniform_real_distribution<double> angle(-2.0 * std::numbers::pi,
                                                 2.0 * std::numbers::pi);
    for (int twice_s = 1; twice_s <= 9; ++twice_s) {
        const SpinQuantum spin(twice_s);
        const SpinOperators ops = spin_matrices(spin);
        for (int trial = 0; trial < 20; ++trial) {
            const double beta = angle(gen);
            const Eigen::MatrixXcd expected = oracle::hermitian_phase_exp(ops.sy, beta);
            const WignerMatrix d = wigner_d(spin, beta);
            CHECK((d.entries.cast<std::complex<double>>() - expected).cwiseAbs().maxCoeff() <
                  1e-10);
        }
    }
}

TEST_CASE("half turn is the alternating antidiagonal", "[wigner]") {
    const SpinQuantum spin(4); // s = 2
    const WignerMatrix d = wigner_d(spin, std::numbers::pi);
    for (int r = 0; r < 5; ++r) {
        for (int c = 0; c < 5; ++c) {
            const double m = spin.m_at(c);
            const double expected =
                (r == 4 - c) ? std::pow(-1.0, spin.value() - m) : 0.0;
            CHECK_THAT(d(r, c), WithinAbs(expected, 1e-12));
        }
    }
}

TEST_CASE("orthogonality", "[wigner]") {
    SECTION("spin 9/2 at beta = 1.3") {
        CHECK(orthogonality_defect(wigner_d(SpinQuantum(9), 1.3).entries) < 1e-12);
    }
    SECTION("every spin to 9/2, random angles") {
        std::mt19937 gen(99);
        std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
        for (int twice_s = 1; twice_s <= 9; ++twice_s)
            for (int trial = 0; trial < 5; ++trial)
                CHECK(orthogonality_defect(
                          wigner_d(SpinQuantum(twice_s), angle(gen)).entries) < 1e-12);
    }
    SECTION("large spin 65/2 stays below 1e-8") {
        for (double beta : {1.3, std::numbers::pi / 2, 2.3, 3.0})
            CHECK(orthogonality_defect(wigner_d(SpinQuantum(65), beta).entries) < 1e-8);
    }
    SECTION("row and column norms are 1") {
        const WignerMatrix d = wigner_d(SpinQuantum(7), 0.8);
        for (int i = 0; i < 8; ++i) {
            CHECK_THAT(d.entries.row(i).norm(), WithinAbs(1.0, 1e-12));
            CHECK_THAT(d.entries.col(i).norm(), WithinAbs(1.0, 1e-12));
        }
    }
}

TEST_CASE("symmetry relations", "[wigner]") {
    std::mt19937 gen(31);
    std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
    for (int twice_s : {1, 2, 4, 7, 9}) {
        const SpinQuantum spin(twice_s);
        const int n = spin.dimension();
        const double beta = angle(gen);
        const WignerMatrix d = wigner_d(spin, beta);
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) {
                const int parity = (spin.twice_m_at(c) - spin.twice_m_at(r)) / 2;
                const double sign = parity % 2 == 0 ? 1.0 : -1.0;
                // d_{m',m} = (-1)^{m-m'} d_{m,m'}
                CHECK_THAT(d(r, c), WithinAbs(sign * d(c, r), 1e-12));
                // d_{m',m} = d_{-m,-m'}
                CHECK_THAT(d(r, c), WithinAbs(d(n - 1 - c, n - 1 - r), 1e-12));
            }
        }
    }
}

TEST_CASE("rotations compose", "[wigner]") {
    std::mt19937 gen(55);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    for (int twice_s : {1, 3, 6, 9}) {
        const SpinQuantum spin(twice_s);
        for (int trial = 0; trial < 10; ++trial) {
            const double b1 = angle(gen);
            const double b2 = angle(gen);
            const Eigen::MatrixXd lhs =
                wigner_d(spin, b1).entries * wigner_d(spin, b2).entries;
            const Eigen::MatrixXd rhs = wigner_d(spin, b1 + b2).entries;
            CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);
        }
    }
}

TEST_CASE("half-angle functions from the field", "[wigner]") {
    SECTION("on resonance both are 1/sqrt(2)") {
        const HalfAngle h = half_angle_from_field(FieldConfig(1.0, 0.01, 1.0));
        CHECK_THAT(h.sin_half, WithinAbs(std::sqrt(0.5), 1e-15));
        CHECK_THAT(h.cos_half, WithinAbs(std::sqrt(0.5), 1e-15));
    }
    SECTION("peak drive gives beta = 3pi/4") {
        const HalfAngle h = half_angle_from_field(FieldConfig(1.0, 0.01, 1.01));
        // sin(3pi/8), cos(3pi/8), i.e. sqrt((sqrt(2)+1)/(2 sqrt(2)))
        CHECK_THAT(h.sin_half, WithinAbs(0.92387953251128674, 1e-12));
        CHECK_THAT(h.cos_half, WithinAbs(0.38268343236508978, 1e-12));
    }
    SECTION("pythagorean identity and double angle") {
        std::mt19937 gen(8);
        std::uniform_real_distribution<double> freq(0.2, 3.0);
        for (int trial = 0; trial < 200; ++trial) {
            const FieldConfig field(1.0, freq(gen) * 0.1, freq(gen));
            const HalfAngle h = half_angle_from_field(field);
            CHECK(h.sin_half >= 0.0);
            CHECK(h.cos_half >= 0.0);
            CHECK_THAT(h.sin_half * h.sin_half + h.cos_half * h.cos_half,
                       WithinAbs(1.0, 1e-15));
            const DerivedFrame frame = derive_frame(field);
            CHECK_THAT(2.0 * h.sin_half * h.cos_half, WithinAbs(std::sin(frame.beta), 1e-14));
            CHECK_THAT(h.cos_half * h.cos_half - h.sin_half * h.sin_half,
                       WithinAbs(std::cos(frame.beta), 1e-14));
        }
    }
    SECTION("on resonance the full angle closes to pi/2") {
        const HalfAngle h = half_angle_from_field(FieldConfig(1.0, 0.01, 1.0));
        CHECK_THAT(2.0 * h.sin_half * h.cos_half, WithinAbs(1.0, 1e-15));
        CHECK_THAT(h.cos_half * h.cos_half - h.sin_half * h.sin_half, WithinAbs(0.0, 1e-15));
    }
}

TEST_CASE("undriven fields have no half angle", "[wigner]") {
    CHECK_THROWS_AS(half_angle_from_field(FieldConfig(1.0, 0.0, 1.0)), DegenerateField);
    CHECK_THROWS_AS(half_angle_from_field(FieldConfig(1.0, -0.5, 1.0)), DegenerateField);
}

TEST_CASE("concurrent evaluation", "[wigner]") {
    // the log-factorial table is shared; concurrent first use must be safe
    const SpinQuantum spin(9);
    std::vector<double> betas{0.3, 1.1, 2.2, 2.9};
    std::vector<Eigen::MatrixXd> results(betas.size());
    std::vector<std::thread> threads;
    for (std::size_t i = 0; i < betas.size(); ++i)
        threads.emplace_back(
            [&, i] { results[i] = wigner_d(spin, betas[i]).entries; });
    for (auto& t : threads)
        t.join();
    for (std::size_t i = 0; i < betas.size(); ++i)
        CHECK((results[i] - wigner_d(spin, betas[i]).entries).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("arbitrary angles are accepted", "[wigner]") {
    // periodicity through the trig functions, no domain errors
    for (double beta : {-10.0, 25.1327412287183459, 1e6}) {
        const WignerMatrix d = wigner_d(SpinQuantum(5), beta);
        CHECK(orthogonality_defect(d.entries) < 1e-10);
    }
    CHECK_THROWS_AS(wigner_d(SpinQuantum(5), std::nan("")), std::invalid_argument);
}
