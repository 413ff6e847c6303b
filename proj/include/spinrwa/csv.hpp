#ifndef SPINRWA_CSV_HPP
#define SPINRWA_CSV_HPP

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>

#include "spinrwa/dynamics.hpp"
#include "spinrwa/errors.hpp"
#include "spinrwa/sweep.hpp"

namespace spinrwa {

namespace detail {

// Shortest representation that round-trips a double (17 significant
// digits); renders 1.0 as "1", which keeps the files human-readable.
inline std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace detail

/// CSV with header "tau,p_m=...,..." (m in descending order, decimal
/// labels) and one row per sample at full precision. Output is
/// deterministic: identical series give byte-identical text.
inline void emit_csv(const TimeSeries& series, std::ostream& out) {
    out << "tau";
    for (int i = 0; i < series.spin.dimension(); ++i)
        out << ",p_m=" << series.spin.m_label(i);
    out << '\n';
    for (std::size_t row = 0; row < series.taus.size(); ++row) {
        out << detail::format_full(series.taus[row]);
        for (double p : series.probabilities[row])
            out << ',' << detail::format_full(p);
        out << '\n';
    }
}

/// CSV with header "omega,peak_transfer".
inline void emit_csv(const ResonanceProfile& profile, std::ostream& out) {
    out << "omega,peak_transfer\n";
    for (std::size_t i = 0; i < profile.omegas.size(); ++i)
        out << detail::format_full(profile.omegas[i]) << ','
            << detail::format_full(profile.peak_transfer[i]) << '\n';
}

namespace detail {

template <typename Emittable>
void emit_csv_file(const Emittable& value, const std::filesystem::path& destination) {
    std::ofstream out(destination, std::ios::binary);
    if (!out)
        throw IoError("cannot open '" + destination.string() + "' for writing");
    emit_csv(value, out);
    out.flush();
    if (!out)
        throw IoError("write failed for '" + destination.string() + "'");
}

} // namespace detail

inline void emit_csv(const TimeSeries& series, const std::filesystem::path& destination) {
    detail::emit_csv_file(series, destination);
}

inline void emit_csv(const ResonanceProfile& profile, const std::filesystem::path& destination) {
    detail::emit_csv_file(profile, destination);
}

} // namespace spinrwa

#endif // SPINRWA_CSV_HPP
