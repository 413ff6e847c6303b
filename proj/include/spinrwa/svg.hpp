#ifndef SPINRWA_SVG_HPP
#define SPINRWA_SVG_HPP

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>

#include "spinrwa/dynamics.hpp"
#include "spinrwa/errors.hpp"

namespace spinrwa {

struct SvgStyle {
    int width = 900;
    int height = 560;
    std::string title;   // empty: no title line
    bool legend = true;
};

namespace detail {

inline constexpr std::array<const char*, 10> svg_palette{
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

inline std::string svg_coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

} // namespace detail

/// Standalone SVG: one polyline per substate over tau in [0, n_periods],
/// y axis the occupation probabilities in [0, 1]. Output is deterministic
/// for a fixed series and style.
inline void emit_svg(const TimeSeries& series, std::ostream& out, const SvgStyle& style = {}) {
    if (series.taus.empty())
        throw std::invalid_argument("emit_svg: series is empty");
    const int n_curves = series.spin.dimension();
    const double tau_max = series.taus.back();

    const double left = 64.0;
    const double top = style.title.empty() ? 24.0 : 48.0;
    const double bottom = static_cast<double>(style.height) - 48.0;
    const double right = static_cast<double>(style.width) - (style.legend ? 110.0 : 24.0);
    const double plot_w = right - left;
    const double plot_h = bottom - top;

    const auto x_of = [&](double tau) { return left + plot_w * (tau / tau_max); };
    const auto y_of = [&](double p) { return bottom - plot_h * p; };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.width
        << "\" height=\"" << style.height << "\" viewBox=\"0 0 " << style.width << ' '
        << style.height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!style.title.empty())
        out << "<text x=\"" << detail::svg_coord((left + right) / 2.0)
            << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"16\">" << style.title << "</text>\n";

    // frame and ticks
    out << "<rect x=\"" << detail::svg_coord(left) << "\" y=\"" << detail::svg_coord(top)
        << "\" width=\"" << detail::svg_coord(plot_w) << "\" height=\""
        << detail::svg_coord(plot_h) << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double frac = i / 4.0;
        const double x = left + plot_w * frac;
        const double y = bottom - plot_h * frac;
        char label[32];
        std::snprintf(label, sizeof(label), "%g", tau_max * frac);
        out << "<line x1=\"" << detail::svg_coord(x) << "\" y1=\"" << detail::svg_coord(bottom)
            << "\" x2=\"" << detail::svg_coord(x) << "\" y2=\""
            << detail::svg_coord(bottom + 5.0) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << detail::svg_coord(x) << "\" y=\""
            << detail::svg_coord(bottom + 20.0)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
            << label << "</text>\n";
        std::snprintf(label, sizeof(label), "%g", frac);
        out << "<line x1=\"" << detail::svg_coord(left - 5.0) << "\" y1=\""
            << detail::svg_coord(y) << "\" x2=\"" << detail::svg_coord(left) << "\" y2=\""
            << detail::svg_coord(y) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << detail::svg_coord(left - 9.0) << "\" y=\""
            << detail::svg_coord(y + 4.0)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" << label
            << "</text>\n";
    }
    out << "<text x=\"" << detail::svg_coord((left + right) / 2.0) << "\" y=\""
        << detail::svg_coord(bottom + 38.0)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">tau = t/T"
        << "</text>\n";

    for (int c = 0; c < n_curves; ++c) {
        const char* color = detail::svg_palette[static_cast<std::size_t>(c) %
                                                detail::svg_palette.size()];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t k = 0; k < series.taus.size(); ++k) {
            out << detail::svg_coord(x_of(series.taus[k])) << ','
                << detail::svg_coord(y_of(series.probabilities[k][static_cast<std::size_t>(c)]));
            if (k + 1 < series.taus.size())
                out << ' ';
        }
        out << "\"/>\n";
    }

    // omit the legend when there are more curves than vertical room
    const bool legend_fits = top + 14.0 + 18.0 * n_curves <= bottom + 4.0;
    if (style.legend && legend_fits) {
        const double lx = right + 12.0;
        for (int c = 0; c < n_curves; ++c) {
            const double ly = top + 14.0 + 18.0 * c;
            const char* color = detail::svg_palette[static_cast<std::size_t>(c) %
                                                    detail::svg_palette.size()];
            out << "<line x1=\"" << detail::svg_coord(lx) << "\" y1=\"" << detail::svg_coord(ly)
                << "\" x2=\"" << detail::svg_coord(lx + 18.0) << "\" y2=\""
                << detail::svg_coord(ly) << "\" stroke=\"" << color
                << "\" stroke-width=\"2\"/>\n";
            out << "<text x=\"" << detail::svg_coord(lx + 24.0) << "\" y=\""
                << detail::svg_coord(ly + 4.0)
                << "\" font-family=\"sans-serif\" font-size=\"12\">m=" << series.spin.m_label(c)
                << "</text>\n";
        }
    }
    out << "</svg>\n";
}

inline void emit_svg(const TimeSeries& series, const std::filesystem::path& destination,
                     const SvgStyle& style = {}) {
    std::ofstream out(destination, std::ios::binary);
    if (!out)
        throw IoError("cannot open '" + destination.string() + "' for writing");
    emit_svg(series, out, style);
    out.flush();
    if (!out)
        throw IoError("write failed for '" + destination.string() + "'");
}

} // namespace spinrwa

#endif // SPINRWA_SVG_HPP
