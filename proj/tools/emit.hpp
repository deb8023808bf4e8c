#pragma once

// CSV and SVG emitters for the command-line tool. CSV doubles go through
// std::to_chars so output is locale-independent and byte-stable.

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace emit {

inline std::string num(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

struct Table {
    std::string header_comment; // "# summa v1, <subcommand>, <params>"
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    void write_csv(const std::string& path) const {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file: " + path);
        out << header_comment << "\n";
        for (std::size_t i = 0; i < columns.size(); ++i)
            out << (i ? "," : "") << columns[i];
        out << "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << num(row[i]);
            out << "\n";
        }
    }
};

// Simple two-stop color map (blue -> white -> red) for signed data.
inline std::string heat_color(double v, double lo, double hi) {
    double t = hi > lo ? (v - lo) / (hi - lo) : 0.5;
    t = t < 0 ? 0 : (t > 1 ? 1 : t);
    int r, g, b;
    if (t < 0.5) {
        double s = t * 2.0;
        r = static_cast<int>(40 + s * 215);
        g = static_cast<int>(70 + s * 185);
        b = 255;
    } else {
        double s = (t - 0.5) * 2.0;
        r = 255;
        g = static_cast<int>(255 - s * 185);
        b = static_cast<int>(255 - s * 215);
    }
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
    return buf;
}

inline void write_svg_curve(const std::string& path, const std::vector<double>& x,
                            const std::vector<double>& y, const std::string& title) {
    const int W = 720, H = 420, M = 40;
    double xlo = x.front(), xhi = x.back();
    double ylo = y.front(), yhi = y.front();
    for (double v : y) {
        ylo = std::min(ylo, v);
        yhi = std::max(yhi, v);
    }
    if (yhi == ylo) yhi = ylo + 1.0;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H
        << "' viewBox='0 0 " << W << " " << H << "'>\n";
    out << "<rect width='100%' height='100%' fill='white'/>\n";
    out << "<text x='" << W / 2 << "' y='20' text-anchor='middle' font-size='14'>" << title
        << "</text>\n";
    // zero line when it is inside the range
    if (ylo < 0.0 && yhi > 0.0) {
        double y0 = H - M - (0.0 - ylo) / (yhi - ylo) * (H - 2 * M);
        out << "<line x1='" << M << "' y1='" << y0 << "' x2='" << W - M << "' y2='" << y0
            << "' stroke='#cccccc'/>\n";
    }
    out << "<polyline fill='none' stroke='#1f4e9c' stroke-width='1.5' points='";
    for (std::size_t i = 0; i < x.size(); ++i) {
        double px = M + (x[i] - xlo) / (xhi - xlo) * (W - 2 * M);
        double py = H - M - (y[i] - ylo) / (yhi - ylo) * (H - 2 * M);
        out << num(px) << "," << num(py) << " ";
    }
    out << "'/>\n</svg>\n";
}

inline void write_svg_heatmap(const std::string& path, const std::vector<double>& v,
                              std::size_t nx, std::size_t ny, const std::string& title) {
    const int cellpx = std::max<int>(1, static_cast<int>(640 / nx));
    const int W = static_cast<int>(nx) * cellpx, H = static_cast<int>(ny) * cellpx + 28;
    double lo = v.front(), hi = v.front();
    for (double val : v) {
        lo = std::min(lo, val);
        hi = std::max(hi, val);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H
        << "' viewBox='0 0 " << W << " " << H << "'>\n";
    out << "<text x='" << W / 2 << "' y='18' text-anchor='middle' font-size='14'>" << title
        << "</text>\n";
    for (std::size_t iy = 0; iy < ny; ++iy)
        for (std::size_t ix = 0; ix < nx; ++ix) {
            double val = v[ix * ny + iy];
            out << "<rect x='" << ix * cellpx << "' y='" << 28 + (ny - 1 - iy) * cellpx
                << "' width='" << cellpx << "' height='" << cellpx << "' fill='"
                << heat_color(val, lo, hi) << "'/>\n";
        }
    out << "</svg>\n";
}

} // namespace emit
