#include "pinfi/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace pinfi {

namespace {

constexpr double kWidth = 800.0, kHeight = 520.0;
constexpr double kMarginLeft = 70.0, kMarginRight = 25.0;
constexpr double kMarginTop = 25.0, kMarginBottom = 55.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

struct Mapper {
    double lo_x, hi_x, lo_y, hi_y;
    double px(double x) const {
        const double span = hi_x > lo_x ? hi_x - lo_x : 1.0;
        return kMarginLeft + (x - lo_x) / span * (kWidth - kMarginLeft - kMarginRight);
    }
    double py(double y) const {
        const double span = hi_y > lo_y ? hi_y - lo_y : 1.0;
        return kHeight - kMarginBottom -
               (y - lo_y) / span * (kHeight - kMarginTop - kMarginBottom);
    }
};

void open_svg(std::string& out) {
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
           "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " +
           num(kHeight) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void draw_axes(std::string& out, const Mapper& m, const std::string& x_label,
               const std::string& y_label) {
    out += "<line x1=\"" + num(m.px(m.lo_x)) + "\" y1=\"" + num(m.py(m.lo_y)) +
           "\" x2=\"" + num(m.px(m.hi_x)) + "\" y2=\"" + num(m.py(m.lo_y)) +
           "\" stroke=\"black\"/>\n";
    out += "<line x1=\"" + num(m.px(m.lo_x)) + "\" y1=\"" + num(m.py(m.lo_y)) +
           "\" x2=\"" + num(m.px(m.lo_x)) + "\" y2=\"" + num(m.py(m.hi_y)) +
           "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + num(m.px(m.lo_x)) + "\" y=\"" + num(m.py(m.lo_y) + 18.0) +
           "\" font-size=\"12\">" + num(m.lo_x) + "</text>\n";
    out += "<text x=\"" + num(m.px(m.hi_x) - 30.0) + "\" y=\"" + num(m.py(m.lo_y) + 18.0) +
           "\" font-size=\"12\">" + num(m.hi_x) + "</text>\n";
    out += "<text x=\"" + num(m.px(m.lo_x) - 55.0) + "\" y=\"" + num(m.py(m.lo_y)) +
           "\" font-size=\"12\">" + num(m.lo_y) + "</text>\n";
    out += "<text x=\"" + num(m.px(m.lo_x) - 55.0) + "\" y=\"" + num(m.py(m.hi_y) + 10.0) +
           "\" font-size=\"12\">" + num(m.hi_y) + "</text>\n";
    out += "<text x=\"" + num(0.5 * kWidth) + "\" y=\"" + num(kHeight - 12.0) +
           "\" font-size=\"14\" text-anchor=\"middle\">" + x_label + "</text>\n";
    out += "<text x=\"16\" y=\"" + num(0.5 * kHeight) +
           "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
           num(0.5 * kHeight) + ")\">" + y_label + "</text>\n";
}

const char* zone_color(Zone zone) {
    switch (zone) {
        case Zone::aA: return "#c6e2b5";
        case Zone::aB: return "#f4a9a0";
        case Zone::aC: return "#bfe3d9";
        case Zone::aD: return "#a9cce8";
        case Zone::aE: return "#e8c5a9";
        case Zone::aF: return "#d9c4e8";
        case Zone::aG: return "#f7e39b";
    }
    return "#dddddd";
}

}  // namespace

std::string trajectory_svg(const Trajectory& trajectory) {
    double t_hi = 0.0, p_lo = trajectory.samples.front().price, p_hi = p_lo;
    for (const Sample& s : trajectory.samples) {
        t_hi = std::max(t_hi, s.time);
        p_lo = std::min(p_lo, s.price);
        p_hi = std::max(p_hi, s.price);
    }
    const Mapper m{0.0, t_hi > 0.0 ? t_hi : 1.0, p_lo, p_hi > p_lo ? p_hi : p_lo + 1.0};

    std::string out;
    open_svg(out);
    draw_axes(out, m, "time [h]", "price [USD per power*h]");
    out += "<polyline fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"1.5\" points=\"";
    for (const Sample& s : trajectory.samples)
        out += num(m.px(s.time)) + "," + num(m.py(s.price)) + " ";
    out += "\"/>\n</svg>\n";
    return out;
}

std::string phase_svg(const PhaseGrid& grid) {
    const Mapper m{grid.x_axis.front(), grid.x_axis.back(), grid.g_axis.front(),
                   grid.g_axis.back()};
    const std::size_t nx = grid.x_axis.size(), ng = grid.g_axis.size();
    const double cell_w =
        nx > 1 ? (m.px(m.hi_x) - m.px(m.lo_x)) / double(nx - 1) : 20.0;
    const double cell_h =
        ng > 1 ? (m.py(m.lo_y) - m.py(m.hi_y)) / double(ng - 1) : 20.0;

    std::string out;
    open_svg(out);
    for (std::size_t ix = 0; ix < nx; ++ix) {
        for (std::size_t ig = 0; ig < ng; ++ig) {
            const double cx = m.px(grid.x_axis[ix]);
            const double cy = m.py(grid.g_axis[ig]);
            out += "<rect x=\"" + num(cx - 0.5 * cell_w) + "\" y=\"" +
                   num(cy - 0.5 * cell_h) + "\" width=\"" + num(cell_w) +
                   "\" height=\"" + num(cell_h) + "\" fill=\"" +
                   zone_color(grid.labels[ix * ng + ig]) + "\"/>\n";
        }
    }
    const auto draw_curve = [&](const std::vector<double>& curve, const char* color) {
        out += "<polyline fill=\"none\" stroke=\"";
        out += color;
        out += "\" stroke-width=\"2\" points=\"";
        for (std::size_t ix = 0; ix < nx; ++ix) {
            const double g = curve[ix];
            if (std::isnan(g) || g < m.lo_y || g > m.hi_y) continue;
            out += num(m.px(grid.x_axis[ix])) + "," + num(m.py(g)) + " ";
        }
        out += "\"/>\n";
    };
    draw_curve(grid.curve_ss, "#1f5fa8");
    draw_curve(grid.curve_sb, "#c23b3b");
    if (grid.segment) {
        const auto mark = [&](double x, double g, const char* label) {
            out += "<circle cx=\"" + num(m.px(x)) + "\" cy=\"" + num(m.py(g)) +
                   "\" r=\"5\" fill=\"black\"/>\n";
            out += "<text x=\"" + num(m.px(x) + 8.0) + "\" y=\"" + num(m.py(g) - 6.0) +
                   "\" font-size=\"12\">";
            out += label;
            out += "</text>\n";
        };
        mark(grid.segment->x_d, grid.segment->g_d, "pD");
        mark(grid.segment->x_b, grid.segment->g_b, "pB'");
    }
    draw_axes(out, m, "x = alpha/(beta + p*theta)", "g = gamma/(beta + p*theta)");
    out += "</svg>\n";
    return out;
}

}  // namespace pinfi
