#include "epur/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace epur {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

} // namespace

SvgPlot::SvgPlot(int width, int height, std::string title)
    : width_(width), height_(height), title_(std::move(title)) {}

void SvgPlot::set_labels(std::string xlabel, std::string ylabel) {
    xlabel_ = std::move(xlabel);
    ylabel_ = std::move(ylabel);
}

void SvgPlot::add_points(const std::vector<std::pair<double, double>>& pts,
                         const std::string& color, double radius) {
    series_.push_back({pts, color, radius, false, false});
}

void SvgPlot::add_line(const std::vector<std::pair<double, double>>& pts,
                       const std::string& color, double stroke_width,
                       bool dashed) {
    series_.push_back({pts, color, stroke_width, true, dashed});
}

std::string SvgPlot::render() const {
    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -xmin, ymin = xmin, ymax = -xmin;
    for (const auto& s : series_)
        for (const auto& [x, y] : s.pts) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    if (!(xmin < xmax)) { xmin -= 0.5; xmax += 0.5; }
    if (!(ymin < ymax)) { ymin -= 0.5; ymax += 0.5; }
    const double xpad = 0.05 * (xmax - xmin);
    const double ypad = 0.08 * (ymax - ymin);
    xmin -= xpad; xmax += xpad; ymin -= ypad; ymax += ypad;

    const double ml = 70, mr = 20, mt = 40, mb = 55;
    const double pw = width_ - ml - mr;
    const double ph = height_ - mt - mb;
    auto sx = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
    auto sy = [&](double y) { return mt + (ymax - y) / (ymax - ymin) * ph; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_
        << "\" height=\"" << height_ << "\" viewBox=\"0 0 " << width_ << " "
        << height_ << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << width_ / 2 << "\" y=\"22\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"15\">" << title_ << "</text>\n";

    out << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw
        << "\" height=\"" << ph << "\" fill=\"none\" stroke=\"#444\"/>\n";
    const int nticks = 5;
    for (int t = 0; t <= nticks; ++t) {
        const double fx = xmin + (xmax - xmin) * t / nticks;
        const double fy = ymin + (ymax - ymin) * t / nticks;
        out << "<line x1=\"" << num(sx(fx)) << "\" y1=\"" << mt + ph
            << "\" x2=\"" << num(sx(fx)) << "\" y2=\"" << mt + ph + 5
            << "\" stroke=\"#444\"/>\n";
        out << "<text x=\"" << num(sx(fx)) << "\" y=\"" << mt + ph + 18
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"11\">"
            << num(fx) << "</text>\n";
        out << "<line x1=\"" << ml - 5 << "\" y1=\"" << num(sy(fy)) << "\" x2=\""
            << ml << "\" y2=\"" << num(sy(fy)) << "\" stroke=\"#444\"/>\n";
        out << "<text x=\"" << ml - 8 << "\" y=\"" << num(sy(fy) + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
               "font-size=\"11\">"
            << num(fy) << "</text>\n";
    }
    if (!xlabel_.empty())
        out << "<text x=\"" << ml + pw / 2 << "\" y=\"" << height_ - 12
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"13\">"
            << xlabel_ << "</text>\n";
    if (!ylabel_.empty())
        out << "<text x=\"18\" y=\"" << mt + ph / 2
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"13\" transform=\"rotate(-90 18 "
            << mt + ph / 2 << ")\">" << ylabel_ << "</text>\n";

    for (const auto& s : series_) {
        if (s.is_line) {
            out << "<polyline fill=\"none\" stroke=\"" << s.color
                << "\" stroke-width=\"" << s.size << "\"";
            if (s.dashed) out << " stroke-dasharray=\"6,4\"";
            out << " points=\"";
            for (const auto& [x, y] : s.pts)
                out << num(sx(x)) << "," << num(sy(y)) << " ";
            out << "\"/>\n";
        } else {
            for (const auto& [x, y] : s.pts)
                out << "<circle cx=\"" << num(sx(x)) << "\" cy=\"" << num(sy(y))
                    << "\" r=\"" << s.size << "\" fill=\"" << s.color
                    << "\" fill-opacity=\"0.75\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

void SvgPlot::write(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write svg: " + path);
    out << render();
}

} // namespace epur
