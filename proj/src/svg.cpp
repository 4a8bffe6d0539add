#include "sympb/svg.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace sympb {

void SvgWriter::polyline(std::vector<Vec2> pts, const std::string& color, double stroke_width,
                         bool closed) {
    shapes_.push_back({false, closed, std::move(pts), color, stroke_width});
}

void SvgWriter::dots(std::vector<Vec2> pts, const std::string& color, double radius) {
    shapes_.push_back({true, false, std::move(pts), color, radius});
}

std::string SvgWriter::document() const {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& s : shapes_)
        for (const auto& p : s.pts) {
            xmin = std::min(xmin, p.x);
            xmax = std::max(xmax, p.x);
            ymin = std::min(ymin, p.y);
            ymax = std::max(ymax, p.y);
        }
    bool empty = shapes_.empty() || xmin > xmax;
    if (empty) {
        xmin = ymin = -1.0;
        xmax = ymax = 1.0;
    }
    double margin = 20.0;
    double sx = (w_ - 2 * margin) / std::max(1e-12, xmax - xmin);
    double sy = (h_ - 2 * margin) / std::max(1e-12, ymax - ymin);
    double s = std::min(sx, sy);
    auto X = [&](double x) { return margin + (x - xmin) * s; };
    auto Y = [&](double y) { return h_ - margin - (y - ymin) * s; };  // y grows upward

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w_ << "\" height=\"" << h_
        << "\" viewBox=\"0 0 " << w_ << " " << h_ << "\">\n";
    char buf[64];
    for (const auto& sh : shapes_) {
        if (sh.is_dots) {
            for (const auto& p : sh.pts) {
                std::snprintf(buf, sizeof(buf), "%.3f\" cy=\"%.3f", X(p.x), Y(p.y));
                out << "  <circle cx=\"" << buf << "\" r=\"" << sh.param << "\" fill=\""
                    << sh.color << "\"/>\n";
            }
        } else if (!sh.pts.empty()) {
            out << "  <" << (sh.closed ? "polygon" : "polyline") << " points=\"";
            for (size_t i = 0; i < sh.pts.size(); ++i) {
                std::snprintf(buf, sizeof(buf), "%.3f,%.3f", X(sh.pts[i].x), Y(sh.pts[i].y));
                out << (i ? " " : "") << buf;
            }
            out << "\" fill=\"none\" stroke=\"" << sh.color << "\" stroke-width=\"" << sh.param
                << "\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

void SvgWriter::write(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << document();
}

}  // namespace sympb
