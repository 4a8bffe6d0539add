#pragma once

#include <string>
#include <vector>

#include "sympb/vec2.hpp"

namespace sympb {

// Minimal deterministic SVG writer: fixed canvas, data fitted into the
// viewport with a uniform scale.
class SvgWriter {
public:
    SvgWriter(double width = 640.0, double height = 640.0) : w_(width), h_(height) {}

    void polyline(std::vector<Vec2> pts, const std::string& color, double stroke_width,
                  bool closed = false);
    void dots(std::vector<Vec2> pts, const std::string& color, double radius);

    std::string document() const;
    void write(const std::string& path) const;

private:
    struct Shape {
        bool is_dots = false;
        bool closed = false;
        std::vector<Vec2> pts;
        std::string color;
        double param = 1.0;
    };
    double w_, h_;
    std::vector<Shape> shapes_;
};

}  // namespace sympb
