#pragma once

#include <memory>
#include <string>
#include <variant>

#include "sympb/curve.hpp"
#include "sympb/levelset.hpp"
#include "sympb/polygon.hpp"
#include "sympb/sphere.hpp"

namespace sympb {

// Curve descriptions:
//   {"type":"support_fourier","c0":1.0,"coeffs":[[c1,s1],...]}
//   {"type":"ellipse","a":2.0,"b":1.0}
//   {"type":"radon","p":3.0}
// The CLI also accepts the shorthands "circle", "circle(r)", "ellipse(a,b)"
// and "radon(p)" in place of a file path.
std::shared_ptr<PlaneCurve> load_curve_file(const std::string& path);
std::shared_ptr<PlaneCurve> parse_curve_spec(const std::string& spec);

// {"type":"polygon","vertices":[["1/2","0"],...]} with rationals as strings.
ConvexPolygon load_polygon_file(const std::string& path);

// Tables in R^{2n}:
//   {"type":"weighted_sphere","a":[1.0,2.0]}
//   {"type":"level_set_quartic","eps":0.1,"dim":4}
using TableVariant = std::variant<WeightedSphere, std::shared_ptr<LevelSetBody>>;
TableVariant load_table_file(const std::string& path);

// CSV helpers: '.' decimal, '\n' newlines, 17 significant digits.
std::string format_double(double x);

}  // namespace sympb
