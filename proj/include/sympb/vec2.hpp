#pragma once

#include <cmath>

namespace sympb {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
inline Vec2 operator*(double c, Vec2 a) { return {c * a.x, c * a.y}; }
inline Vec2 operator*(Vec2 a, double c) { return {c * a.x, c * a.y}; }
inline Vec2 operator/(Vec2 a, double c) { return {a.x / c, a.y / c}; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

// Oriented area form: cross(a,b) = a_x b_y - a_y b_x.
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double norm2(Vec2 a) { return a.x * a.x + a.y * a.y; }

inline Vec2 normalized(Vec2 a) {
    double n = norm(a);
    return {a.x / n, a.y / n};
}

// Rotation by +90 degrees (multiplication by i).
inline Vec2 rot90(Vec2 a) { return {-a.y, a.x}; }

// Rotation by -90 degrees; takes the unit tangent of a positively
// oriented curve to the outward normal.
inline Vec2 rot270(Vec2 a) { return {a.y, -a.x}; }

}  // namespace sympb
