#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace henon {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }

    double norm() const { return std::hypot(x, y); }
    double norm2() const { return x * x + y * y; }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }
inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double dist(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

inline Vec2 normalized(const Vec2& v) {
    double n = v.norm();
    if (n == 0.0) throw std::domain_error("normalized: zero vector");
    return v / n;
}

/// Unsigned angle between the *lines* spanned by a and b, in [0, pi/2].
inline double line_angle(const Vec2& a, const Vec2& b) {
    double c = std::abs(dot(a, b));
    double s = std::abs(cross(a, b));
    return std::atan2(s, c);
}

/// Unsigned angle between vectors, in [0, pi].
inline double vec_angle(const Vec2& a, const Vec2& b) {
    return std::atan2(std::abs(cross(a, b)), dot(a, b));
}

/// Column-major-free tiny 2x2 matrix; row-wise fields.
struct Mat2 {
    double a = 0.0, b = 0.0;  // row 0
    double c = 0.0, d = 0.0;  // row 1

    Mat2() = default;
    Mat2(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {}

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    Vec2 operator*(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    Mat2 operator*(const Mat2& m) const {
        return {a * m.a + b * m.c, a * m.b + b * m.d,
                c * m.a + d * m.c, c * m.b + d * m.d};
    }
    Mat2 operator*(double s) const { return {a * s, b * s, c * s, d * s}; }
    Mat2 operator/(double s) const { return {a / s, b / s, c / s, d / s}; }

    double det() const { return a * d - b * c; }
    double max_abs() const {
        return std::max(std::max(std::abs(a), std::abs(b)),
                        std::max(std::abs(c), std::abs(d)));
    }
};

/// 2x2 matrix with a separate log-scale factor, so products along long
/// orbits neither overflow nor underflow. The stored matrix is kept with
/// max-entry O(1); the true matrix is m * exp(log_scale).
struct ScaledMat2 {
    Mat2 m = Mat2::identity();
    double log_scale = 0.0;

    void accumulate(const Mat2& j) {
        m = j * m;
        double s = m.max_abs();
        if (s > 0.0 && (s > 1e8 || s < 1e-8)) {
            m = m / s;
            log_scale += std::log(s);
        }
    }

    /// log ||M v|| for a unit vector v.
    double log_image_norm(const Vec2& v) const {
        double n = (m * v).norm();
        if (n == 0.0) return -std::numeric_limits<double>::infinity();
        return std::log(n) + log_scale;
    }
};

/// Closed parameter interval with exact double endpoints. Set operations
/// in the exclusion machinery use half-open [lo, hi) semantics so that
/// subtraction at shared endpoints is exact.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double length() const { return hi - lo; }
    bool empty() const { return !(lo < hi); }
    bool contains(double a) const { return lo <= a && a < hi; }
};

/// Disjoint sorted union of half-open intervals.
class IntervalSet {
public:
    IntervalSet() = default;
    explicit IntervalSet(Interval iv) {
        if (!iv.empty()) parts_.push_back(iv);
    }

    const std::vector<Interval>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    double measure() const {
        double s = 0.0;
        for (const auto& p : parts_) s += p.length();
        return s;
    }

    bool contains(double a) const {
        for (const auto& p : parts_)
            if (p.contains(a)) return true;
        return false;
    }

    /// True iff [lo, hi) meets the set.
    bool intersects(const Interval& iv) const {
        for (const auto& p : parts_)
            if (p.lo < iv.hi && iv.lo < p.hi) return true;
        return false;
    }

    /// Lowest point of the set inside [iv.lo, iv.hi), or NaN.
    double lowest_in(const Interval& iv) const {
        for (const auto& p : parts_) {
            if (p.lo >= iv.hi) break;
            if (p.hi <= iv.lo) continue;
            return std::max(p.lo, iv.lo);
        }
        return std::numeric_limits<double>::quiet_NaN();
    }

    void add(Interval iv) {
        if (iv.empty()) return;
        parts_.push_back(iv);
        normalize();
    }

    void subtract(const Interval& iv) {
        if (iv.empty()) return;
        std::vector<Interval> out;
        out.reserve(parts_.size() + 1);
        for (const auto& p : parts_) {
            if (iv.hi <= p.lo || p.hi <= iv.lo) {
                out.push_back(p);
                continue;
            }
            if (p.lo < iv.lo) out.push_back({p.lo, iv.lo});
            if (iv.hi < p.hi) out.push_back({iv.hi, p.hi});
        }
        parts_ = std::move(out);
    }

    bool operator==(const IntervalSet& o) const {
        if (parts_.size() != o.parts_.size()) return false;
        for (size_t i = 0; i < parts_.size(); ++i)
            if (parts_[i].lo != o.parts_[i].lo || parts_[i].hi != o.parts_[i].hi)
                return false;
        return true;
    }

private:
    void normalize() {
        std::sort(parts_.begin(), parts_.end(),
                  [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
        std::vector<Interval> out;
        for (const auto& p : parts_) {
            if (p.empty()) continue;
            if (!out.empty() && p.lo <= out.back().hi)
                out.back().hi = std::max(out.back().hi, p.hi);
            else
                out.push_back(p);
        }
        parts_ = std::move(out);
    }

    std::vector<Interval> parts_;
};

}  // namespace henon
