#pragma once

#include <vector>

#include "henon/map_family.hpp"

namespace henon {

/// Almost-horizontal curve as a graph {(x_i, y(x_i))} on a uniform x-grid.
/// Derivative estimates come from 3-point stencils on the grid.
struct AdmissibleCurve {
    double x0 = 0.0;  // leftmost grid point
    double h = 0.0;   // grid spacing, > 0
    std::vector<double> ys;
    int generation = 0;

    size_t size() const { return ys.size(); }
    double x_at(size_t i) const { return x0 + static_cast<double>(i) * h; }
    double x_min() const { return x0; }
    double x_max() const { return x_at(ys.size() - 1); }

    bool covers(double x) const { return x >= x_min() && x <= x_max(); }

    double y(double x) const;        // piecewise-quadratic interpolation
    double dy(double x) const;       // first derivative estimate
    double d2y(double x) const;      // second derivative estimate
    Vec2 point(double x) const { return {x, y(x)}; }
    Vec2 tangent(double x) const { return {1.0, dy(x)}; }

    double length() const;           // polyline arc length
};

struct AdmissibleReport {
    bool ok = false;
    double max_dy = 0.0;   // worst |y'|
    double max_d2y = 0.0;  // worst |y''|
};

/// Graph condition |y'| <= 1/10, |y''| <= 1/10 at every interior sample.
AdmissibleReport admissible_check(const AdmissibleCurve& c);

/// Builds a uniform-grid graph from x-sorted points (linear resampling).
AdmissibleCurve resample_graph(const std::vector<Vec2>& pts, double h);

/// Maximal admissible graph pieces of an arbitrary polyline: split into
/// x-monotone runs, resample, then split wherever a derivative bound
/// fails. Pieces shorter than min_len are dropped.
std::vector<AdmissibleCurve> decompose_polyline(const std::vector<Vec2>& poly, double h,
                                                double min_len);

/// One forward image of a polyline with adaptive midpoint insertion so
/// adjacent images stay within max_gap. Points whose image leaves the
/// phase rectangle are dropped (the polyline is cut there).
std::vector<std::vector<Vec2>> iterate_polyline(const ParameterPoint& p,
                                                const std::vector<Vec2>& poly,
                                                double max_gap);

inline std::vector<Vec2> curve_to_polyline(const AdmissibleCurve& c) {
    std::vector<Vec2> out;
    out.reserve(c.size());
    for (size_t i = 0; i < c.size(); ++i) out.push_back({c.x_at(i), c.ys[i]});
    return out;
}

}  // namespace henon
