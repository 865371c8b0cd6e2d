#include "henon/curve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace henon {

namespace {

// Index of the interior stencil center nearest x.
size_t stencil_center(const AdmissibleCurve& c, double x) {
    double t = (x - c.x0) / c.h;
    long i = std::lround(t);
    i = std::max(1L, std::min(static_cast<long>(c.size()) - 2, i));
    return static_cast<size_t>(i);
}

}  // namespace

double AdmissibleCurve::y(double x) const {
    if (ys.size() == 1) return ys[0];
    if (ys.size() == 2) {
        double t = (x - x0) / h;
        return ys[0] + t * (ys[1] - ys[0]);
    }
    size_t i = stencil_center(*this, x);
    // local quadratic through (i-1, i, i+1)
    double t = (x - x_at(i)) / h;
    double a = (ys[i + 1] - 2.0 * ys[i] + ys[i - 1]) / 2.0;
    double b = (ys[i + 1] - ys[i - 1]) / 2.0;
    return ys[i] + b * t + a * t * t;
}

double AdmissibleCurve::dy(double x) const {
    if (ys.size() < 2) return 0.0;
    if (ys.size() == 2) return (ys[1] - ys[0]) / h;
    size_t i = stencil_center(*this, x);
    double t = (x - x_at(i)) / h;
    double a = (ys[i + 1] - 2.0 * ys[i] + ys[i - 1]) / 2.0;
    double b = (ys[i + 1] - ys[i - 1]) / 2.0;
    return (b + 2.0 * a * t) / h;
}

double AdmissibleCurve::d2y(double x) const {
    if (ys.size() < 3) return 0.0;
    size_t i = stencil_center(*this, x);
    return (ys[i + 1] - 2.0 * ys[i] + ys[i - 1]) / (h * h);
}

double AdmissibleCurve::length() const {
    double s = 0.0;
    for (size_t i = 0; i + 1 < ys.size(); ++i) s += std::hypot(h, ys[i + 1] - ys[i]);
    return s;
}

AdmissibleReport admissible_check(const AdmissibleCurve& c) {
    AdmissibleReport r;
    if (c.size() < 2) return r;
    for (size_t i = 1; i + 1 < c.size(); ++i) {
        double d1 = (c.ys[i + 1] - c.ys[i - 1]) / (2.0 * c.h);
        double d2 = (c.ys[i + 1] - 2.0 * c.ys[i] + c.ys[i - 1]) / (c.h * c.h);
        r.max_dy = std::max(r.max_dy, std::abs(d1));
        r.max_d2y = std::max(r.max_d2y, std::abs(d2));
    }
    if (c.size() == 2) r.max_dy = std::abs(c.ys[1] - c.ys[0]) / c.h;
    r.ok = r.max_dy <= 0.1 && r.max_d2y <= 0.1;
    return r;
}

AdmissibleCurve resample_graph(const std::vector<Vec2>& pts, double h) {
    if (pts.size() < 2) throw std::invalid_argument("resample_graph: need >= 2 points");
    AdmissibleCurve c;
    c.h = h;
    c.x0 = pts.front().x;
    double x_end = pts.back().x;
    size_t n = static_cast<size_t>(std::floor((x_end - c.x0) / h)) + 1;
    c.ys.reserve(n);
    size_t j = 0;
    for (size_t i = 0; i < n; ++i) {
        double x = c.x0 + static_cast<double>(i) * h;
        while (j + 2 < pts.size() && pts[j + 1].x <= x) ++j;
        double t = (x - pts[j].x) / (pts[j + 1].x - pts[j].x);
        t = std::clamp(t, 0.0, 1.0);
        c.ys.push_back(pts[j].y + t * (pts[j + 1].y - pts[j].y));
    }
    return c;
}

std::vector<AdmissibleCurve> decompose_polyline(const std::vector<Vec2>& poly, double h,
                                                double min_len) {
    std::vector<AdmissibleCurve> out;
    if (poly.size() < 2) return out;

    // split into maximal x-monotone runs
    size_t run_start = 0;
    auto flush = [&](size_t lo, size_t hi) {
        if (hi - lo < 1) return;
        std::vector<Vec2> run(poly.begin() + static_cast<long>(lo),
                              poly.begin() + static_cast<long>(hi) + 1);
        if (run.front().x > run.back().x) std::reverse(run.begin(), run.end());
        if (run.back().x - run.front().x < 2.0 * h) return;
        AdmissibleCurve g = resample_graph(run, h);

        // split at samples violating the derivative bounds
        size_t piece_start = 0;
        auto emit = [&](size_t a, size_t b) {
            if (b <= a + 1) return;
            AdmissibleCurve piece;
            piece.h = g.h;
            piece.x0 = g.x_at(a);
            piece.ys.assign(g.ys.begin() + static_cast<long>(a),
                            g.ys.begin() + static_cast<long>(b) + 1);
            if (piece.length() >= min_len && admissible_check(piece).ok)
                out.push_back(std::move(piece));
        };
        for (size_t i = 1; i + 1 < g.size(); ++i) {
            double d1 = std::abs(g.ys[i + 1] - g.ys[i - 1]) / (2.0 * g.h);
            double d2 = std::abs(g.ys[i + 1] - 2.0 * g.ys[i] + g.ys[i - 1]) / (g.h * g.h);
            if (d1 > 0.1 || d2 > 0.1) {
                emit(piece_start, i);
                piece_start = i;
            }
        }
        emit(piece_start, g.size() - 1);
    };

    int dir = 0;
    for (size_t i = 1; i < poly.size(); ++i) {
        int d = poly[i].x > poly[i - 1].x ? 1 : (poly[i].x < poly[i - 1].x ? -1 : 0);
        if (d == 0) continue;
        if (dir == 0) dir = d;
        if (d != dir) {
            flush(run_start, i - 1);
            run_start = i - 1;
            dir = d;
        }
    }
    flush(run_start, poly.size() - 1);
    return out;
}

std::vector<std::vector<Vec2>> iterate_polyline(const ParameterPoint& p,
                                                const std::vector<Vec2>& poly,
                                                double max_gap) {
    std::vector<std::vector<Vec2>> pieces;
    std::vector<Vec2> cur;
    auto close_piece = [&]() {
        if (cur.size() >= 2) pieces.push_back(std::move(cur));
        cur.clear();
    };

    for (size_t i = 0; i + 1 < poly.size(); ++i) {
        Vec2 a = poly[i], b = poly[i + 1];
        Vec2 fa = apply_2d(p, a);
        if (!in_phase_rectangle(fa)) {
            close_piece();
            continue;
        }
        if (cur.empty()) cur.push_back(fa);

        // adaptive subdivision of [a, b] so image gaps stay below max_gap
        struct Seg { Vec2 a, b; Vec2 fa, fb; int depth; };
        Vec2 fb = apply_2d(p, b);
        std::vector<Seg> stack{{a, b, fa, fb, 0}};
        while (!stack.empty()) {
            Seg s = stack.back();
            stack.pop_back();
            bool b_in = in_phase_rectangle(s.fb);
            if ((dist(s.fa, s.fb) <= max_gap && b_in) || s.depth >= 24) {
                if (b_in) {
                    cur.push_back(s.fb);
                } else {
                    close_piece();
                }
                continue;
            }
            Vec2 m = (s.a + s.b) / 2.0;
            Vec2 fm = apply_2d(p, m);
            stack.push_back({m, s.b, fm, s.fb, s.depth + 1});
            stack.push_back({s.a, m, s.fa, fm, s.depth + 1});
        }
    }
    close_piece();
    return pieces;
}

}  // namespace henon
