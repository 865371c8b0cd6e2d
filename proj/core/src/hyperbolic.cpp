#include "henon/hyperbolic.hpp"

#include <cmath>

namespace henon {

namespace {

constexpr double kConformalGap = 1e-8;

// Canonical projective representatives: e with e.y >= 0 (ties: e.x >= 0),
// f with f.x >= 0 (ties: f.y >= 0).
Vec2 canon_e(Vec2 v) {
    if (v.y < 0.0 || (v.y == 0.0 && v.x < 0.0)) return {-v.x, -v.y};
    return v;
}
Vec2 canon_f(Vec2 v) {
    if (v.x < 0.0 || (v.x == 0.0 && v.y < 0.0)) return {-v.x, -v.y};
    return v;
}

HyperbolicFrame frame_from_entries(const Mat2& m, double log_scale) {
    const double A = m.a, B = m.b, C = m.c, D = m.d;
    const double num = 2.0 * (A * B + C * D);
    const double den = A * A + C * C - B * B - D * D;

    // sigma1^2 - sigma2^2 = hypot(den, num); sigma1^2 + sigma2^2 = F.
    const double F = A * A + B * B + C * C + D * D;
    const double G = std::hypot(den, num);
    // sigma1/sigma2 <= 1 + 1e-8  <=>  G/F below the matching gap.
    const double q = 1.0 + kConformalGap;
    const double gap = (q * q - 1.0) / (q * q + 1.0);
    if (!(G > gap * F)) throw UndefinedFrame{std::sqrt((F + G) / std::max(F - G, 1e-300))};

    const double theta = 0.5 * std::atan2(num, den);
    Vec2 u{std::cos(theta), std::sin(theta)};
    Vec2 v{-std::sin(theta), std::cos(theta)};
    double nu = (m * u).norm();
    double nv = (m * v).norm();
    if (nu < nv) {
        std::swap(u, v);
        std::swap(nu, nv);
    }

    HyperbolicFrame fr;
    fr.f = canon_f(u);
    fr.e = canon_e(v);
    fr.log_expansion = (nu > 0.0 ? std::log(nu) : -std::numeric_limits<double>::infinity()) + log_scale;
    fr.log_contraction = (nv > 0.0 ? std::log(nv) : -std::numeric_limits<double>::infinity()) + log_scale;
    fr.expansion = std::exp(fr.log_expansion);
    fr.contraction = std::exp(fr.log_contraction);
    return fr;
}

}  // namespace

ScaledMat2 jac_product(const ParameterPoint& p, const PhasePoint& z0, int k) {
    ScaledMat2 acc;
    PhasePoint z = z0;
    for (int i = 0; i < k; ++i) {
        acc.accumulate(jacobian(p, z));
        z = apply_2d(p, z);
        if (!in_phase_rectangle(z) && i + 1 < k) throw OrbitEscape{i + 1};
    }
    return acc;
}

Mat2 jac_product_plain(const ParameterPoint& p, const PhasePoint& z0, int k) {
    Mat2 acc = Mat2::identity();
    PhasePoint z = z0;
    for (int i = 0; i < k; ++i) {
        acc = jacobian(p, z) * acc;
        z = apply_2d(p, z);
    }
    return acc;
}

HyperbolicFrame frame_from_product(const Mat2& m) { return frame_from_entries(m, 0.0); }

HyperbolicFrame frame_from_product(const ScaledMat2& m) {
    return frame_from_entries(m.m, m.log_scale);
}

HyperbolicFrame frame_at(const ParameterPoint& p, const PhasePoint& z0, int k) {
    HyperbolicFrame fr = frame_from_product(jac_product(p, z0, k));
    fr.order = k;
    fr.base = z0;
    return fr;
}

double successive_angle(const ParameterPoint& p, const PhasePoint& z0, int k) {
    HyperbolicFrame a = frame_at(p, z0, k);
    HyperbolicFrame b = frame_at(p, z0, k + 1);
    return line_angle(a.e, b.e);
}

std::pair<double, double> log_image_frame_norms(const ParameterPoint& p,
                                                const PhasePoint& z0, int k, int j) {
    HyperbolicFrame fr = frame_at(p, z0, k);
    ScaledMat2 mj = jac_product(p, z0, j);
    return {mj.log_image_norm(fr.f), mj.log_image_norm(fr.e)};
}

StableLeafSegment integrate_stable_leaf(const ParameterPoint& p, const PhasePoint& z0,
                                        int k, double radius, double step) {
    StableLeafSegment leaf;
    leaf.order = k;

    auto field = [&](const PhasePoint& z, const Vec2& prev) -> Vec2 {
        Vec2 e = frame_at(p, z, k).e;
        // keep orientation continuous along the integration
        if (dot(e, prev) < 0.0) e = {-e.x, -e.y};
        return e;
    };

    auto integrate_side = [&](double sign, std::vector<PhasePoint>& out) {
        try {
            Vec2 dir0 = frame_at(p, z0, k).e;
            Vec2 dir = {sign * dir0.x, sign * dir0.y};
            PhasePoint z = z0;
            double s = 0.0;
            while (s + step <= radius + 1e-15) {
                Vec2 k1 = field(z, dir);
                Vec2 k2 = field(z + (step / 2.0) * k1, k1);
                Vec2 k3 = field(z + (step / 2.0) * k2, k2);
                Vec2 k4 = field(z + step * k3, k3);
                Vec2 d = (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0;
                z = z + step * d;
                dir = field(z, dir);
                s += step;
                out.push_back(z);
            }
        } catch (const UndefinedFrame&) {
            leaf.partial = true;
        } catch (const OrbitEscape&) {
            leaf.partial = true;
        }
    };

    std::vector<PhasePoint> fwd, bwd;
    integrate_side(+1.0, fwd);
    integrate_side(-1.0, bwd);

    leaf.points.reserve(fwd.size() + bwd.size() + 1);
    for (auto it = bwd.rbegin(); it != bwd.rend(); ++it) leaf.points.push_back(*it);
    leaf.points.push_back(z0);
    for (const auto& z : fwd) leaf.points.push_back(z);

    leaf.tangent_residual.assign(leaf.points.size(), 0.0);
    for (size_t i = 0; i + 1 < leaf.points.size(); ++i) {
        if (i == 0) continue;
        Vec2 t = leaf.points[i + 1] - leaf.points[i - 1];
        try {
            Vec2 e = frame_at(p, leaf.points[i], k).e;
            leaf.tangent_residual[i] = line_angle(t, e);
        } catch (const UndefinedFrame&) {
            leaf.partial = true;
        }
    }
    return leaf;
}

}  // namespace henon
