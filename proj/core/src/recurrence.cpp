#include "henon/recurrence.hpp"

#include <cmath>

namespace henon {

bool bound_member(const BoundNeighborhoodSpec& spec, const PhasePoint& xi0, int j,
                  const ParameterPoint& p) {
    if (j >= static_cast<int>(spec.center_orbit.size()))
        throw std::invalid_argument("bound_member: center orbit too short");
    PhasePoint xi = xi0;
    for (int i = 0; i <= j; ++i) {
        double tube = std::exp(-2.0 * spec.alpha * i) + spec.slack();
        if (dist(xi, spec.center_orbit[static_cast<size_t>(i)]) > tube) return false;
        if (i < j) {
            xi = apply_2d(p, xi);
            if (!in_phase_rectangle(xi)) throw OrbitEscape{i + 1};
        }
    }
    return true;
}

Capture capture_binding_point(const ParameterPoint& p, UnstableManifold& wu,
                              const PhasePoint& z_nu, int nu, const ConstantBudget& budget,
                              int g_max) {
    const double theta_nu = budget.theta(p.b) * nu;
    std::optional<Capture> best;

    for (int g = 0; g <= g_max; ++g) {
        if (g > 0 && static_cast<double>(g) > theta_nu) break;
        double vgate = p.b > 0.0 ? std::exp(budget.capture_c * g * std::log(p.b)) : (g == 0 ? 1.0 : 0.0);

        // sheet of generation g vertically closest to z_nu over Delta
        int best_piece = -1;
        double best_v = std::numeric_limits<double>::infinity();
        for (int idx : wu.pieces_of_generation(g)) {
            const auto& piece = wu.piece(idx);
            if (!(piece.curve.x_min() < -budget.delta && piece.curve.x_max() > budget.delta))
                continue;
            if (!piece.curve.covers(z_nu.x)) continue;
            double v = std::abs(piece.curve.y(z_nu.x) - z_nu.y);
            if (v < best_v) {
                best_v = v;
                best_piece = idx;
            }
        }
        if (best_piece < 0 || best_v > vgate) continue;

        std::optional<CriticalRecord> zeta;
        try {
            zeta = find_tangency(p, wu.piece(best_piece).curve, std::max(nu, 1), -budget.delta,
                                 budget.delta, budget);
        } catch (const NonAdmissibleConfiguration&) {
            continue;
        } catch (const UndefinedFrame&) {
            continue;
        }
        if (!zeta) continue;
        zeta->generation = g;
        zeta->host = best_piece;

        Capture cap;
        cap.zeta = *zeta;
        cap.generation = g;
        cap.vertical_dist = best_v;
        cap.horizontal_dist = std::abs(z_nu.x - zeta->location.x);
        cap.host_piece = best_piece;
        best = cap;  // keep the largest qualifying generation
    }

    if (!best) throw CaptureFailure{nu};
    return *best;
}

double critical_distance(const ParameterPoint& p, const PhasePoint& z_nu,
                         const PhasePoint& zeta, const BoundNeighborhoodSpec& spec, int nu) {
    double d = dist(z_nu, zeta);
    if (spec.center_orbit.empty() || nu <= 0) return d;

    // 4 extreme points of the bound neighborhood around the orbit start,
    // pushed forward nu steps (5-point sample including the center)
    double r0 = 1.0 + spec.slack();
    const Vec2 dirs[4] = {{r0, 0.0}, {-r0, 0.0}, {0.0, r0}, {0.0, -r0}};
    for (const auto& dv : dirs) {
        PhasePoint xi = spec.center_orbit[0] + dv;
        bool ok = true;
        for (int i = 0; i < nu; ++i) {
            xi = apply_2d(p, xi);
            if (!in_phase_rectangle(xi)) {
                ok = false;
                break;
            }
        }
        if (ok) d = std::min(d, dist(xi, zeta));
    }
    return d;
}

int binding_period(const ParameterPoint& p, const PhasePoint& z_nu, const PhasePoint& zeta,
                   const ConstantBudget& budget, int horizon) {
    auto member = [&](int k) {
        PhasePoint xi = z_nu, ze = zeta;
        for (int i = 0; i <= k; ++i) {
            xi = apply_2d(p, xi);
            ze = apply_2d(p, ze);
            if (!in_phase_rectangle(xi) || !in_phase_rectangle(ze)) return false;
            double tube = std::exp(-2.0 * budget.alpha * i) + std::pow(10.0, -k);
            if (dist(xi, ze) > tube) return false;
        }
        return true;
    };

    if (horizon < 1) throw BindingOverrun{1};
    if (member(horizon)) throw BindingOverrun{horizon + 1};
    if (!member(1)) return 1;

    int lo = 1, hi = horizon;  // member(lo), !member(hi)
    while (hi - lo > 1) {
        int mid = lo + (hi - lo) / 2;
        if (member(mid))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

EgResult check_EG(const ParameterPoint& p, const PhasePoint& xi0, const TangentVector& w0,
                  int k, double kappa) {
    if (slope_of(w0) > 0.1) throw std::invalid_argument("check_EG: slope(w0) > 1/10");
    EgResult res;
    res.margins.reserve(static_cast<size_t>(k) + 1);
    res.margins.push_back(0.0);  // j = 0, unit vector

    Vec2 w = normalized(w0);
    double log_norm = 0.0;
    PhasePoint z = xi0;
    res.ok = true;
    for (int j = 1; j <= k; ++j) {
        w = jacobian(p, z) * w;
        double n = w.norm();
        if (n == 0.0) {
            res.ok = false;
            res.margins.push_back(-std::numeric_limits<double>::infinity());
            break;
        }
        log_norm += std::log(n);
        w = w / n;
        z = apply_2d(p, z);
        if (!in_phase_rectangle(z) && j < k) throw OrbitEscape{j};
        double margin = log_norm - kappa * j;
        res.margins.push_back(margin);
        if (margin < 0.0) res.ok = false;
    }
    return res;
}

BdResult check_BD(const ParameterPoint& p, const PhasePoint& xi0, const PhasePoint& eta0,
                  int j, const ConstantBudget& budget, double d0) {
    BdResult r;
    if (j == 0) {
        r.ok = true;
        return r;
    }
    auto fj_log = [&](const PhasePoint& z0) {
        HyperbolicFrame fr = frame_at(p, z0, j);
        ScaledMat2 m = jac_product(p, z0, j);
        Vec2 img = m.m * fr.f;
        return std::make_pair(m.log_image_norm(fr.f), normalized(img));
    };
    auto [lx, fx] = fj_log(xi0);
    auto [le, fe] = fj_log(eta0);

    double sum = 0.0;
    PhasePoint xi = xi0, eta = eta0;
    for (int i = 0; i < j; ++i) {
        sum += dist(xi, eta) * std::exp(budget.alpha * i);
        xi = apply_2d(p, xi);
        eta = apply_2d(p, eta);
    }
    r.log_ratio = std::abs(lx - le);
    r.ratio_bound = d0 * sum;
    r.angle = line_angle(fx, fe);
    r.angle_bound = d0 * dist(xi, eta) * std::exp(budget.alpha * j);
    r.ok = r.log_ratio <= r.ratio_bound + 1e-15 && r.angle <= r.angle_bound + 1e-15;
    return r;
}

GrowthResult growth_after_binding(const ParameterPoint& p, const PhasePoint& xi_nu,
                                  const TangentVector& w_nu, int p_len, double d,
                                  const ConstantBudget& budget) {
    GrowthResult g;
    Vec2 w = normalized(w_nu);
    double log_norm = 0.0;
    PhasePoint z = xi_nu;
    for (int i = 0; i <= p_len; ++i) {
        w = jacobian(p, z) * w;
        double n = w.norm();
        log_norm += std::log(n);
        w = w / n;
        z = apply_2d(p, z);
        if (!in_phase_rectangle(z)) break;
    }
    g.factor = std::exp(log_norm);
    g.bound_d = std::exp(-budget.kappa1() * std::log(d));
    g.bound_p = std::exp(budget.kappa2() * p_len);
    g.post_slope = slope_of(w);
    g.ok = g.factor >= std::max(g.bound_d, g.bound_p);
    return g;
}

}  // namespace henon
