#include "henon/critical.hpp"

#include <cmath>
#include <stdexcept>

namespace henon {

namespace {

// Eigenvector of the larger-|eigenvalue| direction of J(P).
Vec2 unstable_eigendirection(const ParameterPoint& p, const PhasePoint& fp) {
    Mat2 j = jacobian(p, fp);
    double tr = j.a + j.d;
    double disc = std::sqrt(std::max(tr * tr - 4.0 * j.det(), 0.0));
    double l1 = (tr + disc) / 2.0;
    double l2 = (tr - disc) / 2.0;
    double lu = std::abs(l1) >= std::abs(l2) ? l1 : l2;
    Vec2 v = std::abs(j.b) > 1e-300 ? Vec2{j.b, lu - j.a} : Vec2{lu - j.d, j.c};
    if (v.norm() == 0.0) v = {1.0, 0.0};
    return normalized(v);
}

}  // namespace

UnstableManifold::UnstableManifold(const ParameterPoint& p, double grid_h,
                                   double max_total_points)
    : p_(p), grid_h_(grid_h), max_points_(max_total_points) {
    fp_ = fixed_point(p);
    Vec2 vu = unstable_eigendirection(p, fp_);

    // seed segment along the unstable direction, then iterate until the
    // admissible piece through P crosses Delta on the left
    const double eps = 1e-4;
    std::vector<Vec2> cur;
    for (int i = -16; i <= 16; ++i) cur.push_back(fp_ + (eps * i / 16.0) * vu);

    bool found = false;
    for (int g = 0; g < 64 && !found; ++g) {
        auto images = iterate_polyline(p_, cur, grid_h_ * 4.0);
        // keep the piece containing P
        const std::vector<Vec2>* best = nullptr;
        double best_d = 1e9;
        for (const auto& piece : images) {
            for (const auto& q : piece) {
                double d = dist(q, fp_);
                if (d < best_d) {
                    best_d = d;
                    best = &piece;
                }
            }
        }
        if (!best) throw std::runtime_error("unstable manifold lost the fixed point");
        cur = *best;

        for (const auto& piece : decompose_polyline(cur, grid_h_, 4.0 * grid_h_)) {
            if (piece.covers(fp_.x) && piece.x_min() < -0.05 && piece.x_max() > fp_.x) {
                w_ = piece;
                found = true;
                break;
            }
        }
    }
    if (!found) throw std::runtime_error("failed to grow W across Delta");

    // trim to length <~ 2 around the strip and P
    double lo = std::max(w_.x_min(), -1.0);
    size_t i0 = static_cast<size_t>(std::ceil((lo - w_.x0) / w_.h));
    if (i0 > 0) {
        w_.ys.erase(w_.ys.begin(), w_.ys.begin() + static_cast<long>(i0));
        w_.x0 += static_cast<double>(i0) * w_.h;
    }
    w_.generation = 0;

    frontier_.push_back(curve_to_polyline(w_));
    by_gen_.push_back({});
    pieces_.push_back({w_, 0});
    by_gen_[0].push_back(0);
    gens_stored_ = 0;
}

void UnstableManifold::grow_to(int g) {
    while (gens_stored_ < g) {
        size_t budget_used = 0;
        for (const auto& f : frontier_) budget_used += f.size();
        if (static_cast<double>(budget_used) > max_points_) return;

        std::vector<std::vector<Vec2>> next;
        for (const auto& f : frontier_) {
            auto images = iterate_polyline(p_, f, grid_h_ * 4.0);
            for (auto& im : images) next.push_back(std::move(im));
        }
        frontier_ = std::move(next);
        ++gens_stored_;
        by_gen_.push_back({});
        for (const auto& f : frontier_) {
            for (auto& piece : decompose_polyline(f, grid_h_, 4.0 * grid_h_)) {
                piece.generation = gens_stored_;
                pieces_.push_back({piece, gens_stored_});
                by_gen_[static_cast<size_t>(gens_stored_)].push_back(
                    static_cast<int>(pieces_.size()) - 1);
            }
        }
    }
}

std::vector<int> UnstableManifold::pieces_of_generation(int g) {
    grow_to(g);
    if (g < 0 || g >= static_cast<int>(by_gen_.size())) return {};
    return by_gen_[static_cast<size_t>(g)];
}

std::unique_ptr<UnstableManifold> unstable_segment(const ParameterPoint& p, int iterates,
                                                   double grid_h, double max_total_points) {
    auto wu = std::make_unique<UnstableManifold>(p, grid_h, max_total_points);
    wu->pieces_of_generation(iterates);
    return wu;
}

double tangency_mismatch(const ParameterPoint& p, const AdmissibleCurve& c, double x, int k) {
    PhasePoint z = c.point(x);
    Vec2 t_img = jacobian(p, z) * c.tangent(x);
    PhasePoint z0 = apply_2d(p, z);
    Vec2 e = frame_at(p, z0, k).e;
    double psi = std::atan2(cross(e, t_img), dot(e, t_img));
    if (psi > M_PI / 2.0) psi -= M_PI;
    if (psi <= -M_PI / 2.0) psi += M_PI;
    return psi;
}

std::optional<CriticalRecord> find_tangency(const ParameterPoint& p, const AdmissibleCurve& c,
                                            int k, double xa, double xb,
                                            const ConstantBudget& budget) {
    xa = std::max(xa, c.x_min());
    xb = std::min(xb, c.x_max());
    if (!(xa < xb)) return std::nullopt;

    const int n_samples = 65;
    std::vector<double> xs(n_samples), mu(n_samples);
    for (int i = 0; i < n_samples; ++i) {
        xs[i] = xa + (xb - xa) * i / (n_samples - 1);
        mu[i] = tangency_mismatch(p, c, xs[i], k);
    }

    int changes = 0;
    int bracket = -1;
    for (int i = 0; i + 1 < n_samples; ++i) {
        if (mu[i] == 0.0 || (mu[i] < 0.0) != (mu[i + 1] < 0.0)) {
            if (mu[i] != 0.0 || i == 0) ++changes;
            if (bracket < 0) bracket = i;
        }
    }
    if (changes == 0) return std::nullopt;
    if (changes > 1) throw NonAdmissibleConfiguration{changes};

    double lo = xs[bracket], hi = xs[bracket + 1];
    double flo = mu[bracket];
    double mid = 0.5 * (lo + hi), fmid = 0.0;
    for (int it = 0; it < 200; ++it) {
        mid = 0.5 * (lo + hi);
        fmid = tangency_mismatch(p, c, mid, k);
        if (std::abs(fmid) < 1e-12 || hi - lo < 1e-15 * std::max(1.0, std::abs(mid))) break;
        if ((fmid < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    // one secant polish when the mismatch is smooth across the bracket
    double fscale = std::max(std::abs(mu[bracket]), std::abs(mu[bracket + 1]));
    if (std::abs(fmid) < 0.1 * fscale && std::abs(fmid) > 0.0) {
        double x2 = mid + (hi - lo);
        if (x2 <= c.x_max() && x2 >= c.x_min()) {
            double f2 = tangency_mismatch(p, c, x2, k);
            if (f2 != fmid) {
                double xn = mid - fmid * (x2 - mid) / (f2 - fmid);
                if (xn > lo && xn < hi) mid = xn;
            }
        }
    }

    CriticalRecord rec;
    rec.order = k;
    rec.generation = c.generation;
    rec.location = c.point(mid);
    rec.value = apply_2d(p, rec.location);

    // quadratic coefficient of the f-component of Phi(c) - value around
    // the tangency; the e-relative height is degenerate at b = 0
    HyperbolicFrame fr = frame_at(p, rec.value, k);
    double eta = std::max(4.0 * c.h, 1e-7);
    auto ucomp = [&](double x) {
        return dot(apply_2d(p, c.point(x)) - rec.value, fr.f);
    };
    double q = std::abs(ucomp(mid + eta) - 2.0 * ucomp(mid) + ucomp(mid - eta)) / (eta * eta) / 2.0;
    rec.tangency_curvature = q;
    (void)budget;
    return rec;
}

CriticalRecord refine_critical(const ParameterPoint& p, const AdmissibleCurve& host,
                               const CriticalRecord& rec, int k_new,
                               const ConstantBudget& budget) {
    if (k_new != rec.order + 1)
        throw std::invalid_argument("refine_critical: k_new must be order+1");

    double win = std::max(8.0 * host.h, 1e-3);
    if (p.b > 0.0) {
        double drift = std::exp(static_cast<double>(rec.order) * std::log(p.b));
        win = std::max(std::min(win, 1e4 * drift), 8.0 * host.h);
    }
    auto next = find_tangency(p, host, k_new, rec.location.x - win, rec.location.x + win, budget);
    if (!next) throw std::runtime_error("refine_critical: tangency lost");
    CriticalRecord out = *next;
    out.generation = rec.generation;
    out.host = rec.host;
    out.ancestors = rec.ancestors;
    out.ancestors.push_back({rec.order, rec.location});
    return out;
}

long long cardinality_cap(int k, double theta_k, const ConstantBudget& budget) {
    (void)k;
    double log_cap = theta_k * std::log(5.0 / budget.rho);
    if (log_cap > 62.0 * std::log(2.0)) return std::numeric_limits<long long>::max();
    return static_cast<long long>(std::floor(std::exp(log_cap)));
}

std::vector<CriticalRecord> spawn_new_critical(const ParameterPoint& p, UnstableManifold& wu,
                                               CriticalCatalog& catalog, int g_new,
                                               const ConstantBudget& budget) {
    std::vector<CriticalRecord> added;
    const double theta_k = budget.theta(p.b) * catalog.order;
    const double spacing = 2.0 * std::exp(theta_k * std::log(budget.rho));

    for (int idx : wu.pieces_of_generation(g_new)) {
        const auto& piece = wu.piece(idx);
        if (!(piece.curve.x_min() < -budget.delta && piece.curve.x_max() > budget.delta))
            continue;
        std::optional<CriticalRecord> cand;
        try {
            cand = find_tangency(p, piece.curve, catalog.order, -budget.delta, budget.delta,
                                 budget);
        } catch (const NonAdmissibleConfiguration&) {
            continue;
        } catch (const UndefinedFrame&) {
            continue;
        }
        if (!cand) continue;
        cand->generation = g_new;
        cand->host = idx;

        // spacing gate, intrinsic metric: only same-host records compete
        bool ok = true;
        double nearest = std::numeric_limits<double>::infinity();
        for (const auto& r : catalog.records) {
            double d = dist(r.location, cand->location);
            nearest = std::min(nearest, d);
            if (r.host == cand->host && std::abs(r.location.x - cand->location.x) < spacing)
                ok = false;
        }
        // proximity to the previous catalog (coarse gate; the nested
        // bound-neighborhood check is the real one downstream)
        if (!catalog.records.empty() && nearest > std::exp(-2.0 * budget.alpha) * 10.0)
            ok = false;
        if (!ok) continue;

        if (!catalog.records.empty()) {
            const CriticalRecord* near = &catalog.records[0];
            for (const auto& r : catalog.records)
                if (dist(r.location, cand->location) < dist(near->location, cand->location))
                    near = &r;
            cand->ancestors = near->ancestors;
            cand->ancestors.push_back({near->order, near->location});
        }
        catalog.records.push_back(*cand);
        added.push_back(*cand);
    }

    catalog.min_spacing = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < catalog.records.size(); ++i)
        for (size_t j = i + 1; j < catalog.records.size(); ++j)
            if (catalog.records[i].host == catalog.records[j].host)
                catalog.min_spacing =
                    std::min(catalog.min_spacing,
                             std::abs(catalog.records[i].location.x -
                                      catalog.records[j].location.x));

    long long cap = cardinality_cap(catalog.order, theta_k, budget);
    if (static_cast<long long>(catalog.records.size()) > cap)
        throw std::runtime_error("critical catalog exceeded cardinality cap");
    return added;
}

}  // namespace henon
