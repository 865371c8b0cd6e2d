#include "henon/onedim.hpp"

#include <cmath>
#include <cstring>

namespace henon {

double param_phase_map(double a, int k) {
    double z = quad_step(a, 0.0);  // z_0 = phi(0) = 1
    for (int j = 0; j < k; ++j) z = quad_step(a, z);
    return z;
}

std::optional<PartitionIndex1D> phase_partition_index(double x, double delta) {
    PartitionGrid grid{static_cast<int>(std::lround(-std::log(delta)))};
    auto g = grid.index_of(x);
    if (!g) return std::nullopt;
    return PartitionIndex1D{g->sign * g->r, g->m};
}

void MeasureLedger::fit() {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (const auto& row : rows) {
        if (row.excluded <= 0.0) continue;
        double x = row.k, y = std::log(row.excluded);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    fit_points = n;
    if (n >= 2) {
        fit_slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        tau0_fit = -fit_slope;
    }
}

OnedimRun::OnedimRun(const OnedimConfig& cfg) : cfg_(cfg) {
    grid_.r_delta = cfg_.budget.r_delta();
}

void OnedimRun::emit(const Event& ev) {
    if (cfg_.sink) cfg_.sink->emit(ev);
}

void OnedimRun::advance_cache(Elem1D& e) const {
    double mid = 0.5 * (e.iv.lo + e.iv.hi);
    e.z_lo = quad_step(e.iv.lo, e.z_lo);
    e.z_hi = quad_step(e.iv.hi, e.z_hi);
    (void)mid;
}

double OnedimRun::preimage(const Elem1D& e, double target) const {
    // bisection on a -> z_k(a) - target; monotone on the element
    double lo = e.iv.lo, hi = e.iv.hi;
    double flo = param_phase_map(lo, k_) - target;
    for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = param_phase_map(mid, k_) - target;
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

int OnedimRun::binding_period_1d(double x_nu, double a, int k_horizon) const {
    // exit-time rule against zeta = 0 for the same parameter:
    // member(k) iff |phi^{i+1}(x_nu) - phi^{i+1}(0)| <= e^{-2 alpha i} + 10^{-k}
    auto member = [&](int k) {
        double xi = x_nu, ze = 0.0;
        for (int i = 0; i <= k; ++i) {
            xi = quad_step(a, xi);
            ze = quad_step(a, ze);
            if (std::abs(xi - ze) > std::exp(-2.0 * cfg_.budget.alpha * i) + std::pow(10.0, -k))
                return false;
        }
        return true;
    };
    int horizon = std::max(1, k_horizon);
    if (member(horizon)) return horizon;
    if (!member(1)) return 1;
    int lo = 1, hi = horizon;
    while (hi - lo > 1) {
        int mid = lo + (hi - lo) / 2;
        if (member(mid))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

void OnedimRun::exclude(Elem1D e, const char* cause) {
    Event ev;
    ev.step = k_;
    ev.slot = "1d";
    ev.elem = e.id;
    ev.parent = e.parent;
    ev.type = "excluded";
    ev.lo = e.iv.lo;
    ev.hi = e.iv.hi;
    ev.has_interval = true;
    ev.e_sum = e.e_sum;
    ev.r_sum = e.r_sum;
    ev.cause = cause;
    ev.value = e.star_lb;
    ev.has_value = true;
    emit(ev);
    step_excluded_ += e.iv.length();
    excluded_.push_back({e.iv, k_, cause, e.star_lb, e.id});
}

void OnedimRun::split_at_zero(std::vector<Elem1D>& out, Elem1D e, int depth) {
    // pre-N machinery: keep each element's image fold-free by splitting
    // at parameter preimages of the critical point
    double zmid = param_phase_map(0.5 * (e.iv.lo + e.iv.hi), k_);
    bool mono = (e.z_lo <= zmid && zmid <= e.z_hi) || (e.z_hi <= zmid && zmid <= e.z_lo);
    if (!mono && depth < 40 && e.iv.length() > 4e-15) {
        double mid = 0.5 * (e.iv.lo + e.iv.hi);
        Elem1D left = e, right = e;
        left.iv = {e.iv.lo, mid};
        left.z_hi = zmid;
        right.iv = {mid, e.iv.hi};
        right.z_lo = zmid;
        right.id = fresh_id();
        right.parent = e.id;
        split_at_zero(out, left, depth + 1);
        split_at_zero(out, right, depth + 1);
        return;
    }
    double u_lo = std::min(e.z_lo, e.z_hi), u_hi = std::max(e.z_lo, e.z_hi);
    if (u_lo < 0.0 && u_hi > 0.0 && e.iv.length() > 4e-15 && depth < 60) {
        double a0 = preimage(e, 0.0);
        if (a0 > e.iv.lo && a0 < e.iv.hi) {
            Elem1D left = e, right = e;
            left.iv = {e.iv.lo, a0};
            left.z_hi = param_phase_map(a0, k_);
            right.iv = {a0, e.iv.hi};
            right.z_lo = left.z_hi;
            right.id = fresh_id();
            right.parent = e.id;
            split_at_zero(out, left, depth + 1);
            split_at_zero(out, right, depth + 1);
            return;
        }
    }
    out.push_back(e);
}

void OnedimRun::initialize() {
    elems_.clear();
    excluded_.clear();
    ledger_ = MeasureLedger{};
    k_ = 0;
    next_id_ = 0;

    Elem1D root;
    root.iv = {cfg_.a_min, cfg_.a_max};
    root.z_lo = param_phase_map(cfg_.a_min, 0);
    root.z_hi = param_phase_map(cfg_.a_max, 0);
    root.id = fresh_id();
    elems_.push_back(root);
    ledger_.omega_measure = root.iv.length();

    // free ride to time N: no records, no exclusions, only fold splits
    for (k_ = 1; k_ <= cfg_.budget.N; ++k_) {
        std::vector<Elem1D> next;
        next.reserve(elems_.size() + elems_.size() / 4);
        for (auto& e : elems_) {
            advance_cache(e);
            split_at_zero(next, e, 0);
        }
        elems_ = std::move(next);
    }
    k_ = cfg_.budget.N;

    startup_sweep_ = 0.0;
    for (auto& e : elems_) {
        e.last_escape = cfg_.budget.N;
        startup_sweep_ = std::max(startup_sweep_, std::abs(e.z_hi - e.z_lo));
    }

    Event note;
    note.step = k_;
    note.slot = "1d";
    note.elem = -1;
    note.type = "note";
    note.cause = "init";
    note.value = static_cast<double>(elems_.size());
    note.has_value = true;
    emit(note);

    ledger_.rows.push_back(
        {k_, retained_measure(), 0.0, static_cast<long long>(elems_.size()), 0});
}

void OnedimRun::classify_and_refine(Elem1D e, std::vector<Elem1D>& out) {
    const double delta = cfg_.budget.delta;
    const double alpha = cfg_.budget.alpha;
    const int r_cut = cfg_.r_cut();
    const double floor_mag = std::exp(-static_cast<double>(r_cut));

    double u_lo = std::min(e.z_lo, e.z_hi);
    double u_hi = std::max(e.z_lo, e.z_hi);

    // bound iterate: no partition action, bound returns recorded
    if (k_ <= e.bound_until) {
        if (u_lo <= delta && u_hi >= -delta) {
            Event ev;
            ev.step = k_;
            ev.slot = "1d";
            ev.elem = e.id;
            ev.type = "bound-return";
            emit(ev);
        }
        out.push_back(e);
        return;
    }

    // free iterate
    if (u_lo > delta || u_hi < -delta) {
        out.push_back(e);
        return;
    }

    double in_lo = std::max(u_lo, -delta);
    double in_hi = std::min(u_hi, delta);
    // case (a): intersection within a single outermost element
    if (in_lo * in_hi > 0.0 && grid_.in_outermost(in_lo) && grid_.in_outermost(in_hi)) {
        out.push_back(e);
        return;
    }

    long long n_elem;
    if (in_lo <= 0.0 && in_hi >= 0.0) {
        n_elem = 1 << 30;
    } else if (in_hi < 0.0) {
        n_elem = grid_.count_elements(-in_hi, -in_lo, r_cut);
    } else {
        n_elem = grid_.count_elements(in_lo, in_hi, r_cut);
    }

    const bool increasing = e.z_hi >= e.z_lo;
    auto pullback = [&](double x) { return preimage(e, x); };
    auto child_of = [&](double a_l, double a_r, double z_l, double z_r) {
        Elem1D c = e;
        c.iv = {a_l, a_r};
        c.z_lo = z_l;
        c.z_hi = z_r;
        c.id = fresh_id();
        c.parent = e.id;
        return c;
    };

    if (n_elem <= 2) {
        // inessential return; boundary-split the parts outside Delta so the
        // exclusion guarantee applies to parameters that actually return
        Elem1D inside = e;
        if (u_lo < -delta || u_hi > delta) {
            double a_edge_lo = e.iv.lo, a_edge_hi = e.iv.hi;
            double z_edge_lo = e.z_lo, z_edge_hi = e.z_hi;
            double lo_x = increasing ? u_lo : u_hi;  // image value at iv.lo
            (void)lo_x;
            // left boundary (in a) of the inside part
            double x_at_lo = e.z_lo, x_at_hi = e.z_hi;
            double want_lo = increasing ? in_lo : in_hi;
            double want_hi = increasing ? in_hi : in_lo;
            if ((increasing && x_at_lo < want_lo) || (!increasing && x_at_lo > want_lo)) {
                a_edge_lo = pullback(want_lo);
                z_edge_lo = want_lo;
                Elem1D left = child_of(e.iv.lo, a_edge_lo, e.z_lo, want_lo);
                if (std::abs(left.z_hi - left.z_lo) >= delta / 10.0) {
                    left.last_escape = k_;
                    Event ev;
                    ev.step = k_;
                    ev.slot = "1d";
                    ev.elem = left.id;
                    ev.parent = e.id;
                    ev.type = "escape";
                    ev.lo = left.iv.lo;
                    ev.hi = left.iv.hi;
                    ev.has_interval = true;
                    emit(ev);
                }
                if (!left.iv.empty()) out.push_back(left);
            }
            if ((increasing && x_at_hi > want_hi) || (!increasing && x_at_hi < want_hi)) {
                a_edge_hi = pullback(want_hi);
                z_edge_hi = want_hi;
                Elem1D right = child_of(a_edge_hi, e.iv.hi, want_hi, e.z_hi);
                if (std::abs(right.z_hi - right.z_lo) >= delta / 10.0) {
                    right.last_escape = k_;
                    Event ev;
                    ev.step = k_;
                    ev.slot = "1d";
                    ev.elem = right.id;
                    ev.parent = e.id;
                    ev.type = "escape";
                    ev.lo = right.iv.lo;
                    ev.hi = right.iv.hi;
                    ev.has_interval = true;
                    emit(ev);
                }
                if (!right.iv.empty()) out.push_back(right);
            }
            inside = child_of(a_edge_lo, a_edge_hi, z_edge_lo, z_edge_hi);
            if (inside.iv.empty()) return;
        }

        double mag_hi = std::max(std::abs(in_lo), std::abs(in_hi));
        double mag_lo = std::min(std::abs(in_lo), std::abs(in_hi));
        auto gref = grid_.index_of(in_lo < 0.0 ? -mag_lo : mag_lo);
        int r = gref ? gref->r : grid_.r_delta;
        int m = gref ? gref->m : 0;
        double lb = -std::log(mag_hi);

        inside.star_lb += lb;
        inside.r_sum += r;
        double probe = inside.iv.lo;
        double x_nu = increasing ? inside.z_lo : inside.z_hi;
        int p = binding_period_1d(x_nu, probe, cfg_.horizon - k_ + 1);
        inside.bound_until = k_ + p;

        Event ev;
        ev.step = k_;
        ev.slot = "1d";
        ev.elem = inside.id;
        ev.parent = e.id;
        ev.type = "inessential-return";
        ev.lo = inside.iv.lo;
        ev.hi = inside.iv.hi;
        ev.has_interval = true;
        ev.r = (in_lo < 0.0 ? -r : r);
        ev.m = m;
        ev.d_lo = mag_lo;
        ev.d_hi = mag_hi;
        ev.has_depth = true;
        ev.binding = p;
        ev.dist = std::abs(x_nu);
        ev.has_binding = true;
        ev.e_sum = inside.e_sum;
        ev.r_sum = inside.r_sum;
        emit(ev);
        step_max_depth_ = std::max(step_max_depth_, r);

        if (inside.star_lb > alpha * k_) {
            exclude(inside, "star-budget");
        } else {
            out.push_back(inside);
        }
        return;
    }

    // chopping time
    struct PlannedChild {
        double a_l, a_r, z_l, z_r;
        enum Kind { Escape, Continue, EssentialBlock, Essential, Deep } kind;
        int r = 0, m = 0;
    };
    std::vector<PlannedChild> plan;

    // walk the image from the iv.lo side to the iv.hi side
    double cur_a = e.iv.lo;
    double cur_z = e.z_lo;

    auto push_piece = [&](double x_to, PlannedChild::Kind kind, int r, int m) {
        double a_to;
        if (x_to == e.z_hi) {
            a_to = e.iv.hi;
        } else {
            a_to = pullback(x_to);
        }
        if (a_to < cur_a) a_to = cur_a;
        if (a_to - cur_a > 0.0 || kind == PlannedChild::Escape) {
            plan.push_back({cur_a, a_to, cur_z, x_to, kind, r, m});
        }
        cur_a = a_to;
        cur_z = x_to;
    };

    // image-ordered breakpoints from the iv.lo-image end toward iv.hi-image
    double from = e.z_lo, to = e.z_hi;
    double dir = increasing ? 1.0 : -1.0;

    // boundary x-values in image order: +-delta edges, full-element
    // boundaries down to the r_cut floor, and the floor itself
    std::vector<double> cuts;
    auto add_cut = [&](double x) {
        if ((x - from) * dir > 0.0 && (to - x) * dir > 0.0) cuts.push_back(x);
    };
    add_cut(-delta);
    add_cut(delta);
    add_cut(-floor_mag);
    add_cut(floor_mag);
    std::sort(cuts.begin(), cuts.end(),
              [&](double x, double y) { return (x - from) * dir < (y - from) * dir; });

    // segment decomposition between the coarse cuts; refine in-Delta
    // segments that do not die as a block
    std::vector<std::pair<double, double>> segs;
    {
        double prev = from;
        for (double c : cuts) {
            segs.push_back({prev, c});
            prev = c;
        }
        segs.push_back({prev, to});
    }

    for (auto& [x_a, x_b] : segs) {
        double lo_x = std::min(x_a, x_b), hi_x = std::max(x_a, x_b);
        double mid_x = 0.5 * (lo_x + hi_x);
        bool outside = lo_x >= delta || hi_x <= -delta ||
                       (hi_x <= delta && lo_x >= -delta && false);
        if (lo_x >= delta - 1e-300 || hi_x <= -delta + 1e-300) outside = true;
        if (outside) {
            bool is_escape = hi_x - lo_x >= delta / 10.0;
            push_piece(x_b, is_escape ? PlannedChild::Escape : PlannedChild::Continue, 0, 0);
            continue;
        }
        if (std::abs(mid_x) <= floor_mag || (lo_x < 0.0 && hi_x > 0.0)) {
            push_piece(x_b, PlannedChild::Deep, r_cut, 0);
            continue;
        }
        // in-Delta, single-sign segment above the floor
        double mag_hi = std::max(std::abs(lo_x), std::abs(hi_x));
        double block_lb = -std::log(mag_hi);
        if (e.star_lb + block_lb > alpha * k_) {
            auto gref = grid_.index_of(mid_x < 0.0 ? -mag_hi : mag_hi);
            push_piece(x_b, PlannedChild::EssentialBlock, gref ? gref->r : grid_.r_delta, 0);
            continue;
        }
        // survivors need the full (r, m) pullback
        double sgn = mid_x < 0.0 ? -1.0 : 1.0;
        double mlo = std::min(std::abs(lo_x), std::abs(hi_x));
        auto bnds = grid_.boundaries_between(mlo, mag_hi, r_cut);
        // bnds run outward->inward in magnitude; order along the walk
        std::vector<double> xs;
        for (double b : bnds) xs.push_back(sgn * b);
        std::sort(xs.begin(), xs.end(),
                  [&](double x, double y) { return (x - from) * dir < (y - from) * dir; });
        for (double xv : xs) {
            if ((xv - cur_z) * dir <= 0.0) continue;
            double seg_mag_hi = std::max(std::abs(cur_z), std::abs(xv));
            auto gref = grid_.index_of(sgn * (std::min(std::abs(cur_z), std::abs(xv)) +
                                              seg_mag_hi) / 2.0);
            push_piece(xv, PlannedChild::Essential, gref ? gref->r : grid_.r_delta,
                       gref ? gref->m : 0);
        }
        if ((x_b - cur_z) * dir > 0.0) {
            double seg_mag_hi = std::max(std::abs(cur_z), std::abs(x_b));
            auto gref = grid_.index_of(sgn * (std::min(std::abs(cur_z), std::abs(x_b)) +
                                              seg_mag_hi) / 2.0);
            push_piece(x_b, PlannedChild::Essential, gref ? gref->r : grid_.r_delta,
                       gref ? gref->m : 0);
        }
    }
    if ((to - cur_z) * dir > 0.0) push_piece(to, PlannedChild::Continue, 0, 0);

    // glue sub-resolution or short-escape pieces forward into neighbors
    double parent_img = std::abs(e.z_hi - e.z_lo);
    double parent_len = e.iv.length();

    for (size_t i = 0; i < plan.size(); ++i) {
        auto& pc = plan[i];
        if (pc.a_r - pc.a_l <= 0.0) continue;
        Elem1D c = child_of(pc.a_l, pc.a_r, pc.z_l, pc.z_r);
        double img_len = std::abs(pc.z_r - pc.z_l);

        if (parent_img > 0.0 && parent_len > 0.0 && img_len > 0.0) {
            double ratio = (c.iv.length() / parent_len) / (img_len / parent_img);
            double devi = std::max(ratio, 1.0 / ratio);
            max_distortion_ = std::max(max_distortion_, devi);
        }

        switch (pc.kind) {
            case PlannedChild::Escape: {
                c.last_escape = k_;
                Event ev;
                ev.step = k_;
                ev.slot = "1d";
                ev.elem = c.id;
                ev.parent = e.id;
                ev.type = "escape";
                ev.lo = c.iv.lo;
                ev.hi = c.iv.hi;
                ev.has_interval = true;
                emit(ev);
                out.push_back(c);
                break;
            }
            case PlannedChild::Continue:
                out.push_back(c);
                break;
            case PlannedChild::Deep: {
                c.star_lb += static_cast<double>(r_cut);
                Event ev;
                ev.step = k_;
                ev.slot = "1d";
                ev.elem = c.id;
                ev.parent = e.id;
                ev.type = "deep-cut";
                ev.lo = c.iv.lo;
                ev.hi = c.iv.hi;
                ev.has_interval = true;
                emit(ev);
                exclude(c, "deep-cut");
                step_max_depth_ = std::max(step_max_depth_, r_cut);
                break;
            }
            case PlannedChild::EssentialBlock:
            case PlannedChild::Essential: {
                double mag_hi = std::max(std::abs(pc.z_l), std::abs(pc.z_r));
                double mag_lo = std::min(std::abs(pc.z_l), std::abs(pc.z_r));
                double lb = -std::log(mag_hi);
                c.star_lb += lb;
                c.e_sum += pc.r;
                c.r_sum += pc.r;
                double probe = c.iv.lo;
                double x_nu = increasing ? c.z_lo : c.z_hi;
                int p = binding_period_1d(x_nu, probe, cfg_.horizon - k_ + 1);
                c.bound_until = k_ + p;
                Event ev;
                ev.step = k_;
                ev.slot = "1d";
                ev.elem = c.id;
                ev.parent = e.id;
                ev.type = "essential-return";
                ev.lo = c.iv.lo;
                ev.hi = c.iv.hi;
                ev.has_interval = true;
                ev.r = pc.z_l < 0.0 ? -pc.r : pc.r;
                ev.m = pc.m;
                ev.d_lo = mag_lo;
                ev.d_hi = mag_hi;
                ev.has_depth = true;
                ev.binding = p;
                ev.dist = std::abs(x_nu);
                ev.has_binding = true;
                ev.e_sum = c.e_sum;
                ev.r_sum = c.r_sum;
                emit(ev);
                step_max_depth_ = std::max(step_max_depth_, pc.r);
                if (c.star_lb > alpha * k_) {
                    exclude(c, "star-budget");
                } else {
                    out.push_back(c);
                }
                break;
            }
        }
    }
}

void OnedimRun::step() {
    ++k_;
    step_excluded_ = 0.0;
    step_max_depth_ = 0;

    std::vector<Elem1D> next;
    next.reserve(elems_.size() + 64);
    for (auto& e : elems_) {
        advance_cache(e);
        // monotone repair then classification
        std::vector<Elem1D> mono;
        split_at_zero(mono, e, 0);
        if (mono.size() > 1) {
            Event ev;
            ev.step = k_;
            ev.slot = "1d";
            ev.elem = e.id;
            ev.type = "monotone-split";
            ev.value = static_cast<double>(mono.size());
            ev.has_value = true;
            emit(ev);
        }
        for (auto& part : mono) classify_and_refine(part, next);
    }
    elems_ = std::move(next);

    ledger_.rows.push_back({k_, retained_measure(), step_excluded_,
                            static_cast<long long>(elems_.size()), step_max_depth_});
}

void OnedimRun::run() {
    initialize();
    while (k_ < cfg_.horizon) step();
    ledger_.fit();
}

IntervalSet OnedimRun::retained_set() const {
    IntervalSet s;
    for (const auto& e : elems_) s.add(e.iv);
    return s;
}

double OnedimRun::retained_measure() const {
    double m = 0.0;
    for (const auto& e : elems_) m += e.iv.length();
    return m;
}

bool verify_retained_1d(double a, int k, double kappa_prime) {
    double x = quad_step(a, 0.0);
    double logd = 0.0;
    for (int j = 1; j <= k; ++j) {
        logd += std::log(std::abs(-2.0 * a * x));
        if (logd < kappa_prime * j) return false;
        x = quad_step(a, x);
    }
    return true;
}

double replay_star_sum_1d(double a, int time, const OnedimConfig& cfg) {
    const double delta = cfg.budget.delta;
    double sum = 0.0;
    int bound_until = -1;
    double x = quad_step(a, 0.0);  // z_0
    std::vector<double> zs{x};
    for (int j = 1; j <= time; ++j) {
        x = quad_step(a, x);
        zs.push_back(x);
    }
    for (int nu = cfg.budget.N + 1; nu <= time; ++nu) {
        if (nu <= bound_until) continue;
        if (std::abs(zs[static_cast<size_t>(nu)]) > delta) continue;
        sum += -std::log(std::abs(zs[static_cast<size_t>(nu)]));
        // replay binding with zeta = 0
        auto member = [&](int k) {
            double xi = zs[static_cast<size_t>(nu)], ze = 0.0;
            for (int i = 0; i <= k; ++i) {
                xi = quad_step(a, xi);
                ze = quad_step(a, ze);
                if (std::abs(xi - ze) >
                    std::exp(-2.0 * cfg.budget.alpha * i) + std::pow(10.0, -k))
                    return false;
            }
            return true;
        };
        int horizon = std::max(1, time - nu + 1);
        int p = 1;
        if (member(horizon)) {
            p = horizon;
        } else if (member(1)) {
            int lo = 1, hi = horizon;
            while (hi - lo > 1) {
                int mid = lo + (hi - lo) / 2;
                if (member(mid))
                    lo = mid;
                else
                    hi = mid;
            }
            p = lo;
        }
        bound_until = nu + p;
    }
    return sum;
}

std::vector<double> sample_interval_set(const IntervalSet& s, int count, uint64_t seed) {
    std::vector<double> out;
    double total = s.measure();
    if (total <= 0.0 || s.empty()) return out;
    uint64_t state = seed ? seed : 0x9e3779b97f4a7c15ull;
    auto next_u01 = [&]() {
        // splitmix64, platform-stable
        state += 0x9e3779b97f4a7c15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        z = z ^ (z >> 31);
        return static_cast<double>(z >> 11) * 0x1.0p-53;
    };
    for (int i = 0; i < count; ++i) {
        double u = next_u01() * total;
        for (const auto& p : s.parts()) {
            if (u <= p.length()) {
                out.push_back(p.lo + u);
                break;
            }
            u -= p.length();
        }
        if (out.size() != static_cast<size_t>(i) + 1) out.push_back(s.parts().back().lo);
    }
    return out;
}

}  // namespace henon
