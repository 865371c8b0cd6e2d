#pragma once

#include <optional>
#include <vector>

#include "henon/critical.hpp"

namespace henon {

/// Bound neighborhood B^(j)(z^(k)_0): points whose orbits track the
/// critical-value orbit within e^{-2 alpha i} + 10^{-k}.
struct BoundNeighborhoodSpec {
    std::vector<PhasePoint> center_orbit;  // z^(k)_0, z^(k)_1, ...
    int order = 0;                         // k, sets the 10^{-k} slack
    double alpha = 0.02;

    double slack() const { return std::pow(10.0, -order); }
};

bool bound_member(const BoundNeighborhoodSpec& spec, const PhasePoint& xi0, int j,
                  const ParameterPoint& p);

enum class ReturnKind { FreeReturn, BoundReturn };

struct ReturnEvent {
    int time = 0;  // nu
    ReturnKind kind = ReturnKind::FreeReturn;
    double depth = 0.0;          // d(z_nu)
    int binding_period = 0;      // p
    int binding_generation = 0;  // generation of the captured zeta
    PhasePoint binding_point;
};

struct RecurrenceLedger {
    std::vector<ReturnEvent> events;
    int horizon = 0;

    double star_sum() const {
        double s = 0.0;
        for (const auto& e : events)
            if (e.kind == ReturnKind::FreeReturn) s += -std::log(e.depth);
        return s;
    }
};

inline bool star_check(const RecurrenceLedger& ledger, double alpha, int k) {
    return ledger.star_sum() <= alpha * static_cast<double>(k);
}

struct CaptureFailure {
    int time = 0;
};

struct Capture {
    CriticalRecord zeta;
    int generation = 0;
    double vertical_dist = 0.0;    // |y offset| between z_nu and the host sheet
    double horizontal_dist = 0.0;  // |x(z_nu) - x(zeta)|
    int host_piece = -1;
};

/// The capture argument: candidate tangencies over generations g with the
/// vertical gate b^{c g}, largest qualifying g <= theta nu (g = 0 is
/// always allowed). Throws CaptureFailure when no candidate qualifies.
Capture capture_binding_point(const ParameterPoint& p, UnstableManifold& wu,
                              const PhasePoint& z_nu, int nu, const ConstantBudget& budget,
                              int g_max);

/// min distance |xi_nu - zeta| over the center of the bound neighborhood
/// plus its 4 extreme tracked sample points.
double critical_distance(const ParameterPoint& p, const PhasePoint& z_nu,
                         const PhasePoint& zeta, const BoundNeighborhoodSpec& spec, int nu);

struct BindingOverrun {
    int needed = 0;
};

/// Largest k in [1, horizon] with Phi(z_nu) in B^(k)(zeta_0), by
/// bisection over k (membership is monotone in k). Throws BindingOverrun
/// when even the horizon-length neighborhood still binds.
int binding_period(const ParameterPoint& p, const PhasePoint& z_nu, const PhasePoint& zeta,
                   const ConstantBudget& budget, int horizon);

struct EgResult {
    bool ok = false;
    std::vector<double> margins;  // log||w_j|| - kappa j
};

/// EG_k: ||D Phi^j w0|| >= e^{kappa j} for all j in [0, k]; w0 is
/// normalized first and must have slope <= 1/10.
EgResult check_EG(const ParameterPoint& p, const PhasePoint& xi0, const TangentVector& w0,
                  int k, double kappa);

struct BdResult {
    bool ok = false;
    double log_ratio = 0.0;  // | log ||f_j(xi)|| / ||f_j(eta)|| |
    double ratio_bound = 0.0;
    double angle = 0.0;  // angle(f_j(xi), f_j(eta))
    double angle_bound = 0.0;
};

BdResult check_BD(const ParameterPoint& p, const PhasePoint& xi0, const PhasePoint& eta0,
                  int j, const ConstantBudget& budget, double d0);

struct GrowthResult {
    bool ok = false;
    double factor = 0.0;       // ||D Phi^{p+1} w_nu|| / ||w_nu||
    double bound_d = 0.0;      // d^{-kappa1}
    double bound_p = 0.0;      // e^{kappa2 p}
    double post_slope = 0.0;   // slope of the image vector
};

GrowthResult growth_after_binding(const ParameterPoint& p, const PhasePoint& xi_nu,
                                  const TangentVector& w_nu, int p_len, double d,
                                  const ConstantBudget& budget);

inline double slope_of(const TangentVector& w) {
    if (w.x == 0.0) return std::numeric_limits<double>::infinity();
    return std::abs(w.y / w.x);
}

}  // namespace henon
