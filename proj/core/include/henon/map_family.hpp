#pragma once

#include <optional>
#include <string>
#include <vector>

#include "henon/geometry.hpp"

namespace henon {

// Quadratic coefficient a and perturbation size b of the built-in
// Henon-like family  Psi(x,y) = (1 - a x^2 + sqrt(b) y, sqrt(b) x),
// the standard Henon map conjugated by (x,y) -> (x, y/sqrt(b)) so that
// the perturbation term has C^3 size O(sqrt(b)).
struct ParameterPoint {
    double a = 2.0;
    double b = 0.0;

    double sqrt_b() const { return std::sqrt(b); }
};

using PhasePoint = Vec2;
using TangentVector = Vec2;

/// All named constants of a run. kappa1..kappa4, kappa_bar, tau, theta and
/// C_depth are derived from (kappa, alpha, rho, b) unless overridden.
struct ConstantBudget {
    double kappa = 0.4;        // hyperbolicity lower bound, < log 2
    double alpha = 0.02;       // recurrence budget
    double delta = std::exp(-5.0);  // critical strip half-width, e^{-integer}
    double rho = 1.6e-5;       // admissible-segment radius base, (10 K^2)^{-2}
    double K = 5.0;            // C^3 norm bound
    int    N = 15;             // initial exclusion-free horizon
    double a0 = 1.5;           // lower end of the admissible a-range
    double b0 = 0.1;           // upper end of the admissible b-range
    double lambda = 1.1;       // expansion rate outside Delta (assert floor)
    double D0 = 50.0;          // distortion constant in BD_k
    double bigD = 25.0;        // parameter/phase distortion constant D
    double capture_c = 0.25;   // exponent c in the b^{c g} capture gate
    double kappa0 = 0.1;       // interval-size constant, logged empirically

    int    r_delta() const { return static_cast<int>(std::lround(-std::log(delta))); }
    double kappa1() const { return kappa / 4.0; }
    double kappa2() const { return kappa / 5.0; }
    double kappa3() const { return kappa / 3.0; }
    double kappa4() const { return kappa / 6.0; }
    double kappa_bar() const { return kappa3() / 5.0; }
    double c_depth() const { return 2.0 / kappa3(); }
    double tau() const { return alpha / (4.0 * c_depth()); }

    /// theta = 10 |log rho| / |log b|; zero in the degenerate limit b = 0.
    double theta(double b) const {
        if (b <= 0.0) return 0.0;
        return 10.0 * std::abs(std::log(rho)) / std::abs(std::log(b));
    }
};

/// Phase rectangle Q = [-2,2]^2 containing the attractor region.
inline constexpr double kPhaseBound = 2.0;

inline bool in_phase_rectangle(const PhasePoint& z) {
    return std::abs(z.x) <= kPhaseBound && std::abs(z.y) <= kPhaseBound;
}

struct OrbitEscape {
    int step = 0;  // first step whose image left Q
};

/// x -> 1 - a x^2. Shared with the 2D map so the b=0 degeneration is
/// bit-exact between the one- and two-dimensional pipelines.
inline double quad_step(double a, double x) { return 1.0 - a * x * x; }

inline double apply_1d(const ParameterPoint& p, double x) { return quad_step(p.a, x); }

PhasePoint apply_2d(const ParameterPoint& p, const PhasePoint& z);

/// Differential of apply_2d: [[-2 a x, sqrt b], [sqrt b, 0]]; det = -b.
Mat2 jacobian(const ParameterPoint& p, const PhasePoint& z);

/// [z0, Phi(z0), ..., Phi^n(z0)]; throws OrbitEscape with the offending
/// step index if an iterate leaves Q.
std::vector<PhasePoint> orbit(const ParameterPoint& p, const PhasePoint& z0, int n);

/// Same, but stops at Q without throwing; returns what was computed.
std::vector<PhasePoint> orbit_clamped(const ParameterPoint& p, const PhasePoint& z0, int n);

/// |D phi^n(x0)| by the chain rule of phi'(x) = -2 a x.
double derivative_along_orbit_1d(const ParameterPoint& p, double x0, int n);

/// log |D phi^n(x0)|, overflow-safe.
double log_derivative_along_orbit_1d(const ParameterPoint& p, double x0, int n);

inline bool in_critical_strip(const PhasePoint& z, double delta) {
    return std::abs(z.x) <= delta;
}

/// Newton-refined hyperbolic fixed point near (1/2, 0).
PhasePoint fixed_point(const ParameterPoint& p);

/// Named constant-budget violations; empty means the budget is usable.
std::vector<std::string> validate_budget(const ConstantBudget& c);

}  // namespace henon
