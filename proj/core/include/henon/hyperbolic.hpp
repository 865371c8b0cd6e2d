#pragma once

#include <optional>
#include <vector>

#include "henon/map_family.hpp"

namespace henon {

/// Raised when D Phi^k is too close to conformal for the most
/// contracted/expanded directions to be numerically meaningful.
struct UndefinedFrame {
    double sigma_ratio = 1.0;
};

/// Order-k most contracted (e) / most expanded (f) unit directions at a
/// base point, with the norms of their images under D Phi^k. Norms are
/// kept in log form as well: b^k underflows quickly.
struct HyperbolicFrame {
    int order = 0;
    PhasePoint base;
    TangentVector e;   // most contracted, canonical sign: e.y >= 0
    TangentVector f;   // most expanded,  canonical sign: f.x >= 0
    double contraction = 0.0;   // ||D Phi^k e||
    double expansion = 0.0;     // ||D Phi^k f||
    double log_contraction = 0.0;
    double log_expansion = 0.0;
};

/// Polyline through a base point following the e^(k) direction field.
struct StableLeafSegment {
    int order = 0;
    std::vector<PhasePoint> points;        // arc-length sampled
    std::vector<double> tangent_residual;  // per-sample angle to local e^(k)
    bool partial = false;                  // truncated at an undefined frame
};

/// D Phi^k as a norm-factored product J(xi_{k-1}) ... J(xi_0).
ScaledMat2 jac_product(const ParameterPoint& p, const PhasePoint& z0, int k);

/// Plain product for small k (tests and the re-association oracle).
Mat2 jac_product_plain(const ParameterPoint& p, const PhasePoint& z0, int k);

/// Directions from the explicit angle formula
///   tan 2theta = 2(AB + CD) / (A^2 + C^2 - B^2 - D^2)
/// for M = [[A,B],[C,D]]. Throws UndefinedFrame when sigma1/sigma2 is
/// within 1e-8 of 1.
HyperbolicFrame frame_from_product(const Mat2& m);
HyperbolicFrame frame_from_product(const ScaledMat2& m);

HyperbolicFrame frame_at(const ParameterPoint& p, const PhasePoint& z0, int k);

/// theta^(k): unsigned angle between e^(k) and e^(k+1) at z0, in [0, pi/2].
double successive_angle(const ParameterPoint& p, const PhasePoint& z0, int k);

/// (||D Phi^j f^(k)||, ||D Phi^j e^(k)||) in log form.
std::pair<double, double> log_image_frame_norms(const ParameterPoint& p,
                                                const PhasePoint& z0, int k, int j);

/// Classical fixed-step RK4 integration of the e^(k) field through z0,
/// both directions, to the given arc length.
StableLeafSegment integrate_stable_leaf(const ParameterPoint& p, const PhasePoint& z0,
                                        int k, double radius, double step);

}  // namespace henon
