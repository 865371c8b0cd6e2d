#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "henon/curve.hpp"
#include "henon/hyperbolic.hpp"

namespace henon {

struct NonAdmissibleConfiguration {
    int sign_changes = 0;
};

/// Dynamically defined critical point of finite order.
struct CriticalRecord {
    int order = 0;
    int generation = 0;
    PhasePoint location;          // z^(k), on the host curve
    PhasePoint value;             // z^(k)_0 = Phi(z^(k))
    int host = -1;                // index into the manifold piece store
    std::vector<std::pair<int, PhasePoint>> ancestors;  // (order, location), oldest first
    double tangency_curvature = 0.0;
};

struct CriticalCatalog {
    int order = 0;
    std::vector<CriticalRecord> records;
    double min_spacing = std::numeric_limits<double>::infinity();
};

/// W^u(P) grown from the unstable eigendirection seed: the compact
/// admissible neighborhood W of P crossing Delta, plus stored forward
/// images decomposed into admissible pieces per generation.
class UnstableManifold {
public:
    struct Piece {
        AdmissibleCurve curve;
        int generation = 0;
    };

    UnstableManifold(const ParameterPoint& p, double grid_h, double max_total_points);

    const ParameterPoint& map() const { return p_; }
    const PhasePoint& fixed_pt() const { return fp_; }
    const AdmissibleCurve& base() const { return w_; }
    int generations_stored() const { return gens_stored_; }

    /// Grows stored images up to the requested generation (subject to the
    /// point budget); returns stored admissible pieces of that generation.
    std::vector<int> pieces_of_generation(int g);

    const Piece& piece(int idx) const { return pieces_[idx]; }
    size_t piece_count() const { return pieces_.size(); }

private:
    void grow_to(int g);

    ParameterPoint p_;
    PhasePoint fp_;
    AdmissibleCurve w_;
    double grid_h_;
    double max_points_;
    int gens_stored_ = 0;
    std::vector<std::vector<Vec2>> frontier_;  // raw polylines of Phi^g(W)
    std::vector<Piece> pieces_;                // admissible pieces, all generations
    std::vector<std::vector<int>> by_gen_;
};

/// Builds W and its admissible forward pieces for g <= iterates.
std::unique_ptr<UnstableManifold> unstable_segment(const ParameterPoint& p, int iterates,
                                                   double grid_h = 2e-4,
                                                   double max_total_points = 4e6);

/// Signed tangent/leaf mismatch of Phi(c) against e^(k), folded to
/// (-pi/2, pi/2]; zero exactly at a tangency.
double tangency_mismatch(const ParameterPoint& p, const AdmissibleCurve& c, double x, int k);

/// Finds the unique quadratic tangency of Phi(c) with the order-k stable
/// foliation for x in [xa, xb] (curve coordinates). nullopt when the
/// mismatch has no sign change; throws NonAdmissibleConfiguration when it
/// has several.
std::optional<CriticalRecord> find_tangency(const ParameterPoint& p, const AdmissibleCurve& c,
                                            int k, double xa, double xb,
                                            const ConstantBudget& budget);

inline std::optional<CriticalRecord> find_tangency(const ParameterPoint& p,
                                                   const AdmissibleCurve& c, int k,
                                                   const ConstantBudget& budget) {
    return find_tangency(p, c, k, c.x_min(), c.x_max(), budget);
}

/// Order k -> k+1 refinement; appends the old record to the ancestry.
CriticalRecord refine_critical(const ParameterPoint& p, const AdmissibleCurve& host,
                               const CriticalRecord& rec, int k_new,
                               const ConstantBudget& budget);

/// floor((5/rho)^(theta k)), saturating.
long long cardinality_cap(int k, double theta_k, const ConstantBudget& budget);

/// Tangency searches on admissible generation-g pieces crossing Delta;
/// candidates violating spacing are dropped. Returns the added records.
std::vector<CriticalRecord> spawn_new_critical(const ParameterPoint& p, UnstableManifold& wu,
                                               CriticalCatalog& catalog, int g_new,
                                               const ConstantBudget& budget);

}  // namespace henon
