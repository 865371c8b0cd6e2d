#pragma once

#include <functional>
#include <optional>

#include "henon/events.hpp"
#include "henon/map_family.hpp"
#include "henon/partition_grid.hpp"

namespace henon {

/// z_k(a) = phi_a^{k+1}(0): the k-th iterate of the critical value.
double param_phase_map(double a, int k);

struct PartitionIndex1D {
    int r = 0;  // signed: sign(x) * depth
    int m = 0;
};

/// Position of x in the partition of Delta: signed r with
/// |x| in (e^{-r-1}, e^{-r}], m in [1, r^2] from the inner edge outward.
/// nullopt when |x| > delta; throws AtCriticalPoint for x = 0.
std::optional<PartitionIndex1D> phase_partition_index(double x, double delta);

struct OnedimConfig {
    ConstantBudget budget;
    double a_min = 1.99;
    double a_max = 2.0;
    int horizon = 40;
    int r_cut_extra = 12;  // deep-return truncation at r_delta + extra
    EventSink* sink = nullptr;

    int r_cut() const {
        int need = static_cast<int>(std::ceil(budget.alpha * (horizon + 1))) + 2;
        return std::max(budget.r_delta() + r_cut_extra, need);
    }
};

struct MeasureRow {
    int k = 0;
    double retained = 0.0;
    double excluded = 0.0;
    long long active = 0;
    int max_depth = 0;
};

struct MeasureLedger {
    std::vector<MeasureRow> rows;
    double omega_measure = 0.0;
    double tau0_fit = 0.0;       // negated slope of the log-excluded fit
    double fit_slope = 0.0;      // raw least-squares slope
    int fit_points = 0;

    void fit();
};

/// Parameter interval with itinerary state.
struct Elem1D {
    Interval iv;
    double z_lo = 1.0, z_hi = 1.0;  // cached z_k at the endpoints
    double star_lb = 0.0;           // guaranteed (*) sum over the element
    long long e_sum = 0, r_sum = 0;
    int bound_until = -1;
    int last_escape = -1;
    int64_t id = 0;
    int64_t parent = -1;
};

struct Exclusion1D {
    Interval iv;
    int time = 0;
    std::string cause;  // star-budget | deep-cut
    double star_lb = 0.0;
    int64_t id = 0;
};

class OnedimRun {
public:
    explicit OnedimRun(const OnedimConfig& cfg);

    /// Pre-N evolution with fold splits, blank itineraries at N.
    void initialize();

    /// One exclusion step: advances to time k+1 and applies the rules.
    void step();

    /// initialize() + step() to the horizon.
    void run();

    int time() const { return k_; }
    const std::vector<Elem1D>& elements() const { return elems_; }
    const std::vector<Exclusion1D>& exclusions() const { return excluded_; }
    const MeasureLedger& ledger() const { return ledger_; }
    const OnedimConfig& config() const { return cfg_; }
    IntervalSet retained_set() const;
    double retained_measure() const;

    /// Largest monotone sweep of z_N over Omega (startup assertion data).
    double startup_max_sweep() const { return startup_sweep_; }
    double max_sibling_distortion() const { return max_distortion_; }

private:
    void advance_cache(Elem1D& e) const;
    void split_at_zero(std::vector<Elem1D>& out, Elem1D e, int depth);
    double preimage(const Elem1D& e, double target) const;
    void classify_and_refine(Elem1D e, std::vector<Elem1D>& out);
    void exclude(Elem1D e, const char* cause);
    void emit(const Event& ev);
    int binding_period_1d(double x_nu, double a, int k_horizon) const;
    int64_t fresh_id() { return next_id_++; }

    OnedimConfig cfg_;
    PartitionGrid grid_;
    int k_ = 0;
    int64_t next_id_ = 0;
    std::vector<Elem1D> elems_;
    std::vector<Exclusion1D> excluded_;
    MeasureLedger ledger_;
    double step_excluded_ = 0.0;
    int step_max_depth_ = 0;
    double startup_sweep_ = 0.0;
    double max_distortion_ = 0.0;
};

/// EG verification for a retained parameter: |D phi^j(phi(0))| >= e^{kappa' j}
/// for all 1 <= j <= k.
bool verify_retained_1d(double a, int k, double kappa_prime);

/// Replays the orbit of a single excluded parameter and evaluates its
/// (*) sum at `time` (free returns only, binding replayed with zeta = 0).
double replay_star_sum_1d(double a, int time, const OnedimConfig& cfg);

/// Deterministic uniform samples from an interval set (measure-weighted).
std::vector<double> sample_interval_set(const IntervalSet& s, int count, uint64_t seed);

}  // namespace henon
