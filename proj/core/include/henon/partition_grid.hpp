#pragma once

#include <optional>
#include <vector>

#include "henon/geometry.hpp"

namespace henon {

struct AtCriticalPoint {};

/// Element I_{sign r, m} of the partition of Delta: |x| in the m-th of
/// r^2 equal-width strips of (e^{-r-1}, e^{-r}], m counted from the
/// inner edge (nearest 0) outward. Boundary convention: half-open
/// (lo, hi] in |x|.
struct GridRef {
    int r = 0;     // >= r_delta
    int m = 1;     // in [1, r^2]
    int sign = 1;  // sign of x
};

struct PartitionGrid {
    int r_delta = 5;

    double delta() const { return std::exp(-static_cast<double>(r_delta)); }

    /// Magnitude extent (lo, hi] of |x| over element (r, m).
    double strip_lo(int r, int m) const {
        double lo = std::exp(-static_cast<double>(r) - 1.0);
        double w = (std::exp(-static_cast<double>(r)) - lo) / (static_cast<double>(r) * r);
        return lo + (m - 1) * w;
    }
    double strip_hi(int r, int m) const {
        if (m == r * r) return std::exp(-static_cast<double>(r));
        double lo = std::exp(-static_cast<double>(r) - 1.0);
        double w = (std::exp(-static_cast<double>(r)) - lo) / (static_cast<double>(r) * r);
        return lo + m * w;
    }

    /// Signed element containing x, or nullopt when |x| > delta.
    /// Throws AtCriticalPoint for x = 0.
    std::optional<GridRef> index_of(double x) const;

    /// Depth ordinal: 1 for the outermost element (r_delta, r_delta^2),
    /// increasing inward. Elements deeper than r_cut saturate.
    long long depth_ordinal(const GridRef& g) const;

    /// Number of elements met by the magnitude range [mlo, mhi] (both in
    /// (0, delta]); saturates at `cap` for ranges reaching below
    /// e^{-r_cut}.
    long long count_elements(double mlo, double mhi, int r_cut, long long cap = 1 << 30) const;

    bool in_outermost(double x) const {
        double a = std::abs(x);
        return a <= delta() && a > strip_lo(r_delta, r_delta * r_delta);
    }

    /// Magnitude boundaries of full elements within [mlo, mhi], outward
    /// to inward, truncated at e^{-r_cut}. Used by the chopping pullback.
    std::vector<double> boundaries_between(double mlo, double mhi, int r_cut) const;
};

}  // namespace henon
