#include "henon/partition_grid.hpp"

#include <cmath>

namespace henon {

std::optional<GridRef> PartitionGrid::index_of(double x) const {
    if (x == 0.0) throw AtCriticalPoint{};
    double a = std::abs(x);
    if (a > delta()) return std::nullopt;

    double t = -std::log(a);
    int r = static_cast<int>(std::floor(t));
    // half-open (e^{-r-1}, e^{-r}]: integer t sits on its upper boundary
    double rt = std::round(t);
    if (std::abs(t - rt) < 1e-13 && std::abs(a - std::exp(-rt)) <= 1e-13 * a)
        r = static_cast<int>(rt);
    if (r < r_delta) r = r_delta;

    double lo = std::exp(-static_cast<double>(r) - 1.0);
    double w = (std::exp(-static_cast<double>(r)) - lo) / (static_cast<double>(r) * r);
    double u = (a - lo) / w;
    int m = static_cast<int>(std::floor(u)) + 1;
    if (u > 0.0 && std::abs(u - std::round(u)) < 1e-12 && std::round(u) >= 1.0)
        m = static_cast<int>(std::round(u));  // upper boundary belongs below
    m = std::max(1, std::min(r * r, m));
    return GridRef{r, m, x > 0.0 ? 1 : -1};
}

long long PartitionGrid::depth_ordinal(const GridRef& g) const {
    long long o = 0;
    for (int r = r_delta; r < g.r; ++r) o += static_cast<long long>(r) * r;
    o += static_cast<long long>(g.r) * g.r - g.m + 1;
    return o;
}

long long PartitionGrid::count_elements(double mlo, double mhi, int r_cut, long long cap) const {
    if (!(mlo > 0.0) || mlo < std::exp(-static_cast<double>(r_cut))) return cap;
    mhi = std::min(mhi, delta());
    if (mhi <= mlo) return 0;
    auto lo_ref = index_of(mlo);
    auto hi_ref = index_of(mhi);
    if (!lo_ref || !hi_ref) return 0;
    return depth_ordinal(*lo_ref) - depth_ordinal(*hi_ref) + 1;
}

std::vector<double> PartitionGrid::boundaries_between(double mlo, double mhi, int r_cut) const {
    std::vector<double> out;
    mhi = std::min(mhi, delta());
    double floor_mag = std::exp(-static_cast<double>(r_cut));
    mlo = std::max(mlo, floor_mag);
    if (mhi <= mlo) return out;

    auto hi_ref = index_of(mhi);
    if (!hi_ref) return out;
    int r = hi_ref->r;
    int m = hi_ref->m;
    while (true) {
        double b = strip_lo(r, m);
        if (b < mlo || b < floor_mag) break;
        out.push_back(b);
        if (m > 1) {
            --m;
        } else {
            ++r;
            m = r * r;
            if (r > r_cut) break;
        }
        if (out.size() > (1u << 20)) break;  // hard stop for malformed ranges
    }
    return out;
}

}  // namespace henon
