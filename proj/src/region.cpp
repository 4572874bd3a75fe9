#include "secreg/region.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace secreg {

namespace {

constexpr double kMergeTol = 1e-12;

double cross(const RegionVertex& o, const RegionVertex& a, const RegionVertex& b) {
    return (a.r1_bits - o.r1_bits) * (b.r2_bits - o.r2_bits) -
           (a.r2_bits - o.r2_bits) * (b.r1_bits - o.r1_bits);
}

double point_segment_distance(double px, double py, const RegionVertex& a, const RegionVertex& b) {
    const double ex = b.r1_bits - a.r1_bits;
    const double ey = b.r2_bits - a.r2_bits;
    const double len2 = ex * ex + ey * ey;
    double t = 0.0;
    if (len2 > 0.0) t = std::clamp(((px - a.r1_bits) * ex + (py - a.r2_bits) * ey) / len2, 0.0, 1.0);
    const double dx = px - (a.r1_bits + t * ex);
    const double dy = py - (a.r2_bits + t * ey);
    return std::hypot(dx, dy);
}

} // namespace

double RateRegion::max_r1() const noexcept {
    double m = 0.0;
    for (const auto& v : hull_vertices) m = std::max(m, v.r1_bits);
    return m;
}

double RateRegion::max_r2() const noexcept {
    double m = 0.0;
    for (const auto& v : hull_vertices) m = std::max(m, v.r2_bits);
    return m;
}

bool RateRegion::contains(double r1, double r2, double tol) const {
    const auto& h = hull_vertices;
    if (h.empty()) return false;
    if (h.size() == 1) return std::hypot(r1 - h[0].r1_bits, r2 - h[0].r2_bits) <= tol;
    if (h.size() == 2) return point_segment_distance(r1, r2, h[0], h[1]) <= tol;
    // Vertices run clockwise, so interior points sit on the right of every
    // edge: cross <= 0 up to the distance slack.
    const std::size_t n = h.size();
    for (std::size_t i = 0; i < n; ++i) {
        const RegionVertex& a = h[i];
        const RegionVertex& b = h[(i + 1) % n];
        const double ex = b.r1_bits - a.r1_bits;
        const double ey = b.r2_bits - a.r2_bits;
        const double c = ex * (r2 - a.r2_bits) - ey * (r1 - a.r1_bits);
        const double len = std::hypot(ex, ey);
        if (len > 0.0 && c > tol * len) return false;
    }
    return true;
}

RateRegion convex_hull_region(std::span<const RegionVertex> points) {
    std::vector<RegionVertex> pts;
    pts.reserve(points.size() + 3);
    double max1 = 0.0;
    double max2 = 0.0;
    for (const auto& p : points) {
        if (!std::isfinite(p.r1_bits) || !std::isfinite(p.r2_bits) || p.r1_bits < 0.0 || p.r2_bits < 0.0)
            throw std::invalid_argument("convex_hull_region: coordinates must be finite and nonnegative");
        pts.push_back(p);
        max1 = std::max(max1, p.r1_bits);
        max2 = std::max(max2, p.r2_bits);
    }
    pts.push_back({0.0, 0.0});
    pts.push_back({max1, 0.0});
    pts.push_back({0.0, max2});

    std::sort(pts.begin(), pts.end(), [](const RegionVertex& a, const RegionVertex& b) {
        return a.r1_bits < b.r1_bits || (a.r1_bits == b.r1_bits && a.r2_bits < b.r2_bits);
    });
    std::vector<RegionVertex> uniq;
    uniq.reserve(pts.size());
    for (const auto& p : pts) {
        if (!uniq.empty() && std::abs(p.r1_bits - uniq.back().r1_bits) <= kMergeTol &&
            std::abs(p.r2_bits - uniq.back().r2_bits) <= kMergeTol)
            continue;
        uniq.push_back(p);
    }

    RateRegion region;
    if (uniq.size() <= 2) {
        region.hull_vertices = std::move(uniq);
        return region;
    }

    // Monotone chain, counterclockwise; collinear points are dropped.
    std::vector<RegionVertex> hull(2 * uniq.size());
    std::size_t k = 0;
    for (const auto& p : uniq) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= kMergeTol) --k;
        hull[k++] = p;
    }
    const std::size_t lower = k + 1;
    for (auto it = uniq.rbegin() + 1; it != uniq.rend(); ++it) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], *it) <= kMergeTol) --k;
        hull[k++] = *it;
    }
    hull.resize(k - 1);

    // Reverse into the clockwise chain that starts at the origin, which is
    // the lexicographic minimum and therefore hull[0].
    region.hull_vertices.reserve(hull.size());
    region.hull_vertices.push_back(hull[0]);
    for (std::size_t i = hull.size(); i > 1; --i) region.hull_vertices.push_back(hull[i - 1]);
    return region;
}

RateRegion convex_hull_region(std::span<const RatePoint> points) {
    std::vector<RegionVertex> pts;
    pts.reserve(points.size());
    for (const auto& p : points) pts.push_back({p.r1_bits, p.r2_bits});
    return convex_hull_region(pts);
}

bool contains_region(const RateRegion& outer, const RateRegion& inner, double tol) {
    for (const auto& v : inner.hull_vertices)
        if (!outer.contains(v.r1_bits, v.r2_bits, tol)) return false;
    return true;
}

} // namespace secreg
