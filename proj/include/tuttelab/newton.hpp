#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "tuttelab/bipoly.hpp"
#include "tuttelab/error.hpp"

namespace tuttelab {

// Convex hull of the exponent support, counterclockwise, no three collinear
// vertices stored.
struct NewtonPolygon {
    std::vector<std::pair<long, long>> vertices;
};

namespace detail {

inline long cross3(const std::pair<long, long>& o, const std::pair<long, long>& a,
                   const std::pair<long, long>& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
}

}  // namespace detail

inline NewtonPolygon newton_polygon(const BiPoly& T) {
    if (T.is_zero()) fail("ZeroPolynomial", "Newton polygon of the zero polynomial");
    std::vector<std::pair<long, long>> pts;
    for (const auto& [key, c] : T.t) pts.push_back({key.first, key.second});
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    NewtonPolygon P;
    if (pts.size() <= 2) {
        P.vertices = pts;
        return P;
    }
    // Andrew monotone chain; cross <= 0 drops collinear points.
    std::vector<std::pair<long, long>> h(2 * pts.size());
    size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && detail::cross3(h[k - 2], h[k - 1], p) <= 0) --k;
        h[k++] = p;
    }
    const size_t lower = k + 1;
    for (size_t i = pts.size() - 1; i-- > 0;) {
        const auto& p = pts[i];
        while (k >= lower && detail::cross3(h[k - 2], h[k - 1], p) <= 0) --k;
        h[k++] = p;
    }
    h.resize(k - 1);
    P.vertices = std::move(h);
    return P;
}

// Edge vectors of the polygon boundary split into primitive direction times
// lattice length; (vector, count) per edge. Empty for a single point.
inline std::vector<std::pair<std::pair<long, long>, long>> primitive_edges(
    const NewtonPolygon& P) {
    std::vector<std::pair<std::pair<long, long>, long>> out;
    const auto& v = P.vertices;
    if (v.size() < 2) return out;
    if (v.size() == 2) {
        // degenerate: a segment traversed once each way
        long dx = v[1].first - v[0].first, dy = v[1].second - v[0].second;
        long g = std::gcd(std::abs(dx), std::abs(dy));
        out.push_back({{dx / g, dy / g}, g});
        out.push_back({{-dx / g, -dy / g}, g});
        return out;
    }
    for (size_t i = 0; i < v.size(); ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % v.size()];
        long dx = b.first - a.first, dy = b.second - a.second;
        long g = std::gcd(std::abs(dx), std::abs(dy));
        out.push_back({{dx / g, dy / g}, g});
    }
    return out;
}

// Number of lattice points on the boundary (= sum of edge lattice lengths;
// 1 for a point).
inline long boundary_lattice_points(const NewtonPolygon& P) {
    if (P.vertices.size() == 1) return 1;
    auto edges = primitive_edges(P);
    long total = 0;
    for (auto& [dir, cnt] : edges) total += cnt;
    if (P.vertices.size() == 2) return total / 2 + 1;  // open segment
    return total;
}

// True iff P is not a Minkowski sum of two lattice polygons with at least two
// lattice points each. A summand corresponds to a choice of multiplicities
// 0..count per primitive edge direction whose weighted sum is zero, neither
// empty nor the whole boundary; depth-first search with reachability pruning
// on both coordinates, stopping at the first decomposition.
inline bool polygon_indecomposable(const NewtonPolygon& P) {
    const size_t nv = P.vertices.size();
    if (nv == 0) fail("ZeroPolynomial", "empty polygon");
    if (nv == 1) return true;
    if (nv == 2) {
        auto e = primitive_edges(P);
        return e[0].second < 2;  // segment: decomposable iff lattice length >= 2
    }

    auto edges = primitive_edges(P);
    const size_t m = edges.size();
    // suffix reachability bounds for partial-sum pruning
    std::vector<long> minx(m + 1, 0), maxx(m + 1, 0), miny(m + 1, 0), maxy(m + 1, 0);
    for (size_t i = m; i-- > 0;) {
        long ex = edges[i].first.first * edges[i].second;
        long ey = edges[i].first.second * edges[i].second;
        minx[i] = minx[i + 1] + std::min(0L, ex);
        maxx[i] = maxx[i + 1] + std::max(0L, ex);
        miny[i] = miny[i + 1] + std::min(0L, ey);
        maxy[i] = maxy[i + 1] + std::max(0L, ey);
    }

    // choose m_i in [0, count_i]; find zero-sum choice that is proper
    std::vector<long> take(m, 0);
    auto dfs = [&](auto&& self, size_t i, long sx, long sy, bool any_taken,
                   bool any_skipped) -> bool {
        if (i == m) return any_taken && any_skipped && sx == 0 && sy == 0;
        if (sx + minx[i] > 0 || sx + maxx[i] < 0) return false;
        if (sy + miny[i] > 0 || sy + maxy[i] < 0) return false;
        const auto [dir, cnt] = edges[i];
        for (long t = 0; t <= cnt; ++t) {
            if (self(self, i + 1, sx + dir.first * t, sy + dir.second * t,
                     any_taken || t > 0, any_skipped || t < cnt))
                return true;
        }
        return false;
    };
    return !dfs(dfs, 0, 0, 0, false, false);
}

}  // namespace tuttelab
