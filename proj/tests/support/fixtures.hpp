#ifndef SHADOWCOVER_TEST_FIXTURES_HPP
#define SHADOWCOVER_TEST_FIXTURES_HPP

// Shared seeded fixtures and brute-force oracles. Oracles here stay
// independent of the library code paths they check: grids and sampling
// only, no reuse of the LP/facet machinery under test.

#include <algorithm>
#include <cmath>
#include <vector>

#include "shadowcover/containment.hpp"
#include "shadowcover/polytope.hpp"

namespace sctest {

using shadowcover::Basis;
using shadowcover::Body;
using shadowcover::GaussianSource;
using shadowcover::Vec;

inline Body random_full_body(int n, int m, std::uint64_t seed) {
  for (std::uint64_t s = seed;; ++s) {
    Body b = shadowcover::make_random_polytope(n, m, s);
    if (b.full_dimensional()) return b;
  }
}

inline Body random_simplex(int n, std::uint64_t seed) {
  for (std::uint64_t s = seed;; ++s) {
    GaussianSource src(s * 771u + 13u);
    std::vector<Vec> pts;
    for (int i = 0; i <= n; ++i) pts.push_back(shadowcover::gaussian_vec(src, n));
    Body b = Body::from_points(pts, n);
    if (b.full_dimensional() && static_cast<int>(b.vertices().size()) == n + 1) return b;
  }
}

// Nonsingular map with generic conditioning: rotation, stretch, rotation.
inline shadowcover::AffineMap random_nonsingular(int n, std::uint64_t seed) {
  using namespace shadowcover;
  AffineMap r1 = random_rotation(n, seed * 2 + 1);
  AffineMap r2 = random_rotation(n, seed * 2 + 2);
  GaussianSource src(seed * 2 + 3);
  Matrix d(n, n);
  for (int i = 0; i < n; ++i) d(i, i) = 0.4 + 1.6 * src.uniform();
  AffineMap out;
  out.linear = mat_mul(r1.linear, mat_mul(d, r2.linear));
  out.shift = gaussian_vec(src, n);
  return out;
}

// Brute-force translate containment in the plane: try a translation grid
// and test every vertex of K against every edge halfplane of L, where the
// halfplanes come straight from L's vertex cycle (no library facets).
inline bool grid_translate_fits_2d(const Body& K, const Body& L, int grid = 200) {
  const auto& lv = L.vertices();
  // order L's vertices by angle around the centroid to walk the cycle
  Vec c = L.interior_point();
  std::vector<int> order(lv.size());
  for (size_t i = 0; i < lv.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::atan2(lv[a][1] - c[1], lv[a][0] - c[0]) <
           std::atan2(lv[b][1] - c[1], lv[b][0] - c[0]);
  });
  struct Edge {
    double nx, ny, off;
  };
  std::vector<Edge> edges;
  for (size_t i = 0; i < order.size(); ++i) {
    const Vec& a = lv[order[i]];
    const Vec& b = lv[order[(i + 1) % order.size()]];
    double nx = b[1] - a[1], ny = a[0] - b[0];  // outward for ccw cycle
    const double len = std::hypot(nx, ny);
    nx /= len;
    ny /= len;
    edges.push_back({nx, ny, nx * a[0] + ny * a[1]});
  }
  double klox = 1e300, khix = -1e300, kloy = 1e300, khiy = -1e300;
  for (const Vec& v : K.vertices()) {
    klox = std::min(klox, v[0]);
    khix = std::max(khix, v[0]);
    kloy = std::min(kloy, v[1]);
    khiy = std::max(khiy, v[1]);
  }
  double llox = 1e300, lhix = -1e300, lloy = 1e300, lhiy = -1e300;
  for (const Vec& v : lv) {
    llox = std::min(llox, v[0]);
    lhix = std::max(lhix, v[0]);
    lloy = std::min(lloy, v[1]);
    lhiy = std::max(lhiy, v[1]);
  }
  const double x0 = llox - khix, x1 = lhix - klox;
  const double y0 = lloy - khiy, y1 = lhiy - kloy;
  for (int gx = 0; gx <= grid; ++gx)
    for (int gy = 0; gy <= grid; ++gy) {
      const double tx = x0 + (x1 - x0) * gx / grid;
      const double ty = y0 + (y1 - y0) * gy / grid;
      bool ok = true;
      for (const Vec& v : K.vertices()) {
        for (const Edge& e : edges)
          if (e.nx * (v[0] + tx) + e.ny * (v[1] + ty) > e.off + 1e-9) {
            ok = false;
            break;
          }
        if (!ok) break;
      }
      if (ok) return true;
    }
  return false;
}

// Dense boundary sample of a 3-polytope: barycentric grids over every
// vertex triple (a superset of the facet triangulations; extra interior
// triples cannot enlarge the projected hull).
inline std::vector<Vec> boundary_sample_3d(const Body& B, int divisions = 40) {
  std::vector<Vec> pts;
  const auto& vx = B.vertices();
  for (size_t a = 0; a < vx.size(); ++a)
    for (size_t b = a + 1; b < vx.size(); ++b)
      for (size_t c = b + 1; c < vx.size(); ++c)
        for (int i = 0; i <= divisions; ++i)
          for (int j = 0; j <= divisions - i; ++j) {
            const double u = static_cast<double>(i) / divisions;
            const double v = static_cast<double>(j) / divisions;
            const double w = 1.0 - u - v;
            Vec p(3);
            for (int k = 0; k < 3; ++k)
              p[k] = u * vx[a][k] + v * vx[b][k] + w * vx[c][k];
            pts.push_back(std::move(p));
          }
  return pts;
}

// Shoelace area of the convex hull of planar points; independent of the
// library hull (gift wrapping on the raw points).
inline double planar_hull_area(std::vector<Vec> pts) {
  size_t start = 0;
  for (size_t i = 1; i < pts.size(); ++i)
    if (pts[i][0] < pts[start][0] ||
        (pts[i][0] == pts[start][0] && pts[i][1] < pts[start][1]))
      start = i;
  std::vector<Vec> hull;
  size_t cur = start;
  for (int guard = 0; guard < 100000; ++guard) {
    hull.push_back(pts[cur]);
    size_t next = (cur + 1) % pts.size();
    for (size_t i = 0; i < pts.size(); ++i) {
      const double cross = (pts[next][0] - pts[cur][0]) * (pts[i][1] - pts[cur][1]) -
                           (pts[next][1] - pts[cur][1]) * (pts[i][0] - pts[cur][0]);
      if (cross < -1e-12 ||
          (std::abs(cross) <= 1e-12 &&
           std::hypot(pts[i][0] - pts[cur][0], pts[i][1] - pts[cur][1]) >
               std::hypot(pts[next][0] - pts[cur][0], pts[next][1] - pts[cur][1])))
        next = i;
    }
    cur = next;
    if (cur == start) break;
  }
  double area = 0.0;
  for (size_t i = 0; i < hull.size(); ++i) {
    const Vec& a = hull[i];
    const Vec& b = hull[(i + 1) % hull.size()];
    area += a[0] * b[1] - b[0] * a[1];
  }
  return std::abs(area) / 2.0;
}

}  // namespace sctest

#endif
