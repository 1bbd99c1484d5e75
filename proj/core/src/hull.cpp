#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>

#include "shadowcover/lp.hpp"
#include "shadowcover/polytope.hpp"

namespace shadowcover::detail {

namespace {

constexpr double kPerturb = 1e-11;  // combinatorial micro-perturbation

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

double signed_noise(std::uint64_t key) {
  return std::ldexp(static_cast<double>(splitmix(key) >> 11), -52) - 1.0;  // [-1, 1)
}

// ---- double-double arithmetic for exact-enough determinant signs ---------

struct DD {
  double hi = 0.0;
  double lo = 0.0;
};

DD dd_from(double x) { return {x, 0.0}; }

DD two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

DD two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

DD dd_add(const DD& a, const DD& b) {
  DD s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  const DD r = two_sum(s.hi, s.lo);
  return r;
}

DD dd_sub(const DD& a, const DD& b) { return dd_add(a, {-b.hi, -b.lo}); }

DD dd_mul(const DD& a, const DD& b) {
  DD p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return two_sum(p.hi, p.lo);
}

DD dd_div(const DD& a, const DD& b) {
  const double q1 = a.hi / b.hi;
  DD r = dd_sub(a, dd_mul(dd_from(q1), b));
  const double q2 = r.hi / b.hi;
  r = dd_sub(r, dd_mul(dd_from(q2), b));
  const double q3 = r.hi / b.hi;
  DD q = two_sum(q1, q2);
  q.lo += q3;
  return two_sum(q.hi, q.lo);
}

double dd_value(const DD& a) { return a.hi + a.lo; }

// Determinant sign by partial-pivoting elimination in double-double.
int det_sign_dd(std::vector<DD> m, int d) {
  auto at = [&](int i, int j) -> DD& { return m[static_cast<size_t>(i) * d + j]; };
  int sign = 1;
  for (int k = 0; k < d; ++k) {
    int piv = k;
    for (int i = k + 1; i < d; ++i)
      if (std::abs(at(i, k).hi) > std::abs(at(piv, k).hi)) piv = i;
    if (piv != k) {
      for (int j = 0; j < d; ++j) std::swap(at(k, j), at(piv, j));
      sign = -sign;
    }
    const double p = dd_value(at(k, k));
    if (p == 0.0) return 0;
    if (p < 0.0) sign = -sign;
    for (int i = k + 1; i < d; ++i) {
      const DD f = dd_div(at(i, k), at(k, k));
      for (int j = k + 1; j < d; ++j)
        at(i, j) = dd_sub(at(i, j), dd_mul(f, at(k, j)));
      at(i, k) = dd_from(0.0);
    }
  }
  return sign;
}

// Orientation of point x against the ordered facet tuple: the sign of
// det[q_{ids[0]} - x, ..., q_{ids[d-1]} - x]. Fast double path with a
// forward-error guard; near-zero values re-evaluated in double-double,
// so every visibility decision is decisively signed.
class OrientPredicate {
 public:
  explicit OrientPredicate(const std::vector<Vec>& pts) : pts_(pts) {}

  int sign(const std::vector<int>& ids, const Vec& x) const {
    const int d = static_cast<int>(x.size());
    double m[8][8];
    double colmax_prod = 1.0;
    for (int j = 0; j < d; ++j) {
      const Vec& q = pts_[static_cast<size_t>(ids[static_cast<size_t>(j)])];
      double colmax = 0.0;
      for (int i = 0; i < d; ++i) {
        m[i][j] = q[static_cast<size_t>(i)] - x[static_cast<size_t>(i)];
        colmax = std::max(colmax, std::abs(m[i][j]));
      }
      colmax_prod *= colmax;
    }
    double det = 1.0;
    double guard = 1e-12 * colmax_prod;
    bool borderline = false;
    {
      double a[8][8];
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a[i][j] = m[i][j];
      for (int k = 0; k < d && !borderline; ++k) {
        int piv = k;
        for (int i = k + 1; i < d; ++i)
          if (std::abs(a[i][k]) > std::abs(a[piv][k])) piv = i;
        if (piv != k) {
          for (int j = 0; j < d; ++j) std::swap(a[k][j], a[piv][j]);
          det = -det;
        }
        if (a[k][k] == 0.0) {
          borderline = true;
          break;
        }
        det *= a[k][k];
        for (int i = k + 1; i < d; ++i) {
          const double f = a[i][k] / a[k][k];
          for (int j = k + 1; j < d; ++j) a[i][j] -= f * a[k][j];
        }
      }
    }
    if (!borderline && std::abs(det) > guard) return det > 0.0 ? 1 : -1;
    std::vector<DD> ddm(static_cast<size_t>(d) * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const Vec& q = pts_[static_cast<size_t>(ids[static_cast<size_t>(j)])];
        DD diff = two_sum(q[static_cast<size_t>(i)], -x[static_cast<size_t>(i)]);
        ddm[static_cast<size_t>(i) * d + j] = diff;
      }
    return det_sign_dd(std::move(ddm), d);
  }

 private:
  const std::vector<Vec>& pts_;
};

struct WorkFacet {
  std::vector<int> ids;  // ordered so the interior reference has sign -1
  Vec a;                 // seed normal for downstream facet extraction
  double b = 0.0;
  bool alive = true;
};

// Seed plane through the facet points; quality only matters as a seed
// for the exact-coordinate facet refit later, so never fail.
void seed_plane(const std::vector<Vec>& z, WorkFacet& f, const Vec& qc) {
  const int d = static_cast<int>(qc.size());
  std::vector<Vec> frame;
  for (size_t j = 1; j < f.ids.size(); ++j) {
    Vec w = sub(z[static_cast<size_t>(f.ids[j])], z[static_cast<size_t>(f.ids[0])]);
    for (int round = 0; round < 2; ++round)
      for (const Vec& u : frame) w = axpy(w, -dot(w, u), u);
    if (norm(w) > 1e-15) frame.push_back(normalized(w));
  }
  for (int i = 0; i < d && static_cast<int>(frame.size()) < d; ++i) {
    Vec w = unit_vector(d, i);
    for (int round = 0; round < 2; ++round)
      for (const Vec& u : frame) w = axpy(w, -dot(w, u), u);
    if (norm(w) > 1e-12) frame.push_back(normalized(w));
  }
  Vec normal = frame.back();
  double b = dot(normal, z[static_cast<size_t>(f.ids[0])]);
  if (dot(normal, qc) > b) {
    normal = scaled(normal, -1.0);
    b = -b;
  }
  f.a = std::move(normal);
  f.b = b;
}

bool full_rank_hull(const std::vector<Vec>& pts, int d, std::uint64_t salt,
                    HullData& out) {
  const int m = static_cast<int>(pts.size());
  // normalize to unit circumradius so every epsilon below is scale-free
  Vec center = zeros(d);
  for (const Vec& p : pts) center = add(center, p);
  center = scaled(center, 1.0 / m);
  double radius = 0.0;
  for (const Vec& p : pts) radius = std::max(radius, dist(p, center));
  std::vector<Vec> q(pts.size());
  for (int i = 0; i < m; ++i)
    q[static_cast<size_t>(i)] = scaled(sub(pts[static_cast<size_t>(i)], center), 1.0 / radius);

  if (d == 1) {
    int lo = 0, hi = 0;
    for (int i = 1; i < m; ++i) {
      if (q[static_cast<size_t>(i)][0] < q[static_cast<size_t>(lo)][0]) lo = i;
      if (q[static_cast<size_t>(i)][0] > q[static_cast<size_t>(hi)][0]) hi = i;
    }
    out.extreme = {std::min(lo, hi), std::max(lo, hi)};
    out.chain = {{{hi}, {1.0}, 1}, {{lo}, {-1.0}, -1}};
    return true;
  }

  std::vector<Vec> z = q;
  for (int i = 0; i < m; ++i)
    for (int c = 0; c < d; ++c)
      z[static_cast<size_t>(i)][static_cast<size_t>(c)] +=
          kPerturb * signed_noise(salt * 0x51eDull + static_cast<std::uint64_t>(i) * 131 +
                                  static_cast<std::uint64_t>(c));
  OrientPredicate orient(z);

  // initial simplex: greedy farthest-from-span
  std::vector<int> simp;
  int first = 0;
  for (int i = 1; i < m; ++i)
    if (z[static_cast<size_t>(i)] < z[static_cast<size_t>(first)]) first = i;
  simp.push_back(first);
  std::vector<Vec> span_dirs;
  while (static_cast<int>(simp.size()) < d + 1) {
    Basis span = gram_schmidt(span_dirs, d);
    int best = -1;
    double best_res = 1e-12;
    for (int i = 0; i < m; ++i) {
      if (std::find(simp.begin(), simp.end(), i) != simp.end()) continue;
      Vec w = sub(z[static_cast<size_t>(i)], z[static_cast<size_t>(simp[0])]);
      for (const Vec& u : span.vectors) w = axpy(w, -dot(w, u), u);
      const double r = norm(w);
      if (r > best_res) {
        best_res = r;
        best = i;
      }
    }
    if (best < 0) return false;
    simp.push_back(best);
    span_dirs.push_back(sub(z[static_cast<size_t>(best)], z[static_cast<size_t>(simp[0])]));
  }
  Vec qc = zeros(d);
  for (int i : simp) qc = add(qc, z[static_cast<size_t>(i)]);
  qc = scaled(qc, 1.0 / (d + 1));

  auto oriented_facet = [&](std::vector<int> ids) -> std::optional<WorkFacet> {
    WorkFacet f;
    f.ids = std::move(ids);
    const int s = orient.sign(f.ids, qc);
    if (s == 0) return std::nullopt;  // reference point on the span: degenerate
    if (s > 0) std::swap(f.ids[0], f.ids[1]);
    seed_plane(z, f, qc);
    return f;
  };

  std::vector<WorkFacet> facets;
  for (int omit = 0; omit <= d; ++omit) {
    std::vector<int> ids;
    for (int j = 0; j <= d; ++j)
      if (j != omit) ids.push_back(simp[static_cast<size_t>(j)]);
    auto f = oriented_facet(std::move(ids));
    if (!f) return false;
    facets.push_back(std::move(*f));
  }

  // deterministic shuffled insertion order
  std::vector<int> order;
  for (int i = 0; i < m; ++i)
    if (std::find(simp.begin(), simp.end(), i) == simp.end()) order.push_back(i);
  for (size_t i = order.size(); i > 1; --i) {
    const size_t j = static_cast<size_t>(splitmix(salt ^ (0xC0FFEEull + i)) % i);
    std::swap(order[i - 1], order[j]);
  }

  auto ridge_of = [](const WorkFacet& f, size_t omit) {
    std::vector<int> ridge;
    for (size_t j = 0; j < f.ids.size(); ++j)
      if (j != omit) ridge.push_back(f.ids[j]);
    std::sort(ridge.begin(), ridge.end());
    return ridge;
  };

  for (int p : order) {
    // exact predicates keep the maintained complex the true hull of the
    // processed points, so strict visibility is all that is needed
    std::vector<int> visible;
    for (size_t fi = 0; fi < facets.size(); ++fi) {
      if (!facets[fi].alive) continue;
      if (orient.sign(facets[fi].ids, z[static_cast<size_t>(p)]) > 0)
        visible.push_back(static_cast<int>(fi));
    }
    if (visible.empty()) continue;  // absorbed: the point is in the hull

    std::map<std::vector<int>, int> ridge_count;
    for (int fi : visible)
      for (size_t omit = 0; omit < facets[static_cast<size_t>(fi)].ids.size(); ++omit)
        ++ridge_count[ridge_of(facets[static_cast<size_t>(fi)], omit)];
    std::vector<WorkFacet> fresh;
    for (const auto& [ridge, count] : ridge_count) {
      if (count > 2) return false;
      if (count != 1) continue;
      std::vector<int> ids = ridge;
      ids.push_back(p);
      auto f = oriented_facet(std::move(ids));
      if (!f) return false;
      fresh.push_back(std::move(*f));
    }
    if (fresh.empty()) return false;
    for (int fi : visible) facets[static_cast<size_t>(fi)].alive = false;
    for (WorkFacet& f : fresh) facets.push_back(std::move(f));
  }

  {
    // the complex must have closed up into a 2-regular manifold
    std::map<std::vector<int>, int> rc;
    for (const WorkFacet& f : facets) {
      if (!f.alive) continue;
      for (size_t omit = 0; omit < f.ids.size(); ++omit) ++rc[ridge_of(f, omit)];
    }
    for (const auto& [ridge, count] : rc)
      if (count != 2) return false;
  }

  std::vector<int> candidates;
  for (const WorkFacet& f : facets)
    if (f.alive)
      for (int id : f.ids) candidates.push_back(id);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // extreme-point filter on the exact (unperturbed) coordinates
  {
    std::vector<int> keep;
    Vec c2 = zeros(d);
    for (int v : candidates) c2 = add(c2, q[static_cast<size_t>(v)]);
    c2 = scaled(c2, 1.0 / static_cast<double>(candidates.size()));
    for (int v : candidates) {
      bool certified = false;
      Vec dir = sub(q[static_cast<size_t>(v)], c2);
      if (candidates.size() <= 2) certified = true;
      if (!certified && norm(dir) > 1e-12) {
        dir = normalized(dir);
        const double mine = dot(q[static_cast<size_t>(v)], dir);
        double best_other = -1e300;
        for (int w : candidates)
          if (w != v) best_other = std::max(best_other, dot(q[static_cast<size_t>(w)], dir));
        certified = mine > best_other + 1e-8;
      }
      if (certified) {
        keep.push_back(v);
        continue;
      }
      // min t with v inside the sup-norm t-fattening of conv(others)
      const int nw = static_cast<int>(candidates.size()) - 1;
      Matrix a(2 * d + 2, nw + 1);
      Vec b = zeros(2 * d + 2);
      int col = 0;
      for (int w : candidates) {
        if (w == v) continue;
        for (int i = 0; i < d; ++i) {
          a(i, col) = q[static_cast<size_t>(w)][static_cast<size_t>(i)];
          a(d + i, col) = -q[static_cast<size_t>(w)][static_cast<size_t>(i)];
        }
        a(2 * d, col) = 1.0;
        a(2 * d + 1, col) = -1.0;
        ++col;
      }
      for (int i = 0; i < d; ++i) {
        a(i, nw) = -1.0;
        a(d + i, nw) = -1.0;
        b[static_cast<size_t>(i)] = q[static_cast<size_t>(v)][static_cast<size_t>(i)];
        b[static_cast<size_t>(d + i)] = -q[static_cast<size_t>(v)][static_cast<size_t>(i)];
      }
      b[static_cast<size_t>(2 * d)] = 1.0;
      b[static_cast<size_t>(2 * d + 1)] = -1.0;
      Vec c = zeros(nw + 1);
      c[static_cast<size_t>(nw)] = -1.0;
      lp::Outcome res = lp::simplex_nonneg(a, b, c);
      const double t = (res.status == lp::Status::Optimal) ? -res.objective : 1e300;
      if (t > tolerances().extreme) keep.push_back(v);
    }
    out.extreme = std::move(keep);
  }
  if (out.extreme.empty()) return false;

  for (WorkFacet& f : facets) {
    if (!f.alive) continue;
    // export with det[z_i - qc] > 0 so the signed fan is outward-positive
    if (orient.sign(f.ids, qc) < 0) std::swap(f.ids[0], f.ids[1]);
    out.chain.push_back({f.ids, f.a, 1});
  }
  return true;
}

}  // namespace

HullData hull_core(const std::vector<Vec>& pts, int dim) {
  if (pts.empty()) throw BadParameter("hull: no input points");
  for (const Vec& p : pts) {
    if (static_cast<int>(p.size()) != dim)
      throw DimensionMismatch("hull: point dimension mismatch");
    for (double x : p)
      if (!std::isfinite(x)) throw BadParameter("hull: non-finite coordinate");
  }

  HullData out;
  out.dim = dim;

  // dedup at tolerance relative to the circumradius (scale-free)
  Vec center = zeros(dim);
  for (const Vec& p : pts) center = add(center, p);
  center = scaled(center, 1.0 / static_cast<double>(pts.size()));
  double radius = 0.0;
  for (const Vec& p : pts) radius = std::max(radius, dist(p, center));
  const double dtol = tolerances().vertex_dedup * radius;
  for (const Vec& p : pts) {
    bool dup = false;
    for (const Vec& kept : out.points)
      if (dist(p, kept) <= dtol) {
        dup = true;
        break;
      }
    if (!dup) out.points.push_back(p);
  }

  // affine rank at scale-relative tolerance
  const Vec& base = out.points.front();
  std::vector<Vec> span;
  const double rank_tol = 1e-9 * std::max(1.0, radius);
  for (const Vec& p : out.points) {
    Vec w = sub(p, base);
    for (int round = 0; round < 2; ++round)
      for (const Vec& u : span) w = axpy(w, -dot(w, u), u);
    if (norm(w) > rank_tol) span.push_back(normalized(w));
  }
  out.rank = static_cast<int>(span.size());

  if (out.rank == 0) {
    out.extreme = {0};
    return out;
  }

  if (out.rank < dim) {
    std::vector<Vec> reduced(out.points.size());
    for (size_t i = 0; i < out.points.size(); ++i) {
      Vec c = zeros(out.rank);
      for (int j = 0; j < out.rank; ++j)
        c[static_cast<size_t>(j)] = dot(sub(out.points[i], base), span[static_cast<size_t>(j)]);
      reduced[i] = std::move(c);
    }
    HullData inner = hull_core(reduced, out.rank);
    out.extreme = inner.extreme;  // same index space; chain stays empty
    return out;
  }

  for (std::uint64_t salt = 1; salt <= 4; ++salt)
    if (full_rank_hull(out.points, dim, salt, out)) return out;
  throw NumericalFailure("hull: could not resolve a consistent facet structure");
}

}  // namespace shadowcover::detail
