#include "shadowcover/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>

#include "shadowcover/lp.hpp"

namespace shadowcover {

struct Body::State {
  int dim = 0;
  int rank = 0;
  std::vector<Vec> points;  // deduplicated support points (chain targets)
  std::vector<int> extreme_ids;
  std::vector<detail::ChainSimplex> chain;
  std::vector<Vec> vertices;
  Vec interior;
  double circumscale = 0.0;
  std::string name;

  mutable std::once_flag hrep_once;
  mutable std::unique_ptr<HPolytope> hrep;
  mutable std::once_flag vol_once;
  mutable double vol = 0.0;
};

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void finish_state(Body::State& st) {
  st.vertices.clear();
  st.vertices.reserve(st.extreme_ids.size());
  for (int id : st.extreme_ids) st.vertices.push_back(st.points[static_cast<size_t>(id)]);
  st.interior = zeros(st.dim);
  for (const Vec& v : st.vertices) st.interior = add(st.interior, v);
  st.interior = scaled(st.interior, 1.0 / static_cast<double>(st.vertices.size()));
  st.circumscale = 0.0;
  for (const Vec& v : st.vertices)
    st.circumscale = std::max(st.circumscale, dist(v, st.interior));
}

double chain_volume(const Body::State& st) {
  const int d = st.dim;
  double total = 0.0;
  for (const detail::ChainSimplex& f : st.chain) {
    Matrix m(d, d);
    for (int j = 0; j < d; ++j) {
      const Vec& p = st.points[static_cast<size_t>(f.ids[static_cast<size_t>(j)])];
      for (int i = 0; i < d; ++i)
        m(i, j) = p[static_cast<size_t>(i)] - st.interior[static_cast<size_t>(i)];
    }
    total += f.sign * determinant(m);
  }
  return total / factorial(d);
}

// Plane through the given vertex subset by least-squares; the normal is
// the smallest-eigenvalue direction of the centered covariance.
struct FitPlane {
  Vec normal;
  double spread2_second = 0.0;  // second-smallest eigenvalue (rank check)
  double spread2_min = 0.0;
  Vec mean;
};

FitPlane fit_plane(const std::vector<Vec>& vertices, const std::vector<int>& subset, int d) {
  FitPlane out;
  out.mean = zeros(d);
  for (int id : subset) out.mean = add(out.mean, vertices[static_cast<size_t>(id)]);
  out.mean = scaled(out.mean, 1.0 / static_cast<double>(subset.size()));
  Matrix cov(d, d);
  for (int id : subset) {
    Vec w = sub(vertices[static_cast<size_t>(id)], out.mean);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        cov(i, j) += w[static_cast<size_t>(i)] * w[static_cast<size_t>(j)];
  }
  for (double& x : cov.data) x /= static_cast<double>(subset.size());
  Matrix evec;
  Vec eval;
  symmetric_eigen(cov, evec, eval);
  out.normal = zeros(d);
  for (int i = 0; i < d; ++i) out.normal[static_cast<size_t>(i)] = evec(i, 0);
  out.normal = normalized(out.normal);
  out.spread2_min = eval[0];
  out.spread2_second = eval[1];
  return out;
}

HPolytope derive_facets(const Body::State& st) {
  HPolytope h;
  h.dim = st.dim;
  const int d = st.dim;
  const auto& vx = st.vertices;
  const double scale = std::max(1.0, st.circumscale);
  const double tight_tol = tolerances().facet_tight * scale;

  if (d == 1) {
    int lo = 0, hi = 0;
    for (int i = 1; i < static_cast<int>(vx.size()); ++i) {
      if (vx[static_cast<size_t>(i)][0] < vx[static_cast<size_t>(lo)][0]) lo = i;
      if (vx[static_cast<size_t>(i)][0] > vx[static_cast<size_t>(hi)][0]) hi = i;
    }
    h.facets.push_back({{1.0}, vx[static_cast<size_t>(hi)][0], {hi}});
    h.facets.push_back({{-1.0}, -vx[static_cast<size_t>(lo)][0], {lo}});
    return h;
  }

  auto tight_set = [&](const Vec& a, double b) {
    std::vector<int> t;
    for (int i = 0; i < static_cast<int>(vx.size()); ++i)
      if (dot(a, vx[static_cast<size_t>(i)]) >= b - tight_tol) t.push_back(i);
    return t;
  };
  auto support_offset = [&](const Vec& a) {
    double b = -1e300;
    for (const Vec& v : vx) b = std::max(b, dot(a, v));
    return b;
  };

  std::map<std::vector<int>, Facet> by_tight;
  for (const detail::ChainSimplex& cs : st.chain) {
    Vec a = cs.normal;  // valid direction: normalization is a uniform scaling
    double b = support_offset(a);
    std::vector<int> t = tight_set(a, b);
    for (int round = 0; round < 2; ++round) {
      if (static_cast<int>(t.size()) < d) break;
      FitPlane fp = fit_plane(vx, t, d);
      Vec a2 = fp.normal;
      if (dot(a2, st.interior) > dot(a2, fp.mean)) a2 = scaled(a2, -1.0);
      const double b2 = support_offset(a2);
      a = std::move(a2);
      b = b2;
      t = tight_set(a, b);
    }
    if (static_cast<int>(t.size()) < d) continue;
    FitPlane fp = fit_plane(vx, t, d);
    if (std::sqrt(std::max(fp.spread2_min, 0.0)) > 1e-6 * scale) continue;      // not coplanar
    if (std::sqrt(std::max(fp.spread2_second, 0.0)) < 1e-7 * scale) continue;   // rank below d-1
    bool sound = true;
    for (const Vec& v : vx)
      if (dot(a, v) - b > tight_tol) {
        sound = false;
        break;
      }
    if (!sound) continue;
    auto it = by_tight.find(t);
    if (it == by_tight.end()) by_tight.emplace(t, Facet{a, b, t});
  }

  // merge flicker duplicates (same plane, tight set differing by a marginal vertex)
  std::vector<Facet> merged;
  for (auto& [key, f] : by_tight) {
    bool dup = false;
    for (const Facet& g : merged)
      if (dot(f.normal, g.normal) > 1.0 - 1e-9 && std::abs(f.offset - g.offset) < tight_tol) {
        dup = true;
        break;
      }
    if (!dup) merged.push_back(std::move(f));
  }
  h.facets = std::move(merged);
  return h;
}

std::shared_ptr<Body::State> build_state(std::vector<Vec> pts, int dim, std::string name) {
  detail::HullData hd = detail::hull_core(pts, dim);
  auto st = std::make_shared<Body::State>();
  st->dim = hd.dim;
  st->rank = hd.rank;
  st->points = std::move(hd.points);
  st->extreme_ids = std::move(hd.extreme);
  st->chain = std::move(hd.chain);
  st->name = std::move(name);
  finish_state(*st);
  return st;
}

std::shared_ptr<Body::State> clone_mapped(const Body::State& s,
                                          const std::function<Vec(const Vec&)>& map,
                                          int sign_factor, bool flip_normals) {
  auto st = std::make_shared<Body::State>();
  st->dim = s.dim;
  st->rank = s.rank;
  st->points.reserve(s.points.size());
  for (const Vec& p : s.points) st->points.push_back(map(p));
  st->extreme_ids = s.extreme_ids;
  st->chain = s.chain;
  for (detail::ChainSimplex& cs : st->chain) {
    cs.sign *= sign_factor;
    if (flip_normals) cs.normal = scaled(cs.normal, -1.0);
  }
  st->name = s.name;
  finish_state(*st);
  return st;
}

}  // namespace

Body Body::from_points(std::vector<Vec> pts, int dim, std::string name) {
  return Body(build_state(std::move(pts), dim, std::move(name)));
}

Body Body::from_hrep(const HPolytope& h, std::string name) {
  VPolytope v = to_vrep(h);
  return from_points(v.vertices, v.dim, std::move(name));
}

int Body::dim() const { return s_ ? s_->dim : 0; }
int Body::affine_rank() const { return s_ ? s_->rank : 0; }

const std::vector<Vec>& Body::vertices() const {
  if (!s_) throw BadParameter("empty body");
  return s_->vertices;
}

const Vec& Body::interior_point() const {
  if (!s_) throw BadParameter("empty body");
  return s_->interior;
}

double Body::circumscale() const { return s_ ? s_->circumscale : 0.0; }

const std::string& Body::name() const {
  static const std::string empty;
  return s_ ? s_->name : empty;
}

double Body::volume() const {
  if (!s_) throw BadParameter("empty body");
  if (s_->rank < s_->dim)
    throw DegenerateInput("volume: body is lower-dimensional");
  std::call_once(s_->vol_once, [this] { s_->vol = chain_volume(*s_); });
  return s_->vol;
}

const HPolytope& Body::facets() const {
  if (!s_) throw BadParameter("empty body");
  if (s_->rank < s_->dim)
    throw DegenerateInput("facets: body is lower-dimensional");
  std::call_once(s_->hrep_once,
                 [this] { s_->hrep = std::make_unique<HPolytope>(derive_facets(*s_)); });
  return *s_->hrep;
}

SupportResult Body::support(const Vec& direction) const {
  if (!s_) throw BadParameter("empty body");
  if (static_cast<int>(direction.size()) != s_->dim)
    throw DimensionMismatch("support: direction dimension mismatch");
  if (norm(direction) < 1e-14) throw ZeroDirection("support: zero direction");
  SupportResult r;
  r.value = -1e300;
  for (const Vec& v : s_->vertices) r.value = std::max(r.value, dot(v, direction));
  const double tol =
      tolerances().support_argmax * std::max(1.0, s_->circumscale) * norm(direction);
  for (int i = 0; i < static_cast<int>(s_->vertices.size()); ++i)
    if (dot(s_->vertices[static_cast<size_t>(i)], direction) >= r.value - tol)
      r.argmax.push_back(i);
  return r;
}

VPolytope hull(const std::vector<Vec>& pts, int dim) {
  detail::HullData hd = detail::hull_core(pts, dim);
  if (hd.rank < dim)
    throw DegenerateInput("hull: input affine hull has dimension " +
                          std::to_string(hd.rank) + " < " + std::to_string(dim));
  VPolytope out;
  out.dim = dim;
  out.vertices.reserve(hd.extreme.size());
  for (int id : hd.extreme) out.vertices.push_back(hd.points[static_cast<size_t>(id)]);
  return out;
}

double volume(const Body& b) { return b.volume(); }

SupportResult support(const Body& b, const Vec& direction) { return b.support(direction); }

Body minkowski_combination(double a, const Body& A, double b, const Body& B) {
  if (a < 0.0 || b < 0.0) throw BadParameter("minkowski_combination: negative weight");
  if (A.dim() != B.dim()) throw DimensionMismatch("minkowski_combination: dimension mismatch");
  std::vector<Vec> sums;
  sums.reserve(A.vertices().size() * B.vertices().size());
  for (const Vec& va : A.vertices())
    for (const Vec& vb : B.vertices()) sums.push_back(axpy(scaled(va, a), b, vb));
  return Body::from_points(std::move(sums), A.dim());
}

Body minkowski_sum(const Body& A, const Body& B) { return minkowski_combination(1.0, A, 1.0, B); }

Body affine_image(const Body& b, const AffineMap& psi) {
  if (psi.linear.rows != b.dim() || psi.linear.cols != b.dim())
    throw DimensionMismatch("affine_image: map dimension mismatch");
  if (std::abs(psi.det()) <= 1e-12) throw SingularMap("affine_image: singular map");
  std::vector<Vec> mapped;
  mapped.reserve(b.vertices().size());
  for (const Vec& v : b.vertices()) mapped.push_back(psi.apply(v));
  return Body::from_points(std::move(mapped), b.dim(), b.name());
}

Body translate(const Body& b, const Vec& t) {
  if (static_cast<int>(t.size()) != b.dim())
    throw DimensionMismatch("translate: vector dimension mismatch");
  auto st = clone_mapped(*b.s_, [&t](const Vec& p) { return add(p, t); }, 1, false);
  return Body(std::move(st));
}

Body dilate(const Body& b, double factor) {
  if (factor < 0.0) throw BadParameter("dilate: negative factor (use reflect)");
  if (factor == 0.0) return Body::from_points({zeros(b.dim())}, b.dim());
  auto st = clone_mapped(*b.s_, [factor](const Vec& p) { return scaled(p, factor); }, 1, false);
  return Body(std::move(st));
}

Body reflect(const Body& b) {
  const int flip = (b.dim() % 2 == 1) ? -1 : 1;
  auto st = clone_mapped(*b.s_, [](const Vec& p) { return scaled(p, -1.0); }, flip, true);
  return Body(std::move(st));
}

Body reflect_scale(const Body& b, double lam) {
  if (lam < 0.0) throw BadParameter("reflect_scale: negative scale");
  if (lam == 0.0) return Body::from_points({zeros(b.dim())}, b.dim());
  return dilate(reflect(b), lam);
}

Body project(const Body& b, const Basis& basis) {
  const int k = basis.size();
  if (basis.ambient != b.dim()) throw BadBasis("project: basis ambient dimension mismatch");
  if (k < 1 || k >= b.dim()) throw BadBasis("project: need 1 <= dim(subspace) < n");
  for (int i = 0; i < k; ++i)
    for (int j = 0; j <= i; ++j) {
      const double g = dot(basis.vectors[static_cast<size_t>(i)], basis.vectors[static_cast<size_t>(j)]);
      if (std::abs(g - (i == j ? 1.0 : 0.0)) > 1e-9)
        throw BadBasis("project: basis is not orthonormal");
    }
  std::vector<Vec> coords;
  coords.reserve(b.vertices().size());
  for (const Vec& v : b.vertices()) {
    Vec c = zeros(k);
    for (int j = 0; j < k; ++j) c[static_cast<size_t>(j)] = dot(v, basis.vectors[static_cast<size_t>(j)]);
    coords.push_back(std::move(c));
  }
  return Body::from_points(std::move(coords), k);
}

HPolytope to_hrep(const VPolytope& p) {
  Body b = Body::from_points(p.vertices, p.dim);
  if (!b.full_dimensional()) throw DegenerateInput("to_hrep: polytope is lower-dimensional");
  return b.facets();
}

VPolytope to_vrep(const HPolytope& h) {
  const int d = h.dim;
  if (d < 1 || static_cast<int>(h.facets.size()) < d + 1)
    throw DegenerateInput("to_vrep: too few facets for a body");

  // normalize and drop repeated halfspaces before enumerating corners
  std::vector<Vec> normals;
  Vec offsets;
  double off_scale = 1.0;
  for (const Facet& f : h.facets) {
    const Vec a = normalized(f.normal);
    const double off = f.offset / norm(f.normal);
    bool dup = false;
    for (size_t i = 0; i < normals.size(); ++i)
      if (dot(a, normals[i]) > 1.0 - 1e-12 && std::abs(off - offsets[i]) < 1e-9) {
        dup = true;
        break;
      }
    if (dup) continue;
    normals.push_back(a);
    offsets.push_back(off);
    off_scale = std::max(off_scale, std::abs(off));
  }
  const int m = static_cast<int>(normals.size());
  if (m < d + 1) throw DegenerateInput("to_vrep: too few facets for a body");
  double combos = 1.0;
  for (int i = 0; i < d; ++i) combos *= static_cast<double>(m - i) / (i + 1);
  if (combos > 1e6) throw BadParameter("to_vrep: facet system too large for enumeration");

  Matrix A(m, d);
  Vec b = zeros(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < d; ++j) A(i, j) = normals[static_cast<size_t>(i)][static_cast<size_t>(j)];
    b[static_cast<size_t>(i)] = offsets[static_cast<size_t>(i)];
  }

  // bounded iff every coordinate is bounded over the system
  for (int j = 0; j < d; ++j)
    for (double sgn : {1.0, -1.0}) {
      lp::LinearProgram p;
      p.A = A;
      p.b = b;
      p.c = zeros(d);
      p.c[static_cast<size_t>(j)] = sgn;
      p.sense = lp::Sense::Maximize;
      lp::Outcome res = lp::solve(p);
      if (res.status == lp::Status::Unbounded)
        throw Unbounded("to_vrep: facet system is unbounded");
      if (res.status == lp::Status::Infeasible)
        throw DegenerateInput("to_vrep: facet system is empty");
    }

  const double feas_tol = tolerances().feasibility * off_scale;
  std::vector<Vec> found;
  std::vector<int> combo(static_cast<size_t>(d));
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == d) {
      Matrix M(d, d);
      Vec rhs = zeros(d);
      for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) M(r, c) = A(combo[static_cast<size_t>(r)], c);
        rhs[static_cast<size_t>(r)] = b[static_cast<size_t>(combo[static_cast<size_t>(r)])];
      }
      Vec x;
      try {
        x = solve_linear(M, rhs);
      } catch (const Singular&) {
        return;
      }
      for (int i = 0; i < m; ++i) {
        double s = b[static_cast<size_t>(i)];
        for (int j = 0; j < d; ++j) s -= A(i, j) * x[static_cast<size_t>(j)];
        if (s < -feas_tol) return;
      }
      const double ptol = tolerances().vertex_dedup * std::max(1.0, off_scale);
      for (const Vec& y : found)
        if (dist(x, y) <= ptol) return;
      found.push_back(std::move(x));
      return;
    }
    for (int i = start; i <= m - (d - depth); ++i) {
      combo[static_cast<size_t>(depth)] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);

  if (static_cast<int>(found.size()) < d + 1)
    throw DegenerateInput("to_vrep: facet system has no full-dimensional solution set");
  VPolytope out;
  out.dim = d;
  out.vertices = std::move(found);
  return out;
}

// ---- named bodies --------------------------------------------------------

Body make_standard_simplex(int n) {
  if (n < 1) throw BadParameter("standard simplex needs n >= 1");
  std::vector<Vec> pts{zeros(n)};
  for (int i = 0; i < n; ++i) pts.push_back(unit_vector(n, i));
  return Body::from_points(std::move(pts), n, "standard_simplex");
}

Body make_regular_simplex(int n) {
  if (n < 1) throw BadParameter("regular simplex needs n >= 1");
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<Vec> pts;
  for (int i = 0; i < n; ++i) pts.push_back(scaled(unit_vector(n, i), inv_sqrt2));
  const double alpha = (1.0 - std::sqrt(static_cast<double>(n) + 1.0)) /
                       (static_cast<double>(n) * std::sqrt(2.0));
  pts.push_back(Vec(static_cast<size_t>(n), alpha));
  return Body::from_points(std::move(pts), n, "regular_simplex");
}

Body make_cube(int n) {
  if (n < 1 || n > 16) throw BadParameter("cube dimension out of range");
  std::vector<Vec> pts;
  pts.reserve(static_cast<size_t>(1) << n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Vec p = zeros(n);
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) p[static_cast<size_t>(i)] = 1.0;
    pts.push_back(std::move(p));
  }
  return Body::from_points(std::move(pts), n, "cube");
}

Body make_cross_polytope(int n) {
  if (n < 1) throw BadParameter("cross polytope needs n >= 1");
  std::vector<Vec> pts;
  for (int i = 0; i < n; ++i) {
    pts.push_back(unit_vector(n, i));
    pts.push_back(scaled(unit_vector(n, i), -1.0));
  }
  return Body::from_points(std::move(pts), n, "cross_polytope");
}

Body make_cap_body(int n) {
  if (n < 2) throw BadParameter("cap body needs n >= 2");
  std::vector<Vec> pts{zeros(n)};
  for (int i = 0; i < n; ++i) pts.push_back(unit_vector(n, i));
  pts.push_back(Vec(static_cast<size_t>(n), 1.0 / (static_cast<double>(n) - 1.0)));
  return Body::from_points(std::move(pts), n, "cap_body");
}

Body make_prism(int n, int i) {
  if (n < 2 || i < 0 || i >= n) throw BadParameter("prism index out of range");
  std::vector<Vec> base{zeros(n)};
  for (int j = 0; j < n; ++j)
    if (j != i) base.push_back(unit_vector(n, j));
  std::vector<Vec> pts = base;
  for (const Vec& v : base) pts.push_back(add(v, unit_vector(n, i)));
  return Body::from_points(std::move(pts), n, "prism_" + std::to_string(i));
}

Body make_ball_approx(int n, int m, std::uint64_t seed) {
  if (n < 1 || m < n + 1) throw BadParameter("ball approximation needs m >= n+1 points");
  GaussianSource src(seed);
  std::vector<Vec> pts;
  pts.reserve(static_cast<size_t>(m));
  while (static_cast<int>(pts.size()) < m) {
    Vec g = gaussian_vec(src, n);
    if (norm(g) < 1e-8) continue;
    pts.push_back(normalized(g));
  }
  return Body::from_points(std::move(pts), n, "ball_approx");
}

Body make_random_polytope(int n, int m, std::uint64_t seed) {
  if (n < 1 || m < n + 1) throw BadParameter("random polytope needs m >= n+1 points");
  GaussianSource src(seed);
  std::vector<Vec> pts;
  pts.reserve(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) pts.push_back(gaussian_vec(src, n));
  return Body::from_points(std::move(pts), n, "random_polytope");
}

}  // namespace shadowcover
