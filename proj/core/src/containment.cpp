#include "shadowcover/containment.hpp"

#include <cmath>

#include "shadowcover/lp.hpp"

namespace shadowcover {

namespace {

struct FacetSystem {
  Matrix normals;  // m x n
  Vec offsets;
  Vec support_k;  // h_K at each normal
};

FacetSystem facet_system(const Body& K, const Body& L) {
  if (K.dim() != L.dim()) throw DimensionMismatch("containment: dimension mismatch");
  const HPolytope& h = L.facets();
  const int m = static_cast<int>(h.facets.size());
  const int n = L.dim();
  FacetSystem fs;
  fs.normals = Matrix(m, n);
  fs.offsets = zeros(m);
  fs.support_k = zeros(m);
  for (int i = 0; i < m; ++i) {
    const Facet& f = h.facets[static_cast<size_t>(i)];
    for (int j = 0; j < n; ++j) fs.normals(i, j) = f.normal[static_cast<size_t>(j)];
    fs.offsets[static_cast<size_t>(i)] = f.offset;
    fs.support_k[static_cast<size_t>(i)] = K.support(f.normal).value;
  }
  return fs;
}

}  // namespace

ContainmentWitness translate_into(const Body& K, const Body& L) {
  FacetSystem fs = facet_system(K, L);
  Vec rhs = sub(fs.offsets, fs.support_k);
  lp::FeasibilityResult fr = lp::max_min_slack(fs.normals, rhs);
  ContainmentWitness w;
  w.feasible = fr.ok;
  w.margin = fr.margin;
  if (fr.ok) {
    w.translation = fr.x;
  } else {
    const Facet& f = L.facets().facets[static_cast<size_t>(fr.worst_row)];
    w.violated_normal = f.normal;
    w.deficit = -fr.margin;
    w.translation = fr.x;  // best (still failing) placement, for diagnostics
  }
  return w;
}

ScaleResult max_scale(const Body& K, const Body& L) {
  if (K.vertices().size() <= 1)
    throw PointBody("max_scale: K is a single point; every scale fits");
  FacetSystem fs = facet_system(K, L);
  const int m = fs.normals.rows, n = fs.normals.cols;
  // maximize alpha s.t. alpha h_K(a_j) + a_j·x <= b_j, alpha >= 0
  lp::LinearProgram p;
  p.A = Matrix(m + 1, n + 1);
  p.b = zeros(m + 1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) p.A(i, j) = fs.normals(i, j);
    p.A(i, n) = fs.support_k[static_cast<size_t>(i)];
    p.b[static_cast<size_t>(i)] = fs.offsets[static_cast<size_t>(i)];
  }
  p.A(m, n) = -1.0;  // alpha >= 0
  p.c = zeros(n + 1);
  p.c[static_cast<size_t>(n)] = 1.0;
  p.sense = lp::Sense::Maximize;
  lp::Outcome res = lp::solve(p);
  if (res.status == lp::Status::Unbounded)
    throw PointBody("max_scale: scale is unbounded (degenerate K)");
  if (res.status != lp::Status::Optimal)
    throw NumericalFailure("max_scale: LP did not reach an optimum");
  ScaleResult sr;
  sr.alpha = res.objective;
  sr.translation = Vec(res.x.begin(), res.x.begin() + n);
  return sr;
}

DilateResult min_cover_dilate(const Body& K, const Body& L) {
  if (!K.full_dimensional() || !L.full_dimensional())
    throw DimensionMismatch("min_cover_dilate: bodies must be full-dimensional");
  FacetSystem fs = facet_system(K, L);
  const int m = fs.normals.rows, n = fs.normals.cols;
  // minimize lambda s.t. h_K(a_j) + a_j·x <= lambda b_j, lambda >= 0
  lp::LinearProgram p;
  p.A = Matrix(m + 1, n + 1);
  p.b = zeros(m + 1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) p.A(i, j) = fs.normals(i, j);
    p.A(i, n) = -fs.offsets[static_cast<size_t>(i)];
    p.b[static_cast<size_t>(i)] = -fs.support_k[static_cast<size_t>(i)];
  }
  p.A(m, n) = -1.0;
  p.c = zeros(n + 1);
  p.c[static_cast<size_t>(n)] = 1.0;
  p.sense = lp::Sense::Minimize;
  lp::Outcome res = lp::solve(p);
  if (res.status != lp::Status::Optimal)
    throw NumericalFailure("min_cover_dilate: LP did not reach an optimum");
  DilateResult dr;
  dr.lambda = res.objective;
  dr.translation = Vec(res.x.begin(), res.x.begin() + n);
  return dr;
}

bool lutwak_simplex_contains(const Body& T, const Body& K) {
  if (!T.full_dimensional() ||
      static_cast<int>(T.vertices().size()) != T.dim() + 1)
    throw NotASimplex("lutwak_simplex_contains: T must be an n-simplex");
  return base_height_mixed(T, K) <= T.volume() + 1e-9;
}

Vec corner_offset(const Body& K) {
  const int n = K.dim();
  Vec t = zeros(n);
  for (int i = 0; i < n; ++i)
    t[static_cast<size_t>(i)] = K.support(scaled(unit_vector(n, i), -1.0)).value;
  return t;
}

Body corner_normalize(const Body& K) { return translate(K, corner_offset(K)); }

HideResult hide_behind_simplex_witness(const Body& K) {
  if (!K.full_dimensional())
    throw DegenerateInput("hide_behind_simplex_witness: K must be full-dimensional");
  const int n = K.dim();
  const Vec shift = corner_offset(K);
  Body C = translate(K, shift);
  const double tol = tolerances().feasibility;
  for (int i = 0; i < n; ++i) {
    Body prism = make_prism(n, i);
    for (const Facet& f : prism.facets().facets) {
      const double excess = C.support(f.normal).value - f.offset;
      if (excess > tol)
        throw PreconditionFailed(
            "hide_behind_simplex_witness: body escapes prism " + std::to_string(i) +
                " by " + std::to_string(excess),
            f.normal);
    }
  }
  return {shift, true};
}

}  // namespace shadowcover
