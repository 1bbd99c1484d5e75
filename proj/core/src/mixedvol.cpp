#include "shadowcover/mixedvol.hpp"

#include <algorithm>
#include <cmath>

namespace shadowcover {

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r *= static_cast<double>(n - k + i) / i;
  return r;
}

SteinerCoefficients steiner_fit(const Body& K, const Body& L) {
  if (K.dim() != L.dim()) throw DimensionMismatch("steiner_fit: dimension mismatch");
  const int n = K.dim();
  if (n > 6) throw IllConditioned("steiner_fit: only supported for n <= 6");
  Vec vols = zeros(n + 1);
  vols[0] = K.volume();
  for (int s = 1; s <= n; ++s)
    vols[static_cast<size_t>(s)] =
        minkowski_combination(1.0, K, static_cast<double>(s), L).volume();

  // V(K + sL) = sum_i binom(n,i) s^i V_{n-i,i};  Vandermonde on s = 0..n
  Matrix vand(n + 1, n + 1);
  for (int s = 0; s <= n; ++s) {
    double pw = 1.0;
    for (int i = 0; i <= n; ++i) {
      vand(s, i) = pw;
      pw *= static_cast<double>(s);
    }
  }
  Vec monom = solve_linear(vand, vols);
  SteinerCoefficients sc;
  sc.n = n;
  sc.values = zeros(n + 1);
  for (int i = 0; i <= n; ++i)
    sc.values[static_cast<size_t>(i)] = monom[static_cast<size_t>(i)] / binomial(n, i);
  return sc;
}

namespace {

// (n-1)-measure of one facet: project its incident vertices into
// hyperplane coordinates and reuse the volume kernel one level down.
double facet_measure(const Body& P, const Facet& f) {
  const int n = P.dim();
  if (n == 1) return 1.0;  // facets of a segment are points with counting measure
  Basis plane = complement_basis({f.normal}, n);
  std::vector<Vec> coords;
  coords.reserve(f.tight.size());
  for (int id : f.tight) {
    const Vec& v = P.vertices()[static_cast<size_t>(id)];
    Vec c = zeros(n - 1);
    for (int j = 0; j < n - 1; ++j)
      c[static_cast<size_t>(j)] = dot(v, plane.vectors[static_cast<size_t>(j)]);
    coords.push_back(std::move(c));
  }
  Body face = Body::from_points(std::move(coords), n - 1);
  if (!face.full_dimensional()) return 0.0;
  return face.volume();
}

}  // namespace

double base_height_mixed(const Body& P, const Body& K) {
  if (P.dim() != K.dim()) throw DimensionMismatch("base_height_mixed: dimension mismatch");
  const int n = P.dim();
  double acc = 0.0;
  for (const Facet& f : P.facets().facets)
    acc += K.support(f.normal).value * facet_measure(P, f);
  return acc / static_cast<double>(n);
}

double InterpFamily::eval(double t) const {
  double v = 0.0;
  for (int j = n; j >= 0; --j) v = v * t + poly[static_cast<size_t>(j)];
  return v;
}

double InterpFamily::deriv(double t) const {
  double v = 0.0;
  for (int j = n; j >= 1; --j) v = v * t + j * poly[static_cast<size_t>(j)];
  return v;
}

double InterpFamily::derivative_at_one() const { return deriv(1.0); }

InterpFamily interp_family(const Body& K, const Body& T) {
  SteinerCoefficients sc = steiner_fit(K, T);
  const int n = sc.n;
  InterpFamily fam;
  fam.n = n;
  fam.poly = zeros(n + 1);
  // f(t) = sum_i binom(n,i) (1-t)^{n-i} t^i V_{n-i,i};  expand (1-t)^{n-i}
  for (int i = 0; i <= n; ++i) {
    const double coeff = binomial(n, i) * sc.values[static_cast<size_t>(i)];
    for (int j = 0; j <= n - i; ++j) {
      const double sign = (j % 2 == 0) ? 1.0 : -1.0;
      fam.poly[static_cast<size_t>(i + j)] += coeff * sign * binomial(n - i, j);
    }
  }
  return fam;
}

InterpOptimum optimize_interp(const Body& K, const Body& T) {
  InterpFamily f = interp_family(K, T);
  const int grid = 2048;
  double fmin = 1e300, fmax = -1e300;
  for (int g = 0; g <= grid; ++g) {
    const double v = f.eval(static_cast<double>(g) / grid);
    fmin = std::min(fmin, v);
    fmax = std::max(fmax, v);
  }
  if (fmax - fmin <= 1e-12 * std::max(1.0, std::abs(fmax)))
    return {1.0, f.eval(1.0)};  // flat family

  std::vector<double> candidates{0.0, 1.0};
  double prev = f.deriv(0.0);
  for (int g = 1; g <= grid; ++g) {
    const double t = static_cast<double>(g) / grid;
    const double cur = f.deriv(t);
    if ((prev > 0.0 && cur <= 0.0) || (prev < 0.0 && cur >= 0.0)) {
      double lo = static_cast<double>(g - 1) / grid, hi = t;
      double flo = prev;
      for (int it = 0; it < 100 && hi - lo > 1e-10; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f.deriv(mid);
        if ((flo <= 0.0) == (fm <= 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      candidates.push_back(0.5 * (lo + hi));
    }
    prev = cur;
  }
  InterpOptimum best{0.0, -1e300};
  for (double t : candidates) {
    const double v = f.eval(t);
    if (v > best.value) best = {t, v};
  }
  return best;
}

double brunn_minkowski_gap(const Body& K, const Body& L, double t) {
  if (t < 0.0 || t > 1.0) throw BadParameter("brunn_minkowski_gap: t outside [0,1]");
  if (K.dim() != L.dim()) throw DimensionMismatch("brunn_minkowski_gap: dimension mismatch");
  const int n = K.dim();
  if (t == 0.0) return 0.0;
  if (t == 1.0) return 0.0;
  const double mixed = minkowski_combination(1.0 - t, K, t, L).volume();
  return std::pow(mixed, 1.0 / n) - (1.0 - t) * std::pow(K.volume(), 1.0 / n) -
         t * std::pow(L.volume(), 1.0 / n);
}

double rogers_shephard_ratio(const Body& K) {
  if (!K.full_dimensional())
    throw ZeroVolume("rogers_shephard_ratio: body has no volume");
  const double vk = K.volume();
  if (vk <= 1e-300) throw ZeroVolume("rogers_shephard_ratio: zero volume body");
  return minkowski_sum(K, reflect(K)).volume() / vk;
}

}  // namespace shadowcover
