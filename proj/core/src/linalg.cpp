#include "shadowcover/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

namespace shadowcover {

Tolerances& tolerances() {
  static Tolerances t;
  return t;
}

bool apply_tolerance_env() {
  const char* raw = std::getenv("SHADOWCOVER_TOL");
  if (raw == nullptr || *raw == '\0') return false;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || !(v > 0.0) || !std::isfinite(v)) return false;
  tolerances().feasibility = v;
  return true;
}

double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

double dist(const Vec& a, const Vec& b) { return norm(sub(a, b)); }

Vec add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scaled(const Vec& a, double s) {
  Vec r = a;
  for (double& x : r) x *= s;
  return r;
}

Vec axpy(const Vec& a, double s, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += s * b[i];
  return r;
}

Vec normalized(const Vec& a) {
  const double n = norm(a);
  if (n < 1e-14) throw ZeroDirection("cannot normalize a (near-)zero vector");
  return scaled(a, 1.0 / n);
}

Vec zeros(int n) { return Vec(static_cast<size_t>(n), 0.0); }

Vec unit_vector(int n, int i) {
  Vec e = zeros(n);
  e[static_cast<size_t>(i)] = 1.0;
  return e;
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
  return t;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Vec mat_vec(const Matrix& a, const Vec& x) {
  Vec y = zeros(a.rows);
  for (int i = 0; i < a.rows; ++i) {
    double s = 0.0;
    for (int j = 0; j < a.cols; ++j) s += a(i, j) * x[static_cast<size_t>(j)];
    y[static_cast<size_t>(i)] = s;
  }
  return y;
}

double determinant(Matrix a) {
  const int n = a.rows;
  double det = 1.0;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      det = -det;
    }
    const double p = a(k, k);
    if (p == 0.0) return 0.0;
    det *= p;
    for (int i = k + 1; i < n; ++i) {
      const double f = a(i, k) / p;
      for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

Vec solve_linear(const Matrix& a, const Vec& b, double* cond_estimate) {
  if (a.rows != a.cols) throw BadParameter("solve_linear: matrix must be square");
  if (static_cast<int>(b.size()) != a.rows)
    throw DimensionMismatch("solve_linear: rhs length mismatch");
  const int n = a.rows;
  Matrix m = a;
  Vec x = b;
  std::vector<int> perm(static_cast<size_t>(n));
  double pmax = 0.0, pmin = 0.0;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(m(i, k)) > std::abs(m(piv, k))) piv = i;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      std::swap(x[static_cast<size_t>(k)], x[static_cast<size_t>(piv)]);
    }
    const double p = std::abs(m(k, k));
    if (p < tolerances().pivot)
      throw Singular("solve_linear: pivot " + std::to_string(p) + " below tolerance");
    pmax = (k == 0) ? p : std::max(pmax, p);
    pmin = (k == 0) ? p : std::min(pmin, p);
    for (int i = k + 1; i < n; ++i) {
      const double f = m(i, k) / m(k, k);
      m(i, k) = 0.0;
      for (int j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
      x[static_cast<size_t>(i)] -= f * x[static_cast<size_t>(k)];
    }
  }
  for (int i = n - 1; i >= 0; --i) {
    double s = x[static_cast<size_t>(i)];
    for (int j = i + 1; j < n; ++j) s -= m(i, j) * x[static_cast<size_t>(j)];
    x[static_cast<size_t>(i)] = s / m(i, i);
  }
  if (cond_estimate != nullptr) *cond_estimate = (pmin > 0.0) ? pmax / pmin : INFINITY;
  return x;
}

void symmetric_eigen(const Matrix& s, Matrix& vectors, Vec& values) {
  const int n = s.rows;
  Matrix a = s;
  vectors = Matrix::identity(n);
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-28) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - sn * akq;
          a(k, q) = sn * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - sn * aqk;
          a(q, k) = sn * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = vectors(k, p), vkq = vectors(k, q);
          vectors(k, p) = c * vkp - sn * vkq;
          vectors(k, q) = sn * vkp + c * vkq;
        }
      }
  }
  values = zeros(n);
  std::vector<int> order(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) < a(j, j); });
  Matrix sorted(n, n);
  for (int j = 0; j < n; ++j) {
    values[static_cast<size_t>(j)] = a(order[static_cast<size_t>(j)], order[static_cast<size_t>(j)]);
    for (int i = 0; i < n; ++i) sorted(i, j) = vectors(i, order[static_cast<size_t>(j)]);
  }
  vectors = sorted;
}

Basis gram_schmidt(const std::vector<Vec>& vs, int ambient) {
  Basis b;
  b.ambient = ambient;
  for (const Vec& v : vs) {
    if (static_cast<int>(v.size()) != ambient)
      throw DimensionMismatch("gram_schmidt: vector length mismatch");
    Vec w = v;
    // two rounds of re-orthogonalization for numerical stability
    for (int round = 0; round < 2; ++round)
      for (const Vec& q : b.vectors) w = axpy(w, -dot(w, q), q);
    if (norm(w) > 1e-10) b.vectors.push_back(normalized(w));
  }
  return b;
}

Basis complement_basis(const std::vector<Vec>& vs, int ambient) {
  Basis span = gram_schmidt(vs, ambient);
  if (span.size() != static_cast<int>(vs.size()))
    throw RankDeficient("complement_basis: input vectors are dependent");
  Basis out;
  out.ambient = ambient;
  std::vector<Vec> work = span.vectors;
  for (int i = 0; i < ambient; ++i) {
    Vec w = unit_vector(ambient, i);
    for (int round = 0; round < 2; ++round)
      for (const Vec& q : work) w = axpy(w, -dot(w, q), q);
    if (norm(w) > 1e-10) {
      Vec q = normalized(w);
      work.push_back(q);
      out.vectors.push_back(std::move(q));
    }
  }
  return out;
}

Matrix projector(const Basis& b) {
  Matrix p(b.ambient, b.ambient);
  for (const Vec& q : b.vectors)
    for (int i = 0; i < b.ambient; ++i)
      for (int j = 0; j < b.ambient; ++j)
        p(i, j) += q[static_cast<size_t>(i)] * q[static_cast<size_t>(j)];
  return p;
}

Vec AffineMap::apply(const Vec& x) const {
  Vec y = mat_vec(linear, x);
  if (!shift.empty()) y = add(y, shift);
  return y;
}

AffineMap AffineMap::identity(int n) { return {Matrix::identity(n), zeros(n)}; }

AffineMap AffineMap::scaling(int n, double s) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = s;
  return {m, zeros(n)};
}

AffineMap AffineMap::translation(const Vec& t) {
  return {Matrix::identity(static_cast<int>(t.size())), t};
}

AffineMap random_rotation(int n, std::uint64_t seed) {
  if (n < 1) throw BadParameter("random_rotation: n must be >= 1");
  GaussianSource src(seed);
  for (;;) {
    std::vector<Vec> cols;
    cols.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) cols.push_back(gaussian_vec(src, n));
    Basis q = gram_schmidt(cols, n);
    if (q.size() != n) continue;  // astronomically rare; redraw
    Matrix m(n, n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) m(i, j) = q.vectors[static_cast<size_t>(j)][static_cast<size_t>(i)];
    if (determinant(m) < 0.0)
      for (int i = 0; i < n; ++i) m(i, n - 1) = -m(i, n - 1);
    return {m, zeros(n)};
  }
}

double GaussianSource::uniform() {
  return std::ldexp(static_cast<double>(rng_() >> 11), -53);
}

double GaussianSource::next() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u = 0.0, v = 0.0, s = 0.0;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  have_spare_ = true;
  return u * f;
}

Vec gaussian_vec(GaussianSource& src, int n) {
  Vec v = zeros(n);
  for (double& x : v) x = src.next();
  return v;
}

}  // namespace shadowcover
