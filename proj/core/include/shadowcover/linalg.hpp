#ifndef SHADOWCOVER_LINALG_HPP
#define SHADOWCOVER_LINALG_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "shadowcover/errors.hpp"
#include "shadowcover/tolerances.hpp"

namespace shadowcover {

/// Dense small-dimension vectors; the ambient dimension is the length.
using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b);
double norm(const Vec& a);
double dist(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scaled(const Vec& a, double s);
/// a + s*b
Vec axpy(const Vec& a, double s, const Vec& b);
Vec normalized(const Vec& a);  // throws ZeroDirection near zero
Vec zeros(int n);
Vec unit_vector(int n, int i);

/// Row-major dense matrix, sized for dimensions up to ~10.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0.0) {}

  double& operator()(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
  double operator()(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }

  static Matrix identity(int n);
};

Matrix transpose(const Matrix& a);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Vec mat_vec(const Matrix& a, const Vec& x);
double determinant(Matrix a);

/// Partial-pivoting elimination. Throws Singular when a pivot falls
/// below tolerances().pivot. cond_estimate (optional) receives the
/// max/min pivot magnitude ratio, a cheap conditioning proxy.
Vec solve_linear(const Matrix& a, const Vec& b, double* cond_estimate = nullptr);

/// Eigen-decomposition of a small symmetric matrix by cyclic Jacobi.
/// Eigenvalues ascending; eigenvectors in the columns of `vectors`.
void symmetric_eigen(const Matrix& s, Matrix& vectors, Vec& values);

/// k mutually orthonormal vectors in R^ambient.
struct Basis {
  int ambient = 0;
  std::vector<Vec> vectors;

  int size() const { return static_cast<int>(vectors.size()); }
};

/// Orthonormalizes the span of vs; inputs that fall below norm 1e-10
/// after projection are dropped.
Basis gram_schmidt(const std::vector<Vec>& vs, int ambient);

/// Orthonormal basis of the orthogonal complement of span(vs).
/// Throws RankDeficient when the inputs are dependent.
Basis complement_basis(const std::vector<Vec>& vs, int ambient);

/// Orthogonal projector matrix Q Qᵀ of a basis (for span comparisons).
Matrix projector(const Basis& b);

/// x ↦ linear·x + shift
struct AffineMap {
  Matrix linear;
  Vec shift;

  Vec apply(const Vec& x) const;
  double det() const { return determinant(linear); }

  static AffineMap identity(int n);
  static AffineMap scaling(int n, double s);
  static AffineMap translation(const Vec& t);
};

/// Deterministic per-seed rotation: orthonormalized seeded Gaussian
/// matrix with the determinant sign fixed to +1.
AffineMap random_rotation(int n, std::uint64_t seed);

/// Seeded normal deviates via Box-Muller over mt19937_64; hand-rolled so
/// streams are identical across standard libraries.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : rng_(seed) {}

  double uniform();  // [0,1)
  double next();     // standard normal
  std::uint64_t bits() { return rng_(); }

 private:
  std::mt19937_64 rng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

Vec gaussian_vec(GaussianSource& src, int n);

}  // namespace shadowcover

#endif
