#include <doctest.h>

#include <cmath>

#include "shadowcover/linalg.hpp"

using namespace shadowcover;

namespace {

double max_abs_diff(const Matrix& a, const Matrix& b) {
  double m = 0.0;
  for (size_t i = 0; i < a.data.size(); ++i)
    m = std::max(m, std::abs(a.data[i] - b.data[i]));
  return m;
}

}  // namespace

TEST_CASE("complement basis of coordinate axes") {
  Basis b = complement_basis({unit_vector(3, 0)}, 3);
  REQUIRE(b.size() == 2);
  for (const Vec& v : b.vectors) {
    CHECK(std::abs(dot(v, unit_vector(3, 0))) < 1e-10);
    CHECK(std::abs(norm(v) - 1.0) < 1e-12);
  }
  CHECK(std::abs(dot(b.vectors[0], b.vectors[1])) < 1e-12);

  Basis b2 = complement_basis({unit_vector(4, 0), unit_vector(4, 1)}, 4);
  REQUIRE(b2.size() == 2);
  // spans {e3, e4}: projector equals the axis projector
  Matrix p = projector(b2);
  Matrix expect(4, 4);
  expect(2, 2) = expect(3, 3) = 1.0;
  CHECK(max_abs_diff(p, expect) < 1e-10);
}

TEST_CASE("complement basis of the diagonal direction") {
  Vec diag = normalized({1.0, 1.0, 1.0});
  Basis b = complement_basis({diag}, 3);
  REQUIRE(b.size() == 2);
  for (const Vec& v : b.vectors) CHECK(std::abs(dot(v, diag)) < 1e-10);
}

TEST_CASE("complement basis rejects dependent input") {
  CHECK_THROWS_AS(complement_basis({{1.0, 0.0}, {2.0, 0.0}}, 2), RankDeficient);
}

TEST_CASE("complementing twice recovers the span") {
  GaussianSource src(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + trial % 3;
    const int k = 1 + trial % (n - 1);
    std::vector<Vec> vs;
    for (int i = 0; i < k; ++i) vs.push_back(gaussian_vec(src, n));
    Basis span = gram_schmidt(vs, n);
    if (span.size() != k) continue;
    Basis comp = complement_basis(vs, n);
    Basis back = complement_basis(comp.vectors, n);
    CHECK(max_abs_diff(projector(back), projector(span)) < 1e-10);
  }
}

TEST_CASE("gram schmidt basics") {
  Basis b = gram_schmidt({{2.0, 0.0}, {0.0, 3.0}}, 2);
  REQUIRE(b.size() == 2);
  CHECK(dist(b.vectors[0], {1.0, 0.0}) < 1e-12);
  CHECK(dist(b.vectors[1], {0.0, 1.0}) < 1e-12);

  Basis dep = gram_schmidt({{1.0, 0.0}, {1.0, 0.0}}, 2);
  CHECK(dep.size() == 1);
}

TEST_CASE("gram schmidt spans the same plane as the input") {
  // independent projector: P = A (A'A)^{-1} A' from the raw input vectors
  std::vector<Vec> input{{1.0, 1.0, 0.0}, {0.0, 1.0, 1.0}};
  Matrix gram(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) gram(i, j) = dot(input[i], input[j]);
  Matrix p_expected(3, 3);
  for (int col = 0; col < 3; ++col) {
    Vec rhs = {input[0][col], input[1][col]};
    Vec w = solve_linear(gram, rhs);
    for (int row = 0; row < 3; ++row)
      p_expected(row, col) = w[0] * input[0][row] + w[1] * input[1][row];
  }
  Basis b = gram_schmidt(input, 3);
  REQUIRE(b.size() == 2);
  CHECK(max_abs_diff(projector(b), p_expected) < 1e-10);
}

TEST_CASE("random rotation contracts") {
  AffineMap r1 = random_rotation(1, 123);
  CHECK(r1.linear(0, 0) == doctest::Approx(1.0));

  AffineMap q = random_rotation(3, 7);
  Matrix qtq = mat_mul(transpose(q.linear), q.linear);
  CHECK(max_abs_diff(qtq, Matrix::identity(3)) < 1e-10);
  CHECK(q.det() == doctest::Approx(1.0).epsilon(1e-10));

  AffineMap a = random_rotation(4, 1), b = random_rotation(4, 2);
  CHECK(max_abs_diff(a.linear, b.linear) > 1e-3);
  AffineMap a2 = random_rotation(4, 1);
  CHECK(max_abs_diff(a.linear, a2.linear) == 0.0);
}

TEST_CASE("rotations preserve pairwise distances") {
  GaussianSource src(5);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + trial % 4;
    AffineMap q = random_rotation(n, 100 + trial);
    std::vector<Vec> pts;
    for (int i = 0; i < 6; ++i) pts.push_back(gaussian_vec(src, n));
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i + 1; j < pts.size(); ++j)
        CHECK(std::abs(dist(q.apply(pts[i]), q.apply(pts[j])) - dist(pts[i], pts[j])) <
              1e-10);
  }
}

TEST_CASE("linear solve basics") {
  Matrix eye = Matrix::identity(3);
  Vec b = {1.0, -2.0, 0.5};
  CHECK(dist(solve_linear(eye, b), b) < 1e-14);

  Matrix d(2, 2);
  d(0, 0) = 2.0;
  d(1, 1) = 4.0;
  Vec x = solve_linear(d, {2.0, 8.0});
  CHECK(dist(x, {1.0, 2.0}) < 1e-14);

  Matrix s(2, 2);
  s(0, 0) = 1.0;
  s(0, 1) = 1.0;
  s(1, 0) = 1.0;
  s(1, 1) = 1.0;
  CHECK_THROWS_AS(solve_linear(s, {1.0, 2.0}), Singular);
}

TEST_CASE("vandermonde solve recovers polynomial coefficients") {
  // oracle first: evaluate a chosen quartic at the nodes 0..4
  const Vec coeffs = {3.0, -2.0, 0.5, 1.0, -0.25};
  Matrix vand(5, 5);
  Vec rhs = zeros(5);
  for (int s = 0; s < 5; ++s) {
    double pw = 1.0, val = 0.0;
    for (int i = 0; i < 5; ++i) {
      vand(s, i) = pw;
      val += coeffs[i] * pw;
      pw *= s;
    }
    rhs[s] = val;
  }
  double cond = 0.0;
  Vec got = solve_linear(vand, rhs, &cond);
  for (int i = 0; i < 5; ++i) CHECK(got[i] == doctest::Approx(coeffs[i]).epsilon(1e-9));
  CHECK(cond > 1.0);
}

TEST_CASE("solve residual contract on random systems") {
  GaussianSource src(99);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 6;
    Matrix a(n, n);
    for (double& x : a.data) x = src.next();
    Vec b = gaussian_vec(src, n);
    Vec x;
    try {
      x = solve_linear(a, b);
    } catch (const Singular&) {
      continue;
    }
    Vec r = sub(mat_vec(a, x), b);
    double binf = 0.0, rinf = 0.0;
    for (double v : b) binf = std::max(binf, std::abs(v));
    for (double v : r) rinf = std::max(rinf, std::abs(v));
    CHECK(rinf <= 1e-9 * (1.0 + binf));
  }
}

TEST_CASE("symmetric eigen on a known matrix") {
  Matrix s(2, 2);
  s(0, 0) = 2.0;
  s(1, 1) = 5.0;
  s(0, 1) = s(1, 0) = 0.0;
  Matrix vecs;
  Vec vals;
  symmetric_eigen(s, vecs, vals);
  CHECK(vals[0] == doctest::Approx(2.0));
  CHECK(vals[1] == doctest::Approx(5.0));
}
