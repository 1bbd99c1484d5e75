#include <doctest.h>

#include <cmath>

#include "shadowcover/containment.hpp"
#include "shadowcover/shadow.hpp"
#include "support/fixtures.hpp"

using namespace shadowcover;

namespace {

bool witness_verifies(const Body& K, const Body& L, const Vec& x) {
  for (const Facet& f : L.facets().facets)
    if (K.support(f.normal).value + dot(f.normal, x) > f.offset + 1e-8) return false;
  return true;
}

}  // namespace

TEST_CASE("box fits in the double box with a square of placements") {
  Body small = make_cube(2);
  Body big = dilate(make_cube(2), 2.0);
  ContainmentWitness w = translate_into(small, big);
  REQUIRE(w.feasible);
  CHECK(witness_verifies(small, big, w.translation));
  // the full translation set is [0,1]^2: all four corners work, beyond fails
  for (double cx : {0.0, 1.0})
    for (double cy : {0.0, 1.0}) CHECK(witness_verifies(small, big, {cx, cy}));
  CHECK(!witness_verifies(small, big, {1.01, 0.5}));
  CHECK(!witness_verifies(small, big, {-0.01, 0.5}));
}

TEST_CASE("identity containment") {
  Body xi = make_standard_simplex(3);
  ContainmentWitness w = translate_into(xi, xi);
  REQUIRE(w.feasible);
  CHECK(norm(w.translation) < 1e-7);
}

TEST_CASE("triangle cannot hide in its reflection") {
  Body tri = make_regular_simplex(2);
  Body neg = reflect(tri);
  ContainmentWitness w = translate_into(tri, neg);
  CHECK(!w.feasible);
  CHECK(w.deficit > 0.0);
  CHECK(norm(w.violated_normal) == doctest::Approx(1.0));
  // grid oracle over 200x200 translations agrees
  CHECK(!sctest::grid_translate_fits_2d(tri, neg));
}

TEST_CASE("feasible witnesses re-verify against the facets") {
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 3;
    Body K = sctest::random_full_body(n, n + 4, 11000 + trial);
    Body L = sctest::random_full_body(n, n + 5, 12000 + trial);
    ContainmentWitness w = translate_into(K, L);
    if (w.feasible) CHECK(witness_verifies(K, L, w.translation));
  }
}

TEST_CASE("max scale of a box into a larger box") {
  ScaleResult s = max_scale(make_cube(2), dilate(make_cube(2), 1.5));
  CHECK(s.alpha == doctest::Approx(1.5).epsilon(1e-8));
}

TEST_CASE("max scale agrees with a bisection oracle") {
  Body tri = make_regular_simplex(2);
  Body neg = reflect(tri);
  ScaleResult s = max_scale(tri, neg);
  // oracle: bisection on translate_into over the scale
  double lo = 0.0, hi = 4.0;
  for (int it = 0; it < 40; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (translate_into(dilate(tri, mid), neg).feasible)
      lo = mid;
    else
      hi = mid;
  }
  CHECK(std::abs(s.alpha - lo) < 1e-6);
  CHECK(s.alpha == doctest::Approx(0.5).epsilon(1e-6));  // simplex reflection scale
}

TEST_CASE("the simplex fits in its cap body at unit scale") {
  ScaleResult s = max_scale(make_standard_simplex(3), make_cap_body(3));
  CHECK(s.alpha >= 1.0 - 1e-8);
}

TEST_CASE("max scale rejects point bodies") {
  Body pt = Body::from_points({{0.3, 0.4}}, 2);
  CHECK_THROWS_AS(max_scale(pt, make_cube(2)), PointBody);
}

TEST_CASE("minimal covering dilates of simplex reflections") {
  for (int n = 2; n <= 3; ++n) {
    Body delta = make_regular_simplex(n);
    DilateResult d = min_cover_dilate(delta, reflect(delta));
    CHECK(d.lambda == doctest::Approx(static_cast<double>(n)).epsilon(1e-6));
  }
  Body xi = make_standard_simplex(3);
  CHECK(min_cover_dilate(xi, xi).lambda == doctest::Approx(1.0).epsilon(1e-8));
  Body delta3 = make_regular_simplex(3);
  CHECK(min_cover_dilate(delta3, reflect_scale(delta3, 2.0)).lambda ==
        doctest::Approx(1.5).epsilon(1e-6));
}

TEST_CASE("dilate minimality: shrinking the dilate breaks containment") {
  Body delta = make_regular_simplex(3);
  Body neg = reflect(delta);
  DilateResult d = min_cover_dilate(delta, neg);
  CHECK(translate_into(delta, dilate(neg, d.lambda + 1e-6)).feasible);
  CHECK(!translate_into(delta, dilate(neg, d.lambda - 1e-4)).feasible);
}

TEST_CASE("simplex criterion basics") {
  Body xi = make_standard_simplex(3);
  Body tiny = dilate(make_cube(3), 0.05);
  CHECK(lutwak_simplex_contains(xi, tiny));
  CHECK(!lutwak_simplex_contains(xi, dilate(xi, 2.0)));
  CHECK_THROWS_AS(lutwak_simplex_contains(make_cube(3), tiny), NotASimplex);
}

TEST_CASE("simplex criterion equals the LP verdict on seeded pairs") {
  int agree = 0;
  const int trials = 60;
  for (int t = 0; t < trials; ++t) {
    const int n = 2 + t % 2;
    Body T = sctest::random_simplex(n, 500 + t);
    Body K0 = sctest::random_full_body(n, n + 4, 900 + t);
    GaussianSource pick(7000 + t);
    const double alpha = max_scale(K0, T).alpha;
    double f = 0.0;
    do {
      f = 0.5 + pick.uniform();
    } while (std::abs(f - 1.0) < 0.02);
    Body K = dilate(K0, alpha * f);
    if (lutwak_simplex_contains(T, K) == translate_into(K, T).feasible) ++agree;
  }
  CHECK(agree == trials);
}

TEST_CASE("corner normalization zeroes the axis supports") {
  Body shifted = translate(make_cube(3), {5.0, 5.0, 5.0});
  Body back = corner_normalize(shifted);
  for (int i = 0; i < 3; ++i)
    CHECK(std::abs(back.support(scaled(unit_vector(3, i), -1.0)).value) < 1e-12);
  CHECK(dist(back.interior_point(), make_cube(3).interior_point()) < 1e-9);

  Body xi = make_standard_simplex(3);
  Body same = corner_normalize(xi);
  CHECK(dist(same.interior_point(), xi.interior_point()) < 1e-12);

  Body rnd = sctest::random_full_body(3, 9, 321);
  Body cn = corner_normalize(rnd);
  for (int i = 0; i < 3; ++i)
    CHECK(std::abs(cn.support(scaled(unit_vector(3, i), -1.0)).value) < 1e-12);
}

TEST_CASE("hide-behind witness for the simplex itself") {
  HideResult h = hide_behind_simplex_witness(make_standard_simplex(3));
  CHECK(h.inside_cap_body);
  CHECK(norm(h.translation) < 1e-12);
}

TEST_CASE("the cap body hides behind the simplex") {
  // first confirm the precondition along the axes by LP, as the caller would
  Body D = make_cap_body(3);
  Body xi = make_standard_simplex(3);
  for (int i = 0; i < 3; ++i) {
    Basis plane = complement_basis({unit_vector(3, i)}, 3);
    ContainmentWitness w = translate_into(project(D, plane), project(xi, plane));
    REQUIRE(w.feasible);
  }
  HideResult h = hide_behind_simplex_witness(D);
  CHECK(h.inside_cap_body);
}

TEST_CASE("an enlarged simplex fails the hide-behind precondition") {
  Body big = dilate(make_standard_simplex(3), 1.01);
  CHECK_THROWS_AS(hide_behind_simplex_witness(big), PreconditionFailed);
}

TEST_CASE("every body fits in n times its reflection") {
  for (int n = 2; n <= 4; ++n)
    for (int i = 0; i < 30; ++i) {
      Body K = sctest::random_full_body(n, n + 4, 222000 + 100 * n + i);
      CHECK(translate_into(K, reflect_scale(K, static_cast<double>(n))).feasible);
    }
}

TEST_CASE("covered shadows bound the volume through the cap body") {
  // bodies whose axis shadows the simplex covers stay below (n/(n-1)) V(simplex)
  Body xi = make_standard_simplex(3);
  const double cap = 1.5 * xi.volume();
  for (std::uint64_t s = 42; s < 46; ++s) {
    Body K0 = sctest::random_full_body(3, 8, s);
    const double alpha = max_scale(K0, xi).alpha;
    Body K = dilate(K0, alpha);  // inside the simplex, shadows certainly covered
    HideResult h = hide_behind_simplex_witness(K);
    CHECK(h.inside_cap_body);
    CHECK(K.volume() <= cap + 1e-9);
  }
}

TEST_CASE("sweep certificates transfer to the dilate containment") {
  Body delta = make_regular_simplex(3);
  Body L = reflect_scale(delta, 2.0);
  CoveringReport rep = covering_sweep(delta, L, 1, 400, 9, false);
  REQUIRE(rep.all_covered);
  CHECK(translate_into(delta, dilate(L, 1.5)).feasible);
}
