#ifndef SHADOWCOVER_POLYTOPE_HPP
#define SHADOWCOVER_POLYTOPE_HPP

#include <memory>
#include <string>

#include "shadowcover/linalg.hpp"

namespace shadowcover {

/// A convex body as an irredundant list of extreme points.
struct VPolytope {
  int dim = 0;
  std::vector<Vec> vertices;
};

/// One supporting halfspace normal·x <= offset with its incident
/// vertices (indices into the owning body's vertex list).
struct Facet {
  Vec normal;  // unit length
  double offset = 0.0;
  std::vector<int> tight;
};

struct HPolytope {
  int dim = 0;
  std::vector<Facet> facets;
};

struct SupportResult {
  double value = 0.0;
  std::vector<int> argmax;  // vertices within tolerance of the max
};

namespace detail {

/// Oriented boundary simplex of a hull triangulation. `ids` index the
/// owning point list; ordering (together with `sign`) is chosen so the
/// signed fan volume comes out positive for a genuine outward facet.
struct ChainSimplex {
  std::vector<int> ids;
  Vec normal;  // construction-time outward normal (combinatorial aid)
  int sign = 1;
};

struct HullData {
  int dim = 0;   // ambient dimension
  int rank = 0;  // affine rank of the input
  std::vector<Vec> points;            // deduplicated input points
  std::vector<int> extreme;           // indices into `points`
  std::vector<ChainSimplex> chain;    // only when rank == dim
};

/// Incremental beneath-beyond hull. Combinatorics are resolved on a
/// deterministically micro-perturbed copy of the input; all metric
/// quantities downstream use the exact coordinates.
HullData hull_core(const std::vector<Vec>& pts, int dim);

}  // namespace detail

/// Immutable convex body (value semantics, shared internals). The
/// facet system is derived on first use and cached thread-safely.
class Body {
 public:
  Body() = default;

  static Body from_points(std::vector<Vec> pts, int dim, std::string name = "");
  static Body from_hrep(const HPolytope& h, std::string name = "");

  int dim() const;
  int affine_rank() const;
  bool full_dimensional() const { return affine_rank() == dim(); }
  const std::vector<Vec>& vertices() const;
  const Vec& interior_point() const;  // centroid of the vertices
  double circumscale() const;         // max vertex distance from the centroid
  const std::string& name() const;

  double volume() const;              // throws DegenerateInput unless full-dim
  const HPolytope& facets() const;    // lazy; throws DegenerateInput unless full-dim
  SupportResult support(const Vec& direction) const;

  struct State;  // definition private to the implementation

 private:
  std::shared_ptr<const State> s_;
  explicit Body(std::shared_ptr<const State> s) : s_(std::move(s)) {}

  friend Body translate(const Body&, const Vec&);
  friend Body dilate(const Body&, double);
  friend Body reflect(const Body&);
};

// ---- operations ----------------------------------------------------------

/// Extreme-point subset of the input; rejects inputs whose affine hull
/// has dimension below `dim`.
VPolytope hull(const std::vector<Vec>& pts, int dim);

double volume(const Body& b);
SupportResult support(const Body& b, const Vec& direction);

/// a·A + b·B with a, b >= 0.
Body minkowski_combination(double a, const Body& A, double b, const Body& B);
Body minkowski_sum(const Body& A, const Body& B);

Body affine_image(const Body& b, const AffineMap& psi);
Body translate(const Body& b, const Vec& t);
Body dilate(const Body& b, double factor);  // about the origin, factor >= 0
Body reflect(const Body& b);                // -B

/// Shadow of the body on span(basis), in basis coordinates. The result
/// may be lower-dimensional (flagged via full_dimensional()).
Body project(const Body& b, const Basis& basis);

HPolytope to_hrep(const VPolytope& p);
VPolytope to_vrep(const HPolytope& h);

// ---- named bodies --------------------------------------------------------

Body make_standard_simplex(int n);              // hull {o, e_1, ..., e_n}
Body make_regular_simplex(int n);               // unit edge length
Body make_cube(int n);                          // [0,1]^n
Body make_cross_polytope(int n);                // hull {±e_i}
Body make_cap_body(int n);                      // standard simplex capped at (1/(n-1),...)
Body make_prism(int n, int i);                  // i-th coordinate shadow of the simplex, extruded
Body reflect_scale(const Body& b, double lam);  // lam * (-B), lam >= 0
Body make_ball_approx(int n, int m, std::uint64_t seed);
Body make_random_polytope(int n, int m, std::uint64_t seed);

}  // namespace shadowcover

#endif
