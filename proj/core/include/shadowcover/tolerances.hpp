#ifndef SHADOWCOVER_TOLERANCES_HPP
#define SHADOWCOVER_TOLERANCES_HPP

namespace shadowcover {

/// One shared epsilon regime for every geometric predicate in the library.
/// All modules read from the same record so that, e.g., a facet declared
/// tight by the hull is also accepted as tight by the containment LP.
struct Tolerances {
  double orthogonality = 1e-10;  // orthonormality / rank checks
  double pivot = 1e-13;          // LU pivot below this is singular
  double solve_residual = 1e-9;  // linear solve backward-error contract
  double feasibility = 1e-8;     // LP slack accepted as "satisfied"
  double vertex_dedup = 1e-9;    // coincident input points (unit-scale)
  double extreme = 1e-9;         // margin for the extreme-point predicate
  double facet_tight = 1e-8;     // vertex-on-facet incidence
  double support_argmax = 1e-9;  // ties in support maximisation
  double cap_identity = 1e-9;    // cap body == prism intersection
  double unit = 1e-12;           // unit-norm checks
};

/// Mutable process-wide record; defaults above.
Tolerances& tolerances();

/// Reads SHADOWCOVER_TOL (a single float) and, when set, overrides the
/// LP feasibility slack in the global record. Returns true if applied.
bool apply_tolerance_env();

}  // namespace shadowcover

#endif
