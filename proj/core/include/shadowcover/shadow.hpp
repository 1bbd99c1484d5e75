#ifndef SHADOWCOVER_SHADOW_HPP
#define SHADOWCOVER_SHADOW_HPP

#include <json.hpp>

#include "shadowcover/containment.hpp"
#include "shadowcover/polytope.hpp"

namespace shadowcover {

enum class DirectionStrategy { Fibonacci, Gaussian, Informed };

struct DirectionSample {
  int n = 0;
  std::vector<Vec> directions;  // unit vectors
  DirectionStrategy strategy = DirectionStrategy::Gaussian;
  std::uint64_t seed = 0;
};

/// Fibonacci gives evenly spaced angles in the plane and the spherical
/// spiral for n = 3 (and is rejected elsewhere); Gaussian works in any
/// dimension. Informed sets require bodies — see informed_directions.
DirectionSample sample_directions(int n, int count, DirectionStrategy strategy,
                                  std::uint64_t seed);

/// Facet normals of both bodies plus normalized vertex differences,
/// deduplicated up to sign, truncated at `cap`. Covering failures
/// concentrate near normal-fan boundaries, so sweeps always include these.
std::vector<Vec> informed_directions(const Body& K, const Body& L, std::size_t cap = 4096);

/// Orthonormal (n-d)-frames from seeded rotations.
std::vector<Basis> sample_subspaces(int n, int d, int count, std::uint64_t seed);

struct DirectionVerdict {
  Vec direction;   // unit u when the subspace is u-perp; empty otherwise
  Basis subspace;
  bool covered = false;
  double margin = 0.0;
  Vec witness;          // in-subspace translation when covered
  Vec violated_normal;  // in-subspace facet normal when not covered
};

struct CoveringReport {
  int n = 0;
  int d = 1;
  std::uint64_t seed = 0;
  int requested_count = 0;
  std::vector<DirectionVerdict> verdicts;
  bool all_covered = false;
  double worst_margin = 0.0;  // min over verdicts of the max feasibility slack
  int refinement_depth = 0;
  std::string note;
};

/// Projects both bodies onto the subspace and decides translate
/// containment there.
DirectionVerdict covering_verdict(const Body& K, const Body& L, const Basis& subspace);
DirectionVerdict covering_verdict_direction(const Body& K, const Body& L, const Vec& u);

/// Sampled certificate for "every projection of L covers the matching
/// projection of K" at codimension d. For d = 1 the informed direction
/// set is always merged in; `refine` subdivides spherically around
/// low-margin directions (depth-capped at 6).
CoveringReport covering_sweep(const Body& K, const Body& L, int d, int count,
                              std::uint64_t seed, bool refine);

struct TransportPair {
  DirectionVerdict original;
  DirectionVerdict transported;
  bool agree = false;
};

/// Verdict for (K,L) along u paired with the verdict for (psi K, psi L)
/// along psi u / |psi u|; the booleans must match for nonsingular psi.
TransportPair transport_verdict(const Body& K, const Body& L, const AffineMap& psi,
                                const Vec& u);

struct DilateCertificate {
  double factor = 0.0;  // n / (n - d)
  ContainmentWitness witness;
  bool sweep_recorded = false;
};

/// Runs translate_into(K, (n/(n-d))·L). When the caller certifies a
/// passing sweep and the LP still fails, throws SweepInconclusive
/// rather than returning silently.
DilateCertificate dilate_cover_certificate(const Body& K, const Body& L, int d,
                                           bool sweep_all_covered);

struct BoundReport {
  int n = 0;
  int d = 1;
  double dilate_bound = 0.0;   // n/(n-d)
  double volume_bound = 0.0;   // (n/(n-d))^n
  double rs_bound = 0.0;       // 2^{-n} binom(2n,n)
  double ball_bound = 0.0;     // 1.1696 sqrt(n)
  double asymptote = 0.0;      // e^d
  double universal = 0.0;      // 2.942 for d = 1; NaN otherwise
  std::string note;
};

BoundReport bound_report(int n, int d);

nlohmann::json to_json(const CoveringReport& r);
nlohmann::json to_json(const BoundReport& r);
std::string to_csv(const CoveringReport& r);

}  // namespace shadowcover

#endif
