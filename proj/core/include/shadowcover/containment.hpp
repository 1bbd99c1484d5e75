#ifndef SHADOWCOVER_CONTAINMENT_HPP
#define SHADOWCOVER_CONTAINMENT_HPP

#include "shadowcover/mixedvol.hpp"
#include "shadowcover/polytope.hpp"

namespace shadowcover {

struct ContainmentWitness {
  bool feasible = false;
  Vec translation;      // witness x with K + x inside L (when feasible)
  Vec violated_normal;  // facet normal of L blocking every placement
  double deficit = 0.0; // violation at the best placement (when infeasible)
  double margin = 0.0;  // max-min feasibility slack at the witness
};

/// Does some translate of K fit inside L? Decided as an LP over the
/// facet normals of L, which is sound and complete for polytopes.
ContainmentWitness translate_into(const Body& K, const Body& L);

struct ScaleResult {
  double alpha = 0.0;
  Vec translation;
};

/// Largest alpha with alpha·K + x inside L. Throws PointBody when K is
/// a single point (every alpha works).
ScaleResult max_scale(const Body& K, const Body& L);

struct DilateResult {
  double lambda = 0.0;
  Vec translation;
};

/// Smallest lambda with K + x inside lambda·L (dilation about the
/// origin; the translation variable absorbs positioning).
DilateResult min_cover_dilate(const Body& K, const Body& L);

/// Simplex containment criterion: T holds a translate of K exactly when
/// V_{n-1,1}(T,K) <= V_n(T). Throws NotASimplex unless T has n+1 vertices.
bool lutwak_simplex_contains(const Body& T, const Body& K);

/// Translation t with h_{K+t}(-e_i) = 0 for every axis.
Vec corner_offset(const Body& K);
Body corner_normalize(const Body& K);

struct HideResult {
  Vec translation;          // corner-normalizing shift
  bool inside_cap_body = false;
};

/// Given that every sampled coordinate shadow of K fits in the matching
/// shadow of the standard simplex (caller's duty, via the shadow
/// module), corner-normalizes K and certifies membership in each prism
/// and hence in the cap body. Throws PreconditionFailed with the first
/// offending facet direction otherwise.
HideResult hide_behind_simplex_witness(const Body& K);

}  // namespace shadowcover

#endif
