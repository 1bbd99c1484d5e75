#ifndef SHADOWCOVER_MIXEDVOL_HPP
#define SHADOWCOVER_MIXEDVOL_HPP

#include "shadowcover/polytope.hpp"

namespace shadowcover {

/// The coefficients V_{n-i,i}(K,L) of the volume polynomial of aK + bL,
/// i = 0..n, so values[0] = V_n(K) and values[n] = V_n(L).
struct SteinerCoefficients {
  int n = 0;
  Vec values;
};

/// Fits the volume polynomial from exact Minkowski sums K + sL at the
/// integer nodes s = 0..n. Throws IllConditioned for n > 6.
SteinerCoefficients steiner_fit(const Body& K, const Body& L);

/// V_{n-1,1}(P,K) = (1/n) sum over facets u of P of h_K(u) V_{n-1}(P^u).
double base_height_mixed(const Body& P, const Body& K);

/// f(t) = V_n((1-t)K + tT) as an exact degree-n polynomial in t.
struct InterpFamily {
  int n = 0;
  Vec poly;  // power-basis coefficients, poly[j] multiplies t^j

  double eval(double t) const;
  double deriv(double t) const;
  double derivative_at_one() const;
};

InterpFamily interp_family(const Body& K, const Body& T);

struct InterpOptimum {
  double t_star = 0.0;
  double value = 0.0;
};

/// Global maximum of f on [0,1] via sign-change bisection on f'.
/// A flat family reports t* = 1 by convention.
InterpOptimum optimize_interp(const Body& K, const Body& T);

/// V_n((1-t)K+tL)^{1/n} - (1-t)V_n(K)^{1/n} - t V_n(L)^{1/n}; never
/// meaningfully negative, and ~0 exactly when K and L are homothetic.
double brunn_minkowski_gap(const Body& K, const Body& L, double t);

/// V_n(K + (-K)) / V_n(K); equals binom(2n,n) exactly on simplices and
/// 2^n on centrally symmetric bodies.
double rogers_shephard_ratio(const Body& K);

double binomial(int n, int k);

}  // namespace shadowcover

#endif
