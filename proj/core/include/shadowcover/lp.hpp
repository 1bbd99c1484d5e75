#ifndef SHADOWCOVER_LP_HPP
#define SHADOWCOVER_LP_HPP

#include <optional>

#include "shadowcover/linalg.hpp"

namespace shadowcover::lp {

enum class Status { Optimal, Infeasible, Unbounded };
enum class Sense { Maximize, Minimize };

/// max/min c·x subject to A x <= b, x free.
struct LinearProgram {
  Matrix A;
  Vec b;
  Vec c;
  Sense sense = Sense::Maximize;
};

struct Outcome {
  Status status = Status::Infeasible;
  Vec x;              // witness when optimal
  double objective = 0.0;
  Vec duals;          // row multipliers at the optimum (y >= 0, A'y = c for max)
  Vec farkas;         // infeasibility certificate: y >= 0, A'y = 0, b'y < 0
};

/// Two-phase dense simplex, Dantzig pricing with a Bland's-rule fallback
/// once degenerate pivots accumulate. Throws NumericalFailure if cycling
/// persists after a perturbation restart.
Outcome solve(const LinearProgram& p);

struct FeasibilityResult {
  bool ok = false;
  Vec x;               // Chebyshev-style witness (maximizes the minimum slack)
  double margin = 0.0; // optimal min slack; negative when infeasible
  int worst_row = -1;  // tightest/most violated row at the witness
};

/// Decides whether {x : A x <= b} is nonempty at the feasibility slack,
/// returning the max-min-slack witness either way.
FeasibilityResult max_min_slack(const Matrix& A, const Vec& b);

/// Convenience wrapper: witness when the system is nonempty.
std::optional<Vec> feasible(const Matrix& A, const Vec& b);

/// max c·x subject to A x <= b, x >= 0 (the native simplex form).
/// Small helper exposed for callers whose variables are naturally
/// nonnegative (convex-combination tests and the like).
Outcome simplex_nonneg(const Matrix& A, const Vec& b, const Vec& c);

}  // namespace shadowcover::lp

#endif
