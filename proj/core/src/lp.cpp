#include "shadowcover/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace shadowcover::lp {

namespace {

constexpr double kEps = 1e-9;        // reduced-cost / pivot threshold
constexpr double kRatioEps = 1e-11;  // ratio-test denominator threshold

// Dense tableau for: max c.x  s.t.  A x <= b, x >= 0.
// Columns: [0,k) structural, [k,k+m) slacks, possibly one artificial,
// last column rhs. Row m = phase-2 objective, row m+1 = phase-1 (if used).
class Tableau {
 public:
  Tableau(const Matrix& a, const Vec& b, const Vec& c)
      : m_(a.rows), k_(a.cols), art_(-1) {
    ncols_ = k_ + m_ + 2;  // reserve a slot for the artificial column
    rhs_ = k_ + m_ + 1;
    art_slot_ = k_ + m_;
    t_.assign(static_cast<size_t>(m_ + 2) * ncols_, 0.0);
    basis_.resize(static_cast<size_t>(m_));
    row_scale_.assign(static_cast<size_t>(m_), 1.0);
    for (int i = 0; i < m_; ++i) {
      double s = 0.0;
      for (int j = 0; j < k_; ++j) s = std::max(s, std::abs(a(i, j)));
      s = std::max(s, 1e-12);
      row_scale_[static_cast<size_t>(i)] = s;
      for (int j = 0; j < k_; ++j) at(i, j) = a(i, j) / s;
      at(i, k_ + i) = 1.0;
      at(i, rhs_) = b[static_cast<size_t>(i)] / s;
      basis_[static_cast<size_t>(i)] = k_ + i;
    }
    for (int j = 0; j < k_; ++j) at(m_, j) = -c[static_cast<size_t>(j)];
  }

  Outcome run() {
    Outcome out;
    const bool need_phase1 = worst_rhs_row() >= 0 && at(worst_rhs_row(), rhs_) < -kEps;
    if (need_phase1) {
      art_ = art_slot_;
      for (int i = 0; i < m_; ++i) at(i, art_) = -1.0;
      at(m_ + 1, art_) = 1.0;  // maximize -a0
      pivot(worst_rhs_row(), art_);
      if (!iterate(m_ + 1)) throw NumericalFailure("lp: phase-1 iteration failure");
      if (at(m_ + 1, rhs_) < -kEps) {
        out.status = Status::Infeasible;
        out.farkas = extract_duals(m_ + 1);
        return out;
      }
      // drive a residual basic artificial out at value ~0
      for (int i = 0; i < m_; ++i) {
        if (basis_[static_cast<size_t>(i)] != art_) continue;
        int col = -1;
        for (int j = 0; j < k_ + m_; ++j)
          if (std::abs(at(i, j)) > kEps) {
            col = j;
            break;
          }
        if (col >= 0) pivot(i, col);
        break;
      }
      block_artificial_ = true;
    }
    if (!iterate(m_)) {
      out.status = Status::Unbounded;
      return out;
    }
    out.status = Status::Optimal;
    out.x = zeros(k_);
    for (int i = 0; i < m_; ++i)
      if (basis_[static_cast<size_t>(i)] < k_)
        out.x[static_cast<size_t>(basis_[static_cast<size_t>(i)])] = at(i, rhs_);
    out.objective = at(m_, rhs_);
    out.duals = extract_duals(m_);
    return out;
  }

 private:
  double& at(int i, int j) { return t_[static_cast<size_t>(i) * ncols_ + j]; }
  double at(int i, int j) const { return t_[static_cast<size_t>(i) * ncols_ + j]; }

  int worst_rhs_row() const {
    int r = -1;
    double worst = -kEps;
    for (int i = 0; i < m_; ++i)
      if (at(i, rhs_) < worst) {
        worst = at(i, rhs_);
        r = i;
      }
    return r;
  }

  Vec extract_duals(int obj_row) const {
    Vec y = zeros(m_);
    for (int i = 0; i < m_; ++i)
      y[static_cast<size_t>(i)] = at(obj_row, k_ + i) / row_scale_[static_cast<size_t>(i)];
    return y;
  }

  bool column_allowed(int j) const {
    if (j == art_ && block_artificial_) return false;
    if (j == art_slot_ && art_ < 0) return false;
    return true;
  }

  int choose_entering(int obj_row, bool bland) const {
    const int ncand = k_ + m_ + (art_ >= 0 ? 1 : 0);
    int best = -1;
    double best_val = -kEps;
    for (int j = 0; j < ncand; ++j) {
      if (!column_allowed(j)) continue;
      const double rc = at(obj_row, j);
      if (rc < -kEps) {
        if (bland) return j;
        if (rc < best_val) {
          best_val = rc;
          best = j;
        }
      }
    }
    return best;
  }

  int choose_leaving(int e) const {
    int r = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m_; ++i) {
      const double a = at(i, e);
      if (a <= kRatioEps) continue;
      const double ratio = at(i, rhs_) / a;
      if (ratio < best_ratio - 1e-12 ||
          (ratio < best_ratio + 1e-12 && r >= 0 &&
           basis_[static_cast<size_t>(i)] < basis_[static_cast<size_t>(r)])) {
        best_ratio = ratio;
        r = i;
      }
    }
    return r;
  }

  void pivot(int r, int e) {
    const double p = at(r, e);
    const double inv = 1.0 / p;
    for (int j = 0; j < ncols_; ++j) at(r, j) *= inv;
    at(r, e) = 1.0;
    for (int i = 0; i < m_ + 2; ++i) {
      if (i == r) continue;
      const double f = at(i, e);
      if (f == 0.0) continue;
      for (int j = 0; j < ncols_; ++j) at(i, j) -= f * at(r, j);
      at(i, e) = 0.0;
    }
    basis_[static_cast<size_t>(r)] = e;
  }

  // Returns false on unboundedness, true at optimality.
  bool iterate(int obj_row) {
    const int bland_after = 5 * (m_ + k_);
    const int cap = 1000 + 100 * (m_ + k_);
    int degenerate = 0;
    bool bland = false;
    for (int it = 0; it < cap; ++it) {
      const int e = choose_entering(obj_row, bland);
      if (e < 0) return true;
      const int r = choose_leaving(e);
      if (r < 0) {
        if (obj_row == m_ + 1)
          throw NumericalFailure("lp: phase-1 unbounded (numerical)");
        return false;
      }
      if (at(r, rhs_) < kEps) {
        if (++degenerate > bland_after) bland = true;
      }
      pivot(r, e);
    }
    throw NumericalFailure("lp: iteration cap reached");
  }

  int m_, k_, ncols_, rhs_, art_slot_;
  int art_;
  bool block_artificial_ = false;
  std::vector<double> t_;
  std::vector<int> basis_;
  std::vector<double> row_scale_;
};

Outcome run_nonneg(const Matrix& a, const Vec& b, const Vec& c) {
  try {
    return Tableau(a, b, c).run();
  } catch (const NumericalFailure&) {
    // perturbation restart: nudge the rhs deterministically, then re-solve
    Vec b2 = b;
    for (size_t i = 0; i < b2.size(); ++i)
      b2[i] += 1e-10 * (1.0 + std::abs(b2[i])) * static_cast<double>((i % 7) + 1);
    return Tableau(a, b2, c).run();
  }
}

void validate(const LinearProgram& p) {
  if (p.A.rows < 1 || p.A.cols < 1) throw BadParameter("lp: empty program");
  if (static_cast<int>(p.b.size()) != p.A.rows ||
      static_cast<int>(p.c.size()) != p.A.cols)
    throw DimensionMismatch("lp: inconsistent dimensions");
  for (double v : p.A.data)
    if (!std::isfinite(v)) throw BadParameter("lp: non-finite matrix entry");
  for (double v : p.b)
    if (!std::isfinite(v)) throw BadParameter("lp: non-finite rhs entry");
}

}  // namespace

Outcome simplex_nonneg(const Matrix& a, const Vec& b, const Vec& c) {
  return run_nonneg(a, b, c);
}

Outcome solve(const LinearProgram& p) {
  validate(p);
  const int m = p.A.rows, k = p.A.cols;
  const bool maximize = (p.sense == Sense::Maximize);
  // free variables x = u - w with u, w >= 0
  Matrix a2(m, 2 * k);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < k; ++j) {
      a2(i, j) = p.A(i, j);
      a2(i, k + j) = -p.A(i, j);
    }
  Vec c2 = zeros(2 * k);
  for (int j = 0; j < k; ++j) {
    const double cj = maximize ? p.c[static_cast<size_t>(j)] : -p.c[static_cast<size_t>(j)];
    c2[static_cast<size_t>(j)] = cj;
    c2[static_cast<size_t>(k + j)] = -cj;
  }
  Outcome native = run_nonneg(a2, p.b, c2);
  Outcome out;
  out.status = native.status;
  if (native.status == Status::Optimal) {
    out.x = zeros(k);
    for (int j = 0; j < k; ++j)
      out.x[static_cast<size_t>(j)] =
          native.x[static_cast<size_t>(j)] - native.x[static_cast<size_t>(k + j)];
    out.objective = dot(p.c, out.x);
    out.duals = native.duals;
  } else if (native.status == Status::Infeasible) {
    out.farkas = native.farkas;
  }
  return out;
}

FeasibilityResult max_min_slack(const Matrix& a, const Vec& b) {
  const int m = a.rows, k = a.cols;
  if (m < 1) throw BadParameter("max_min_slack: no constraints");
  // max s  s.t.  A x + s 1 <= b   (x, s free)
  LinearProgram p;
  p.A = Matrix(m, k + 1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < k; ++j) p.A(i, j) = a(i, j);
    p.A(i, k) = 1.0;
  }
  p.b = b;
  p.c = zeros(k + 1);
  p.c[static_cast<size_t>(k)] = 1.0;
  p.sense = Sense::Maximize;
  Outcome res = solve(p);
  if (res.status == Status::Unbounded) {
    // widen-forever systems: cap the slack, keep the witness
    p.A = Matrix(m + 1, k + 1);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < k; ++j) p.A(i, j) = a(i, j);
      p.A(i, k) = 1.0;
    }
    p.A(m, k) = 1.0;
    p.b.push_back(1e6);
    res = solve(p);
    p.b.pop_back();
  }
  FeasibilityResult fr;
  if (res.status != Status::Optimal)
    throw NumericalFailure("max_min_slack: inner LP did not reach an optimum");
  fr.margin = res.objective;
  fr.ok = fr.margin >= -tolerances().feasibility;
  fr.x = Vec(res.x.begin(), res.x.begin() + k);
  fr.worst_row = 0;
  double worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i < m; ++i) {
    double slack = b[static_cast<size_t>(i)];
    for (int j = 0; j < k; ++j) slack -= a(i, j) * fr.x[static_cast<size_t>(j)];
    if (slack < worst) {
      worst = slack;
      fr.worst_row = i;
    }
  }
  return fr;
}

std::optional<Vec> feasible(const Matrix& a, const Vec& b) {
  FeasibilityResult fr = max_min_slack(a, b);
  if (!fr.ok) return std::nullopt;
  return fr.x;
}

}  // namespace shadowcover::lp
