#include "polymat/simplex.hpp"

#include <stdexcept>

namespace polymat {

namespace {

// Dense rational tableau. Columns: structural | slack/surplus | artificial,
// rightmost column is the rhs. basic[i] is the variable occupying row i.
struct Tableau {
  QMat t;                  // m x (ncols + 1)
  std::vector<Eigen::Index> basic;
  Eigen::Index ncols = 0;
  long pivots = 0;

  Rat& rhs(Eigen::Index i) { return t(i, ncols); }

  void pivot(Eigen::Index r, Eigen::Index j) {
    const Rat piv = t(r, j);
    for (Eigen::Index c = 0; c <= ncols; ++c)
      if (t(r, c) != 0) t(r, c) /= piv;
    for (Eigen::Index i = 0; i < t.rows(); ++i) {
      if (i == r || t(i, j) == 0) continue;
      const Rat factor = t(i, j);
      for (Eigen::Index c = 0; c <= ncols; ++c)
        if (t(r, c) != 0) t(i, c) -= factor * t(r, c);
    }
    basic[r] = j;
    ++pivots;
  }

  // Bland's rule on the given costs; returns false when unbounded.
  bool run(QVec& cbar, Rat& value, Eigen::Index active_cols, bool& unbounded) {
    unbounded = false;
    while (true) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < active_cols; ++j)
        if (cbar[j] > 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;

      Eigen::Index leave = -1;
      Rat best;
      for (Eigen::Index i = 0; i < t.rows(); ++i) {
        if (t(i, enter) <= 0) continue;
        Rat ratio = rhs(i) / t(i, enter);
        if (leave < 0 || ratio < best ||
            (ratio == best && basic[i] < basic[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave < 0) {
        unbounded = true;
        return false;
      }

      const Rat gain = cbar[enter];
      pivot(leave, enter);
      // Update reduced costs from the normalized pivot row.
      value += gain * rhs(leave);
      for (Eigen::Index j = 0; j < cbar.size(); ++j)
        if (t(leave, j) != 0) cbar[j] -= gain * t(leave, j);
      cbar[enter] = 0;
    }
  }
};

}  // namespace

LpResult exact_lp_max(const LpInstance& lp) {
  const Eigen::Index nvars = lp.nvars;
  if (lp.objective.size() != nvars)
    throw std::invalid_argument("lp: objective size mismatch");
  for (const auto& row : lp.rows)
    if (row.coeffs.size() != nvars)
      throw std::invalid_argument("lp: row size mismatch");

  const Eigen::Index m = static_cast<Eigen::Index>(lp.rows.size());

  // Normalize rhs >= 0 and count auxiliary columns.
  std::vector<int> flip(m, 1);
  std::vector<Sense> sense(m);
  Eigen::Index nslack = 0, nart = 0;
  for (Eigen::Index i = 0; i < m; ++i) {
    sense[i] = lp.rows[i].sense;
    if (lp.rows[i].rhs < 0) {
      flip[i] = -1;
      if (sense[i] == Sense::Le)
        sense[i] = Sense::Ge;
      else if (sense[i] == Sense::Ge)
        sense[i] = Sense::Le;
    }
    if (sense[i] != Sense::Eq) ++nslack;
    if (sense[i] != Sense::Le) ++nart;
  }

  Tableau tab;
  const Eigen::Index ncols_na = nvars + nslack;  // without artificials
  tab.ncols = ncols_na + nart;
  tab.t = QMat::Zero(m, tab.ncols + 1);
  tab.basic.assign(m, -1);

  Eigen::Index scol = nvars, acol = ncols_na;
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < nvars; ++j)
      tab.t(i, j) = flip[i] * lp.rows[i].coeffs[j];
    tab.rhs(i) = flip[i] * lp.rows[i].rhs;
    if (sense[i] == Sense::Le) {
      tab.t(i, scol) = 1;
      tab.basic[i] = scol++;
    } else if (sense[i] == Sense::Ge) {
      tab.t(i, scol++) = -1;
      tab.t(i, acol) = 1;
      tab.basic[i] = acol++;
    } else {
      tab.t(i, acol) = 1;
      tab.basic[i] = acol++;
    }
  }

  LpResult res;

  if (nart > 0) {
    // Phase 1: maximize -sum(artificials).
    QVec cbar = QVec::Zero(tab.ncols);
    Rat value = 0;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (tab.basic[i] < ncols_na) continue;
      value -= tab.rhs(i);
      for (Eigen::Index j = 0; j < ncols_na; ++j)
        if (tab.t(i, j) != 0) cbar[j] += tab.t(i, j);
    }
    bool unbounded = false;
    tab.run(cbar, value, ncols_na, unbounded);  // phase 1 is never unbounded
    if (value != 0) {
      res.status = LpStatus::Infeasible;
      res.pivots = tab.pivots;
      return res;
    }
    // Pivot leftover artificials out of the basis; drop redundant rows.
    for (Eigen::Index i = 0; i < tab.t.rows();) {
      if (tab.basic[i] < ncols_na) {
        ++i;
        continue;
      }
      Eigen::Index j = 0;
      while (j < ncols_na && tab.t(i, j) == 0) ++j;
      if (j < ncols_na) {
        tab.pivot(i, j);
        ++i;
      } else {
        const Eigen::Index last = tab.t.rows() - 1;
        tab.t.row(i).swap(tab.t.row(last));
        std::swap(tab.basic[i], tab.basic[static_cast<std::size_t>(last)]);
        tab.t.conservativeResize(last, Eigen::NoChange);
        tab.basic.pop_back();
      }
    }
  }

  // Phase 2 over the original objective; artificial columns stay out.
  QVec cbar = QVec::Zero(tab.ncols);
  for (Eigen::Index j = 0; j < nvars; ++j) cbar[j] = lp.objective[j];
  Rat value = 0;
  for (Eigen::Index i = 0; i < tab.t.rows(); ++i) {
    const Eigen::Index bv = tab.basic[i];
    if (bv >= nvars) continue;
    const Rat cb = lp.objective[bv];
    if (cb == 0) continue;
    value += cb * tab.rhs(i);
    for (Eigen::Index j = 0; j < tab.ncols; ++j)
      if (tab.t(i, j) != 0) cbar[j] -= cb * tab.t(i, j);
  }
  bool unbounded = false;
  tab.run(cbar, value, ncols_na, unbounded);
  res.pivots = tab.pivots;
  if (unbounded) {
    res.status = LpStatus::Unbounded;
    return res;
  }

  res.status = LpStatus::Optimal;
  res.optimum = value;
  res.x = QVec::Zero(nvars);
  for (Eigen::Index i = 0; i < tab.t.rows(); ++i)
    if (tab.basic[i] < nvars) res.x[tab.basic[i]] = tab.rhs(i);
  return res;
}

}  // namespace polymat
