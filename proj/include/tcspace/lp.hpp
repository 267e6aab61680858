#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tcspace/rational.hpp"

namespace tcspace {

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class LpStatus { Optimal, Infeasible, Unbounded };

template <class Scalar>
struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Scalar objective{};
  VectorX<Scalar> x;

  bool optimal() const { return status == LpStatus::Optimal; }
};

/// Dense two-phase primal simplex over an exact field. All variables are
/// nonnegative. Pivoting follows Bland's rule, so the method terminates
/// without any anti-cycling tolerance; Scalar must be exact (Rational).
template <class Scalar>
class DenseLP {
 public:
  using Term = std::pair<Eigen::Index, Scalar>;

  explicit DenseLP(Eigen::Index num_vars) : num_vars_(num_vars) {}

  Eigen::Index num_vars() const { return num_vars_; }
  Eigen::Index num_constraints() const { return static_cast<Eigen::Index>(rows_.size()); }

  void add_constraint(VectorX<Scalar> coeffs, Relation relation, Scalar rhs) {
    if (coeffs.size() != num_vars_) throw std::invalid_argument("constraint length mismatch");
    rows_.push_back(std::move(coeffs));
    relations_.push_back(relation);
    rhs_.push_back(std::move(rhs));
  }

  void add_constraint(const std::vector<Term>& terms, Relation relation, Scalar rhs) {
    VectorX<Scalar> coeffs = VectorX<Scalar>::Zero(num_vars_);
    for (const auto& [j, a] : terms) coeffs(j) += a;
    add_constraint(std::move(coeffs), relation, std::move(rhs));
  }

  LpResult<Scalar> maximize(const VectorX<Scalar>& objective) const { return solve(objective); }

  LpResult<Scalar> minimize(const VectorX<Scalar>& objective) const {
    LpResult<Scalar> result = solve(-objective);
    if (result.optimal()) result.objective = -result.objective;
    return result;
  }

 private:
  struct Tableau {
    MatrixX<Scalar> t;                   // last row is the objective row, last column the rhs
    std::vector<Eigen::Index> basis;     // basic column per constraint row
    Eigen::Index allowed_columns = 0;    // columns >= this may never enter
  };

  static void pivot(Tableau& tab, Eigen::Index row, Eigen::Index col) {
    const Scalar p = tab.t(row, col);
    tab.t.row(row) /= p;
    for (Eigen::Index i = 0; i < tab.t.rows(); ++i) {
      if (i == row || tab.t(i, col) == 0) continue;
      const Scalar factor = tab.t(i, col);
      tab.t.row(i) -= factor * tab.t.row(row);
    }
    tab.basis[static_cast<std::size_t>(row)] = col;
  }

  // Maximizes with the objective row holding reduced costs z_j - c_j.
  // Returns false if unbounded.
  static bool run_simplex(Tableau& tab) {
    const Eigen::Index m = tab.t.rows() - 1;
    const Eigen::Index rhs = tab.t.cols() - 1;
    for (;;) {
      Eigen::Index entering = -1;
      for (Eigen::Index j = 0; j < tab.allowed_columns; ++j)
        if (tab.t(m, j) < 0) {
          entering = j;
          break;
        }
      if (entering < 0) return true;

      Eigen::Index leaving = -1;
      Scalar best_ratio{};
      for (Eigen::Index i = 0; i < m; ++i) {
        if (tab.t(i, entering) <= 0) continue;
        Scalar ratio = tab.t(i, rhs) / tab.t(i, entering);
        const auto row = static_cast<std::size_t>(i);
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && tab.basis[row] < tab.basis[static_cast<std::size_t>(leaving)])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving < 0) return false;
      pivot(tab, leaving, entering);
    }
  }

  static void price_out(Tableau& tab, const VectorX<Scalar>& cost) {
    const Eigen::Index m = tab.t.rows() - 1;
    tab.t.row(m).setZero();
    for (Eigen::Index j = 0; j < cost.size(); ++j) tab.t(m, j) = -cost(j);
    for (Eigen::Index i = 0; i < m; ++i) {
      const Scalar cb = cost(tab.basis[static_cast<std::size_t>(i)]);
      if (cb != 0) tab.t.row(m) += cb * tab.t.row(i);
    }
  }

  LpResult<Scalar> solve(const VectorX<Scalar>& objective) const {
    if (objective.size() != num_vars_) throw std::invalid_argument("objective length mismatch");
    const Eigen::Index m = num_constraints();
    const Eigen::Index n = num_vars_;

    // Orient every row so that rhs >= 0.
    std::vector<Relation> rel = relations_;
    std::vector<VectorX<Scalar>> a = rows_;
    std::vector<Scalar> b = rhs_;
    Eigen::Index slacks = 0, artificials = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (b[i] < 0) {
        a[i] = -a[i];
        b[i] = -b[i];
        if (rel[i] == Relation::LessEqual) rel[i] = Relation::GreaterEqual;
        else if (rel[i] == Relation::GreaterEqual) rel[i] = Relation::LessEqual;
      }
      if (rel[i] != Relation::Equal) ++slacks;
      if (rel[i] != Relation::LessEqual) ++artificials;
    }

    const Eigen::Index total = n + slacks + artificials;
    Tableau tab;
    tab.t = MatrixX<Scalar>::Zero(m + 1, total + 1);
    tab.basis.assign(static_cast<std::size_t>(m), 0);
    Eigen::Index next_slack = n, next_art = n + slacks;
    for (Eigen::Index i = 0; i < m; ++i) {
      const auto row = static_cast<std::size_t>(i);
      tab.t.row(i).head(n) = a[row].transpose();
      tab.t(i, total) = b[row];
      if (rel[row] == Relation::LessEqual) {
        tab.t(i, next_slack) = 1;
        tab.basis[row] = next_slack++;
      } else {
        if (rel[row] == Relation::GreaterEqual) tab.t(i, next_slack++) = -1;
        tab.t(i, next_art) = 1;
        tab.basis[row] = next_art++;
      }
    }

    // Phase 1: maximize -(sum of artificials).
    tab.allowed_columns = total;
    if (artificials > 0) {
      VectorX<Scalar> phase1 = VectorX<Scalar>::Zero(total);
      for (Eigen::Index j = n + slacks; j < total; ++j) phase1(j) = -1;
      price_out(tab, phase1);
      run_simplex(tab);
      if (tab.t(m, total) != 0) return {LpStatus::Infeasible, Scalar{}, VectorX<Scalar>()};

      // Drive zero-level artificials out of the basis; rows where that is
      // impossible are linearly dependent and get dropped.
      std::vector<Eigen::Index> keep;
      for (Eigen::Index i = 0; i < m; ++i) {
        if (tab.basis[static_cast<std::size_t>(i)] < n + slacks) {
          keep.push_back(i);
          continue;
        }
        Eigen::Index replacement = -1;
        for (Eigen::Index j = 0; j < n + slacks && replacement < 0; ++j)
          if (tab.t(i, j) != 0) replacement = j;
        if (replacement >= 0) {
          pivot(tab, i, replacement);
          keep.push_back(i);
        }
      }
      Tableau reduced;
      const auto kept = static_cast<Eigen::Index>(keep.size());
      reduced.t = MatrixX<Scalar>::Zero(kept + 1, n + slacks + 1);
      for (Eigen::Index r = 0; r < kept; ++r) {
        reduced.t.row(r).head(n + slacks) = tab.t.row(keep[static_cast<std::size_t>(r)]).head(n + slacks);
        reduced.t(r, n + slacks) = tab.t(keep[static_cast<std::size_t>(r)], total);
        reduced.basis.push_back(tab.basis[static_cast<std::size_t>(keep[static_cast<std::size_t>(r)])]);
      }
      reduced.allowed_columns = n + slacks;
      tab = std::move(reduced);
    }

    const Eigen::Index width = tab.t.cols() - 1;
    VectorX<Scalar> phase2 = VectorX<Scalar>::Zero(width);
    phase2.head(n) = objective;
    price_out(tab, phase2);
    if (!run_simplex(tab)) return {LpStatus::Unbounded, Scalar{}, VectorX<Scalar>()};

    LpResult<Scalar> result;
    result.status = LpStatus::Optimal;
    result.x = VectorX<Scalar>::Zero(n);
    for (std::size_t i = 0; i < tab.basis.size(); ++i)
      if (tab.basis[i] < n) result.x(tab.basis[i]) = tab.t(static_cast<Eigen::Index>(i), width);
    result.objective = tab.t(tab.t.rows() - 1, width);
    return result;
  }

  Eigen::Index num_vars_;
  std::vector<VectorX<Scalar>> rows_;
  std::vector<Relation> relations_;
  std::vector<Scalar> rhs_;
};

}  // namespace tcspace
