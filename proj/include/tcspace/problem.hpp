#pragma once

#include <cstddef>
#include <vector>

#include "tcspace/error.hpp"
#include "tcspace/rational.hpp"

namespace tcspace {

/// A zero-sum function on the points of a metric space: positive values are
/// supplies, negative values demands.
class TransportationProblem {
 public:
  TransportationProblem() = default;
  explicit TransportationProblem(VertexVector mass) : mass_(std::move(mass)) {
    if (mass_.sum() != 0) throw Error(ErrorCode::NotZeroSum, "transportation problem must sum to zero");
  }

  static TransportationProblem zero(std::size_t n) { return TransportationProblem(VertexVector::Zero(static_cast<Eigen::Index>(n))); }
  /// 1_u - 1_v scaled by `amount`.
  static TransportationProblem dipole(std::size_t n, std::size_t u, std::size_t v, const Rational& amount = Rational(1));

  const VertexVector& values() const { return mass_; }
  std::size_t size() const { return static_cast<std::size_t>(mass_.size()); }
  const Rational& operator[](std::size_t v) const { return mass_(static_cast<Eigen::Index>(v)); }
  bool is_zero() const { return mass_.isZero(); }

  friend TransportationProblem operator+(const TransportationProblem& a, const TransportationProblem& b) {
    return TransportationProblem(VertexVector(a.mass_ + b.mass_));
  }
  friend TransportationProblem operator-(const TransportationProblem& a, const TransportationProblem& b) {
    return TransportationProblem(VertexVector(a.mass_ - b.mass_));
  }
  friend TransportationProblem operator-(const TransportationProblem& a) { return TransportationProblem(VertexVector(-a.mass_)); }
  friend TransportationProblem operator*(const Rational& s, const TransportationProblem& a) {
    return TransportationProblem(VertexVector(s * a.mass_));
  }
  friend bool operator==(const TransportationProblem& a, const TransportationProblem& b) {
    return a.mass_.size() == b.mass_.size() && a.mass_ == b.mass_;
  }

 private:
  VertexVector mass_;
};

/// One term a(1_x - 1_y) of a transportation plan.
struct PlanTerm {
  std::size_t from = 0;
  std::size_t to = 0;
  Rational amount;
};

/// f = Σ a_i (1_{x_i} - 1_{y_i}) with every a_i > 0. Plans may be "fake":
/// nothing requires mass to be present at x_i.
struct TransportationPlan {
  std::vector<PlanTerm> terms;

  void add(std::size_t from, std::size_t to, Rational amount);
  TransportationProblem problem(std::size_t num_points) const;
};

}  // namespace tcspace
