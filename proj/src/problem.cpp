#include "tcspace/problem.hpp"

namespace tcspace {

TransportationProblem TransportationProblem::dipole(std::size_t n, std::size_t u, std::size_t v, const Rational& amount) {
  if (u >= n || v >= n) throw Error(ErrorCode::InvalidInput, "dipole endpoint out of range");
  VertexVector mass = VertexVector::Zero(static_cast<Eigen::Index>(n));
  mass(static_cast<Eigen::Index>(u)) += amount;
  mass(static_cast<Eigen::Index>(v)) -= amount;
  return TransportationProblem(std::move(mass));
}

void TransportationPlan::add(std::size_t from, std::size_t to, Rational amount) {
  if (amount < 0) {
    std::swap(from, to);
    amount = -amount;
  }
  if (amount == 0) return;
  terms.push_back({from, to, std::move(amount)});
}

TransportationProblem TransportationPlan::problem(std::size_t num_points) const {
  VertexVector mass = VertexVector::Zero(static_cast<Eigen::Index>(num_points));
  for (const auto& t : terms) {
    if (t.from >= num_points || t.to >= num_points) throw Error(ErrorCode::InvalidInput, "plan term out of range");
    mass(static_cast<Eigen::Index>(t.from)) += t.amount;
    mass(static_cast<Eigen::Index>(t.to)) -= t.amount;
  }
  return TransportationProblem(std::move(mass));
}

}  // namespace tcspace
