#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace tcspace {

/// Exact rational scalar. Expression templates are disabled so the type
/// composes cleanly with Eigen's own expression machinery.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <class Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Vector = VectorX<Rational>;
using Matrix = MatrixX<Rational>;

/// Functions on the vertex set, indexed by point index.
using VertexVector = Vector;
/// Functions on the edge set of a canonical graph, indexed by edge index.
using EdgeVector = Vector;

/// Parses "p/q", an integer, or a decimal literal with optional exponent
/// ("0.25", "-1.5e-3"). Decimals are converted exactly. Throws Error(ParseError).
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return value.sign(); }

inline Rational abs_value(const Rational& value) { return value < 0 ? Rational(-value) : value; }

}  // namespace tcspace
