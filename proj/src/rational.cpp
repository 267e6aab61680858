#include "tcspace/rational.hpp"

#include <cctype>
#include <charconv>

#include "tcspace/error.hpp"

namespace tcspace {
namespace {

using boost::multiprecision::mpz_int;

[[noreturn]] void bad_literal(std::string_view text) {
  throw Error(ErrorCode::ParseError, "not a rational literal: '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// mpz_int's string constructor guesses the base, so "010" would be octal.
mpz_int decimal(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return mpz_int(std::string(digits));
}

// Optional sign followed by digits.
mpz_int parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) bad_literal(whole);
  mpz_int value = decimal(s);
  return negative ? mpz_int(-value) : value;
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
    if (exp_text.empty() || ec != std::errc() || ptr != exp_text.data() + exp_text.size()) bad_literal(whole);
    if (exponent > 4096 || exponent < -4096) bad_literal(whole);
    s = s.substr(0, e);
  }
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) bad_literal(whole);
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)))
      bad_literal(whole);
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) bad_literal(whole);
    digits = std::string(s);
  }
  mpz_int mantissa = decimal(digits);
  if (negative) mantissa = -mantissa;
  mpz_int scale = boost::multiprecision::pow(mpz_int(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? Rational(mantissa, scale) : Rational(mantissa * scale);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad_literal(text);

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_int num = parse_integer(s.substr(0, slash), text);
    std::string_view den_text = s.substr(slash + 1);
    if (!all_digits(den_text)) bad_literal(text);
    mpz_int den = decimal(den_text);
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (s.find_first_of(".eE") != std::string_view::npos) return parse_decimal(s, text);
  return Rational(parse_integer(s, text));
}

std::string to_string(const Rational& value) {
  const auto num = numerator(value);
  const auto den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NonSymmetric: return "NonSymmetric";
    case ErrorCode::NegativeDistance: return "NegativeDistance";
    case ErrorCode::ZeroDistanceDistinctPoints: return "ZeroDistanceDistinctPoints";
    case ErrorCode::TriangleViolation: return "TriangleViolation";
    case ErrorCode::NotZeroSum: return "NotZeroSum";
    case ErrorCode::NotImprovable: return "NotImprovable";
    case ErrorCode::NullProblem: return "NullProblem";
    case ErrorCode::NotLipschitz: return "NotLipschitz";
    case ErrorCode::NotRealizable: return "NotRealizable";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::PeelNotApplicable: return "PeelNotApplicable";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::OracleMismatch: return "OracleMismatch";
  }
  return "Unknown";
}

}  // namespace tcspace
