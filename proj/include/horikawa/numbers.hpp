#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace horikawa {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two classes (or a class and a surface) that do not live on the same surface.
class SurfaceMismatch : public Error {
 public:
  using Error::Error;
};

/// Exact division by the cover degree failed somewhere.
class DivisibilityError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A quantity that must be an integer came out fractional.
class IntegralityError : public Error {
 public:
  using Error::Error;
};

inline std::string to_string(const Integer& v) { return v.str(); }

inline std::string to_string(const Rational& v) {
  const Integer num = boost::multiprecision::numerator(v);
  const Integer den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline bool is_integral(const Rational& v) { return boost::multiprecision::denominator(v) == 1; }

/// Numerator of an integral rational; throws IntegralityError otherwise.
inline Integer as_integer(const Rational& v, const std::string& what) {
  if (!is_integral(v)) throw IntegralityError(what + " is not an integer: " + to_string(v));
  return boost::multiprecision::numerator(v);
}

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace horikawa
