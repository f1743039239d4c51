#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

namespace sunvol {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);

// Splits m >= 1 as m = q^2 * r with r square-free; returns {q, r}.
// Trial division: radicands here are small products of group dimensions.
std::pair<BigInt, BigInt> extract_square(BigInt m);

// A volume (or any value) of the form
//
//     coeff * pi^pi_pow * sqrt(sqrt_arg)
//
// with coeff an exact rational, pi_pow an exact rational exponent (integers
// in practice, half-integers legal), and sqrt_arg canonicalized to a
// square-free positive integer (1 when no radical survives).  Closed under
// multiplication and division, which is all the closed-form volume formulas
// need.  Equality on the canonical form is exact.
class ExactVolume {
public:
  ExactVolume() : coeff_(1), pi_pow_(0), sqrt_arg_(1) {}

  // sqrt_arg may be any positive rational; sqrt(a/b) is rewritten as
  // sqrt(a*b)/b and square factors migrate into coeff.
  static ExactVolume make(const BigRational& coeff,
                          const BigRational& pi_pow = BigRational(0),
                          const BigRational& sqrt_arg = BigRational(1));

  // base^exp for integer base > 0 and exponent with denominator 1 or 2,
  // e.g. 2^(5/2) = 4*sqrt(2).
  static ExactVolume pow(const BigInt& base, const BigRational& exp);

  static ExactVolume zero() { return make(BigRational(0)); }

  const BigRational& coeff() const { return coeff_; }
  const BigRational& pi_pow() const { return pi_pow_; }
  const BigInt& sqrt_arg() const { return sqrt_arg_; }
  bool is_zero() const { return coeff_ == 0; }

  ExactVolume operator*(const ExactVolume& o) const;
  ExactVolume operator/(const ExactVolume& o) const;
  bool operator==(const ExactVolume& o) const;
  bool operator!=(const ExactVolume& o) const { return !(*this == o); }

  double to_double() const;

  // Plain-text rendering: "2*pi^2", "pi^3/6", "sqrt(2)*pi^9/3",
  // "pi^5/(6*sqrt(2))".  A surviving radical moves into the denominator
  // when the rational part is a unit fraction whose denominator it divides;
  // this matches the conventional way these volumes are written.
  std::string str() const;

  // LaTeX rendering, same placement conventions: "\frac{\pi^{5}}{6\sqrt{2}}".
  std::string latex() const;

private:
  BigRational coeff_;
  BigRational pi_pow_;
  BigInt sqrt_arg_;
};

}  // namespace sunvol
