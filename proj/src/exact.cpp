#include "sunvol/exact.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sunvol {

namespace {

BigInt num(const BigRational& r) { return boost::multiprecision::numerator(r); }
BigInt den(const BigRational& r) { return boost::multiprecision::denominator(r); }

long double to_ld(const BigRational& r) { return r.convert_to<long double>(); }

}  // namespace

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

std::pair<BigInt, BigInt> extract_square(BigInt m) {
  if (m <= 0) throw std::invalid_argument("extract_square: argument must be positive");
  BigInt q = 1, r = 1;
  for (BigInt d = 2; d * d <= m; d = (d == 2 ? BigInt(3) : BigInt(d + 2))) {
    unsigned e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    for (unsigned i = 0; i + 1 < e; i += 2) q *= d;
    if (e % 2) r *= d;
  }
  r *= m;  // leftover prime
  return {q, r};
}

ExactVolume ExactVolume::make(const BigRational& coeff, const BigRational& pi_pow,
                              const BigRational& sqrt_arg) {
  if (sqrt_arg <= 0) throw std::invalid_argument("ExactVolume: sqrt argument must be positive");
  ExactVolume v;
  if (coeff == 0) {
    v.coeff_ = 0;
    v.pi_pow_ = 0;
    v.sqrt_arg_ = 1;
    return v;
  }
  // sqrt(a/b) = sqrt(a*b)/b
  BigInt a = num(sqrt_arg), b = den(sqrt_arg);
  auto [q, r] = extract_square(a * b);
  v.coeff_ = coeff * BigRational(q, b);
  v.pi_pow_ = pi_pow;
  v.sqrt_arg_ = r;
  return v;
}

ExactVolume ExactVolume::pow(const BigInt& base, const BigRational& exp) {
  if (base <= 0) throw std::invalid_argument("ExactVolume::pow: base must be positive");
  BigInt d = den(exp);
  if (d != 1 && d != 2)
    throw std::invalid_argument("ExactVolume::pow: exponent denominator must be 1 or 2");
  BigInt n = num(exp);
  // floor toward -inf so the fractional part is 0 or 1/2
  BigInt k = (n >= 0) ? BigInt(n / d) : BigInt(-((-n + d - 1) / d));
  bool half = (n - k * d) != 0;
  BigInt p = boost::multiprecision::pow(base, static_cast<unsigned>(boost::multiprecision::abs(k)));
  BigRational c = (k >= 0) ? BigRational(p) : BigRational(1, p);
  return make(c, 0, half ? BigRational(base) : BigRational(1));
}

ExactVolume ExactVolume::operator*(const ExactVolume& o) const {
  if (is_zero() || o.is_zero()) return zero();
  ExactVolume v;
  v.coeff_ = coeff_ * o.coeff_;
  v.pi_pow_ = pi_pow_ + o.pi_pow_;
  // both args square-free: sqrt(r1)*sqrt(r2) = g*sqrt((r1/g)(r2/g)), g = gcd
  BigInt g = boost::multiprecision::gcd(sqrt_arg_, o.sqrt_arg_);
  v.coeff_ *= g;
  v.sqrt_arg_ = (sqrt_arg_ / g) * (o.sqrt_arg_ / g);
  return v;
}

ExactVolume ExactVolume::operator/(const ExactVolume& o) const {
  if (o.is_zero()) throw std::domain_error("ExactVolume: division by zero");
  if (is_zero()) return zero();
  ExactVolume v;
  v.coeff_ = coeff_ / o.coeff_;
  v.pi_pow_ = pi_pow_ - o.pi_pow_;
  // sqrt(r1)/sqrt(r2) = sqrt(r1*r2)/r2 = (g/r2)*sqrt((r1/g)(r2/g))
  BigInt g = boost::multiprecision::gcd(sqrt_arg_, o.sqrt_arg_);
  v.coeff_ *= BigRational(g, o.sqrt_arg_);
  v.sqrt_arg_ = (sqrt_arg_ / g) * (o.sqrt_arg_ / g);
  return v;
}

bool ExactVolume::operator==(const ExactVolume& o) const {
  return coeff_ == o.coeff_ && pi_pow_ == o.pi_pow_ && sqrt_arg_ == o.sqrt_arg_;
}

double ExactVolume::to_double() const {
  if (is_zero()) return 0.0;
  const long double pi = 3.141592653589793238462643383279502884L;
  long double v = to_ld(coeff_);
  v *= std::pow(pi, to_ld(pi_pow_));
  if (sqrt_arg_ != 1) v *= std::sqrt(sqrt_arg_.convert_to<long double>());
  return static_cast<double>(v);
}

namespace {

std::string pi_token(const BigRational& p) {
  if (p == 0) return "";
  if (p == 1) return "pi";
  BigInt d = boost::multiprecision::denominator(p);
  std::ostringstream os;
  if (d == 1)
    os << "pi^" << boost::multiprecision::numerator(p);
  else
    os << "pi^(" << p << ")";
  return os.str();
}

std::string pi_token_latex(const BigRational& p) {
  if (p == 0) return "";
  if (p == 1) return "\\pi";
  std::ostringstream os;
  os << "\\pi^{" << p << "}";
  return os.str();
}

}  // namespace

std::string ExactVolume::str() const {
  if (is_zero()) return "0";
  BigInt n = num(coeff_), d = den(coeff_);
  bool neg = n < 0;
  if (neg) n = -n;
  BigInt s = sqrt_arg_;

  // unit-fraction rule: 1/(d) * sqrt(s) -> 1/((d/s)*sqrt(s)) when s | d
  bool sqrt_in_den = (s != 1 && n == 1 && d % s == 0);
  if (sqrt_in_den) d /= s;

  std::ostringstream numer;
  bool wrote = false;
  auto app = [&](const std::string& t) {
    if (t.empty()) return;
    if (wrote) numer << "*";
    numer << t;
    wrote = true;
  };
  if (n != 1) app(n.str());
  if (!sqrt_in_den && s != 1) app("sqrt(" + s.str() + ")");
  app(pi_token(pi_pow_));
  if (!wrote) numer << n;  // plain rational like "1" or "3/2" numerator

  std::ostringstream os;
  if (neg) os << "-";
  os << numer.str();
  if (d != 1 || sqrt_in_den) {
    os << "/";
    std::string st = "sqrt(" + s.str() + ")";
    if (sqrt_in_den && d != 1)
      os << "(" << d << "*" << st << ")";
    else if (sqrt_in_den)
      os << st;
    else
      os << d;
  }
  return os.str();
}

std::string ExactVolume::latex() const {
  if (is_zero()) return "0";
  BigInt n = num(coeff_), d = den(coeff_);
  bool neg = n < 0;
  if (neg) n = -n;
  BigInt s = sqrt_arg_;
  bool sqrt_in_den = (s != 1 && n == 1 && d % s == 0);
  if (sqrt_in_den) d /= s;

  std::ostringstream numer;
  if (n != 1) numer << n;
  if (!sqrt_in_den && s != 1) numer << "\\sqrt{" << s << "}";
  std::string pt = pi_token_latex(pi_pow_);
  if (!pt.empty()) {
    if (numer.tellp() > 0) numer << "\\,";
    numer << pt;
  }
  if (numer.tellp() == 0) numer << n;

  std::ostringstream denom;
  if (d != 1) denom << d;
  if (sqrt_in_den) denom << "\\sqrt{" << s << "}";

  std::ostringstream os;
  if (neg) os << "-";
  if (denom.tellp() == 0)
    os << numer.str();
  else
    os << "\\frac{" << numer.str() << "}{" << denom.str() << "}";
  return os.str();
}

}  // namespace sunvol
