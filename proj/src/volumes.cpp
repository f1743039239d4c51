#include "sunvol/volumes.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

namespace sunvol::volumes {

namespace {

// prod_{k=1}^{upto} 1/k!
BigRational inv_fact_prod(int upto) {
  BigInt d = 1;
  for (int k = 2; k <= upto; ++k) d *= factorial(k);
  return BigRational(1, d);
}

// prod_{k=1}^{upto} k!
BigInt fact_prod(int upto) {
  BigInt p = 1;
  for (int k = 2; k <= upto; ++k) p *= factorial(k);
  return p;
}

[[noreturn]] void reject(const std::string& what) { throw std::invalid_argument(what); }

}  // namespace

ExactVolume vol_su(int n) {
  if (n < 2) reject("vol_su: requires n >= 2");
  return ExactVolume::pow(2, BigRational(n - 1, 2)) *
         ExactVolume::make(inv_fact_prod(n - 1),
                           BigRational(BigInt(n - 1) * (n + 2), 2), BigRational(n));
}

ExactVolume vol_u1_su(int m) {
  if (m < 2) reject("vol_u1_su: requires m >= 2");
  return ExactVolume::make(1, 1, BigRational(2 * m, m - 1));
}

ExactVolume vol_u(int n) {
  if (n < 2)
    reject(
        "vol_u: requires n >= 2 — at n = 1 the element degenerates to the U(1) phase drawn "
        "from the SU(2) Cartan generator, so the formula does not apply");
  return ExactVolume::pow(2, BigRational(n, 2)) *
         ExactVolume::make(inv_fact_prod(n - 1),
                           BigRational(BigInt(n) * (n + 1), 2), BigRational(n + 1));
}

ExactVolume vol_cpn(int n) {
  if (n < 1) reject("vol_cpn: requires n >= 1");
  return ExactVolume::make(BigRational(1, factorial(n)), BigRational(n), 1);
}

ExactVolume vol_flag(int n) {
  if (n < 2) reject("vol_flag: requires n >= 2");
  ExactVolume v = ExactVolume::make(inv_fact_prod(n - 1),
                                    BigRational(BigInt(n) * (n - 1), 2), 1);
  ExactVolume prod;
  for (int k = 1; k < n; ++k) prod = prod * vol_cpn(k);
  if (!(v == prod)) throw std::logic_error("vol_flag: product identity violated");
  return v;
}

ExactVolume vol_su_over_su_su(int n, int p, int q) {
  if (p < 2 || q < 2) reject("vol_su_over_su_su: requires p, q >= 2");
  if (n + 1 < p + q) reject("vol_su_over_su_su: requires n+1 >= p+q");
  BigRational coeff = inv_fact_prod(n - 1);
  coeff *= fact_prod(p - 1);
  coeff *= fact_prod(q - 1);
  ExactVolume general =
      ExactVolume::pow(2, BigRational((n + 1) - (p + q), 2)) *
      ExactVolume::make(coeff,
                        BigRational(BigInt(n) * (n + 1) - BigInt(p) * (p + 1) -
                                        BigInt(q) * (q + 1) + 2,
                                    2),
                        BigRational(n, p * q));
  if (n + 1 == p + q) {
    BigRational c2 = inv_fact_prod(p + q - 2);
    c2 *= fact_prod(p - 1);
    c2 *= fact_prod(q - 1);
    ExactVolume simplified = ExactVolume::make(
        c2, BigRational(BigInt(p - 1) * (q - 1)), BigRational(p + q - 1, p * q));
    if (!(simplified == general))
      throw std::logic_error("vol_su_over_su_su: simplified form disagrees with general form");
    return simplified;
  }
  return general;
}

ExactVolume vol_su_over_up_u1(int n, int p, int m) {
  if (p < 2) reject("vol_su_over_up_u1: requires p >= 2 (P = 1 is excluded)");
  if (n - 1 < p + 1) reject("vol_su_over_up_u1: requires n-1 >= p+1");
  if (m < 2 || m > n) reject("vol_su_over_up_u1: requires 2 <= m <= n");
  BigRational coeff = inv_fact_prod(n - 1);
  coeff *= fact_prod(p - 1);
  ExactVolume v =
      ExactVolume::pow(2, BigRational((n - 1) - (p + 1), 2)) *
      ExactVolume::make(coeff,
                        BigRational((BigInt(n) * n + n - 2) - (BigInt(p) * p + p + 2), 2),
                        BigRational(BigInt(n) * (m - 1), BigInt(m) * (p + 1)));
  if (m == n && n - 1 == p + 1) {
    ExactVolume reduced = ExactVolume::make(
        BigRational(1, factorial(p) * factorial(p + 1)), BigRational(2 * p + 1), 1);
    if (!(reduced == v))
      throw std::logic_error("vol_su_over_up_u1: reduced form disagrees with general form");
  }
  return v;
}

ExactVolume u1_variant_ratio(int x, int y) {
  if (x < 2 || y < 2) reject("u1_variant_ratio: requires x, y >= 2");
  return ExactVolume::make(1, 0, BigRational(BigInt(y) * (x - 1), BigInt(x) * (y - 1)));
}

ExactVolume vol_su_over_up_uq(int n, int p, int q) {
  if (p < 2 || q < 2) reject("vol_su_over_up_uq: requires p, q >= 2 (P, Q = 1 are excluded)");
  if (n - 1 < p + q) reject("vol_su_over_up_uq: requires n-1 >= p+q");
  BigRational coeff = inv_fact_prod(n - 1);
  coeff *= fact_prod(p - 1);
  coeff *= fact_prod(q - 1);
  ExactVolume general =
      ExactVolume::pow(2, BigRational((n - 1) - (p + q), 2)) *
      ExactVolume::make(coeff,
                        BigRational(BigInt(n - 1) * (n + 2) - BigInt(p) * (p + 1) -
                                        BigInt(q) * (q + 1),
                                    2),
                        BigRational(n, BigInt(p + 1) * (q + 1)));
  if (n - 1 == p + q) {
    BigRational c2 = inv_fact_prod(p + q);
    c2 *= fact_prod(p - 1);
    c2 *= fact_prod(q - 1);
    ExactVolume simplified =
        ExactVolume::make(c2, BigRational(p + q + p * q),
                          BigRational(p + q + 1, BigInt(p + 1) * (q + 1)));
    if (!(simplified == general))
      throw std::logic_error("vol_su_over_up_uq: simplified form disagrees with general form");
    return simplified;
  }
  return general;
}

int CosetSpec::numerator_params() const {
  return numerator.kind == GroupKind::SU ? numerator.param * numerator.param - 1
                                         : numerator.param * numerator.param;
}

int CosetSpec::denominator_params() const {
  int total = 0;
  for (const auto& f : denominator) {
    switch (f.kind) {
      case GroupKind::SU: total += f.param * f.param - 1; break;
      case GroupKind::U: total += f.param * f.param; break;
      case GroupKind::U1_of_SU: total += 1; break;
    }
  }
  return total;
}

CosetSpec CosetSpec::make(GroupFactor numerator, std::vector<GroupFactor> denominator) {
  if (numerator.kind == GroupKind::U1_of_SU)
    reject("CosetSpec: numerator must be SU(n) or U(n)");
  if (numerator.param < 2) {
    if (numerator.kind == GroupKind::U)
      reject(
          "CosetSpec: U(1) numerator rejected — at n = 1 the element degenerates to the U(1) "
          "phase drawn from the SU(2) Cartan generator (n >= 2 required)");
    reject("CosetSpec: numerator dimension must be >= 2");
  }
  for (const auto& f : denominator) {
    if (f.kind == GroupKind::U1_of_SU) {
      if (f.param < 2) reject("CosetSpec: U1[SU(m)] requires m >= 2");
    } else if (f.param < 2) {
      reject("CosetSpec: denominator factor " +
             std::string(f.kind == GroupKind::SU ? "SU" : "U") + "(" +
             std::to_string(f.param) +
             ") rejected — dimension-1 factors must be written as U1[SU(m)]");
    }
  }
  CosetSpec s{numerator, std::move(denominator)};
  if (s.denominator_params() > s.numerator_params())
    reject("CosetSpec: parameter-count feasibility violated — denominator parameter total " +
           std::to_string(s.denominator_params()) + " exceeds numerator parameter total " +
           std::to_string(s.numerator_params()));
  return s;
}

ExactVolume vol_general_coset(const CosetSpec& spec) {
  if (spec.numerator.kind != GroupKind::SU)
    reject("vol_general_coset: numerator must be SU(n)");
  const int n = spec.numerator.param;
  std::vector<int> ps, zs;
  for (const auto& f : spec.denominator) {
    switch (f.kind) {
      case GroupKind::U: ps.push_back(f.param); break;
      case GroupKind::U1_of_SU: zs.push_back(f.param); break;
      case GroupKind::SU:
        reject("vol_general_coset: denominator factors must be U(P) or U1[SU(Z)], not SU");
    }
  }
  int sum_p = 0;
  for (int p : ps) {
    if (p < 2) reject("vol_general_coset: constraint P_i != 1 violated");
    sum_p += p;
  }
  const int y = static_cast<int>(zs.size());
  for (int z : zs)
    if (z < 2 || z > n)
      reject("vol_general_coset: constraint Z_j in {2..n} violated (Z = " + std::to_string(z) +
             ")");
  if (sum_p + y > n - 1)
    reject("vol_general_coset: constraint sum P_i + y <= n-1 violated (" +
           std::to_string(sum_p) + " + " + std::to_string(y) + " > " + std::to_string(n - 1) +
           ")");

  BigRational coeff = inv_fact_prod(n - 1);
  BigInt pp1_sum = 0;  // sum P_i (P_i + 1)
  BigRational sqrt_arg(n);
  for (int p : ps) {
    coeff *= fact_prod(p - 1);
    pp1_sum += BigInt(p) * (p + 1);
    sqrt_arg /= (p + 1);
  }
  for (int z : zs) sqrt_arg *= BigRational(z - 1, z);
  // at sum P_i + y = n-1 the 2-power exponent vanishes (the simplified case)
  return ExactVolume::pow(2, BigRational(n - 1 - y - sum_p, 2)) *
         ExactVolume::make(coeff,
                           BigRational(BigInt(n - 1) * (n + 2) - 2 * y - pp1_sum, 2),
                           sqrt_arg);
}

namespace {

ExactVolume vol_of_factor(const GroupFactor& f) {
  switch (f.kind) {
    case GroupKind::SU: return vol_su(f.param);
    case GroupKind::U: return vol_u(f.param);
    case GroupKind::U1_of_SU: return vol_u1_su(f.param);
  }
  throw std::logic_error("vol_of_factor: unreachable");
}

}  // namespace

ExactVolume vol_coset_ratio(const CosetSpec& spec) {
  ExactVolume v = vol_of_factor(spec.numerator);
  for (const auto& f : spec.denominator) v = v / vol_of_factor(f);
  return v;
}

ExactVolume vol_grassmann(int n, int m, bool naive) {
  if (m < 1 || n <= m) reject("vol_grassmann: requires n > m >= 1");
  if (m == 1) {
    ExactVolume corrected = vol_cpn(n - 1);
    if (!naive) return corrected;
    return corrected * ExactVolume::make(1, 0, BigRational(n + 1, 2 * n));
  }
  if (naive) reject("vol_grassmann: the naive variant exists only for m = 1");
  BigRational coeff = inv_fact_prod(n - 1);
  coeff *= fact_prod(m - 1);
  coeff *= fact_prod(n - m - 1);
  return ExactVolume::make(coeff, BigRational(BigInt(m) * (n - m)),
                           BigRational(n + 1, BigInt(m + 1) * (n - m + 1)));
}

CpnSumResult cpn_volume_sum(int limit) {
  if (limit < 0) reject("cpn_volume_sum: limit must be >= 0");
  CpnSumResult r;
  r.partial_sums.reserve(limit + 1);
  r.partial_products.reserve(limit + 1);
  double term = 1.0;  // pi^0/0!
  double sum = 1.0;
  double prod = 1.0;  // empty product
  r.partial_sums.push_back(sum);
  r.partial_products.push_back(prod);
  for (int k = 1; k <= limit; ++k) {
    term *= std::numbers::pi / k;
    sum += term;
    prod *= term;
    r.partial_sums.push_back(sum);
    r.partial_products.push_back(prod);
  }
  r.sum = sum;
  return r;
}

double omega_bracket(double s) {
  if (s <= 0.0) reject("omega_bracket: s must be positive");
  // 4^{-4s} (4^s - 1) / s^4
  return std::expm1(s * std::log(4.0)) * std::pow(4.0, -4.0 * s) / (s * s * s * s);
}

double omega_two_qubit(double s, kernels::DirichletMode mode) {
  if (s < 1e-6) reject("omega_two_qubit: s below 1e-6 rejected (1/s^4 pole)");
  const double alpha = kernels::DirichletSpec::make(4, s, mode).alpha_s;
  return alpha * omega_bracket(s);
}

// ---------------------------------------------------------------------------
// grammar
// ---------------------------------------------------------------------------

namespace {

struct Cursor {
  const std::string& text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw ParseError("expected '" + std::string(1, c) + "' at position " +
                       std::to_string(pos) + " in \"" + text + "\"");
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  std::string word() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string w = text.substr(start, pos - start);
    // the trailing 1 of "U1"
    if (w == "U" && pos < text.size() && text[pos] == '1') {
      ++pos;
      w = "U1";
    }
    return w;
  }
  int integer() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start)
      throw ParseError("expected an integer at position " + std::to_string(start) + " in \"" +
                       text + "\"");
    return std::stoi(text.substr(start, pos - start));
  }
};

GroupFactor parse_factor(Cursor& c) {
  std::string w = c.word();
  if (w == "SU" || w == "U") {
    c.expect('(');
    int n = c.integer();
    c.expect(')');
    return {w == "SU" ? GroupKind::SU : GroupKind::U, n};
  }
  if (w == "U1") {
    c.expect('[');
    std::string inner = c.word();
    if (inner != "SU") throw ParseError("U1 variant must be written U1[SU(m)]");
    c.expect('(');
    int m = c.integer();
    c.expect(')');
    c.expect(']');
    return {GroupKind::U1_of_SU, m};
  }
  throw ParseError("unknown factor \"" + w + "\" (expected SU(n), U(n), or U1[SU(m)])");
}

}  // namespace

VolumeQuery parse_volume_expr(const std::string& text) {
  Cursor c{text};
  c.skip_ws();
  std::string w = c.word();
  VolumeQuery q;
  if (w == "CP" || w == "Flag" || w == "Gr") {
    c.expect('(');
    q.a = c.integer();
    if (w == "Gr") {
      c.expect(',');
      q.b = c.integer();
    }
    c.expect(')');
    if (!c.done())
      throw ParseError("\"" + w + "(...)\" takes no denominator; unexpected trailing text");
    q.kind = (w == "CP")     ? VolumeQuery::Kind::Cpn
             : (w == "Flag") ? VolumeQuery::Kind::Flag
                             : VolumeQuery::Kind::Grassmann;
    return q;
  }
  if (w == "SU" || w == "U") {
    c.expect('(');
    int n = c.integer();
    c.expect(')');
    q.coset.numerator = {w == "SU" ? GroupKind::SU : GroupKind::U, n};
    if (c.done()) {
      q.kind = VolumeQuery::Kind::Group;
      return q;
    }
    c.expect('/');
    q.coset.denominator.push_back(parse_factor(c));
    while (!c.done()) {
      if (!c.eat('x') && !c.eat('X'))
        throw ParseError("expected 'x' between denominator factors at position " +
                         std::to_string(c.pos) + " in \"" + text + "\"");
      q.coset.denominator.push_back(parse_factor(c));
    }
    q.kind = VolumeQuery::Kind::Coset;
    return q;
  }
  if (w == "U1")
    throw ParseError("U1[SU(m)] cannot stand as a numerator; use SU(n)/... or U(n)/...");
  throw ParseError("unknown group \"" + w +
                   "\" (expected SU, U, CP, Flag, or Gr at the start of the expression)");
}

ExactVolume eval_volume(const VolumeQuery& query) {
  switch (query.kind) {
    case VolumeQuery::Kind::Cpn: return vol_cpn(query.a);
    case VolumeQuery::Kind::Flag: return vol_flag(query.a);
    case VolumeQuery::Kind::Grassmann: return vol_grassmann(query.a, query.b);
    case VolumeQuery::Kind::Group:
      return query.coset.numerator.kind == GroupKind::SU ? vol_su(query.coset.numerator.param)
                                                         : vol_u(query.coset.numerator.param);
    case VolumeQuery::Kind::Coset: break;
  }
  // validate (parameter feasibility, factor kinds) before dispatch
  CosetSpec spec = CosetSpec::make(query.coset.numerator, query.coset.denominator);
  const int n = spec.numerator.param;
  std::vector<int> su, u, u1;
  for (const auto& f : spec.denominator) {
    if (f.kind == GroupKind::SU) su.push_back(f.param);
    if (f.kind == GroupKind::U) u.push_back(f.param);
    if (f.kind == GroupKind::U1_of_SU) u1.push_back(f.param);
  }
  if (spec.numerator.kind == GroupKind::SU) {
    if (su.size() == 2 && u.empty() && u1.empty())
      return vol_su_over_su_su(n, su[0], su[1]);
    if (su.empty() && u.size() == 1 && u1.size() == 1)
      return vol_su_over_up_u1(n, u[0], u1[0]);
    if (su.empty() && u.size() == 2 && u1.empty()) return vol_su_over_up_uq(n, u[0], u[1]);
    if (su.empty()) return vol_general_coset(spec);
  }
  return vol_coset_ratio(spec);
}

}  // namespace sunvol::volumes
