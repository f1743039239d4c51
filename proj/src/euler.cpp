#include "sunvol/euler.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sunvol::euler {

namespace {
constexpr double pi = std::numbers::pi;
constexpr double half_pi = std::numbers::pi / 2.0;
}  // namespace

int j_offset(int m, int n) {
  if (n < 2) throw std::invalid_argument("j_offset: group dimension must be >= 2");
  if (m < 2 || m > n)
    throw std::invalid_argument("j_offset: level " + std::to_string(m) + " outside [2, " +
                                std::to_string(n) + "]");
  if (m == n) return 0;
  int s = 0;
  for (int l = 0; l <= n - m - 1; ++l) s += 2 * (m + l);
  return s;
}

const char* to_string(RangeConvention c) {
  return c == RangeConvention::Covering ? "covering" : "quotient";
}

const char* to_string(ChartContext c) {
  switch (c) {
    case ChartContext::SUFull: return "su-full";
    case ChartContext::ProjectiveSpace: return "projective";
    case ChartContext::TruncatedHaar: return "truncated";
    case ChartContext::HurwitzSphere: return "hurwitz";
  }
  return "?";
}

void AngleVector::set_values(const std::vector<double>& values) {
  if (values.size() != angles.size())
    throw std::invalid_argument("AngleVector::set_values: expected " +
                                std::to_string(angles.size()) + " values, got " +
                                std::to_string(values.size()));
  for (size_t i = 0; i < values.size(); ++i) angles[i].value = values[i];
}

std::vector<double> AngleVector::values() const {
  std::vector<double> v(angles.size());
  for (size_t i = 0; i < angles.size(); ++i) v[i] = angles[i].value;
  return v;
}

std::vector<int> AngleVector::out_of_range_slots() const {
  std::vector<int> out;
  for (const auto& a : angles)
    if (a.value < a.lo || a.value > a.hi) out.push_back(a.index);
  return out;
}

std::pair<double, double> u1_beta_range(int m) {
  if (m < 2) throw std::invalid_argument("u1_beta_range: level must be >= 2");
  return {0.0, pi * std::sqrt(2.0 * m / (m - 1.0))};
}

namespace {

// lo/hi for the pair-block slots of SU(n) (slots 1 .. n(n-1)).
void fill_pair_blocks(int n, RangeConvention conv, std::vector<AngleSlot>& slots) {
  for (int m = n; m >= 2; --m) {
    const int j = j_offset(m, n);
    for (int k = 2; k <= m; ++k) {
      AngleSlot odd;
      odd.index = (2 * k - 3) + j;
      odd.lo = 0.0;
      if (conv == RangeConvention::Covering)
        odd.hi = (k == 2) ? pi : 2.0 * pi;
      else
        odd.hi = pi;
      AngleSlot even;
      even.index = 2 * (k - 1) + j;
      even.lo = 0.0;
      even.hi = half_pi;
      slots[odd.index - 1] = odd;
      slots[even.index - 1] = even;
    }
  }
}

}  // namespace

AngleVector range_catalog(int n, ChartContext context, RangeConvention convention) {
  AngleVector av;
  av.n = n;
  av.context = context;
  av.convention = convention;
  av.xi = 1.0;

  switch (context) {
    case ChartContext::ProjectiveSpace: {
      if (n < 1) throw std::invalid_argument("range_catalog: projective dimension must be >= 1");
      av.angles.resize(2 * n);
      for (int i = 1; i <= 2 * n; ++i) {
        AngleSlot s;
        s.index = i;
        s.lo = 0.0;
        if (i % 2 == 0)
          s.hi = half_pi;
        else if (convention == RangeConvention::Covering)
          s.hi = (i == 1) ? pi : 2.0 * pi;
        else
          s.hi = pi;
        av.angles[i - 1] = s;
      }
      if (convention == RangeConvention::Quotient) av.xi = std::ldexp(1.0, n - 1);
      return av;
    }
    case ChartContext::TruncatedHaar: {
      if (n < 2) throw std::invalid_argument("range_catalog: group dimension must be >= 2");
      av.angles.resize(n * (n - 1));
      fill_pair_blocks(n, convention, av.angles);
      if (convention == RangeConvention::Quotient)
        av.xi = std::ldexp(1.0, (n - 1) * (n - 2) / 2);
      return av;
    }
    case ChartContext::HurwitzSphere:
      throw std::invalid_argument(
          "range_catalog: spherical-chart ranges come from kernels::hurwitz_ranges");
    case ChartContext::SUFull: {
      if (n < 2) throw std::invalid_argument("range_catalog: group dimension must be >= 2");
      if (convention == RangeConvention::Quotient)
        throw std::invalid_argument(
            "range_catalog: quotient ranges are defined for the projective and truncated "
            "charts only");
      av.angles.resize(n * n - 1);
      fill_pair_blocks(n, convention, av.angles);
      for (int m = 2; m <= n; ++m) {
        AngleSlot s;
        s.index = n * n - n + (m - 1);
        s.lo = 0.0;
        s.hi = u1_beta_range(m).second;
        av.angles[s.index - 1] = s;
      }
      return av;
    }
  }
  throw std::logic_error("range_catalog: unreachable");
}

std::vector<EulerFactor> factor_sequence(int n) {
  if (n < 2) throw std::invalid_argument("factor_sequence: group dimension must be >= 2");
  std::vector<EulerFactor> seq;
  seq.reserve(n * n - 1);
  for (int m = n; m >= 2; --m) {
    const int j = j_offset(m, n);
    for (int k = 2; k <= m; ++k) {
      seq.push_back({(2 * k - 3) + j, 3, FactorRole::Phase, m, k});
      seq.push_back({2 * (k - 1) + j, (k - 1) * (k - 1) + 1, FactorRole::PairRotation, m, k});
    }
  }
  for (int m = 2; m <= n; ++m)
    seq.push_back({n * n - n + (m - 1), m * m - 1, FactorRole::Cartan, m, 0});
  return seq;
}

namespace {

void warn_out_of_range(const AngleVector& angles, std::ostream* warn) {
  if (!warn) return;
  for (int idx : angles.out_of_range_slots())
    *warn << "warning: angle " << idx << " = " << angles.angles[idx - 1].value
          << " outside its declared range [" << angles.angles[idx - 1].lo << ", "
          << angles.angles[idx - 1].hi << "]\n";
}

}  // namespace

Matrix su_element(const algebra::GellMannBasis& basis, const AngleVector& angles,
                  std::ostream* warn) {
  const int n = basis.dim();
  const size_t expect = static_cast<size_t>(n) * n - 1;
  if (angles.angles.size() != expect)
    throw std::invalid_argument("su_element: SU(" + std::to_string(n) + ") needs " +
                                std::to_string(expect) + " angles, got " +
                                std::to_string(angles.angles.size()));
  warn_out_of_range(angles, warn);
  Matrix u = Matrix::Identity(n, n);
  for (const EulerFactor& f : factor_sequence(n))
    u *= algebra::exp_generator(basis, f.gen_index, angles.angles[f.slot - 1].value);
  return u;
}

Matrix u_element(const algebra::GellMannBasis& basis, const AngleVector& angles,
                 std::ostream* warn) {
  const int n = basis.dim() - 1;
  if (n < 2)
    throw std::invalid_argument(
        "u_element: rejected for n < 2 — the n = 1 element degenerates to the U(1) phase "
        "drawn from the SU(2) Cartan generator (use that directly)");
  if (!angles.beta)
    throw std::invalid_argument("u_element: angle vector carries no beta (U(1) phase)");
  const size_t expect = static_cast<size_t>(n) * n - 1;
  if (angles.angles.size() != expect)
    throw std::invalid_argument("u_element: U(" + std::to_string(n) + ") needs " +
                                std::to_string(expect) + " angles plus beta, got " +
                                std::to_string(angles.angles.size()));
  warn_out_of_range(angles, warn);
  const int nn = n + 1;
  Matrix u = Matrix::Identity(nn, nn);
  for (const EulerFactor& f : factor_sequence(n))
    u *= algebra::exp_generator(basis, f.gen_index, angles.angles[f.slot - 1].value);
  u *= algebra::exp_generator(basis, nn * nn - 1, *angles.beta);
  return u;
}

}  // namespace sunvol::euler
