#include "sunvol/kernels.hpp"

#include "sunvol/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sunvol::kernels {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double half_pi = std::numbers::pi / 2.0;

double powi(double x, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= x;
  return r;
}

}  // namespace

const char* to_string(FactorForm f) {
  switch (f) {
    case FactorForm::Sin2A: return "sin2a";
    case FactorForm::CosPowSin: return "cospowsin";
    case FactorForm::CosSinPow: return "cossinpow";
  }
  return "?";
}

const char* to_string(KernelContext c) {
  switch (c) {
    case KernelContext::HaarSU: return "haar-su";
    case KernelContext::PureState: return "pure-state";
    case KernelContext::TruncatedHaar: return "truncated";
    case KernelContext::Hurwitz: return "hurwitz";
  }
  return "?";
}

double KernelFactor::evaluate(double a) const {
  switch (form) {
    case FactorForm::Sin2A: return std::sin(2.0 * a);
    case FactorForm::CosPowSin: return powi(std::cos(a), p) * std::sin(a);
    case FactorForm::CosSinPow: return std::cos(a) * powi(std::sin(a), p);
  }
  return 0.0;
}

double KernelFactor::antiderivative(double a) const {
  switch (form) {
    case FactorForm::Sin2A: {
      const double s = std::sin(a);
      return s * s;
    }
    case FactorForm::CosPowSin: return -powi(std::cos(a), p + 1) / (p + 1);
    case FactorForm::CosSinPow: return powi(std::sin(a), p + 1) / (p + 1);
  }
  return 0.0;
}

double KernelFactor::integral(double lo, double hi) const {
  return antiderivative(hi) - antiderivative(lo);
}

double KernelFactor::inverse_cdf(double u) const {
  if (u < 0.0 || u > 1.0) throw std::domain_error("KernelFactor::inverse_cdf: u outside [0,1]");
  switch (form) {
    case FactorForm::Sin2A: return std::asin(std::sqrt(u));
    case FactorForm::CosPowSin: return std::acos(std::pow(1.0 - u, 1.0 / (p + 1)));
    case FactorForm::CosSinPow: return std::asin(std::pow(u, 1.0 / (p + 1)));
  }
  return 0.0;
}

double ProductKernel::evaluate(const std::vector<double>& values) const {
  double prod = 1.0;
  for (const auto& f : factors) {
    if (f.angle_index < 1 || static_cast<size_t>(f.angle_index) > values.size())
      throw std::out_of_range("ProductKernel::evaluate: no value for angle slot " +
                              std::to_string(f.angle_index));
    prod *= f.evaluate(values[f.angle_index - 1]);
  }
  return prod;
}

namespace {

// The three-way case split of the level-m block factors, k = 2..m.
// k = 2 takes precedence at m = 2 (the only reading that reproduces the
// SU(2) volume from the covering integral).
void append_block_factors(int m, int j, std::vector<KernelFactor>& out) {
  for (int k = 2; k <= m; ++k) {
    KernelFactor f;
    if (k == 2) {
      f.angle_index = 2 + j;
      f.form = FactorForm::Sin2A;
      f.p = 1;
    } else if (k < m) {
      f.angle_index = 2 * (k - 1) + j;
      f.form = FactorForm::CosPowSin;
      f.p = 2 * k - 3;
    } else {  // k == m > 2
      f.angle_index = 2 * (m - 1) + j;
      f.form = FactorForm::CosSinPow;
      f.p = 2 * m - 3;
    }
    out.push_back(f);
  }
}

}  // namespace

ProductKernel haar_kernel_su(int n) {
  if (n < 2) throw std::invalid_argument("haar_kernel_su: group dimension must be >= 2");
  ProductKernel k;
  k.n = n;
  k.context = KernelContext::HaarSU;
  k.xi = 1.0;
  for (int m = n; m >= 2; --m) append_block_factors(m, euler::j_offset(m, n), k.factors);
  return k;
}

ProductKernel pure_state_kernel(int n, euler::RangeConvention conv) {
  if (n < 1) throw std::invalid_argument("pure_state_kernel: projective dimension must be >= 1");
  ProductKernel k;
  k.n = n;
  k.context = KernelContext::PureState;
  append_block_factors(n + 1, 0, k.factors);
  k.xi = (conv == euler::RangeConvention::Quotient) ? std::ldexp(1.0, n - 1) : 1.0;
  return k;
}

ProductKernel truncated_haar_kernel(int n, euler::RangeConvention conv) {
  ProductKernel k = haar_kernel_su(n);
  k.context = KernelContext::TruncatedHaar;
  k.xi = (conv == euler::RangeConvention::Quotient) ? std::ldexp(1.0, (n - 1) * (n - 2) / 2)
                                                    : 1.0;
  return k;
}

ProductKernel hurwitz_kernel(int n) {
  if (n < 2) throw std::invalid_argument("hurwitz_kernel: ambient dimension must be >= 2");
  ProductKernel k;
  k.n = n;
  k.context = KernelContext::Hurwitz;
  k.xi = 1.0;
  for (int i = 1; i <= n - 1; ++i) {
    KernelFactor f;
    f.angle_index = i;
    f.form = FactorForm::CosSinPow;
    f.p = 2 * i - 1;
    k.factors.push_back(f);
  }
  return k;
}

euler::AngleVector hurwitz_ranges(int n) {
  if (n < 2) throw std::invalid_argument("hurwitz_ranges: ambient dimension must be >= 2");
  euler::AngleVector av;
  av.n = n;
  av.context = euler::ChartContext::HurwitzSphere;
  av.convention = euler::RangeConvention::Covering;
  av.xi = 1.0;
  av.angles.resize(2 * (n - 1));
  for (int i = 1; i <= n - 1; ++i) av.angles[i - 1] = {i, 0.0, 0.0, half_pi};
  for (int i = n; i <= 2 * (n - 1); ++i) av.angles[i - 1] = {i, 0.0, 0.0, 2.0 * pi};
  return av;
}

double alpha_literal(int n, double s) {
  if (n < 2) throw std::invalid_argument("alpha_literal: n must be >= 2");
  if (s <= 0.0) throw std::invalid_argument("alpha_literal: s must be positive");
  return std::exp(std::lgamma(n * s) - std::lgamma(s)) / n;
}

double alpha_two_qubit_gamma2(double s) {
  if (s <= 0.0) throw std::invalid_argument("alpha_two_qubit_gamma2: s must be positive");
  return std::exp(std::lgamma(4.0 * s)) / (4.0 * std::tgamma(2.0));
}

double dirichlet_truncated_integral(int n, double s) {
  if (n < 2) throw std::invalid_argument("dirichlet_truncated_integral: n must be >= 2");
  if (s <= 0.0) throw std::invalid_argument("dirichlet_truncated_integral: s must be positive");
  if (n > 6)
    throw std::invalid_argument(
        "dirichlet_truncated_integral: tensor quadrature supported for n <= 6 "
        "(cost grows as nodes^(n-1)); sampling does not need this constant");
  // I = int over [0,1/n]^{n-1} of prod_j L_j^{s-1} (1 - sum L)^{s-1}.
  // Substituting L_j = t_j/n turns each L^{s-1} dL into n^{-s} t^{s-1} dt on
  // [0,1]; the remaining factor is smooth because sum L <= (n-1)/n keeps the
  // base >= 1/n.  Gauss-Jacobi absorbs the t^{s-1} weight exactly.
  static const int kNodes[7] = {0, 0, 64, 48, 40, 28, 24};
  const int dims = n - 1;
  const int nodes = kNodes[n];
  quadrature::Rule rule = quadrature::gauss_jacobi01(s - 1.0, nodes);

  double total = 0.0;
  std::vector<int> idx(dims, 0);
  while (true) {
    double w = 1.0, sum = 0.0;
    for (int d = 0; d < dims; ++d) {
      w *= rule.weights[idx[d]];
      sum += rule.nodes[idx[d]];
    }
    total += w * std::pow(1.0 - sum / n, s - 1.0);
    int d = 0;
    while (d < dims && ++idx[d] == nodes) idx[d++] = 0;
    if (d == dims) break;
  }
  return total * std::pow(static_cast<double>(n), -s * dims);
}

DirichletSpec DirichletSpec::make(int n, double s, DirichletMode mode) {
  if (n < 2) throw std::invalid_argument("DirichletSpec: n must be >= 2");
  if (s <= 0.0) throw std::invalid_argument("DirichletSpec: concentration s must be positive");
  DirichletSpec d;
  d.n = n;
  d.s = s;
  d.mode = mode;
  d.ranges.assign(n - 1, {0.0, 1.0 / n});
  d.ranges.push_back({1.0 / n, 1.0});
  d.alpha_s = (mode == DirichletMode::Literal)
                  ? alpha_literal(n, s)
                  : 1.0 / dirichlet_truncated_integral(n, s);
  return d;
}

double dirichlet_density(const DirichletSpec& spec, const std::vector<double>& lambdas) {
  if (lambdas.size() != static_cast<size_t>(spec.n))
    throw std::invalid_argument("dirichlet_density: expected " + std::to_string(spec.n) +
                                " eigenvalues, got " + std::to_string(lambdas.size()));
  double sum = 0.0;
  for (double l : lambdas) sum += l;
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::domain_error("dirichlet_density: eigenvalues must sum to 1 (got " +
                            std::to_string(sum) + ")");
  constexpr double slack = 1e-12;
  for (size_t j = 0; j < lambdas.size(); ++j) {
    const auto& [lo, hi] = spec.ranges[j];
    if (lambdas[j] < lo - slack || lambdas[j] > hi + slack)
      throw std::domain_error("dirichlet_density: eigenvalue " + std::to_string(j + 1) +
                              " outside its declared range");
  }
  double prod = 1.0;
  for (double l : lambdas) prod *= std::pow(l, spec.s - 1.0);
  return spec.alpha_s * prod;
}

MixedStateDensity mixed_state_density(int n, const DirichletSpec& spec,
                                      euler::RangeConvention conv) {
  if (n < 2) throw std::invalid_argument("mixed_state_density: group dimension must be >= 2");
  if (spec.n != n)
    throw std::invalid_argument("mixed_state_density: eigenvalue spec has n = " +
                                std::to_string(spec.n) + ", expected " + std::to_string(n));
  return {spec, truncated_haar_kernel(n, conv)};
}

}  // namespace sunvol::kernels
