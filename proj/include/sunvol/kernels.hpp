#pragma once

#include "sunvol/euler.hpp"

#include <vector>

namespace sunvol::kernels {

// Single-angle factor forms appearing in the product measures.
enum class FactorForm {
  Sin2A,      // sin(2a)
  CosPowSin,  // cos^p(a) sin(a)
  CosSinPow   // cos(a) sin^p(a)
};

const char* to_string(FactorForm f);

struct KernelFactor {
  int angle_index = 0;  // 1-based slot
  FactorForm form = FactorForm::Sin2A;
  int p = 1;  // exponent; ignored by Sin2A

  double evaluate(double a) const;
  double antiderivative(double a) const;
  double integral(double lo, double hi) const;
  // Inverse CDF of the factor normalized over its covering range [0, pi/2]:
  //   Sin2A     -> arcsin(sqrt(u))
  //   CosPowSin -> arccos((1-u)^{1/(p+1)})
  //   CosSinPow -> arcsin(u^{1/(p+1)})
  double inverse_cdf(double u) const;
};

enum class KernelContext { HaarSU, PureState, TruncatedHaar, Hurwitz };

const char* to_string(KernelContext c);

// A measure as a product of single-angle factors.  Angles not referenced by
// any factor carry the constant factor 1 (their measure contribution is the
// plain range length).  xi is the chart normalization multiplier; it is
// fixed at construction from the range convention and applied by the
// integration routines, not by evaluate().
struct ProductKernel {
  int n = 0;  // group dimension (HaarSU/TruncatedHaar), projective dimension
              // (PureState), or ambient dimension (Hurwitz)
  KernelContext context = KernelContext::HaarSU;
  double xi = 1.0;
  std::vector<KernelFactor> factors;

  // product of the factors at the given slot values (slot i -> values[i-1])
  double evaluate(const std::vector<double>& values) const;
};

// Haar kernel of SU(n): for every block level 2 <= m <= n and column
// 2 <= k <= m, one factor at the block's rotation slots:
//   k = 2        -> sin(2 a_{2+j(m)})
//   2 < k < m    -> cos^{2k-3} sin   at slot 2(k-1)+j(m)
//   k = m (> 2)  -> cos sin^{2m-3}   at slot 2(m-1)+j(m)
// n(n-1)/2 factors in total.  Covering ranges only.
ProductKernel haar_kernel_su(int n);

// Invariant measure on CP^n written in the 2n angles of the leading pair
// block of SU(n+1): n factors, the m = n+1 case split above with j = 0.
ProductKernel pure_state_kernel(int n,
                                euler::RangeConvention conv = euler::RangeConvention::Covering);

// The Haar kernel with the torus angles quotiented out: same factor list as
// haar_kernel_su(n) over the first n(n-1) angles.
ProductKernel truncated_haar_kernel(
    int n, euler::RangeConvention conv = euler::RangeConvention::Covering);

// Spherical-coordinate pure-state kernel: cos(t_k) sin^{2k-1}(t_k) for
// k = 1..n-1 over t_k in [0,pi/2]; the phases phi_k in [0,2pi] occupy slots
// n..2(n-1) with constant factor 1.
ProductKernel hurwitz_kernel(int n);

// Range template for the spherical chart (theta slots then phi slots).
euler::AngleVector hurwitz_ranges(int n);

enum class DirichletMode { Literal, NumericallyNormalized };

// Eigenvalue-simplex density alpha_s * prod_j L_j^{s-1} restricted to
// per-coordinate ranges: L_1..L_{n-1} in [0, 1/n] and L_n in [1/n, 1]
// (the box on the first n-1 coordinates automatically implies L_n >= 1/n).
//
// Literal:                alpha_s = Gamma(n s)/(n Gamma(s))
// NumericallyNormalized:  alpha_s chosen so the density integrates to 1 over
//                         the declared ranges (default for sampling; the
//                         literal constant does not normalize the truncated
//                         density).  Computed by tensor Gauss-Jacobi
//                         quadrature; supported for n <= 6.
struct DirichletSpec {
  int n = 2;
  double s = 1.0;
  DirichletMode mode = DirichletMode::NumericallyNormalized;
  double alpha_s = 1.0;
  std::vector<std::pair<double, double>> ranges;

  static DirichletSpec make(int n, double s,
                            DirichletMode mode = DirichletMode::NumericallyNormalized);
};

// Gamma(n s)/(n Gamma(s))
double alpha_literal(int n, double s);

// Gamma(4 s)/(4 Gamma(2)) — two-qubit variant with the denominator gamma
// frozen at 2 rather than s; agrees with alpha_literal(4, s) only where
// Gamma(s) = 1 (s = 1, 2).  Kept for comparison.
double alpha_two_qubit_gamma2(double s);

// Integral of prod_j L_j^{s-1} over the declared truncated region (the
// simplex coordinates L_1..L_{n-1} confined to the box [0,1/n]^{n-1}).
double dirichlet_truncated_integral(int n, double s);

// alpha_s * prod L_j^{s-1}; validates sum(L) = 1 to 1e-12 and the ranges.
double dirichlet_density(const DirichletSpec& spec, const std::vector<double>& lambdas);

// The mixed-state product density: eigenvalue simplex density times the
// xi-weighted truncated-Haar angle kernel over the first n(n-1) angles.
struct MixedStateDensity {
  DirichletSpec eigen_spec;
  ProductKernel angle_kernel;
};

MixedStateDensity mixed_state_density(
    int n, const DirichletSpec& spec,
    euler::RangeConvention conv = euler::RangeConvention::Covering);

}  // namespace sunvol::kernels
