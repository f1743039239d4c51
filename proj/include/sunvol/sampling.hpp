#pragma once

#include "sunvol/kernels.hpp"
#include "sunvol/numerics.hpp"
#include "sunvol/rng.hpp"

#include <functional>
#include <string>
#include <vector>

namespace sunvol::sampling {

// Draw one angle with density proportional to the factor over its covering
// range via the closed-form inverse CDF.  The weighted factor forms are all
// normalized on [0, pi/2]; passing any other range is an error.
double sample_angle(const kernels::KernelFactor& factor, double lo, double hi,
                    rng::SeededStream& stream);

// Uniform draw for slots with no kernel factor (phases, Cartan angles).
double sample_angle(double lo, double hi, rng::SeededStream& stream);

// Gamma(shape, 1) variate by Marsaglia-Tsang squeeze (shape >= 1) with the
// Stuart power boost below 1; all randomness from `stream`.
double gamma_draw(double shape, rng::SeededStream& stream);

// ---------------------------------------------------------------------------
// group, pure-state, and mixed-state samplers
// ---------------------------------------------------------------------------

// Reusable SU(n) sampler: holds the generator basis, the angle kernel, and
// the covering ranges so bulk draws avoid per-draw setup.
class SuSampler {
 public:
  enum class Weighting {
    Haar,          // kernel-weighted rotation angles: Haar distribution
    UniformAngles  // every angle uniform — diagnostic control, NOT Haar
  };

  explicit SuSampler(int n, Weighting weighting = Weighting::Haar);

  Matrix draw(rng::SeededStream& stream) const;
  int n() const { return n_; }

 private:
  int n_;
  Weighting weighting_;
  algebra::GellMannBasis basis_;
  euler::AngleVector template_;
  std::vector<int> factor_by_slot_;  // index into kernel_.factors, -1 = constant
  kernels::ProductKernel kernel_;
};

// One-shot conveniences over SuSampler.  n in [2, 8].
Matrix sample_su(int n, rng::SeededStream& stream);
Matrix sample_su_uniform_angles(int n, rng::SeededStream& stream);

// Independent Haar oracle: complex Gaussian matrix, QR, column phases fixed
// by the R diagonal, then projected to det 1.  Shares nothing with the
// angle-chart machinery.
Matrix haar_oracle_sample(int n, rng::SeededStream& stream);
Matrix haar_oracle_sample_u(int n, rng::SeededStream& stream);  // U(n), no det fix

// Reusable pure-state sampler on CP^{n-1} (states in C^n, n >= 2): draws the
// 2(n-1) chart angles from the pure-state kernel and maps through the Euler
// chart state vector.
class PureStateSampler {
 public:
  explicit PureStateSampler(int n);

  CVector draw(rng::SeededStream& stream) const;
  int n() const { return n_; }

 private:
  int n_;
  algebra::GellMannBasis basis_;
  euler::AngleVector template_;
  std::vector<int> factor_by_slot_;  // index into kernel_.factors, -1 = constant
  kernels::ProductKernel kernel_;
};

CVector sample_pure_state(int n, rng::SeededStream& stream);

struct DensityMatrixSample {
  int n = 0;
  std::vector<double> eigenvalues;  // as drawn; last entry is the >= 1/n one
  Matrix unitary;
  Matrix rho;

  double hermiticity_defect() const;
  double trace_defect() const;
  double min_eigenvalue() const;
};

// Mixed-state draw: eigenvalues from the symmetric Dirichlet(s) restricted by
// rejection to the box (first n-1 weights <= 1/n, so the last is >= 1/n);
// eigenvector frame from the truncated angle block (torus angles zero);
// rho = U diag(L) U^dag.  The eigenvalue drawn last (the largest) stays
// paired with the last column of U — the chart fixes this pairing and it is
// part of the output convention.
//
// pre: n >= 2; spec.n == n; spec.mode == NumericallyNormalized (the literal
// alpha mode mis-normalizes and is refused for sampling).
// Errors: rejection cap exceeded (pathological s).
DensityMatrixSample sample_density_matrix(int n, const kernels::DirichletSpec& spec,
                                          rng::SeededStream& stream,
                                          long long rejection_cap = 100000);

// ---------------------------------------------------------------------------
// statistical machinery
// ---------------------------------------------------------------------------

struct KsResult {
  double statistic = 0.0;
  double p_value = 0.0;
  bool pass = false;
};

// Asymptotic Kolmogorov p-value with the Stephens small-sample correction:
// lambda = (sqrt(ne) + 0.12 + 0.11/sqrt(ne)) * d.
double ks_p_value(double d, double n_effective);

KsResult ks_one_sample(std::vector<double> xs,
                       const std::function<double(double)>& cdf,
                       double significance);

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b,
                       double significance);

// The four scalar pushforwards used to compare unitary ensembles.
struct FunctionalSamples {
  std::vector<double> re_tr, im_tr, abs_tr_sq, p11;  // p11 = |U_11|^2
};

FunctionalSamples collect_functionals(const std::function<Matrix()>& gen,
                                      long long count);

struct KsTestLine {
  std::string functional;
  double statistic = 0.0;
  double p_value = 0.0;
  bool pass = false;
};

std::vector<KsTestLine> ks_battery(const FunctionalSamples& a,
                                   const FunctionalSamples& b, double significance);

struct InvarianceReport {
  int n = 0;
  long long n_samples = 0;
  std::vector<KsTestLine> tests;
  bool all_pass = false;
};

// Left-invariance check: compares the distributions of f(U) and f(V U) for
// the four functionals, on two independent batches of n_samples draws each,
// via two-sample KS at the given significance.  The probe V must be unitary.
using UnitarySampler = std::function<Matrix(rng::SeededStream&)>;

InvarianceReport invariance_test(const UnitarySampler& sampler, int n,
                                 long long n_samples, const Matrix& probe,
                                 rng::SeededStream& stream,
                                 double significance = 1e-3);

}  // namespace sunvol::sampling
