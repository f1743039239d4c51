#include "sunvol/sampling.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sunvol::sampling {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

std::vector<int> slot_factor_map(const kernels::ProductKernel& kernel, int total) {
  std::vector<int> map(total, -1);
  for (int i = 0; i < static_cast<int>(kernel.factors.size()); ++i) {
    const int slot = kernel.factors[i].angle_index;
    if (slot < 1 || slot > total)
      throw std::logic_error("slot_factor_map: factor slot outside the range template");
    map[slot - 1] = i;
  }
  return map;
}

}  // namespace

double sample_angle(const kernels::KernelFactor& factor, double lo, double hi,
                    rng::SeededStream& stream) {
  if (std::abs(lo) > 1e-12 || std::abs(hi - kHalfPi) > 1e-12)
    throw std::invalid_argument(
        "sample_angle: weighted factors are normalized on [0, pi/2]; got a different range");
  return factor.inverse_cdf(stream.next_u01());
}

double sample_angle(double lo, double hi, rng::SeededStream& stream) {
  return stream.uniform(lo, hi);
}

double gamma_draw(double shape, rng::SeededStream& stream) {
  if (shape <= 0.0) throw std::invalid_argument("gamma_draw: shape must be positive");
  if (shape < 1.0) {
    // Stuart boost: G(s) = G(s+1) * U^{1/s}
    const double u = 1.0 - stream.next_u01();  // (0, 1]
    return gamma_draw(shape + 1.0, stream) * std::pow(u, 1.0 / shape);
  }
  // Marsaglia-Tsang
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = stream.next_normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = 1.0 - stream.next_u01();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

// ---------------------------------------------------------------------------
// SU(n) sampler
// ---------------------------------------------------------------------------

SuSampler::SuSampler(int n, Weighting weighting)
    : n_(n),
      weighting_(weighting),
      basis_((n >= 2 && n <= 8)
                 ? n
                 : throw std::invalid_argument("SuSampler: requires n in [2, 8]")),
      template_(euler::range_catalog(n, euler::ChartContext::SUFull,
                                     euler::RangeConvention::Covering)),
      kernel_(kernels::haar_kernel_su(n)) {
  factor_by_slot_ = slot_factor_map(kernel_, static_cast<int>(template_.angles.size()));
}

Matrix SuSampler::draw(rng::SeededStream& stream) const {
  euler::AngleVector av = template_;
  for (std::size_t i = 0; i < av.angles.size(); ++i) {
    auto& slot = av.angles[i];
    const int fi = factor_by_slot_[i];
    if (fi >= 0 && weighting_ == Weighting::Haar)
      slot.value = sample_angle(kernel_.factors[fi], slot.lo, slot.hi, stream);
    else
      slot.value = stream.uniform(slot.lo, slot.hi);
  }
  return euler::su_element(basis_, av);
}

Matrix sample_su(int n, rng::SeededStream& stream) {
  return SuSampler(n).draw(stream);
}

Matrix sample_su_uniform_angles(int n, rng::SeededStream& stream) {
  return SuSampler(n, SuSampler::Weighting::UniformAngles).draw(stream);
}

// ---------------------------------------------------------------------------
// QR oracle
// ---------------------------------------------------------------------------

Matrix haar_oracle_sample_u(int n, rng::SeededStream& stream) {
  if (n < 2) throw std::invalid_argument("haar_oracle_sample: requires n >= 2");
  Matrix a(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const double re = stream.next_normal();
      const double im = stream.next_normal();
      a(r, c) = Complex(re, im);
    }
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  const auto rdiag = qr.matrixQR().diagonal();
  for (int j = 0; j < n; ++j) {
    const double mag = std::abs(rdiag(j));
    const Complex phase = mag > 0.0 ? rdiag(j) / mag : Complex(1.0, 0.0);
    q.col(j) *= phase;
  }
  return q;
}

Matrix haar_oracle_sample(int n, rng::SeededStream& stream) {
  Matrix q = haar_oracle_sample_u(n, stream);
  const double theta = std::arg(q.determinant());
  q *= std::exp(Complex(0.0, -theta / n));
  return q;
}

// ---------------------------------------------------------------------------
// pure states
// ---------------------------------------------------------------------------

PureStateSampler::PureStateSampler(int n)
    : n_(n),
      basis_((n >= 2) ? n
                      : throw std::invalid_argument("PureStateSampler: requires n >= 2")),
      template_(euler::range_catalog(n - 1, euler::ChartContext::ProjectiveSpace,
                                     euler::RangeConvention::Covering)),
      kernel_(kernels::pure_state_kernel(n - 1)) {
  factor_by_slot_ = slot_factor_map(kernel_, static_cast<int>(template_.angles.size()));
}

CVector PureStateSampler::draw(rng::SeededStream& stream) const {
  std::vector<double> point(template_.angles.size());
  for (std::size_t i = 0; i < template_.angles.size(); ++i) {
    const auto& slot = template_.angles[i];
    const int fi = factor_by_slot_[i];
    point[i] = fi >= 0 ? sample_angle(kernel_.factors[fi], slot.lo, slot.hi, stream)
                       : stream.uniform(slot.lo, slot.hi);
  }
  return numerics::euler_state(basis_, point);
}

CVector sample_pure_state(int n, rng::SeededStream& stream) {
  return PureStateSampler(n).draw(stream);
}

// ---------------------------------------------------------------------------
// mixed states
// ---------------------------------------------------------------------------

double DensityMatrixSample::hermiticity_defect() const {
  return algebra::hermiticity_defect(rho);
}

double DensityMatrixSample::trace_defect() const {
  return std::abs(rho.trace() - Complex(1.0, 0.0));
}

double DensityMatrixSample::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

DensityMatrixSample sample_density_matrix(int n, const kernels::DirichletSpec& spec,
                                          rng::SeededStream& stream,
                                          long long rejection_cap) {
  if (n < 2) throw std::invalid_argument("sample_density_matrix: requires n >= 2");
  if (spec.n != n)
    throw std::invalid_argument("sample_density_matrix: spec dimension differs from n");
  if (spec.mode != kernels::DirichletMode::NumericallyNormalized)
    throw std::invalid_argument(
        "sample_density_matrix: honest sampling requires the numerically normalized "
        "eigenvalue density (the literal closed-form normalization is refused)");
  if (rejection_cap < 1)
    throw std::invalid_argument("sample_density_matrix: rejection cap must be >= 1");

  // eigenvalues: symmetric Dirichlet(s) restricted to the conjectured box by
  // rejection.  First n-1 weights <= 1/n forces the last one >= 1/n.
  std::vector<double> lam(n);
  const double bound = 1.0 / n;
  bool accepted = false;
  for (long long attempt = 0; attempt < rejection_cap && !accepted; ++attempt) {
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      lam[i] = gamma_draw(spec.s, stream);
      total += lam[i];
    }
    accepted = true;
    for (int i = 0; i < n; ++i) {
      lam[i] /= total;
      if (i < n - 1 && lam[i] > bound) accepted = false;
    }
  }
  if (!accepted)
    throw std::runtime_error(
        "sample_density_matrix: rejection cap exceeded while drawing eigenvalues "
        "(pathological s)");

  // eigenvector frame: truncated angle block, torus angles pinned to zero
  algebra::GellMannBasis basis(n);
  const kernels::ProductKernel kernel = kernels::truncated_haar_kernel(n);
  const euler::AngleVector trunc = euler::range_catalog(
      n, euler::ChartContext::TruncatedHaar, euler::RangeConvention::Covering);
  euler::AngleVector full = euler::range_catalog(n, euler::ChartContext::SUFull,
                                                 euler::RangeConvention::Covering);
  const auto map = slot_factor_map(kernel, static_cast<int>(trunc.angles.size()));
  for (std::size_t i = 0; i < full.angles.size(); ++i) {
    if (i < trunc.angles.size()) {
      const auto& slot = trunc.angles[i];
      const int fi = map[i];
      full.angles[i].value = fi >= 0
                                 ? sample_angle(kernel.factors[fi], slot.lo, slot.hi, stream)
                                 : stream.uniform(slot.lo, slot.hi);
    } else {
      full.angles[i].value = 0.0;  // torus angle: quotiented out of the coset
    }
  }
  Matrix u = euler::su_element(basis, full);

  DensityMatrixSample out;
  out.n = n;
  out.eigenvalues = lam;
  out.unitary = u;
  Eigen::VectorXcd diag(n);
  for (int i = 0; i < n; ++i) diag(i) = Complex(lam[i], 0.0);
  out.rho = u * diag.asDiagonal() * u.adjoint();
  return out;
}

// ---------------------------------------------------------------------------
// Kolmogorov-Smirnov machinery
// ---------------------------------------------------------------------------

double ks_p_value(double d, double n_effective) {
  const double sq = std::sqrt(n_effective);
  const double lambda = (sq + 0.12 + 0.11 / sq) * d;
  const double a2 = -2.0 * lambda * lambda;
  double fac = 2.0, sum = 0.0, prev_term = 0.0;
  for (int j = 1; j <= 100; ++j) {
    const double term = fac * std::exp(a2 * double(j) * double(j));
    sum += term;
    if (std::abs(term) <= 0.001 * prev_term || std::abs(term) <= 1e-12 * std::abs(sum))
      return std::clamp(sum, 0.0, 1.0);
    fac = -fac;
    prev_term = std::abs(term);
  }
  return 1.0;  // series failed to converge: statistic is tiny, p ~ 1
}

KsResult ks_one_sample(std::vector<double> xs,
                       const std::function<double(double)>& cdf, double significance) {
  if (xs.empty()) throw std::invalid_argument("ks_one_sample: empty sample");
  std::sort(xs.begin(), xs.end());
  const double nd = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    d = std::max(d, std::max(f - double(i) / nd, double(i + 1) / nd - f));
  }
  KsResult r;
  r.statistic = d;
  r.p_value = ks_p_value(d, nd);
  r.pass = r.p_value > significance;
  return r;
}

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b,
                       double significance) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(double(i) / na - double(j) / nb));
  }
  KsResult r;
  r.statistic = d;
  r.p_value = ks_p_value(d, na * nb / (na + nb));
  r.pass = r.p_value > significance;
  return r;
}

FunctionalSamples collect_functionals(const std::function<Matrix()>& gen,
                                      long long count) {
  FunctionalSamples out;
  out.re_tr.reserve(count);
  out.im_tr.reserve(count);
  out.abs_tr_sq.reserve(count);
  out.p11.reserve(count);
  for (long long i = 0; i < count; ++i) {
    const Matrix m = gen();
    const Complex tr = m.trace();
    out.re_tr.push_back(tr.real());
    out.im_tr.push_back(tr.imag());
    out.abs_tr_sq.push_back(std::norm(tr));
    out.p11.push_back(std::norm(m(0, 0)));
  }
  return out;
}

std::vector<KsTestLine> ks_battery(const FunctionalSamples& a,
                                   const FunctionalSamples& b, double significance) {
  // A functional can vanish identically on the group — Im tr on SU(2), where
  // every element has real trace.  One construction path then produces exact
  // zeros while another leaves 1e-16 roundoff, and a two-sample test would
  // compare the two roundoff distributions instead of anything about the
  // ensembles.  When both sides are numerically zero the distributions agree
  // by construction, so the line passes with statistic 0.
  auto negligible = [](const std::vector<double>& xs) {
    for (double x : xs)
      if (std::abs(x) > 1e-9) return false;
    return true;
  };
  auto line = [&](const char* name, const std::vector<double>& xs,
                  const std::vector<double>& ys) {
    if (negligible(xs) && negligible(ys)) return KsTestLine{name, 0.0, 1.0, true};
    const KsResult r = ks_two_sample(xs, ys, significance);
    return KsTestLine{name, r.statistic, r.p_value, r.pass};
  };
  return {line("re_tr", a.re_tr, b.re_tr), line("im_tr", a.im_tr, b.im_tr),
          line("abs_tr_sq", a.abs_tr_sq, b.abs_tr_sq), line("p11", a.p11, b.p11)};
}

InvarianceReport invariance_test(const UnitarySampler& sampler, int n,
                                 long long n_samples, const Matrix& probe,
                                 rng::SeededStream& stream, double significance) {
  if (probe.rows() != n || probe.cols() != n)
    throw std::invalid_argument("invariance_test: probe dimension mismatch");
  if (algebra::unitarity_defect(probe) > 1e-10)
    throw std::invalid_argument("invariance_test: probe must be unitary");

  const FunctionalSamples plain =
      collect_functionals([&] { return sampler(stream); }, n_samples);
  const FunctionalSamples pushed =
      collect_functionals([&] { return Matrix(probe * sampler(stream)); }, n_samples);

  InvarianceReport report;
  report.n = n;
  report.n_samples = n_samples;
  report.tests = ks_battery(plain, pushed, significance);
  report.all_pass = std::all_of(report.tests.begin(), report.tests.end(),
                                [](const KsTestLine& t) { return t.pass; });
  return report;
}

}  // namespace sunvol::sampling
