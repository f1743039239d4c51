#include "sunvol/verify.hpp"

#include "sunvol/numerics.hpp"
#include "sunvol/quadrature.hpp"
#include "sunvol/sampling.hpp"
#include "sunvol/volumes.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace sunvol::verify {

namespace {

using volumes::vol_cpn;
using volumes::vol_flag;
using volumes::vol_su;

constexpr double kPi = std::numbers::pi;

double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

// Collects per-criterion pass/fail state and a compact diagnostic trail.
struct Check {
  bool ok = true;
  double worst = 0.0;  // worst relative error seen by require_close
  std::ostringstream log;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      log << (log.tellp() > 0 ? "; " : "") << what;
    }
  }
  void require_close(double got, double want, double tol, const std::string& what) {
    const double e = rel_err(got, want);
    worst = std::max(worst, e);
    if (!(e <= tol)) {
      ok = false;
      std::ostringstream s;
      s << what << " (got " << got << ", want " << want << ", rel err " << e << ")";
      log << (log.tellp() > 0 ? "; " : "") << s.str();
    }
  }
  std::string detail(const std::string& pass_note) const {
    return ok ? pass_note : log.str();
  }
};

std::string worst_note(const Check& c, const char* label) {
  std::ostringstream s;
  s << label << "; worst float rel err " << c.worst;
  return s.str();
}

// ---------------------------------------------------------------------------
// 1. closed-form volume table
// ---------------------------------------------------------------------------

CriterionResult criterion_volume_table() {
  Check c;

  auto symbolic = [&](const ExactVolume& got, const ExactVolume& want, double flt,
                      const std::string& what) {
    c.require(got == want, what + ": symbolic form differs (got " + got.str() +
                               ", want " + want.str() + ")");
    c.require_close(got.to_double(), flt, 1e-12, what + " float");
  };

  symbolic(vol_su(2), ExactVolume::make(2, 2), 2 * kPi * kPi, "vol su(2)");
  symbolic(vol_su(4), ExactVolume::make(BigRational(1, 3), 9, 2),
           std::sqrt(2.0) * std::pow(kPi, 9) / 3.0, "vol su(4)");

  double fact = 1.0;
  for (int n = 1; n <= 8; ++n) {
    fact *= n;
    symbolic(vol_cpn(n), ExactVolume::make(BigRational(1, factorial(n)), n),
             std::pow(kPi, n) / fact, "projective volume n=" + std::to_string(n));
  }

  for (int n = 2; n <= 6; ++n) {
    ExactVolume prod;
    for (int k = 1; k < n; ++k) prod = prod * vol_cpn(k);
    c.require(vol_flag(n) == prod,
              "flag volume n=" + std::to_string(n) + " != product of projective volumes");
  }

  symbolic(volumes::vol_su_over_su_su(4, 2, 2), ExactVolume::make(BigRational(1, 12), 5, 2),
           std::pow(kPi, 5) / (6 * std::sqrt(2.0)), "su(4)/(su(2)xsu(2))");

  symbolic(volumes::vol_su_over_up_u1(4, 2, 2), ExactVolume::make(BigRational(1, 36), 5, 6),
           std::pow(kPi, 5) / (6 * std::sqrt(6.0)), "su(4)/(u(2)xu1), m=2");
  symbolic(volumes::vol_su_over_up_u1(4, 2, 3), ExactVolume::make(BigRational(1, 18), 5, 2),
           std::pow(kPi, 5) / (9 * std::sqrt(2.0)), "su(4)/(u(2)xu1), m=3");
  symbolic(volumes::vol_su_over_up_u1(4, 2, 4), ExactVolume::make(BigRational(1, 12), 5),
           std::pow(kPi, 5) / 12.0, "su(4)/(u(2)xu1), m=4");

  symbolic(volumes::vol_su_over_up_uq(9, 4, 4),
           ExactVolume::make(BigRational(1, BigInt("58525286400000")), 24),
           std::pow(kPi, 24) / 58525286400000.0, "su(9)/(u(4)xu(4))");

  symbolic(volumes::vol_grassmann(4, 1), ExactVolume::make(BigRational(1, 6), 3),
           std::pow(kPi, 3) / 6.0, "grassmann(4,1)");
  c.require(volumes::vol_grassmann(4, 1, true) ==
                volumes::vol_grassmann(4, 1) * ExactVolume::make(1, 0, BigRational(5, 8)),
            "grassmann(4,1) naive variant is not sqrt(5/8) of the corrected value");

  // the text grammar must reach the same closed forms
  c.require(volumes::eval_volume(volumes::parse_volume_expr("SU(9)/U(4)xU(4)")) ==
                volumes::vol_su_over_up_uq(9, 4, 4),
            "parsed SU(9)/U(4)xU(4) differs from the direct form");
  c.require(volumes::eval_volume(volumes::parse_volume_expr("CP(3)")) == vol_cpn(3),
            "parsed CP(3) differs from the direct form");

  return {1, "closed-form volume table", c.ok,
          c.detail(worst_note(c, "symbolic identities and floats all match")), 0.0};
}

// ---------------------------------------------------------------------------
// 2. factorized integration reproduces the closed-form volumes
// ---------------------------------------------------------------------------

CriterionResult criterion_factorized() {
  Check c;
  using euler::ChartContext;
  using euler::RangeConvention;

  for (int n = 1; n <= 6; ++n) {
    const auto r = numerics::integrate_factorized(
        kernels::pure_state_kernel(n),
        euler::range_catalog(n, ChartContext::ProjectiveSpace, RangeConvention::Covering));
    c.require_close(r.value, vol_cpn(n).to_double(), 1e-12,
                    "projective covering n=" + std::to_string(n));
  }
  for (int n = 2; n <= 5; ++n) {
    const auto r = numerics::integrate_factorized(
        kernels::haar_kernel_su(n),
        euler::range_catalog(n, ChartContext::SUFull, RangeConvention::Covering));
    c.require_close(r.value, vol_su(n).to_double(), 1e-12,
                    "haar covering n=" + std::to_string(n));
  }
  for (int n = 2; n <= 5; ++n) {
    const auto r = numerics::integrate_factorized(
        kernels::truncated_haar_kernel(n),
        euler::range_catalog(n, ChartContext::TruncatedHaar, RangeConvention::Covering));
    c.require_close(r.value, vol_flag(n).to_double(), 1e-12,
                    "truncated covering n=" + std::to_string(n));
  }
  return {2, "factorized integration matches closed forms", c.ok,
          c.detail(worst_note(c, "projective 1..6, full group 2..5, truncated 2..5")), 0.0};
}

// ---------------------------------------------------------------------------
// 3. quotient ranges with the xi multiplier
// ---------------------------------------------------------------------------

CriterionResult criterion_quotient() {
  Check c;
  using euler::ChartContext;
  using euler::RangeConvention;

  for (int n = 1; n <= 5; ++n) {
    const auto kernel = kernels::pure_state_kernel(n, RangeConvention::Quotient);
    c.require(kernel.xi == std::ldexp(1.0, n - 1),
              "projective quotient xi != 2^(n-1) at n=" + std::to_string(n));
    const auto r = numerics::integrate_factorized(
        kernel,
        euler::range_catalog(n, ChartContext::ProjectiveSpace, RangeConvention::Quotient));
    c.require_close(r.value, vol_cpn(n).to_double(), 1e-12,
                    "projective quotient n=" + std::to_string(n));
  }
  for (int n = 2; n <= 4; ++n) {
    const auto kernel = kernels::truncated_haar_kernel(n, RangeConvention::Quotient);
    c.require(kernel.xi == std::ldexp(1.0, (n - 1) * (n - 2) / 2),
              "truncated quotient xi != 2^((n-1)(n-2)/2) at n=" + std::to_string(n));
    const auto r = numerics::integrate_factorized(
        kernel,
        euler::range_catalog(n, ChartContext::TruncatedHaar, RangeConvention::Quotient));
    c.require_close(r.value, vol_flag(n).to_double(), 1e-12,
                    "truncated quotient n=" + std::to_string(n));
  }
  return {3, "quotient-range normalization", c.ok,
          c.detail(worst_note(c, "projective 1..5 and truncated 2..4 reproduce the volumes")),
          0.0};
}

// ---------------------------------------------------------------------------
// 4. Monte Carlo consistency over 100 fixed seeds
// ---------------------------------------------------------------------------

CriterionResult criterion_monte_carlo() {
  Check c;
  using euler::ChartContext;
  using euler::RangeConvention;

  const auto pure = kernels::pure_state_kernel(3);
  const auto pure_ranges = euler::range_catalog(3, ChartContext::ProjectiveSpace,
                                                RangeConvention::Covering);
  const auto haar = kernels::haar_kernel_su(3);
  const auto haar_ranges =
      euler::range_catalog(3, ChartContext::SUFull, RangeConvention::Covering);
  const double pure_truth = vol_cpn(3).to_double();
  const double haar_truth = vol_su(3).to_double();

  int hits = 0;
  double worst_sigma = 0.0;
  for (int seed = 1; seed <= 100; ++seed) {
    const auto a = numerics::integrate_monte_carlo(pure, pure_ranges, 1000000, seed);
    const auto b = numerics::integrate_monte_carlo(haar, haar_ranges, 1000000, seed);
    const double sa = std::abs(a.value - pure_truth) / a.abs_error_estimate;
    const double sb = std::abs(b.value - haar_truth) / b.abs_error_estimate;
    worst_sigma = std::max({worst_sigma, sa, sb});
    if (sa <= 5.0 && sb <= 5.0) ++hits;
  }
  c.require(hits >= 99, "only " + std::to_string(hits) +
                            "/100 seeds landed within 5 standard errors");
  std::ostringstream note;
  note << hits << "/100 seeds within 5 standard errors (worst deviation "
       << worst_sigma << " SE)";
  return {4, "Monte Carlo consistency", c.ok, c.detail(note.str()), 0.0};
}

// ---------------------------------------------------------------------------
// 5. Fubini-Study density vs the analytic kernels
// ---------------------------------------------------------------------------

CriterionResult criterion_fubini_study() {
  Check c;
  const double h = 1e-5;
  const double margin = 0.1;
  rng::SeededStream stream(424242);

  auto hurwitz_truth = [](const std::vector<double>& p) {
    return std::cos(p[0]) * std::sin(p[0]) * std::cos(p[1]) * std::pow(std::sin(p[1]), 3) *
           std::cos(p[2]) * std::pow(std::sin(p[2]), 5);
  };
  auto euler_truth = [](const std::vector<double>& p) {
    return 2.0 * std::sin(p[1]) * std::cos(p[1]) * std::pow(std::cos(p[3]), 3) *
           std::sin(p[3]) * std::cos(p[5]) * std::pow(std::sin(p[5]), 5);
  };

  double worst = 0.0;
  for (const auto chart : {numerics::Chart::Hurwitz, numerics::Chart::Euler}) {
    const auto ranges = numerics::chart_ranges(4, chart);
    for (int trial = 0; trial < 100; ++trial) {
      numerics::StateVectorChart sc;
      sc.n = 4;
      sc.chart = chart;
      for (const auto& [lo, hi] : ranges)
        sc.point.push_back(stream.uniform(lo + margin, hi - margin));
      const double got = numerics::fubini_study_density(sc, h);
      const double want = chart == numerics::Chart::Hurwitz ? hurwitz_truth(sc.point)
                                                            : euler_truth(sc.point);
      const double e = rel_err(got, want);
      worst = std::max(worst, e);
      if (!(e < 1e-4)) {
        c.require(false, std::string("density mismatch in the ") +
                             numerics::to_string(chart) + " chart, trial " +
                             std::to_string(trial) + " (rel err " + std::to_string(e) + ")");
        break;
      }
    }
  }
  std::ostringstream note;
  note << "100 interior points per chart; worst rel err " << worst;
  return {5, "Fubini-Study density", c.ok, c.detail(note.str()), 0.0};
}

// ---------------------------------------------------------------------------
// 6. Haar sampler vs the QR oracle
// ---------------------------------------------------------------------------

CriterionResult criterion_haar_sampler() {
  Check c;
  const long long draws = 100000;
  const double alpha = 1e-3;

  for (int n = 2; n <= 4; ++n) {
    const sampling::SuSampler sampler(n);
    rng::SeededStream a(8800 + n, 1), b(8800 + n, 2);
    const auto euler_side =
        sampling::collect_functionals([&] { return sampler.draw(a); }, draws);
    const auto oracle_side = sampling::collect_functionals(
        [&] { return sampling::haar_oracle_sample(n, b); }, draws);
    for (const auto& t : sampling::ks_battery(euler_side, oracle_side, alpha))
      c.require(t.pass, "n=" + std::to_string(n) + " " + t.functional +
                            " KS failed (p=" + std::to_string(t.p_value) + ")");
  }

  {
    rng::SeededStream probe_stream(991), test_stream(992);
    const Matrix probe = sampling::haar_oracle_sample(3, probe_stream);
    const sampling::SuSampler sampler(3);
    const auto report = sampling::invariance_test(
        [&](rng::SeededStream& s) { return sampler.draw(s); }, 3, draws, probe,
        test_stream, alpha);
    c.require(report.all_pass, "left-invariance battery failed");
  }

  {
    rng::SeededStream a(993, 1), b(993, 2);
    const sampling::SuSampler control(3, sampling::SuSampler::Weighting::UniformAngles);
    const auto control_side =
        sampling::collect_functionals([&] { return control.draw(a); }, draws);
    const auto oracle_side = sampling::collect_functionals(
        [&] { return sampling::haar_oracle_sample(3, b); }, draws);
    const auto battery = sampling::ks_battery(control_side, oracle_side, alpha);
    bool any_failed = false;
    for (const auto& t : battery) any_failed = any_failed || !t.pass;
    c.require(any_failed,
              "negative control (unweighted angles) slipped past every KS test");
  }

  return {6, "Haar sampler vs QR oracle", c.ok,
          c.detail("KS battery at n=2,3,4, invariance probe, and negative control behaved"),
          0.0};
}

// ---------------------------------------------------------------------------
// 7. two-qubit mixed states
// ---------------------------------------------------------------------------

CriterionResult criterion_mixed_state() {
  Check c;

  const auto spec =
      kernels::DirichletSpec::make(4, 1.0, kernels::DirichletMode::NumericallyNormalized);
  rng::SeededStream stream(771177);
  double worst_herm = 0.0, worst_trace = 0.0, min_eig = 0.0;
  bool ranges_ok = true;
  for (int i = 0; i < 2000; ++i) {
    const auto s = sampling::sample_density_matrix(4, spec, stream);
    worst_herm = std::max(worst_herm, s.hermiticity_defect());
    worst_trace = std::max(worst_trace, s.trace_defect());
    min_eig = std::min(min_eig, s.min_eigenvalue());
    for (int k = 0; k < 3; ++k)
      ranges_ok = ranges_ok && s.eigenvalues[k] >= 0.0 && s.eigenvalues[k] <= 0.25;
    ranges_ok = ranges_ok && s.eigenvalues[3] >= 0.25 && s.eigenvalues[3] <= 1.0;
  }
  c.require(worst_herm <= 1e-12, "a sampled density matrix lost Hermiticity");
  c.require(worst_trace <= 1e-12, "a sampled density matrix lost unit trace");
  c.require(min_eig >= -1e-12, "a sampled density matrix has an eigenvalue below -1e-12");
  c.require(ranges_ok, "an eigenvalue draw escaped the box [0,1/4]^3 x [1/4,1]");

  // the simplex-weight bracket equals the product of four 1-D integrals of
  // w^{s-1} over the box; quadrature below substitutes w = t^2 so the s < 1
  // case keeps a smooth integrand
  for (const double s : {0.5, 1.0, 2.0, 3.0}) {
    auto low_piece = [&] {  // integral of w^{s-1} over [0, 1/4]
      return quadrature::integrate_gl(
          [&](double t) { return 2.0 * std::pow(t, 2.0 * s - 1.0); }, 0.0, 0.5, 64);
    };
    auto high_piece = [&] {  // integral of w^{s-1} over [1/4, 1]
      return quadrature::integrate_gl(
          [&](double w) { return std::pow(w, s - 1.0); }, 0.25, 1.0, 64);
    };
    const double lo = low_piece();
    const double numeric = lo * lo * lo * high_piece();
    c.require_close(volumes::omega_bracket(s), numeric, 1e-8,
                    "bracket vs box quadrature at s=" + std::to_string(s));
  }

  std::ostringstream note;
  note << "2000 draws: herm defect " << worst_herm << ", trace defect " << worst_trace
       << ", min eigenvalue " << min_eig << "; bracket matches quadrature at 4 s-values";
  return {7, "two-qubit mixed-state suite", c.ok, c.detail(note.str()), 0.0};
}

// ---------------------------------------------------------------------------
// 8. worked-example reproduction
// ---------------------------------------------------------------------------

CriterionResult criterion_worked_examples() {
  Check c;

  // state vector of the top pair block, reproduced from the conjugated
  // projector: rho = U diag(0,0,0,1) U^dag, first row read as a ket
  algebra::GellMannBasis basis(4);
  rng::SeededStream stream(5150);
  const auto catalog = euler::range_catalog(4, euler::ChartContext::SUFull,
                                            euler::RangeConvention::Covering);
  double worst_dev = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> a(6);
    for (int i = 0; i < 6; ++i)
      a[i] = stream.uniform(catalog.angles[i].lo + 0.05, catalog.angles[i].hi - 0.05);

    euler::AngleVector av = catalog;
    std::vector<double> all(av.angles.size(), 0.0);
    std::copy(a.begin(), a.end(), all.begin());
    av.set_values(all);
    const Matrix u = euler::su_element(basis, av);

    Matrix proj = Matrix::Zero(4, 4);
    proj(3, 3) = Complex(1.0, 0.0);
    const Matrix rho = u * proj * u.adjoint();
    CVector v(4);
    for (int j = 0; j < 4; ++j) v(j) = rho(0, j);
    v /= v.norm();

    // analytic closed form of the state in this chart
    CVector phi(4);
    phi(0) = std::sin(a[5]) * std::cos(a[3]) * std::cos(a[1]) *
             std::exp(Complex(0, -(a[0] + a[2] + a[4])));
    phi(1) = -std::sin(a[5]) * std::cos(a[3]) * std::sin(a[1]) *
             std::exp(Complex(0, a[0] - a[2] - a[4]));
    phi(2) = -std::sin(a[5]) * std::sin(a[3]) * std::exp(Complex(0, -a[4]));
    phi(3) = std::cos(a[5]);

    int big = 0;
    for (int j = 1; j < 4; ++j)
      if (std::abs(phi(j)) > std::abs(phi(big))) big = j;
    const Complex align = phi(big) / v(big);
    c.require(std::abs(std::abs(align) - 1.0) <= 1e-10,
              "projector row norm misaligned with the analytic state");
    const double dev = (v * align - phi).cwiseAbs().maxCoeff();
    worst_dev = std::max(worst_dev, dev);

    // the chart state itself must be the conjugate of the last column
    const double direct = (u.col(3).conjugate() - phi).cwiseAbs().maxCoeff();
    worst_dev = std::max(worst_dev, direct);
  }
  c.require(worst_dev <= 1e-12, "state reproduction deviates by more than 1e-12");

  const auto sum = volumes::cpn_volume_sum(60);
  c.require(std::abs(sum.sum - 23.147) <= 0.01,
            "60-term projective-volume sum missed the reference value 23.147 by over 0.01");
  c.require(std::abs(sum.sum - std::exp(kPi)) <= 1e-10,
            "60-term projective-volume sum missed e^pi by over 1e-10");

  std::ostringstream note;
  note << "20 random angle sets, worst component deviation " << worst_dev
       << "; series sum " << sum.sum;
  return {8, "worked-example reproduction", c.ok, c.detail(note.str()), 0.0};
}

}  // namespace

CriterionResult run_criterion(int id) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  switch (id) {
    case 1: r = criterion_volume_table(); break;
    case 2: r = criterion_factorized(); break;
    case 3: r = criterion_quotient(); break;
    case 4: r = criterion_monte_carlo(); break;
    case 5: r = criterion_fubini_study(); break;
    case 6: r = criterion_haar_sampler(); break;
    case 7: r = criterion_mixed_state(); break;
    case 8: r = criterion_worked_examples(); break;
    default: throw std::invalid_argument("run_criterion: id must be in 1..8");
  }
  r.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_suite(const std::string& suite) {
  std::vector<int> ids;
  if (suite == "volumes")
    ids = {1, 8};
  else if (suite == "measures")
    ids = {2, 3, 5};
  else if (suite == "sampling")
    ids = {4, 6, 7};
  else if (suite == "all")
    ids = {1, 2, 3, 4, 5, 6, 7, 8};
  else
    throw std::invalid_argument("run_suite: unknown suite \"" + suite +
                                "\" (volumes|measures|sampling|all)");
  std::vector<CriterionResult> out;
  out.reserve(ids.size());
  for (int id : ids) out.push_back(run_criterion(id));
  return out;
}

}  // namespace sunvol::verify
