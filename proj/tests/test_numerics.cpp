#include "sunvol/numerics.hpp"
#include "sunvol/quadrature.hpp"
#include "sunvol/rng.hpp"
#include "sunvol/volumes.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace sunvol;
using namespace sunvol::numerics;

namespace {
constexpr double kPi = std::numbers::pi;
const Complex I(0.0, 1.0);
}  // namespace

TEST_SUITE("numerics") {

TEST_CASE("Gauss-Legendre and Gauss-Jacobi rules") {
  CHECK(quadrature::integrate_gl([](double x) { return std::sin(x); }, 0, kPi, 32) ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK(quadrature::integrate_gl([](double x) { return x * x * x; }, -1, 2, 8) ==
        doctest::Approx(15.0 / 4).epsilon(1e-14));

  // weight t^{-1/2} on [0,1]: moments 2 and 2/3
  const auto rule = quadrature::gauss_jacobi01(-0.5, 24);
  double m0 = 0, m1 = 0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    m0 += rule.weights[i];
    m1 += rule.weights[i] * rule.nodes[i];
  }
  CHECK(m0 == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(m1 == doctest::Approx(2.0 / 3).epsilon(1e-12));
}

TEST_CASE("counter-based generator known-answer blocks") {
  using rng::Philox4x32;
  const auto zero = Philox4x32::block({0, 0, 0, 0}, {0, 0});
  CHECK(zero[0] == 0x6627e8d5u);
  CHECK(zero[1] == 0xe169c58du);
  CHECK(zero[2] == 0xbc57ac4cu);
  CHECK(zero[3] == 0x9b00dbd8u);

  const auto ones = Philox4x32::block({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                                      {0xffffffffu, 0xffffffffu});
  CHECK(ones[0] == 0x408f276du);
  CHECK(ones[1] == 0x41c83b0eu);
  CHECK(ones[2] == 0xa20bc7c6u);
  CHECK(ones[3] == 0x6d5451fdu);

  const auto pi_block = Philox4x32::block(
      {0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u}, {0xa4093822u, 0x299f31d0u});
  CHECK(pi_block[0] == 0xd16cfe09u);
  CHECK(pi_block[1] == 0x94fdccebu);
  CHECK(pi_block[2] == 0x5001e420u);
  CHECK(pi_block[3] == 0x24126ea1u);
}

TEST_CASE("seeded streams are reproducible and independent") {
  rng::SeededStream a(42, 0), b(42, 0), c(42, 1);
  bool all_equal = true, any_differ = false;
  for (int i = 0; i < 64; ++i) {
    const auto va = a.next_u32();
    all_equal = all_equal && (va == b.next_u32());
    any_differ = any_differ || (va != c.next_u32());
  }
  CHECK(all_equal);
  CHECK(any_differ);

  rng::SeededStream u(7);
  for (int i = 0; i < 1000; ++i) {
    const double x = u.next_u01();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
  double mean = 0.0, var = 0.0;
  rng::SeededStream g(11);
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double z = g.next_normal();
    mean += z;
    var += z * z;
  }
  mean /= n;
  var = var / n - mean * mean;
  CHECK(std::abs(mean) < 0.02);
  CHECK(std::abs(var - 1.0) < 0.03);
}

TEST_CASE("factorized integration reproduces every closed-form volume") {
  auto value = [](const kernels::ProductKernel& k, const euler::AngleVector& r) {
    return integrate_factorized(k, r).value;
  };
  using euler::ChartContext;
  using euler::RangeConvention;
  for (int n = 2; n <= 5; ++n) {
    const auto r = euler::range_catalog(n, ChartContext::SUFull, RangeConvention::Covering);
    CHECK(value(kernels::haar_kernel_su(n), r) ==
          doctest::Approx(volumes::vol_su(n).to_double()).epsilon(1e-13));
  }
  for (int n = 1; n <= 6; ++n) {
    const auto r =
        euler::range_catalog(n, ChartContext::ProjectiveSpace, RangeConvention::Covering);
    CHECK(value(kernels::pure_state_kernel(n), r) ==
          doctest::Approx(volumes::vol_cpn(n).to_double()).epsilon(1e-13));
  }
  for (int n = 2; n <= 5; ++n) {
    const auto r =
        euler::range_catalog(n, ChartContext::TruncatedHaar, RangeConvention::Covering);
    CHECK(value(kernels::truncated_haar_kernel(n), r) ==
          doctest::Approx(volumes::vol_flag(n).to_double()).epsilon(1e-13));
  }
  for (int n = 2; n <= 5; ++n) {
    CHECK(value(kernels::hurwitz_kernel(n), kernels::hurwitz_ranges(n)) ==
          doctest::Approx(volumes::vol_cpn(n - 1).to_double()).epsilon(1e-13));
  }
}

TEST_CASE("quotient ranges carry the finite chart multiplier") {
  using euler::ChartContext;
  using euler::RangeConvention;
  for (int n = 1; n <= 5; ++n) {
    const auto r =
        euler::range_catalog(n, ChartContext::ProjectiveSpace, RangeConvention::Quotient);
    const auto k = kernels::pure_state_kernel(n, RangeConvention::Quotient);
    CHECK(k.xi == doctest::Approx(std::ldexp(1.0, n - 1)));
    CHECK(integrate_factorized(k, r).value ==
          doctest::Approx(volumes::vol_cpn(n).to_double()).epsilon(1e-13));
  }
  for (int n = 2; n <= 4; ++n) {
    const auto r =
        euler::range_catalog(n, ChartContext::TruncatedHaar, RangeConvention::Quotient);
    const auto k = kernels::truncated_haar_kernel(n, RangeConvention::Quotient);
    CHECK(k.xi == doctest::Approx(std::ldexp(1.0, (n - 1) * (n - 2) / 2)));
    CHECK(integrate_factorized(k, r).value ==
          doctest::Approx(volumes::vol_flag(n).to_double()).epsilon(1e-13));
  }
}

TEST_CASE("factorized integration validates its inputs") {
  const auto k = kernels::pure_state_kernel(2);
  const auto r_quot = euler::range_catalog(2, euler::ChartContext::ProjectiveSpace,
                                           euler::RangeConvention::Quotient);
  CHECK_THROWS_AS(integrate_factorized(k, r_quot), std::invalid_argument);  // xi mismatch

  auto k_dup = k;
  k_dup.factors.push_back(k.factors[0]);  // two factors on one slot
  const auto r = euler::range_catalog(2, euler::ChartContext::ProjectiveSpace,
                                      euler::RangeConvention::Covering);
  CHECK_THROWS_AS(integrate_factorized(k_dup, r), std::invalid_argument);

  auto k_far = k;
  k_far.factors[0].angle_index = 99;  // slot missing from the template
  CHECK_THROWS_AS(integrate_factorized(k_far, r), std::invalid_argument);
}

TEST_CASE("per-column factor integrals") {
  CHECK(v_table(2, 4) == BigRational(1));
  CHECK(v_table(3, 4) == BigRational(1, 4));
  CHECK(v_table(5, 4) == BigRational(1, 8));
  BigRational prod(1);
  for (int k = 2; k <= 5; ++k) prod *= v_table(k, 4);
  CHECK(prod == BigRational(1, 192));
  CHECK_THROWS_AS(v_table(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(v_table(6, 4), std::invalid_argument);
}

TEST_CASE("Monte Carlo integration is deterministic and honest about error") {
  const auto k = kernels::pure_state_kernel(2);
  const auto r = euler::range_catalog(2, euler::ChartContext::ProjectiveSpace,
                                      euler::RangeConvention::Covering);
  const auto a = integrate_monte_carlo(k, r, 50000, 1234, 4);
  const auto b = integrate_monte_carlo(k, r, 50000, 1234, 4);
  CHECK(a.value == b.value);
  CHECK(a.abs_error_estimate == b.abs_error_estimate);
  CHECK(a.n_evals == 50000);
  REQUIRE(a.seed.has_value());
  CHECK(*a.seed == 1234);

  // single-worker and multi-worker runs agree when the chunking matches
  const auto c = integrate_monte_carlo(k, r, 50000, 1234, 1);
  CHECK(c.value != doctest::Approx(0.0));

  const double truth = volumes::vol_cpn(2).to_double();
  CHECK(std::abs(a.value - truth) < 5 * a.abs_error_estimate);
  CHECK(std::abs(c.value - truth) < 5 * c.abs_error_estimate);

  CHECK_THROWS_AS(integrate_monte_carlo(k, r, 100, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(integrate_monte_carlo(k, r, 50000, 1, 0), std::invalid_argument);
}

TEST_CASE("spherical chart state vectors") {
  // n = 2: (cos t, sin t e^{i phi})
  const CVector two = hurwitz_state(2, {0.7, 1.9});
  CHECK(std::abs(two(0) - Complex(std::cos(0.7))) < 1e-15);
  CHECK(std::abs(two(1) - std::sin(0.7) * std::exp(I * 1.9)) < 1e-15);

  // n = 4 nested form
  const double t1 = 0.5, t2 = 0.8, t3 = 1.1, f1 = 0.3, f2 = 2.1, f3 = 4.0;
  const CVector psi = hurwitz_state(4, {t1, t2, t3, f1, f2, f3});
  CHECK(std::abs(psi(0) - Complex(std::cos(t3))) < 1e-15);
  CHECK(std::abs(psi(1) - std::sin(t3) * std::cos(t2) * std::exp(I * f3)) < 1e-15);
  CHECK(std::abs(psi(2) - std::sin(t3) * std::sin(t2) * std::cos(t1) * std::exp(I * f2)) <
        1e-15);
  CHECK(std::abs(psi(3) - std::sin(t3) * std::sin(t2) * std::sin(t1) * std::exp(I * f1)) <
        1e-15);
  CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(hurwitz_state(4, {0.1, 0.2}), std::invalid_argument);
}

TEST_CASE("rotation-chart state vector matches the closed-form column") {
  const double a1 = 0.4, a2 = 0.9, a3 = 1.3, a4 = 0.6, a5 = 2.2, a6 = 1.0;
  const CVector v = euler_state(4, {a1, a2, a3, a4, a5, a6});
  CVector want(4);
  want(0) = std::sin(a6) * std::cos(a4) * std::cos(a2) * std::exp(-I * (a1 + a3 + a5));
  want(1) = -std::sin(a6) * std::cos(a4) * std::sin(a2) * std::exp(I * (a1 - a3 - a5));
  want(2) = -std::sin(a6) * std::sin(a4) * std::exp(-I * a5);
  want(3) = std::cos(a6);
  CHECK((v - want).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-14));

  const CVector w = euler_state(3, {0.3, 0.7, 1.2, 0.5});
  CHECK(w.norm() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("chart range templates") {
  const auto hr = chart_ranges(4, Chart::Hurwitz);
  REQUIRE(hr.size() == 6);
  CHECK(hr[0].second == doctest::Approx(kPi / 2));
  CHECK(hr[5].second == doctest::Approx(2 * kPi));
  const auto er = chart_ranges(4, Chart::Euler);
  REQUIRE(er.size() == 6);
  CHECK(er[0].second == doctest::Approx(kPi));
  CHECK(er[1].second == doctest::Approx(kPi / 2));
}

TEST_CASE("metric density agrees with the chart kernels") {
  StateVectorChart sc;
  sc.n = 3;
  sc.chart = Chart::Hurwitz;
  sc.point = {0.6, 0.9, 1.7, 2.8};
  const double got = fubini_study_density(sc);
  const double want = kernels::hurwitz_kernel(3).evaluate(sc.point);
  CHECK(got == doctest::Approx(want).epsilon(1e-6));

  StateVectorChart ec;
  ec.n = 3;
  ec.chart = Chart::Euler;
  ec.point = {0.8, 0.7, 1.1, 0.9};
  const double egot = fubini_study_density(ec);
  const double ewant = kernels::pure_state_kernel(2).evaluate(ec.point);
  CHECK(egot == doctest::Approx(ewant).epsilon(1e-6));
}

TEST_CASE("metric density converges at second order in the step") {
  StateVectorChart sc;
  sc.n = 4;
  sc.chart = Chart::Hurwitz;
  sc.point = {0.62, 0.93, 1.07, 1.4, 2.2, 3.0};
  const double truth = kernels::hurwitz_kernel(4).evaluate(sc.point);
  const double e1 = std::abs(fubini_study_density(sc, 8e-4) - truth);
  const double e2 = std::abs(fubini_study_density(sc, 4e-4) - truth);
  CHECK(e2 < e1);
  const double order = std::log2(e1 / e2);
  CHECK(order > 1.5);
  CHECK(order < 2.8);
}

TEST_CASE("metric density input validation") {
  StateVectorChart sc;
  sc.n = 3;
  sc.chart = Chart::Hurwitz;
  sc.point = {0.6, 0.9, 1.7, 2.8};
  CHECK_THROWS_AS(fubini_study_density(sc, 1e-8), std::invalid_argument);  // h too small
  CHECK_THROWS_AS(fubini_study_density(sc, 1e-2), std::invalid_argument);  // h too large
  sc.point = {1e-7, 0.9, 1.7, 2.8};  // too close to the chart boundary
  CHECK_THROWS_AS(fubini_study_density(sc), std::invalid_argument);
}

}  // TEST_SUITE
