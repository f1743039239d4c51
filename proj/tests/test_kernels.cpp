#include "sunvol/kernels.hpp"
#include "sunvol/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace sunvol;
using namespace sunvol::kernels;

namespace {
constexpr double kPi = std::numbers::pi;

double quad_integral(const KernelFactor& f, double lo, double hi) {
  return quadrature::integrate_gl([&](double a) { return f.evaluate(a); }, lo, hi, 96);
}
}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("factor integrals match quadrature") {
  for (const KernelFactor f : {KernelFactor{1, FactorForm::Sin2A, 1},
                               KernelFactor{1, FactorForm::CosPowSin, 3},
                               KernelFactor{1, FactorForm::CosPowSin, 7},
                               KernelFactor{1, FactorForm::CosSinPow, 3},
                               KernelFactor{1, FactorForm::CosSinPow, 5}}) {
    CHECK(f.integral(0.2, 1.3) == doctest::Approx(quad_integral(f, 0.2, 1.3)).epsilon(1e-13));
    CHECK(f.integral(0.0, kPi / 2) ==
          doctest::Approx(quad_integral(f, 0.0, kPi / 2)).epsilon(1e-13));
    CHECK(f.antiderivative(0.9) - f.antiderivative(0.1) ==
          doctest::Approx(f.integral(0.1, 0.9)).epsilon(1e-14));
  }
}

TEST_CASE("covering-range factor integrals in closed form") {
  CHECK(KernelFactor{1, FactorForm::Sin2A, 1}.integral(0, kPi / 2) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(KernelFactor{1, FactorForm::CosPowSin, 3}.integral(0, kPi / 2) ==
        doctest::Approx(0.25).epsilon(1e-15));
  CHECK(KernelFactor{1, FactorForm::CosSinPow, 5}.integral(0, kPi / 2) ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-15));
}

TEST_CASE("inverse CDFs invert the normalized covering-range CDFs") {
  for (const KernelFactor f : {KernelFactor{1, FactorForm::Sin2A, 1},
                               KernelFactor{1, FactorForm::CosPowSin, 5},
                               KernelFactor{1, FactorForm::CosSinPow, 3}}) {
    const double norm = f.integral(0, kPi / 2);
    for (double u : {0.05, 0.3, 0.5, 0.77, 0.99}) {
      const double a = f.inverse_cdf(u);
      CHECK(f.integral(0, a) / norm == doctest::Approx(u).epsilon(1e-12));
    }
    CHECK(f.inverse_cdf(0.0) == doctest::Approx(0.0));
    CHECK(f.inverse_cdf(1.0) == doctest::Approx(kPi / 2));
  }
  // medians
  CHECK(KernelFactor{1, FactorForm::Sin2A, 1}.inverse_cdf(0.5) ==
        doctest::Approx(kPi / 4).epsilon(1e-15));
}

TEST_CASE("Haar kernel factor layout") {
  const auto k3 = haar_kernel_su(3);
  REQUIRE(k3.factors.size() == 3);
  CHECK(k3.xi == 1.0);
  CHECK(k3.factors[0].angle_index == 2);
  CHECK(k3.factors[0].form == FactorForm::Sin2A);
  CHECK(k3.factors[1].angle_index == 4);
  CHECK(k3.factors[1].form == FactorForm::CosSinPow);
  CHECK(k3.factors[1].p == 3);
  CHECK(k3.factors[2].angle_index == 6);
  CHECK(k3.factors[2].form == FactorForm::Sin2A);

  const auto k4 = haar_kernel_su(4);
  REQUIRE(k4.factors.size() == 6);
  CHECK(k4.factors[0].angle_index == 2);   // level 4, k=2
  CHECK(k4.factors[1].angle_index == 4);   // level 4, k=3: cos^3 sin
  CHECK(k4.factors[1].form == FactorForm::CosPowSin);
  CHECK(k4.factors[1].p == 3);
  CHECK(k4.factors[2].angle_index == 6);   // level 4, k=4: cos sin^5
  CHECK(k4.factors[2].form == FactorForm::CosSinPow);
  CHECK(k4.factors[2].p == 5);
  CHECK(k4.factors[3].angle_index == 8);   // level 3 block at offset 6
  CHECK(k4.factors[4].angle_index == 10);
  CHECK(k4.factors[4].p == 3);
  CHECK(k4.factors[5].angle_index == 12);  // level 2 block at offset 10
  CHECK(k4.factors[5].form == FactorForm::Sin2A);
}

TEST_CASE("pure-state kernel is the leading block of the Haar kernel") {
  const auto pk = pure_state_kernel(3);
  REQUIRE(pk.factors.size() == 3);
  CHECK(pk.factors[0].angle_index == 2);
  CHECK(pk.factors[0].form == FactorForm::Sin2A);
  CHECK(pk.factors[1].angle_index == 4);
  CHECK(pk.factors[1].form == FactorForm::CosPowSin);
  CHECK(pk.factors[1].p == 3);
  CHECK(pk.factors[2].angle_index == 6);
  CHECK(pk.factors[2].form == FactorForm::CosSinPow);
  CHECK(pk.factors[2].p == 5);
  CHECK(pk.xi == 1.0);
  CHECK(pure_state_kernel(3, euler::RangeConvention::Quotient).xi == doctest::Approx(4.0));
  CHECK(pure_state_kernel(1).factors.size() == 1);
}

TEST_CASE("truncated kernel shares the Haar factor list") {
  const auto h = haar_kernel_su(4);
  const auto t = truncated_haar_kernel(4);
  REQUIRE(t.factors.size() == h.factors.size());
  for (std::size_t i = 0; i < t.factors.size(); ++i) {
    CHECK(t.factors[i].angle_index == h.factors[i].angle_index);
    CHECK(t.factors[i].form == h.factors[i].form);
    CHECK(t.factors[i].p == h.factors[i].p);
  }
  CHECK(truncated_haar_kernel(4, euler::RangeConvention::Quotient).xi == doctest::Approx(8.0));
}

TEST_CASE("spherical-coordinate kernel and ranges") {
  const auto k = hurwitz_kernel(4);
  REQUIRE(k.factors.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(k.factors[i].angle_index == i + 1);
    CHECK(k.factors[i].form == FactorForm::CosSinPow);
    CHECK(k.factors[i].p == 2 * (i + 1) - 1);
  }
  const auto r = hurwitz_ranges(4);
  REQUIRE(r.angles.size() == 6);
  for (int i = 0; i < 3; ++i) CHECK(r.angles[i].hi == doctest::Approx(kPi / 2));
  for (int i = 3; i < 6; ++i) CHECK(r.angles[i].hi == doctest::Approx(2 * kPi));
  CHECK(r.xi == 1.0);
}

TEST_CASE("kernel evaluation is the plain factor product") {
  const auto k = haar_kernel_su(3);
  const std::vector<double> x{0.1, 0.7, 0.2, 0.9, 0.3, 0.6, 0.4, 0.5};
  const double expect = std::sin(2 * 0.7) * std::cos(0.9) * std::pow(std::sin(0.9), 3) *
                        std::sin(2 * 0.6);
  CHECK(k.evaluate(x) == doctest::Approx(expect).epsilon(1e-15));
}

TEST_CASE("eigenvalue-weight constants") {
  CHECK(alpha_literal(4, 1.0) == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(alpha_two_qubit_gamma2(1.0) == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(alpha_literal(4, 2.0) == doctest::Approx(alpha_two_qubit_gamma2(2.0)));
  // Gamma(s) != 1 separates the frozen-gamma constant from the general one
  CHECK(alpha_literal(4, 3.0) == doctest::Approx(39916800.0 / 8.0));
  CHECK(alpha_two_qubit_gamma2(3.0) == doctest::Approx(39916800.0 / 4.0));
  CHECK(alpha_literal(4, 3.0) != doctest::Approx(alpha_two_qubit_gamma2(3.0)));
}

TEST_CASE("truncated simplex-weight normalization") {
  // n = 2, s = 1: the density is flat over L1 in [0, 1/2]
  CHECK(dirichlet_truncated_integral(2, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
  // n = 2, s = 2: integral of L(1-L) over [0, 1/2] = 1/12
  CHECK(dirichlet_truncated_integral(2, 2.0) == doctest::Approx(1.0 / 12).epsilon(1e-12));
  // n = 4, s = 1: the box [0, 1/4]^3 in full
  CHECK(dirichlet_truncated_integral(4, 1.0) == doctest::Approx(1.0 / 64).epsilon(1e-12));

  const auto spec = DirichletSpec::make(2, 1.0);
  CHECK(spec.alpha_s == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(DirichletSpec::make(2, 2.0).alpha_s == doctest::Approx(12.0).epsilon(1e-12));
  CHECK(DirichletSpec::make(4, 1.0).alpha_s == doctest::Approx(64.0).epsilon(1e-12));
}

TEST_CASE("simplex-weight spec and density") {
  const auto spec = DirichletSpec::make(4, 1.0);
  REQUIRE(spec.ranges.size() == 4);
  for (int i = 0; i < 3; ++i) {
    CHECK(spec.ranges[i].first == 0.0);
    CHECK(spec.ranges[i].second == doctest::Approx(0.25));
  }
  CHECK(spec.ranges[3].first == doctest::Approx(0.25));
  CHECK(spec.ranges[3].second == doctest::Approx(1.0));

  const auto flat = DirichletSpec::make(2, 1.0);
  CHECK(dirichlet_density(flat, {0.3, 0.7}) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(dirichlet_density(flat, {0.3, 0.6}), std::domain_error);  // sum != 1
  CHECK_THROWS_AS(dirichlet_density(flat, {0.6, 0.4}), std::domain_error);  // L1 > 1/2

  CHECK_THROWS_AS(DirichletSpec::make(7, 1.0), std::invalid_argument);  // no node table
  CHECK_THROWS_AS(DirichletSpec::make(1, 1.0), std::invalid_argument);
}

TEST_CASE("mixed-state density combines the two pieces") {
  const auto spec = DirichletSpec::make(3, 1.5);
  const auto md = mixed_state_density(3, spec);
  CHECK(md.eigen_spec.n == 3);
  CHECK(md.eigen_spec.s == doctest::Approx(1.5));
  const auto t = truncated_haar_kernel(3);
  REQUIRE(md.angle_kernel.factors.size() == t.factors.size());
  for (std::size_t i = 0; i < t.factors.size(); ++i)
    CHECK(md.angle_kernel.factors[i].angle_index == t.factors[i].angle_index);
}

}  // TEST_SUITE
