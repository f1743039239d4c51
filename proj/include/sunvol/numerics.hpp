#pragma once

#include "sunvol/exact.hpp"
#include "sunvol/kernels.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace sunvol::numerics {

enum class Method { Factorized, MonteCarlo };

const char* to_string(Method m);

struct IntegrationResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  Method method = Method::Factorized;
  long long n_evals = 0;
  std::optional<std::uint64_t> seed;
};

// Integrate a product kernel over a box of angle ranges where every factor
// touches its own angle slot:
//
//   value = xi * prod(1-D factor integrals) * prod(lengths of constant slots)
//
// using the closed-form antiderivatives of the three factor forms.  Slots of
// `ranges` not referenced by any factor contribute their plain length; a
// beta range present on `ranges` contributes its length as well (the U(n)
// phase direction).  The kernel's xi and the range template's xi must agree
// (they encode the same chart normalization from two sides).
//
// Errors: two factors sharing a slot (not factorizable), a factor slot
// missing from `ranges`, xi mismatch.
IntegrationResult integrate_factorized(const kernels::ProductKernel& kernel,
                                       const euler::AngleVector& ranges);

// Exact per-column factor integral of the pure-state product measure:
// 1 at k = 2 and 1/(2(k-1)) for 2 < k <= n+1.
BigRational v_table(int k, int n);

// Plain uniform Monte Carlo over the range box: draws every slot uniformly,
// averages the factor product, scales by xi and the box volume.  Deterministic
// for fixed (seed, n_samples, workers): the sample count is split across
// `workers` chunks, chunk c consumes its own counter-based stream (seed, c),
// and chunk results are combined in a fixed order, so any physical thread
// scheduling yields identical output.  abs_error_estimate is the sample
// standard error of the estimate.
//
// pre: n_samples >= 10^4; workers >= 1.
IntegrationResult integrate_monte_carlo(const kernels::ProductKernel& kernel,
                                        const euler::AngleVector& ranges,
                                        long long n_samples, std::uint64_t seed,
                                        int workers = 4);

// ---------------------------------------------------------------------------
// state-vector charts and the Fubini-Study density
// ---------------------------------------------------------------------------

enum class Chart { Hurwitz, Euler };

const char* to_string(Chart c);

// A point of CP^{n-1} presented in one of the two spherical-coordinate charts,
// both with 2(n-1) real coordinates:
//   Hurwitz: (theta_1..theta_{n-1}, phi_1..phi_{n-1}),
//            theta in [0, pi/2], phi in [0, 2pi]
//   Euler:   the 2(n-1) angles of the top pair block of SU(n),
//            covering ranges as in range_catalog(n-1, ProjectiveSpace)
struct StateVectorChart {
  int n = 2;
  Chart chart = Chart::Hurwitz;
  std::vector<double> point;
};

// Unit state vector of the Hurwitz chart: nested spherical coordinates with
// the first component cos(theta_{n-1}) and phases attached inward.
CVector hurwitz_state(int n, const std::vector<double>& point);

// Unit state vector of the Euler chart: the conjugate of the last column of
// the group element whose top-block angles are `point` (all other angles 0).
CVector euler_state(int n, const std::vector<double>& point);
CVector euler_state(const algebra::GellMannBasis& basis,
                    const std::vector<double>& point);

// Dispatch on chart.chart; output has unit norm to 1e-12.
CVector state_vector(const StateVectorChart& chart);

// Coordinate ranges of a chart, in coordinate order.
std::vector<std::pair<double, double>> chart_ranges(int n, Chart chart);

// sqrt(det g) of the Fubini-Study metric at chart.point, with
//   g_mu_nu = Re <d_mu Psi| (1 - |Psi><Psi|) |d_nu Psi>
// and the derivatives taken by central differences with step h.
//
// pre: h in [1e-7, 1e-3]; every coordinate at distance > 10h from its chart
// range boundary (the metric degenerates on the boundary).
// Errors: near-boundary point; non-finite or non-positive determinant.
double fubini_study_density(const StateVectorChart& chart, double h = 1e-5);

}  // namespace sunvol::numerics
