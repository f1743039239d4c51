#include "sunvol/numerics.hpp"

#include "sunvol/rng.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <thread>

namespace sunvol::numerics {

const char* to_string(Method m) {
  return m == Method::Factorized ? "factorized" : "monte-carlo";
}

const char* to_string(Chart c) { return c == Chart::Hurwitz ? "hurwitz" : "euler"; }

IntegrationResult integrate_factorized(const kernels::ProductKernel& kernel,
                                       const euler::AngleVector& ranges) {
  if (kernel.xi != ranges.xi)
    throw std::invalid_argument(
        "integrate_factorized: chart normalization mismatch — kernel has xi = " +
        std::to_string(kernel.xi) + " but the range template has xi = " +
        std::to_string(ranges.xi));

  std::map<int, const kernels::KernelFactor*> by_slot;
  for (const auto& f : kernel.factors) {
    auto [it, inserted] = by_slot.emplace(f.angle_index, &f);
    if (!inserted)
      throw std::invalid_argument(
          "integrate_factorized: two factors share angle slot " +
          std::to_string(f.angle_index) + " (cannot factorize)");
  }

  double value = kernel.xi;
  for (const auto& slot : ranges.angles) {
    auto it = by_slot.find(slot.index);
    if (it == by_slot.end()) {
      value *= slot.hi - slot.lo;  // constant factor: plain length
    } else {
      value *= it->second->integral(slot.lo, slot.hi);
      by_slot.erase(it);
    }
  }
  if (!by_slot.empty())
    throw std::invalid_argument("integrate_factorized: factor angle slot " +
                                std::to_string(by_slot.begin()->first) +
                                " does not appear in the range template");
  if (ranges.beta_range)
    value *= ranges.beta_range->second - ranges.beta_range->first;

  IntegrationResult r;
  r.value = value;
  // every piece is a closed form; only rounding of the product remains
  r.abs_error_estimate =
      std::abs(value) * 2.220446049250313e-16 * double(ranges.angles.size() + 1);
  r.method = Method::Factorized;
  r.n_evals = static_cast<long long>(ranges.angles.size());
  return r;
}

BigRational v_table(int k, int n) {
  if (k < 2 || k > n + 1)
    throw std::invalid_argument("v_table: requires 2 <= k <= n+1");
  if (k == 2) return BigRational(1);
  return BigRational(1, 2 * (k - 1));
}

IntegrationResult integrate_monte_carlo(const kernels::ProductKernel& kernel,
                                        const euler::AngleVector& ranges,
                                        long long n_samples, std::uint64_t seed,
                                        int workers) {
  if (n_samples < 10000)
    throw std::invalid_argument("integrate_monte_carlo: requires n_samples >= 10^4");
  if (workers < 1) throw std::invalid_argument("integrate_monte_carlo: workers >= 1");
  if (kernel.xi != ranges.xi)
    throw std::invalid_argument(
        "integrate_monte_carlo: chart normalization mismatch between kernel and ranges");

  const int dims = static_cast<int>(ranges.angles.size());
  for (const auto& f : kernel.factors)
    if (f.angle_index < 1 || f.angle_index > dims)
      throw std::invalid_argument("integrate_monte_carlo: factor angle slot " +
                                  std::to_string(f.angle_index) +
                                  " does not appear in the range template");

  double box = 1.0;
  for (const auto& slot : ranges.angles) box *= slot.hi - slot.lo;
  if (ranges.beta_range) box *= ranges.beta_range->second - ranges.beta_range->first;

  struct ChunkSums {
    double sum = 0.0, sum_sq = 0.0;
  };
  std::vector<ChunkSums> chunks(workers);
  const long long base = n_samples / workers;
  const long long rem = n_samples % workers;

  auto run_chunk = [&](int c) {
    const long long count = base + (c < rem ? 1 : 0);
    rng::SeededStream stream(seed, static_cast<std::uint64_t>(c));
    std::vector<double> x(dims);
    double sum = 0.0, sum_sq = 0.0;
    for (long long i = 0; i < count; ++i) {
      for (int d = 0; d < dims; ++d) {
        const auto& slot = ranges.angles[d];
        x[d] = slot.lo + (slot.hi - slot.lo) * stream.next_u01();
      }
      const double g = kernel.evaluate(x);
      sum += g;
      sum_sq += g * g;
    }
    chunks[c] = {sum, sum_sq};
  };

  if (workers == 1) {
    run_chunk(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int c = 0; c < workers; ++c) pool.emplace_back(run_chunk, c);
    for (auto& t : pool) t.join();
  }

  // combine in chunk order (fixed regardless of thread scheduling)
  double sum = 0.0, sum_sq = 0.0;
  for (const auto& c : chunks) {
    sum += c.sum;
    sum_sq += c.sum_sq;
  }
  const double nd = static_cast<double>(n_samples);
  const double mean = sum / nd;
  const double var = std::max(0.0, (sum_sq - nd * mean * mean) / (nd - 1.0));

  IntegrationResult r;
  r.value = kernel.xi * box * mean;
  r.abs_error_estimate = kernel.xi * box * std::sqrt(var / nd);
  r.method = Method::MonteCarlo;
  r.n_evals = n_samples;
  r.seed = seed;
  return r;
}

// ---------------------------------------------------------------------------
// charts
// ---------------------------------------------------------------------------

namespace {

void check_point_size(int n, const std::vector<double>& point, const char* who) {
  if (n < 2) throw std::invalid_argument(std::string(who) + ": requires n >= 2");
  if (static_cast<int>(point.size()) != 2 * (n - 1))
    throw std::invalid_argument(std::string(who) + ": expected " +
                                std::to_string(2 * (n - 1)) + " coordinates, got " +
                                std::to_string(point.size()));
}

}  // namespace

CVector hurwitz_state(int n, const std::vector<double>& point) {
  check_point_size(n, point, "hurwitz_state");
  const double* theta = point.data();          // theta_1..theta_{n-1}
  const double* phi = point.data() + (n - 1);  // phi_1..phi_{n-1}
  CVector psi(n);
  psi(0) = std::cos(theta[n - 2]);
  double sines = 1.0;  // running prod of sin(theta_{n-1}) ... downward
  for (int c = 2; c <= n; ++c) {
    sines *= std::sin(theta[n - c]);
    if (c < n) {
      // component c: sin(theta_{n-1})..sin(theta_{n-c+1}) cos(theta_{n-c}) e^{i phi_{n-c+1}}
      psi(c - 1) = sines * std::cos(theta[n - c - 1]) *
                   std::exp(Complex(0.0, phi[n - c]));
    } else {
      // last component: all the sines and the innermost phase
      psi(c - 1) = sines * std::exp(Complex(0.0, phi[0]));
    }
  }
  return psi;
}

CVector euler_state(const algebra::GellMannBasis& basis,
                    const std::vector<double>& point) {
  const int n = basis.dim();
  check_point_size(n, point, "euler_state");
  euler::AngleVector av = euler::range_catalog(n, euler::ChartContext::SUFull,
                                               euler::RangeConvention::Covering);
  std::vector<double> all(av.angles.size(), 0.0);
  std::copy(point.begin(), point.end(), all.begin());
  av.set_values(all);
  Matrix u = euler::su_element(basis, av);
  return u.col(n - 1).conjugate();
}

CVector euler_state(int n, const std::vector<double>& point) {
  algebra::GellMannBasis basis(n);
  return euler_state(basis, point);
}

CVector state_vector(const StateVectorChart& chart) {
  return chart.chart == Chart::Hurwitz ? hurwitz_state(chart.n, chart.point)
                                       : euler_state(chart.n, chart.point);
}

std::vector<std::pair<double, double>> chart_ranges(int n, Chart chart) {
  std::vector<std::pair<double, double>> out;
  if (chart == Chart::Hurwitz) {
    for (const auto& slot : kernels::hurwitz_ranges(n).angles)
      out.emplace_back(slot.lo, slot.hi);
  } else {
    for (const auto& slot :
         euler::range_catalog(n - 1, euler::ChartContext::ProjectiveSpace,
                              euler::RangeConvention::Covering)
             .angles)
      out.emplace_back(slot.lo, slot.hi);
  }
  return out;
}

double fubini_study_density(const StateVectorChart& chart, double h) {
  if (!(h >= 1e-7 && h <= 1e-3))
    throw std::invalid_argument("fubini_study_density: step h must lie in [1e-7, 1e-3]");
  const int n = chart.n;
  const int dims = 2 * (n - 1);
  check_point_size(n, chart.point, "fubini_study_density");

  const auto ranges = chart_ranges(n, chart.chart);
  for (int d = 0; d < dims; ++d) {
    if (chart.point[d] < ranges[d].first + 10.0 * h ||
        chart.point[d] > ranges[d].second - 10.0 * h)
      throw std::invalid_argument(
          "fubini_study_density: coordinate " + std::to_string(d + 1) +
          " is within 10h of the chart boundary (metric degenerates there)");
  }

  algebra::GellMannBasis basis(chart.chart == Chart::Euler ? n : 2);
  auto eval = [&](const std::vector<double>& p) {
    return chart.chart == Chart::Hurwitz ? hurwitz_state(n, p) : euler_state(basis, p);
  };

  const CVector psi = eval(chart.point);
  std::vector<CVector> deriv(dims);
  std::vector<double> p = chart.point;
  for (int d = 0; d < dims; ++d) {
    const double x = p[d];
    p[d] = x + h;
    CVector plus = eval(p);
    p[d] = x - h;
    CVector minus = eval(p);
    p[d] = x;
    deriv[d] = (plus - minus) / (2.0 * h);
  }

  Eigen::MatrixXd g(dims, dims);
  std::vector<Complex> overlap(dims);
  for (int d = 0; d < dims; ++d) overlap[d] = psi.dot(deriv[d]);  // <psi|d_d psi>
  for (int a = 0; a < dims; ++a) {
    for (int b = a; b < dims; ++b) {
      const Complex f = deriv[a].dot(deriv[b]) - std::conj(overlap[a]) * overlap[b];
      g(a, b) = f.real();
      g(b, a) = f.real();
    }
  }

  const double det = g.determinant();
  if (!std::isfinite(det))
    throw std::runtime_error("fubini_study_density: non-finite metric determinant");
  if (det <= 0.0)
    throw std::runtime_error(
        "fubini_study_density: metric determinant is not positive (degenerate point)");
  return std::sqrt(det);
}

}  // namespace sunvol::numerics
