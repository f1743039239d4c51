#include "sunvol/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace sunvol::quadrature {

namespace {

// Golub-Welsch: nodes are eigenvalues of the Jacobi tridiagonal matrix built
// from the three-term recurrence; weights are mu0 * (first eigenvector row)^2.
Rule golub_welsch(const std::vector<double>& diag, const std::vector<double>& offdiag,
                  double mu0) {
  const int n = static_cast<int>(diag.size());
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    j(i, i) = diag[i];
    if (i + 1 < n) {
      j(i, i + 1) = offdiag[i];
      j(i + 1, i) = offdiag[i];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("golub_welsch: eigendecomposition failed");
  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    r.nodes[i] = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    r.weights[i] = mu0 * v0 * v0;
  }
  return r;
}

}  // namespace

Rule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  std::vector<double> diag(n, 0.0), off(n > 1 ? n - 1 : 0);
  for (int k = 1; k < n; ++k) off[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
  return golub_welsch(diag, off, 2.0);
}

Rule gauss_jacobi01(double beta, int n) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi01: need at least one node");
  if (beta <= -1.0) throw std::invalid_argument("gauss_jacobi01: beta must exceed -1");
  // recurrence for Jacobi weight (1-x)^a (1+x)^b on [-1,1] with a = 0, b = beta
  const double a = 0.0, b = beta;
  std::vector<double> diag(n), off(n > 1 ? n - 1 : 0);
  const double apb = a + b;
  for (int k = 0; k < n; ++k) {
    const double den = (2.0 * k + apb) * (2.0 * k + apb + 2.0);
    diag[k] = (den == 0.0) ? 0.0 : (b * b - a * a) / den;
    // first diagonal term needs the k=0 special case (b-a)/(a+b+2)
    if (k == 0) diag[k] = (b - a) / (apb + 2.0);
  }
  for (int k = 1; k < n; ++k) {
    double num = 4.0 * k * (k + a) * (k + b) * (k + apb);
    double den = (2.0 * k + apb) * (2.0 * k + apb) * (2.0 * k + apb + 1.0) * (2.0 * k + apb - 1.0);
    off[k - 1] = std::sqrt(num / den);
  }
  // mu0 = int_{-1}^{1} (1+x)^b dx = 2^{b+1}/(b+1)
  const double mu0 = std::pow(2.0, b + 1.0) / (b + 1.0);
  Rule r = golub_welsch(diag, off, mu0);
  // map x in [-1,1] -> t = (1+x)/2 in [0,1]; weight (1+x)^b dx = 2^{b+1} t^b dt
  for (int i = 0; i < n; ++i) {
    r.nodes[i] = 0.5 * (1.0 + r.nodes[i]);
    r.weights[i] *= std::pow(2.0, -(b + 1.0));
  }
  return r;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b, int n) {
  Rule r = gauss_legendre(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * f(mid + half * r.nodes[i]);
  return s * half;
}

}  // namespace sunvol::quadrature
