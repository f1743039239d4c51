#pragma once

#include <functional>
#include <vector>

namespace sunvol::quadrature {

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// n-point Gauss-Legendre rule on [-1, 1] (Golub-Welsch).
Rule gauss_legendre(int n);

// n-point rule for the weight t^beta on [0, 1], beta > -1 (Gauss-Jacobi with
// alpha = 0, mapped from [-1,1]).  Integrates f against t^beta dt:
//     sum_i w_i f(t_i)  ~=  int_0^1 t^beta f(t) dt.
Rule gauss_jacobi01(double beta, int n);

// Convenience: integrate f over [a, b] with an n-point Gauss-Legendre rule.
double integrate_gl(const std::function<double(double)>& f, double a, double b, int n = 64);

}  // namespace sunvol::quadrature
