#include "sunvol/algebra.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sunvol::algebra {

namespace {
constexpr Complex I{0.0, 1.0};
}

GellMannBasis::GellMannBasis(int n) : n_(n) {
  if (n < 2)
    throw std::invalid_argument("GellMannBasis: group dimension must be >= 2, got " +
                                std::to_string(n));
  gens_.reserve(count());
  infos_.reserve(count());
  for (int m = 2; m <= n; ++m) {
    for (int j = 1; j < m; ++j) {
      Matrix sym = Matrix::Zero(n, n);
      sym(j - 1, m - 1) = 1.0;
      sym(m - 1, j - 1) = 1.0;
      gens_.push_back(sym);
      infos_.push_back({GeneratorKind::PairSymmetric, j, m, 0});

      Matrix asym = Matrix::Zero(n, n);
      asym(j - 1, m - 1) = -I;
      asym(m - 1, j - 1) = I;
      gens_.push_back(asym);
      infos_.push_back({GeneratorKind::PairAntisymmetric, j, m, 0});
    }
    Matrix cart = Matrix::Zero(n, n);
    const double c = std::sqrt(2.0 / (m * (m - 1.0)));
    for (int i = 0; i < m - 1; ++i) cart(i, i) = c;
    cart(m - 1, m - 1) = -c * (m - 1);
    gens_.push_back(cart);
    infos_.push_back({GeneratorKind::Cartan, 0, 0, m});
  }
}

const Matrix& GellMannBasis::lambda(int index) const {
  if (index < 1 || index > count())
    throw std::out_of_range("GellMannBasis: index " + std::to_string(index) +
                            " outside [1, " + std::to_string(count()) + "]");
  return gens_[index - 1];
}

const GeneratorInfo& GellMannBasis::info(int index) const {
  if (index < 1 || index > count())
    throw std::out_of_range("GellMannBasis: index " + std::to_string(index) +
                            " outside [1, " + std::to_string(count()) + "]");
  return infos_[index - 1];
}

Matrix exp_generator(const GellMannBasis& basis, int index, double angle) {
  const GeneratorInfo& gi = basis.info(index);
  const int n = basis.dim();
  Matrix u = Matrix::Identity(n, n);
  switch (gi.kind) {
    case GeneratorKind::PairSymmetric: {
      // block [[cos a, i sin a], [i sin a, cos a]] on coordinates (a, b)
      const int a = gi.a - 1, b = gi.b - 1;
      u(a, a) = std::cos(angle);
      u(b, b) = std::cos(angle);
      u(a, b) = I * std::sin(angle);
      u(b, a) = I * std::sin(angle);
      break;
    }
    case GeneratorKind::PairAntisymmetric: {
      // block [[cos a, sin a], [-sin a, cos a]] on coordinates (a, b)
      const int a = gi.a - 1, b = gi.b - 1;
      u(a, a) = std::cos(angle);
      u(b, b) = std::cos(angle);
      u(a, b) = std::sin(angle);
      u(b, a) = -std::sin(angle);
      break;
    }
    case GeneratorKind::Cartan: {
      const int m = gi.level;
      const double c = std::sqrt(2.0 / (m * (m - 1.0)));
      const Complex up = std::exp(I * (c * angle));
      for (int i = 0; i < m - 1; ++i) u(i, i) = up;
      u(m - 1, m - 1) = std::exp(-I * (c * (m - 1) * angle));
      break;
    }
  }
  return u;
}

Matrix exp_hermitian(const Matrix& h, double t) {
  if (h.rows() != h.cols()) throw std::invalid_argument("exp_hermitian: matrix must be square");
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("exp_hermitian: eigendecomposition failed");
  const auto& w = es.eigenvalues();
  const Matrix& v = es.eigenvectors();
  CVector phases(h.rows());
  for (Eigen::Index i = 0; i < h.rows(); ++i) phases(i) = std::exp(I * (w(i) * t));
  return v * phases.asDiagonal() * v.adjoint();
}

double unitarity_defect(const Matrix& u) {
  Matrix d = u * u.adjoint() - Matrix::Identity(u.rows(), u.cols());
  return d.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const Matrix& a) {
  Matrix d = a - a.adjoint();
  return d.cwiseAbs().maxCoeff();
}

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace sunvol::algebra
