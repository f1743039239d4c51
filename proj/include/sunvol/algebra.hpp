#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace sunvol {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

namespace algebra {

// Structure tag for the closed-form exponential paths.  Every basis
// generator is either supported on a 2x2 subblock (pair kinds) or diagonal
// (Cartan); the general eigendecomposition path exists for anything else.
enum class GeneratorKind { PairSymmetric, PairAntisymmetric, Cartan };

struct GeneratorInfo {
  GeneratorKind kind;
  int a = 0;      // lower coupled coordinate (1-based), pair kinds
  int b = 0;      // upper coupled coordinate (1-based), pair kinds
  int level = 0;  // m for the level-m Cartan generator
};

// The n^2-1 generalized Gell-Mann generators of su(n), indexed 1-based.
//
// Layout: for each embedding level m = 2..n, the pair generators coupling
// j <-> m for j = 1..m-1 (symmetric then antisymmetric for each j), followed
// by the level-m Cartan generator
//     lambda_{m^2-1} = sqrt(2/(m(m-1))) * diag(1,..,1,-(m-1),0,..,0).
// This places the antisymmetric 1<->k coupler, with (1,k) entry -i and (k,1)
// entry +i, at index (k-1)^2+1, and reproduces the Pauli and standard
// Gell-Mann matrices at n = 2, 3.  All generators are Hermitian, traceless,
// and satisfy tr(l_a l_b) = 2 delta_ab.
class GellMannBasis {
 public:
  explicit GellMannBasis(int n);  // throws std::invalid_argument if n < 2

  int dim() const { return n_; }
  int count() const { return n_ * n_ - 1; }
  const Matrix& lambda(int index) const;       // 1-based
  const GeneratorInfo& info(int index) const;  // 1-based

 private:
  int n_;
  std::vector<Matrix> gens_;
  std::vector<GeneratorInfo> infos_;
};

inline GellMannBasis gell_mann_basis(int n) { return GellMannBasis(n); }

// e^{i lambda_index angle}.  Closed form for the pair and Cartan families
// (the only generators the Euler factorization uses).
Matrix exp_generator(const GellMannBasis& basis, int index, double angle);

// General fallback: e^{i H t} for Hermitian H via eigendecomposition.
Matrix exp_hermitian(const Matrix& h, double t);

// max |(U U^dag - I)_{ij}|
double unitarity_defect(const Matrix& u);

// max |(A - A^dag)_{ij}|
double hermiticity_defect(const Matrix& a);

double max_abs(const Matrix& m);

}  // namespace algebra
}  // namespace sunvol
