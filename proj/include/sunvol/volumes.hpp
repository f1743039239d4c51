#pragma once

#include "sunvol/exact.hpp"
#include "sunvol/kernels.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace sunvol::volumes {

// ---------------------------------------------------------------------------
// group and coset descriptions
// ---------------------------------------------------------------------------

enum class GroupKind { SU, U, U1_of_SU };

struct GroupFactor {
  GroupKind kind = GroupKind::SU;
  int param = 2;  // n for SU(n)/U(n); m for the U(1) drawn from the SU(m) Cartan
};

// numerator group / product of denominator factors
struct CosetSpec {
  GroupFactor numerator;
  std::vector<GroupFactor> denominator;

  // Validates kinds and the parameter-count feasibility bound
  // (denominator parameter total <= numerator parameter total); throws
  // std::invalid_argument naming the violated constraint.
  static CosetSpec make(GroupFactor numerator, std::vector<GroupFactor> denominator);

  int numerator_params() const;    // SU(n): n^2-1, U(n): n^2
  int denominator_params() const;  // sum over factors (U1 counts 1)
};

// thrown for text that does not parse (CLI maps it to exit code 2)
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// closed-form volumes
// ---------------------------------------------------------------------------

// 2^{(n-1)/2} pi^{(n-1)(n+2)/2} sqrt(n) prod_{k<n} 1/k!
ExactVolume vol_su(int n);  // n >= 2

// pi sqrt(2m/(m-1)) — the U(1) subgroup generated by the SU(m) Cartan
// generator, integrated over its covering range.
ExactVolume vol_u1_su(int m);  // m >= 2

// 2^{n/2} pi^{n(n+1)/2} sqrt(n+1) prod_{k<n} 1/k!; n = 1 is rejected (the
// element degenerates to the U(1) phase drawn from the SU(2) Cartan).
ExactVolume vol_u(int n);  // n >= 2

// pi^n / n!
ExactVolume vol_cpn(int n);  // n >= 1

// pi^{n(n-1)/2} prod_{k<n} 1/k!; equals prod_{k<n} vol_cpn(k) (asserted).
ExactVolume vol_flag(int n);  // n >= 2

// SU(n) / (SU(p) x SU(q)); n+1 >= p+q, p,q >= 2.  When n+1 = p+q the
// simplified pi^{(p-1)(q-1)} form applies (asserted equal to the general
// expression).
ExactVolume vol_su_over_su_su(int n, int p, int q);

// SU(n) / (U(p) x U(1)_{SU(m)}); n-1 >= p+1, p >= 2, 2 <= m <= n.
ExactVolume vol_su_over_up_u1(int n, int p, int m);

// sqrt(y(x-1)/(x(y-1))) — ratio between the volumes quotiented by the
// U(1)_{SU(x)} and U(1)_{SU(y)} variants.
ExactVolume u1_variant_ratio(int x, int y);  // x, y >= 2

// SU(n) / (U(p) x U(q)); n-1 >= p+q, p,q >= 2.
ExactVolume vol_su_over_up_uq(int n, int p, int q);

// SU(n) / (prod_i U(P_i) x prod_j U(1)_{SU(Z_j)}): numerator must be SU,
// denominator factors U(P_i) with P_i >= 2 and U(1)_{SU(Z_j)} with
// 2 <= Z_j <= n (repeats permitted), constraint sum P_i + y <= n-1.
ExactVolume vol_general_coset(const CosetSpec& spec);

// Generic oracle: vol(numerator) / prod vol(factor), each factor volume by
// its own closed form.  Every dedicated coset formula above agrees with this
// ratio; it also covers denominator shapes without a dedicated formula
// (e.g. mixed SU/U factors, Grassmannians as U(n)/(U(m) x U(n-m))).
ExactVolume vol_coset_ratio(const CosetSpec& spec);

// Grassmannian G(n,m) = U(n)/(U(m) x U(n-m)), n > m >= 1.
// m >= 2: the product formula (identical to the U-ratio).  The m = n-1
// column inherits the same U(1) subtlety as m = 1 and is intentionally left
// uncorrected.
// m = 1: the corrected value pi^{n-1}/(n-1)! = vol_cpn(n-1); the uncorrected
// value (off by sqrt((n+1)/(2n))) is returned when naive = true.
ExactVolume vol_grassmann(int n, int m, bool naive = false);

// ---------------------------------------------------------------------------
// numeric observables
// ---------------------------------------------------------------------------

struct CpnSumResult {
  double sum = 0.0;                      // sum_{k=0..limit} pi^k/k!  ->  e^pi
  std::vector<double> partial_sums;      // index j: sum_{k=0..j}
  std::vector<double> partial_products;  // index j: prod_{k=1..j} pi^k/k!
};

CpnSumResult cpn_volume_sum(int limit);  // limit >= 0

// (4^s - 1) / (4^{4s} s^4) — the two-qubit eigenvalue-box integral of
// prod L^{s-1}, in closed form.
double omega_bracket(double s);

// alpha_s * omega_bracket(s) with alpha_s per the chosen eigenvalue-density
// mode; s below 1e-6 rejected (1/s^4 pole).
double omega_two_qubit(double s, kernels::DirichletMode mode);

// ---------------------------------------------------------------------------
// volume-expression grammar (used by the CLI `volume` command)
// ---------------------------------------------------------------------------

// Grammar: EXPR := ATOM [ '/' FACTOR ( 'x' FACTOR )* ]
//          ATOM := SU(n) | U(n) | CP(n) | Flag(n) | Gr(n,m)
//          FACTOR := SU(n) | U(n) | U1[SU(m)]
// CP/Flag/Gr atoms take no denominator.
struct VolumeQuery {
  enum class Kind { Group, Coset, Cpn, Flag, Grassmann };
  Kind kind = Kind::Group;
  CosetSpec coset;  // Group/Coset kinds
  int a = 0;        // Cpn/Flag/Grassmann first parameter
  int b = 0;        // Grassmann second parameter
};

// throws ParseError on malformed text; range checks are deferred to eval.
VolumeQuery parse_volume_expr(const std::string& text);

// Dispatches to the dedicated closed form matching the denominator shape,
// falling back to vol_coset_ratio for shapes without one.
ExactVolume eval_volume(const VolumeQuery& query);

}  // namespace sunvol::volumes
