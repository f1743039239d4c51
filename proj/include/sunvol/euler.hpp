#pragma once

#include "sunvol/algebra.hpp"

#include <optional>
#include <ostream>
#include <vector>

namespace sunvol::euler {

// Offset j(m) of the level-m block inside the angle list for SU(n):
// 0 when m = n, otherwise sum_{l=0}^{n-m-1} 2(m+l).
int j_offset(int m, int n);

enum class RangeConvention { Covering, Quotient };

// Which chart a range catalog describes.
//   SUFull         - all n^2-1 angles of SU(n) (pair blocks + Cartan string)
//   ProjectiveSpace- the 2n angles of a CP^n point (first pair block of SU(n+1))
//   TruncatedHaar  - the first n(n-1) angles of SU(n), torus angles removed
//   HurwitzSphere  - spherical coordinates (theta_k, phi_k); ranges come from
//                    kernels::hurwitz_ranges, not range_catalog
enum class ChartContext { SUFull, ProjectiveSpace, TruncatedHaar, HurwitzSphere };

const char* to_string(RangeConvention c);
const char* to_string(ChartContext c);

struct AngleSlot {
  int index = 0;  // 1-based slot position
  double value = 0.0;
  double lo = 0.0;
  double hi = 0.0;
};

// Ordered Euler angles with per-slot ranges, plus the optional U(1) phase
// beta used by u_element.  xi is the finite normalization multiplier the
// quotient-range chart needs to reproduce invariant volumes (1 for covering
// ranges).
struct AngleVector {
  int n = 0;  // group dimension for SU charts; projective dimension for ProjectiveSpace
  ChartContext context = ChartContext::SUFull;
  RangeConvention convention = RangeConvention::Covering;
  double xi = 1.0;
  std::vector<AngleSlot> angles;
  std::optional<double> beta;
  std::optional<std::pair<double, double>> beta_range;

  // assigns values slot-by-slot; throws on count mismatch
  void set_values(const std::vector<double>& values);
  std::vector<double> values() const;
  // slots whose value lies outside [lo, hi]
  std::vector<int> out_of_range_slots() const;
};

// Per-slot lo/hi templates (values zeroed).
//   SUFull covering ranges: in each pair block the first lambda3 angle spans
//     [0,pi], later lambda3 angles [0,2pi], rotation angles [0,pi/2]; the
//     level-m Cartan angle spans [0, pi sqrt(2m/(m-1))].
//   ProjectiveSpace covering: alpha_1 in [0,pi], alpha_2 in [0,pi/2], then
//     odd [0,2pi] / even [0,pi/2]; quotient: odd [0,pi], even [0,pi/2],
//     xi = 2^{n-1}.
//   TruncatedHaar: the SUFull pair blocks without the Cartan string;
//     quotient xi = 2^{(n-1)(n-2)/2}.
// Quotient ranges are defined for the ProjectiveSpace and TruncatedHaar
// charts only; SUFull+Quotient throws.
AngleVector range_catalog(int n, ChartContext context, RangeConvention convention);

// Covering range of the U(1) phase beta attached to the SU(m) Cartan
// generator: [0, pi sqrt(2m/(m-1))].
std::pair<double, double> u1_beta_range(int m);

enum class FactorRole { Phase, PairRotation, Cartan };

// One factor of the ordered product that builds an SU(n) element.
struct EulerFactor {
  int slot = 0;       // 1-based angle slot consumed
  int gen_index = 0;  // 1-based generator index
  FactorRole role = FactorRole::Phase;
  int m = 0;  // block level (Cartan level for Cartan factors)
  int k = 0;  // within-block column, pair factors only
};

// The left-to-right factor order of the SU(n) product: pair blocks by
// descending level m (ascending k inside each block), then the Cartan
// string by ascending level.  Slots come out in increasing order 1..n^2-1,
// so slot i is consumed by the i-th factor.
std::vector<EulerFactor> factor_sequence(int n);

// Ordered product of one-parameter factors over factor_sequence(n).
// Requires exactly n^2-1 slots.  Out-of-range values are reported to *warn
// (when given), not rejected: the group map is periodic and both range
// conventions are legitimate charts.
Matrix su_element(const algebra::GellMannBasis& basis, const AngleVector& angles,
                  std::ostream* warn = nullptr);

// U(n) element as the (n+1)x(n+1) embedding [SU(n)] * e^{i l_{(n+1)^2-1} beta};
// the upper-left n x n block acts as the U(n) element.  basis must have
// dimension n+1 and angles must carry beta.  n >= 2: at n = 1 the element
// degenerates to the U(1) phase drawn from the SU(2) Cartan generator, so the
// construction is rejected.
Matrix u_element(const algebra::GellMannBasis& basis, const AngleVector& angles,
                 std::ostream* warn = nullptr);

}  // namespace sunvol::euler
