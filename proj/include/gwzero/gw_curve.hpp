#pragma once

#include "gwzero/hodge.hpp"
#include "gwzero/partition.hpp"
#include "gwzero/truncated_series.hpp"

#include <string>
#include <vector>

namespace gwzero {

// Smooth projective curve of genus h, even cohomology sector {1, [pt]} with
// <1,[pt]> = 1 and [pt]^2 = 0; c_1(X) = (2-2h) [pt].
struct CurveTarget {
    int h = 0;
    int chern_number() const { return 2 - 2 * h; }  // coefficient of [pt] in c_1(X)
};

// Doubled alphabet for free energies: variables 0..N encode P_0..P_N
// (coefficients of 1) and N+1..2N+1 encode Q_0..Q_N (coefficients of [pt]).
int fe_nvars(int max_index);
int fe_p_var(int i);
int fe_q_var(int i, int max_index);
std::string fe_monomial_str(const std::vector<int>& exps, int max_index);  // "P0^2 Q2"

// U(P,Q) = sum_i Q_i dV(P)/dP_i, trusted through `prec`.
TruncatedSeries u_series(int max_index, int prec);
// U_m = d^m U / dP_0^m, trusted through `prec`.
TruncatedSeries u_m_series(int m, int max_index, int prec);

// Degree-zero free energy of the genus-h target in the even sector:
//   g = 0: sum_{n>=3} 1/(n(n-1)(n-2)) sum_{sum i = n-3} int_X t^{i_1}..t^{i_n}/prod i_a!
//   g = 1: (2-2h)/24 log V_1(P) - U/24
//   g >= 2: (-1)^g b_g U_{2g-2} - (-1)^g (2-2h) W_g(V_1(P),...,V_{2g-1}(P))
struct FreeEnergySlice {
    int g;
    CurveTarget target;
    int max_index;
    TruncatedSeries series;
};
FreeEnergySlice free_energy_deg0(int g, CurveTarget target, int max_index, int prec);

// Constant term C^X_lambda(0) of the stationary-sector series for the
// elliptic target: (-1)^g b_g + delta_{g,1}/24 when lambda = (2g-2) with
// 2g-2 = |lambda|, and 0 otherwise (odd weight gives 0 outright).
Rational c_elliptic_constant(const Partition& lam);

// Constant terms of the Eisenstein expressions for C_(0), C_(2), C_(1,1)
// evaluated from E_k(0) = zeta(1-k)/2, against c_elliptic_constant.
struct EisensteinReport {
    struct Line {
        std::string partition;
        Rational from_eisenstein;
        Rational from_corollary;
    };
    std::vector<Line> lines;
    bool ok() const;
};
EisensteinReport eisenstein_constant_check();

} // namespace gwzero
