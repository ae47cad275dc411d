#pragma once

#include "gwzero/partition.hpp"
#include "gwzero/pole_series.hpp"

#include <vector>

namespace gwzero {

using JetMatrix = std::vector<std::vector<JetPolynomial>>;

// The rational function B_g(lambda; V):
//   b_g ((lambda-V)^{-2})_{2g-2}
// + b_g sum_{k=1}^{2g-2} C(2g-2,k) ((lambda-V)^{-1})_{k-1} ((lambda-V)^{-1})_{2g-1-k}
// - 1/2 sum_{g1+g2=g, gi>=1} b_{g1} b_{g2} ((lambda-V)^{-1})_{2g1-1} ((lambda-V)^{-1})_{2g2-1}
// where (f)_r denotes the r-th derivation.
PoleSeries b_series(int g);

// B_{g,j} = Coef((lambda-V)^{-j-1}, B_g) for j = 1..2g-1. Pole orders of B_g
// must lie in 2..2g; anything else is an internal error.
struct BCoefficients {
    int g;
    std::vector<JetPolynomial> values;  // values[j-1] = B_{g,j}
    const JetPolynomial& at(int j) const { return values.at(j - 1); }
};
BCoefficients b_coefficients(int g);

// M_{j,r} = Coef((lambda-V)^{-j-1}, d^r (lambda-V)^{-1}), j,r in 1..2g-1.
// Upper triangular with diagonal r! V_1^r.
JetMatrix m_matrix(int g);

// Closed-form inverse entry
//   c_{i,j} = 1/j! sum_{mu in P_{j-i}} C(l(mu)+j-1, i-1) L(mu) V_{mu+1} / V_1^{l(mu)+j}
JetPolynomial c_closed_entry(int i, int j);
JetMatrix m_inverse_closed(int g);

// Independent route: triangular back-substitution on m_matrix(g).
JetMatrix m_inverse_backsub(int g);

struct TriangularSystem {
    int g;
    JetMatrix m;
    JetMatrix minv;
};
// M together with its closed-form inverse.
TriangularSystem triangular_system(int g);

enum class WgFormula { theorem1, equivalent };

// W_g for g >= 2:
//   theorem1:   1/(2g-2) sum_{k=2}^{2g-1} (k-1) V_k sum_j c_{k,j} B_{g,j}
//   equivalent: 1/(2g-2) sum_{k=1}^{2g-1}  k    V_k sum_j c_{k,j} B_{g,j}
JetPolynomial w_g(int g, WgFormula formula = WgFormula::theorem1);

// sum_r (dW/dV_r) d^r (lambda-V)^{-1} - B_g; identically zero certifies that
// W solves the degree-zero loop equation. Genus one enters through the
// derivative contract dW_1/dV_1 = 1/(24 V_1).
PoleSeries loop_residual(int g, const JetPolynomial& w);
PoleSeries loop_residual_genus1();

// True when every monomial of p is V_{mu+1}/V_1^{l(mu)} for some mu in P_{2g-2}.
bool wg_structure_ok(int g, const JetPolynomial& p);

} // namespace gwzero
