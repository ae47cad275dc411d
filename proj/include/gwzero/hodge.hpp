#pragma once

#include "gwzero/jet.hpp"
#include "gwzero/truncated_series.hpp"

#include <string>
#include <vector>

namespace gwzero {

// V(T) = sum_{n>=1} 1/n sum_{i_1+...+i_n=n-1} T_{i_1}...T_{i_n} / (i_1!...i_n!)
// in the alphabet T_0..T_{max_index}, trusted through total degree `prec`.
TruncatedSeries v_series(int max_index, int prec);

// Independent oracle: iterate V <- sum_{i<=max_index} T_i V^i / i! from V = 0
// until stabilization. Must agree with v_series term by term.
TruncatedSeries v_fixed_point_oracle(int max_index, int prec);

// V_k = d^k V / dT_0^k, trusted through `prec` (computes V with margin k).
TruncatedSeries v_k_series(int k, int max_index, int prec);

// Substitute V_k -> V_k(T) into a jet polynomial (Laurent powers of V_1 go
// through series reciprocals). Result trusted through `prec`.
TruncatedSeries substitute_jets(const JetPolynomial& p, int max_index, int prec);

enum class HodgeClass { lambda_g, lambda_gm1 };
std::string hodge_class_name(HodgeClass cls);
HodgeClass hodge_class_from_name(const std::string& name);

// Generating series of psi-lambda Hodge integrals:
//   lambda_g:   b_g V_{2g-2}(T)
//   lambda_gm1: W_g(V_1(T),...,V_{2g-1}(T)) for g >= 2, (1/24) log V_1(T) for g = 1
TruncatedSeries hodge_series(int g, HodgeClass cls, int max_index, int prec);

// Hodge integral from a generating series: (prod_j m_j!) * Coef(prod T_j^{m_j})
// where m_j is the multiplicity of j in the index multiset.
Rational extract_integral(const TruncatedSeries& series, std::vector<int> indices);

// Multinomial closed form C(2g+n-3; i_1,...,i_n) b_g; zero off-dimension.
Rational lambda_g_closed_form(int g, const std::vector<int>& indices);

// Expected sum of psi exponents for a nonzero n-point integral.
int dimension_sum(int g, HodgeClass cls, int n);

// Value of the one-point integral over psi^{2g-1} with lambda_{g-1}:
//   b_g sum_{k=1}^{2g-1} 1/k
//   - 1/(2^{2g-1}(2g-1)!) sum_{g1+g2=g} (2^{2g1-1}-1)(2^{2g2-1}-1)
//       |B_{2g1}|/(2g1) |B_{2g2}|/(2g2)
Rational theorem_a_value(int g);

// Exact table of Hodge integrals, keyed by descending-sorted index multisets;
// includes every multiset with at most max_points entries, each <= max_psi.
struct HodgeTable {
    int g;
    HodgeClass cls;
    int max_points;
    int max_psi;
    std::map<std::vector<int>, Rational> entries;

    const Rational& at(const std::vector<int>& key) const;
};
HodgeTable build_hodge_table(int g, HodgeClass cls, int max_points, int max_psi);

struct CheckReport {
    int checks = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// String equation: entry(0, i_1..i_n) = sum_k entry(i_1,..,i_k - 1,..,i_n),
// terms with a negative index dropped. Probes every table key containing a 0.
CheckReport check_string(const HodgeTable& table);
// Dilaton equation: entry(1, i_1..i_n) = (2g-2+n) entry(i_1..i_n).
CheckReport check_dilaton(const HodgeTable& table);

} // namespace gwzero
