#include "gwzero/loop_zero.hpp"

#include <stdexcept>

namespace gwzero {

namespace {

// d^r (lambda-V)^{-1} for r = 0..rmax.
std::vector<PoleSeries> resolvent_derivatives(int rmax) {
    std::vector<PoleSeries> d(static_cast<size_t>(rmax) + 1);
    d[0] = PoleSeries::basic(1);
    for (int r = 1; r <= rmax; ++r) d[r] = d[r - 1].derive();
    return d;
}

} // namespace

PoleSeries b_series(int g) {
    if (g < 1) throw std::invalid_argument("b_series: g must be >= 1");
    const Rational bg = lambda_g_constant(g);
    const auto d1 = resolvent_derivatives(std::max(0, 2 * g - 2));

    PoleSeries out = PoleSeries::basic(2).derive_n(2 * g - 2).scaled(bg);
    for (int k = 1; k <= 2 * g - 2; ++k) {
        Rational c = bg * Rational(binomial_z(static_cast<unsigned long>(2 * g - 2),
                                              static_cast<unsigned long>(k)));
        out = out + (d1[k - 1] * d1[2 * g - 1 - k]).scaled(c);
    }
    for (int g1 = 1; g1 <= g - 1; ++g1) {
        int g2 = g - g1;
        Rational c = lambda_g_constant(g1) * lambda_g_constant(g2) / 2;
        out = out - (d1[2 * g1 - 1] * d1[2 * g2 - 1]).scaled(c);
    }
    return out;
}

BCoefficients b_coefficients(int g) {
    PoleSeries b = b_series(g);
    if (!b.coef(0).is_zero() || !b.coef(1).is_zero() || b.max_pole_order() > 2 * g)
        throw std::logic_error("b_coefficients: pole orders of B_g escape 2..2g");
    BCoefficients out;
    out.g = g;
    out.values.reserve(static_cast<size_t>(2 * g - 1));
    for (int j = 1; j <= 2 * g - 1; ++j) out.values.push_back(b.coef(j + 1));
    return out;
}

JetMatrix m_matrix(int g) {
    if (g < 1) throw std::invalid_argument("m_matrix: g must be >= 1");
    const int n = 2 * g - 1;
    const auto d1 = resolvent_derivatives(n);
    JetMatrix m(n, std::vector<JetPolynomial>(n));
    for (int j = 1; j <= n; ++j)
        for (int r = 1; r <= n; ++r)
            m[j - 1][r - 1] = d1[r].coef(j + 1);
    return m;
}

JetPolynomial c_closed_entry(int i, int j) {
    if (i < 1 || j < 1) throw std::invalid_argument("c_closed_entry: indices must be >= 1");
    if (i > j) return JetPolynomial();
    JetPolynomial sum;
    for (const Partition& mu : enumerate_partitions(j - i)) {
        int l = mu.length();
        Rational coeff = Rational(binomial_z(static_cast<unsigned long>(l + j - 1),
                                             static_cast<unsigned long>(i - 1))) *
                         lagrange_number(mu);
        JetMonomial mono = JetMonomial::variable(1, -(l + j));
        for (int part : mu.parts()) mono = mono.times(JetMonomial::variable(part + 1));
        sum += JetPolynomial(mono, coeff);
    }
    return sum * rat(Integer(1), factorial_z(static_cast<unsigned long>(j)));
}

JetMatrix m_inverse_closed(int g) {
    const int n = 2 * g - 1;
    JetMatrix minv(n, std::vector<JetPolynomial>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            minv[i - 1][j - 1] = c_closed_entry(i, j);
    return minv;
}

JetMatrix m_inverse_backsub(int g) {
    const JetMatrix m = m_matrix(g);
    const int n = 2 * g - 1;
    JetMatrix x(n, std::vector<JetPolynomial>(n));
    for (int j = 1; j <= n; ++j) {
        // diagonal of M is r! V_1^r, so dividing by it is exact in the Laurent ring
        auto divide_by_diagonal = [&](int r, const JetPolynomial& p) {
            JetPolynomial scaled = p * rat(Integer(1), factorial_z(static_cast<unsigned long>(r)));
            return scaled * JetPolynomial::var(1, -r);
        };
        x[j - 1][j - 1] = divide_by_diagonal(j, JetPolynomial(Rational(1)));
        for (int i = j - 1; i >= 1; --i) {
            JetPolynomial s;
            for (int r = i + 1; r <= j; ++r) s += m[i - 1][r - 1] * x[r - 1][j - 1];
            x[i - 1][j - 1] = divide_by_diagonal(i, -s);
        }
    }
    return x;
}

TriangularSystem triangular_system(int g) {
    return TriangularSystem{g, m_matrix(g), m_inverse_closed(g)};
}

JetPolynomial w_g(int g, WgFormula formula) {
    if (g < 2) throw std::invalid_argument("w_g: g must be >= 2 (genus 1 is logarithmic)");
    const int n = 2 * g - 1;
    const BCoefficients b = b_coefficients(g);
    JetPolynomial sum;
    const int k_start = formula == WgFormula::theorem1 ? 2 : 1;
    for (int k = k_start; k <= n; ++k) {
        JetPolynomial inner;
        for (int j = k; j <= n; ++j) inner += c_closed_entry(k, j) * b.at(j);
        long factor = formula == WgFormula::theorem1 ? k - 1 : k;
        sum += JetPolynomial::var(k) * inner * Rational(factor);
    }
    return sum * rat(1, 2 * g - 2);
}

PoleSeries loop_residual(int g, const JetPolynomial& w) {
    if (g < 1) throw std::invalid_argument("loop_residual: g must be >= 1");
    const int n = 2 * g - 1;
    if (w.max_var() > n)
        throw std::invalid_argument("loop_residual: W has variables beyond V_{2g-1}");
    const auto d1 = resolvent_derivatives(n);
    PoleSeries out;
    for (int r = 1; r <= n; ++r) out = out + d1[r].scaled(w.partial(r));
    return out - b_series(g);
}

PoleSeries loop_residual_genus1() {
    // dW_1/dV_1 = 1/(24 V_1)
    JetPolynomial grad = JetPolynomial::var(1, -1) * rat(1, 24);
    return PoleSeries::basic(1).derive().scaled(grad) - b_series(1);
}

bool wg_structure_ok(int g, const JetPolynomial& p) {
    for (auto& [m, c] : p.terms()) {
        long l = 0, weight = 0;
        for (auto& [k, e] : m.factors()) {
            if (k == 1) continue;
            if (e < 0) return false;
            l += e;
            weight += static_cast<long>(k - 1) * e;
        }
        if (m.exponent(1) != -l) return false;
        if (weight != 2 * g - 2) return false;
    }
    return true;
}

} // namespace gwzero
