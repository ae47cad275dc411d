#include "gwzero/gw_curve.hpp"

#include "gwzero/loop_zero.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace gwzero {

int fe_nvars(int max_index) { return 2 * (max_index + 1); }
int fe_p_var(int i) { return i; }
int fe_q_var(int i, int max_index) { return max_index + 1 + i; }

std::string fe_monomial_str(const std::vector<int>& exps, int max_index) {
    std::ostringstream os;
    bool first = true;
    auto put = [&](char name, int index, int e) {
        if (e == 0) return;
        if (!first) os << ' ';
        first = false;
        os << name << index;
        if (e != 1) os << '^' << e;
    };
    for (int i = 0; i <= max_index; ++i) put('P', i, exps.at(static_cast<size_t>(fe_p_var(i))));
    for (int i = 0; i <= max_index; ++i)
        put('Q', i, exps.at(static_cast<size_t>(fe_q_var(i, max_index))));
    return first ? "1" : os.str();
}

namespace {

// Embed a series in T_0..T_N into the doubled alphabet as the P block.
TruncatedSeries embed_p(const TruncatedSeries& s, int max_index) {
    std::vector<int> image;
    image.reserve(static_cast<size_t>(s.nvars()));
    for (int i = 0; i < s.nvars(); ++i) image.push_back(fe_p_var(i));
    return s.remapped(fe_nvars(max_index), image);
}

} // namespace

TruncatedSeries u_series(int max_index, int prec) {
    const int nvars = fe_nvars(max_index);
    TruncatedSeries v = v_series(max_index, prec + 1);
    TruncatedSeries u(nvars, prec);
    for (int i = 0; i <= max_index; ++i) {
        TruncatedSeries dv = embed_p(v.derivative(i), max_index);
        u += dv * TruncatedSeries::variable(nvars, prec, fe_q_var(i, max_index));
    }
    return u;
}

TruncatedSeries u_m_series(int m, int max_index, int prec) {
    if (m < 0) throw std::invalid_argument("u_m_series: m must be >= 0");
    TruncatedSeries u = u_series(max_index, prec + m);
    for (int i = 0; i < m; ++i) u = u.derivative(fe_p_var(0));
    return u;
}

namespace {

// Coefficient of Q_l prod_j P_j^{m_j} in the genus-zero sum:
// (n-3)! / ( prod_j m_j! * l! * prod_j j!^{m_j} ), n the number of insertions.
TruncatedSeries genus_zero_free_energy(int max_index, int prec) {
    const int nvars = fe_nvars(max_index);
    TruncatedSeries f(nvars, prec);
    // int_X keeps exactly one [pt] insertion: monomials Q_l prod_j P_j^{m_j}.
    for (int n = 3; n <= prec; ++n) {
        for (int s = 0; s <= n - 3; ++s) {
            for_each_multiset(n - 1, s, std::min(max_index, s), [&](const std::vector<int>& pj) {
                int l = n - 3 - s;
                if (l > max_index) return;
                std::vector<int> exps(static_cast<size_t>(nvars), 0);
                Integer den = factorial_z(static_cast<unsigned long>(l));
                for (int j : pj) {
                    ++exps[static_cast<size_t>(fe_p_var(j))];
                    den *= factorial_z(static_cast<unsigned long>(j));
                }
                for (int j = 0; j <= max_index; ++j)
                    den *= factorial_z(static_cast<unsigned long>(exps[static_cast<size_t>(fe_p_var(j))]));
                Integer num = factorial_z(static_cast<unsigned long>(n - 3));
                ++exps[static_cast<size_t>(fe_q_var(l, max_index))];
                f += TruncatedSeries::monomial(nvars, prec, exps, rat(num, den));
            });
        }
    }
    return f;
}

} // namespace

FreeEnergySlice free_energy_deg0(int g, CurveTarget target, int max_index, int prec) {
    if (g < 0) throw std::invalid_argument("free_energy_deg0: g must be >= 0");
    const int nvars = fe_nvars(max_index);
    const Rational chern(target.chern_number());

    if (g == 0) return {0, target, max_index, genus_zero_free_energy(max_index, prec)};

    if (g == 1) {
        TruncatedSeries log_v1 = embed_p(v_k_series(1, max_index, prec), max_index).log();
        TruncatedSeries f = log_v1.scaled(chern / 24) - u_series(max_index, prec).scaled(rat(1, 24));
        return {1, target, max_index, f};
    }

    const Rational sign = g % 2 == 0 ? Rational(1) : Rational(-1);
    TruncatedSeries f = u_m_series(2 * g - 2, max_index, prec).scaled(sign * lambda_g_constant(g));
    TruncatedSeries wg = embed_p(substitute_jets(w_g(g), max_index, prec), max_index);
    f = f - wg.scaled(sign * chern);
    return {g, target, max_index, f};
}

Rational c_elliptic_constant(const Partition& lam) {
    const int weight = lam.weight();
    if (weight % 2 != 0) return Rational(0);
    const int g = weight / 2 + 1;
    const bool single_part = lam == Partition(std::vector<int>{2 * g - 2});
    if (!single_part) return Rational(0);
    Rational value = lambda_g_constant(g);
    if (g % 2 != 0) value = -value;
    if (g == 1) value += rat(1, 24);
    return value;
}

bool EisensteinReport::ok() const {
    for (auto& line : lines)
        if (line.from_eisenstein != line.from_corollary) return false;
    return true;
}

EisensteinReport eisenstein_constant_check() {
    auto e_const = [](int k) { return zeta_at_negative(k) / 2; };  // E_k(0) = zeta(1-k)/2
    const Rational e2 = e_const(2), e4 = e_const(4), e6 = e_const(6);

    EisensteinReport report;
    report.lines.push_back({"(0)", e2 - zeta_at_negative(2) / 2, c_elliptic_constant(Partition())});
    report.lines.push_back(
        {"(2)", e4 / 12 + e2 * e2 / 2, c_elliptic_constant(Partition({2}))});
    report.lines.push_back({"(1,1)",
                            Rational(7) * e6 / 180 + rat(2, 3) * e2 * e4 - rat(8, 3) * e2 * e2 * e2,
                            c_elliptic_constant(Partition({1, 1}))});
    return report;
}

} // namespace gwzero
