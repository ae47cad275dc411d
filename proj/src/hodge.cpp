#include "gwzero/hodge.hpp"

#include "gwzero/loop_zero.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace gwzero {

TruncatedSeries v_series(int max_index, int prec) {
    if (max_index < 0 || prec < 1) throw std::invalid_argument("v_series: need max_index >= 0, prec >= 1");
    const int nvars = max_index + 1;
    TruncatedSeries v(nvars, prec);
    for (int n = 1; n <= prec; ++n) {
        for_each_multiset(n, n - 1, max_index, [&](const std::vector<int>& indices) {
            // (1/n) * (orderings n!/prod m_j!) * prod 1/i_a!
            std::vector<int> exps(static_cast<size_t>(nvars), 0);
            Integer den = 1;
            for (int i : indices) {
                ++exps[static_cast<size_t>(i)];
                den *= factorial_z(static_cast<unsigned long>(i));
            }
            Integer orderings = factorial_z(static_cast<unsigned long>(n));
            for (int j = 0; j <= max_index; ++j)
                orderings /= factorial_z(static_cast<unsigned long>(exps[static_cast<size_t>(j)]));
            v += TruncatedSeries::monomial(nvars, prec, exps, rat(orderings, den * n));
        });
    }
    return v;
}

TruncatedSeries v_fixed_point_oracle(int max_index, int prec) {
    if (max_index < 0 || prec < 1)
        throw std::invalid_argument("v_fixed_point_oracle: need max_index >= 0, prec >= 1");
    const int nvars = max_index + 1;
    TruncatedSeries v(nvars, prec);
    for (int iter = 0; iter <= prec + 1; ++iter) {
        TruncatedSeries next(nvars, prec);
        TruncatedSeries vpow = TruncatedSeries::constant(nvars, prec, Rational(1));
        for (int i = 0; i <= max_index; ++i) {
            if (i > 0) vpow = vpow * v;
            next += (TruncatedSeries::variable(nvars, prec, i) * vpow)
                        .scaled(rat(Integer(1), factorial_z(static_cast<unsigned long>(i))));
        }
        if (next == v) return v;
        v = next;
    }
    throw std::logic_error("v_fixed_point_oracle: no stabilization within degree bound");
}

TruncatedSeries v_k_series(int k, int max_index, int prec) {
    if (k < 0) throw std::invalid_argument("v_k_series: k must be >= 0");
    TruncatedSeries v = v_series(max_index, prec + k);
    for (int i = 0; i < k; ++i) v = v.derivative(0);
    return v;
}

TruncatedSeries substitute_jets(const JetPolynomial& p, int max_index, int prec) {
    const int nvars = max_index + 1;
    const int kmax = std::max(1, p.max_var());
    // One V with full margin, then walk down; vk[k] trusted to prec + kmax - k >= prec.
    std::vector<TruncatedSeries> vk;
    vk.reserve(static_cast<size_t>(kmax) + 1);
    vk.push_back(v_series(max_index, prec + kmax));
    for (int k = 1; k <= kmax; ++k) vk.push_back(vk.back().derivative(0));
    TruncatedSeries v1_inv = vk[1].truncated(prec).reciprocal();
    TruncatedSeries out(nvars, prec);
    for (auto& [m, c] : p.terms()) {
        TruncatedSeries term = TruncatedSeries::constant(nvars, prec, c);
        for (auto& [k, e] : m.factors()) {
            if (e < 0)
                term = term * v1_inv.pow(-e);
            else
                term = term * vk[static_cast<size_t>(k)].pow(e);
        }
        out += term;
    }
    return out;
}

std::string hodge_class_name(HodgeClass cls) {
    return cls == HodgeClass::lambda_g ? "lambda_g" : "lambda_gm1";
}

HodgeClass hodge_class_from_name(const std::string& name) {
    if (name == "lambda_g") return HodgeClass::lambda_g;
    if (name == "lambda_gm1") return HodgeClass::lambda_gm1;
    throw std::invalid_argument("unknown Hodge class '" + name + "'");
}

TruncatedSeries hodge_series(int g, HodgeClass cls, int max_index, int prec) {
    if (g < 1) throw std::invalid_argument("hodge_series: g must be >= 1");
    if (cls == HodgeClass::lambda_g)
        return v_k_series(2 * g - 2, max_index, prec).scaled(lambda_g_constant(g));
    if (g == 1) return v_k_series(1, max_index, prec).log().scaled(rat(1, 24));
    return substitute_jets(w_g(g), max_index, prec);
}

Rational extract_integral(const TruncatedSeries& series, std::vector<int> indices) {
    std::vector<int> exps(static_cast<size_t>(series.nvars()), 0);
    Integer norm = 1;
    for (int i : indices) {
        if (i < 0) throw std::invalid_argument("extract_integral: negative psi exponent");
        if (i >= series.nvars())
            throw std::out_of_range("extract_integral: index beyond series alphabet");
        ++exps[static_cast<size_t>(i)];
    }
    for (int e : exps) norm *= factorial_z(static_cast<unsigned long>(e));
    return Rational(norm) * series.coefficient(exps);
}

int dimension_sum(int g, HodgeClass cls, int n) {
    return cls == HodgeClass::lambda_g ? 2 * g - 3 + n : 2 * g - 2 + n;
}

Rational lambda_g_closed_form(int g, const std::vector<int>& indices) {
    if (g < 1) throw std::invalid_argument("lambda_g_closed_form: g must be >= 1");
    const int n = static_cast<int>(indices.size());
    int total = 0;
    for (int i : indices) total += i;
    if (total != dimension_sum(g, HodgeClass::lambda_g, n)) return Rational(0);
    std::vector<unsigned long> parts;
    parts.reserve(indices.size());
    for (int i : indices) parts.push_back(static_cast<unsigned long>(i));
    return Rational(multinomial_z(static_cast<unsigned long>(2 * g + n - 3), parts)) *
           lambda_g_constant(g);
}

Rational theorem_a_value(int g) {
    if (g < 1) throw std::invalid_argument("theorem_a_value: g must be >= 1");
    Rational harmonic(0);
    for (int k = 1; k <= 2 * g - 1; ++k) harmonic += rat(1, k);
    Rational first = lambda_g_constant(g) * harmonic;

    Rational second(0);
    for (int g1 = 1; g1 <= g - 1; ++g1) {
        int g2 = g - g1;
        auto half = [](int gi) {
            Integer two_pow;
            mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(2 * gi - 1));
            Rational b = bernoulli(static_cast<unsigned>(2 * gi));
            Rational abs_b = b < 0 ? Rational(-b) : b;
            return Rational(two_pow - 1) * abs_b / Rational(2 * gi);
        };
        second += half(g1) * half(g2);
    }
    Integer two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(2 * g - 1));
    second /= Rational(two_pow * factorial_z(static_cast<unsigned long>(2 * g - 1)));
    return first - second;
}

const Rational& HodgeTable::at(const std::vector<int>& key) const {
    std::vector<int> sorted = key;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    auto it = entries.find(sorted);
    if (it == entries.end())
        throw std::invalid_argument("HodgeTable: incomplete table, missing requested entry");
    return it->second;
}

HodgeTable build_hodge_table(int g, HodgeClass cls, int max_points, int max_psi) {
    if (max_points < 0 || max_psi < 0)
        throw std::invalid_argument("build_hodge_table: bad bounds");
    HodgeTable table{g, cls, max_points, max_psi, {}};
    TruncatedSeries series = hodge_series(g, cls, max_psi, max_points);
    for (int n = 0; n <= max_points; ++n) {
        for (int sum = 0; sum <= n * max_psi; ++sum) {
            for_each_multiset(n, sum, max_psi, [&](const std::vector<int>& indices) {
                table.entries[indices] = extract_integral(series, indices);
            });
        }
    }
    return table;
}

namespace {

std::string key_str(const std::vector<int>& key) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < key.size(); ++i) {
        if (i) os << ',';
        os << key[i];
    }
    os << ')';
    return os.str();
}

} // namespace

CheckReport check_string(const HodgeTable& table) {
    CheckReport report;
    for (auto& [key, value] : table.entries) {
        if (key.empty() || key.back() != 0) continue;  // keys sorted descending
        std::vector<int> rest(key.begin(), key.end() - 1);
        Rational rhs(0);
        for (size_t a = 0; a < rest.size(); ++a) {
            if (rest[a] == 0) continue;
            std::vector<int> lowered = rest;
            --lowered[a];
            rhs += table.at(lowered);
        }
        ++report.checks;
        if (value != rhs)
            report.violations.push_back("string at " + key_str(key) + ": " + rat_str(value) +
                                        " != " + rat_str(rhs));
    }
    return report;
}

CheckReport check_dilaton(const HodgeTable& table) {
    CheckReport report;
    for (auto& [key, value] : table.entries) {
        auto it = std::find(key.begin(), key.end(), 1);
        if (it == key.end()) continue;
        std::vector<int> rest;
        rest.reserve(key.size() - 1);
        for (auto jt = key.begin(); jt != key.end(); ++jt)
            if (jt != it) rest.push_back(*jt);
        Rational rhs = Rational(2 * table.g - 2 + static_cast<int>(rest.size())) * table.at(rest);
        ++report.checks;
        if (value != rhs)
            report.violations.push_back("dilaton at " + key_str(key) + ": " + rat_str(value) +
                                        " != " + rat_str(rhs));
    }
    return report;
}

} // namespace gwzero
