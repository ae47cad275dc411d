#include "gwzero/rational.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace gwzero {

Rational rat(long num, long den) {
    if (den == 0) throw std::domain_error("rat: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational rat(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rat: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rational& r) {
    return r.get_str();
}

Rational rat_parse(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0) throw std::invalid_argument("rat_parse: bad rational '" + text + "'");
    if (r.get_den() == 0) throw std::domain_error("rat_parse: zero denominator");
    r.canonicalize();
    return r;
}

Integer factorial_z(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Integer binomial_z(unsigned long n, unsigned long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

Integer multinomial_z(unsigned long n, const std::vector<unsigned long>& ks) {
    unsigned long sum = 0;
    for (unsigned long k : ks) sum += k;
    if (sum != n) throw std::invalid_argument("multinomial_z: parts do not sum to n");
    Integer m = factorial_z(n);
    for (unsigned long k : ks) m /= factorial_z(k);
    return m;
}

Rational rat_pow(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    if (r == 0 && e < 0) throw std::domain_error("rat_pow: 0 to negative power");
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), r.get_num().get_mpz_t(), a);
    mpz_pow_ui(den.get_mpz_t(), r.get_den().get_mpz_t(), a);
    if (e < 0) std::swap(num, den);
    return rat(num, den);
}

namespace {

// Akiyama-Tanigawa produces the B_1 = +1/2 convention; we flip that single
// value to the B_1 = -1/2 convention declared in the header.
Rational bernoulli_akiyama_tanigawa(unsigned n) {
    std::vector<Rational> a(n + 1);
    for (unsigned j = 0; j <= n; ++j) a[j] = rat(1, static_cast<long>(j) + 1);
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 0; j <= n - i; ++j)
            a[j] = Rational(static_cast<long>(j) + 1) * (a[j] - a[j + 1]);
    if (n == 1) return -a[0];
    return a[0];
}

} // namespace

Rational bernoulli(unsigned n) {
    static std::mutex mu;
    static std::vector<Rational> cache;
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= n)
        cache.push_back(bernoulli_akiyama_tanigawa(static_cast<unsigned>(cache.size())));
    return cache[n];
}

Rational lambda_g_constant(int g) {
    if (g < 1) throw std::invalid_argument("lambda_g_constant: g must be >= 1");
    Integer two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(2 * g - 1));
    Rational prefactor = rat(two_pow - 1, two_pow);
    Rational b2g = bernoulli(static_cast<unsigned>(2 * g));
    Rational abs_b2g = b2g < 0 ? Rational(-b2g) : b2g;
    return prefactor * abs_b2g / Rational(factorial_z(static_cast<unsigned long>(2 * g)));
}

Rational zeta_at_negative(int k) {
    if (k <= 0 || k % 2 != 0) throw std::invalid_argument("zeta_at_negative: k must be positive even");
    return -bernoulli(static_cast<unsigned>(k)) / Rational(k);
}

} // namespace gwzero
