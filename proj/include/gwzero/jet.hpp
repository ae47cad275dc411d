#pragma once

#include "gwzero/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace gwzero {

// Monomial in the jet variables V_1, V_2, ...; V_1 is the only variable
// allowed negative exponents (all in-scope formulas divide only by V_1).
class JetMonomial {
public:
    JetMonomial() = default;
    static JetMonomial variable(int k, int exponent = 1);

    int exponent(int k) const;
    int max_var() const;  // 0 for the constant monomial
    bool is_constant() const { return exps_.empty(); }

    JetMonomial times(const JetMonomial& o) const;
    // Multiply in a single-variable power (k, delta); may cancel to zero exponent.
    JetMonomial shifted(int k, int delta) const;

    // Weighted degree: sum of w(k)*e_k with w(k) = k or k-1.
    long degree_weight_k() const;
    long degree_weight_km1() const;
    // Plain exponent sum, e.g. zero for every V_{mu+1}/V_1^{l(mu)} monomial.
    long exponent_sum() const;

    // (var, exponent) pairs sorted by ascending variable index; no zeros.
    const std::vector<std::pair<int, int>>& factors() const { return exps_; }

    bool operator==(const JetMonomial& o) const { return exps_ == o.exps_; }

    std::string str() const;  // e.g. "V3*V1^-1"; "1" for the constant monomial

private:
    std::vector<std::pair<int, int>> exps_;
    void check() const;
};

// Canonical term order: descending lexicographic on exponent vectors read
// from the highest variable index down. Used for maps and serialization.
struct JetMonomialCanonicalBefore {
    bool operator()(const JetMonomial& a, const JetMonomial& b) const;
};

// Exact sparse polynomial over Rational in V_1, V_2, ... (Laurent in V_1).
class JetPolynomial {
public:
    using TermMap = std::map<JetMonomial, Rational, JetMonomialCanonicalBefore>;

    JetPolynomial() = default;
    explicit JetPolynomial(const Rational& c);
    JetPolynomial(const JetMonomial& m, const Rational& c);
    static JetPolynomial var(int k, int exponent = 1);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Rational coefficient(const JetMonomial& m) const;
    int max_var() const;

    JetPolynomial operator+(const JetPolynomial& o) const;
    JetPolynomial operator-(const JetPolynomial& o) const;
    JetPolynomial operator*(const JetPolynomial& o) const;
    JetPolynomial operator-() const;
    JetPolynomial operator*(const Rational& c) const;
    JetPolynomial& operator+=(const JetPolynomial& o);
    bool operator==(const JetPolynomial& o) const { return terms_ == o.terms_; }

    // The derivation d = sum_k V_{k+1} d/dV_k restricted to k >= 1.
    JetPolynomial derive() const;
    // Formal partial derivative in V_k.
    JetPolynomial partial(int k) const;
    // Euler-type operator sum_k w(k) V_k dp/dV_k for w(k) = k or k-1.
    enum class Grading { weight_k, weight_km1 };
    JetPolynomial euler(Grading grading) const;

    // Exact evaluation; every occurring variable must be assigned, and
    // V_1 -> 0 against a negative exponent is a domain error.
    Rational evaluate(const std::map<int, Rational>& assignment) const;

    // True when every monomial is homogeneous of the given weighted degree.
    bool is_homogeneous(Grading grading, long degree) const;

    std::string str() const;  // "(1/480)*V3*V1^-1 + (-11/5760)*V2^2*V1^-2"
    std::string json() const; // [{"coeff":"1/480","exps":{"1":-1,"3":1}},...]
    static JetPolynomial from_json(const std::string& text);

private:
    TermMap terms_;
    void add_term(const JetMonomial& m, const Rational& c);
};

} // namespace gwzero
