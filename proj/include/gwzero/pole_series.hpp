#pragma once

#include "gwzero/jet.hpp"

#include <map>

namespace gwzero {

// Finite expansion sum_j p_j(V) * (lambda - V)^{-j} with JetPolynomial
// coefficients. lambda is never stored; identities "in lambda" are exact
// coefficient-wise equalities on the pole orders.
class PoleSeries {
public:
    PoleSeries() = default;
    // (lambda - V)^{-j}; j = 0 is the constant 1.
    static PoleSeries basic(int j);

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, JetPolynomial>& coeffs() const { return coeffs_; }
    // Stored coefficient of (lambda - V)^{-j}; zero polynomial when absent.
    JetPolynomial coef(int j) const;
    int max_pole_order() const;
    int min_pole_order() const;  // -1 when zero

    PoleSeries operator+(const PoleSeries& o) const;
    PoleSeries operator-(const PoleSeries& o) const;
    PoleSeries operator*(const PoleSeries& o) const;
    PoleSeries scaled(const Rational& c) const;
    PoleSeries scaled(const JetPolynomial& p) const;
    bool operator==(const PoleSeries& o) const { return coeffs_ == o.coeffs_; }

    // The full derivation d: acts on coefficients through JetPolynomial::derive
    // and on poles through d(lambda-V)^{-j} = j V_1 (lambda-V)^{-j-1}.
    PoleSeries derive() const;
    PoleSeries derive_n(int r) const;

    std::string str() const;

private:
    std::map<int, JetPolynomial> coeffs_;  // pole order j >= 0 -> nonzero coefficient
    void add_term(int j, const JetPolynomial& p);
};

} // namespace gwzero
