#pragma once

#include "gwzero/rational.hpp"

#include <map>
#include <vector>

namespace gwzero {

// Multivariate power series over Rational truncated at a total degree.
// `prec` is the trust level: every monomial of total degree <= prec is
// exactly right. Arithmetic takes the minimum trust of its operands and
// drops anything beyond it; d/dT_i lowers trust by one. Requesting a
// coefficient beyond trust is an error, which is what makes truncation
// margins explicit instead of silent.
class TruncatedSeries {
public:
    using TermMap = std::map<std::vector<int>, Rational>;

    TruncatedSeries(int nvars, int prec);
    static TruncatedSeries constant(int nvars, int prec, const Rational& c);
    static TruncatedSeries monomial(int nvars, int prec, const std::vector<int>& exps,
                                    const Rational& c);
    static TruncatedSeries variable(int nvars, int prec, int var);

    int nvars() const { return nvars_; }
    int prec() const { return prec_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries scaled(const Rational& c) const;
    TruncatedSeries& operator+=(const TruncatedSeries& o);
    bool operator==(const TruncatedSeries& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    TruncatedSeries derivative(int var) const;
    TruncatedSeries pow(int e) const;  // e >= 0
    // 1/s; requires an invertible constant term.
    TruncatedSeries reciprocal() const;
    // log s; requires constant term exactly 1.
    TruncatedSeries log() const;

    Rational coefficient(const std::vector<int>& exps) const;
    Rational constant_term() const;

    // Lower the trust level (and drop terms beyond it).
    TruncatedSeries truncated(int new_prec) const;
    // Move into a larger alphabet; image[v] is the new index of variable v.
    TruncatedSeries remapped(int new_nvars, const std::vector<int>& image) const;

private:
    int nvars_;
    int prec_;
    TermMap terms_;
    void add_term(const std::vector<int>& exps, const Rational& c);
    static int degree(const std::vector<int>& exps);
};

} // namespace gwzero
