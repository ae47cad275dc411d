#include "gwzero/pole_series.hpp"

#include <sstream>
#include <stdexcept>

namespace gwzero {

PoleSeries PoleSeries::basic(int j) {
    if (j < 0) throw std::invalid_argument("PoleSeries::basic: pole order must be >= 0");
    PoleSeries s;
    s.coeffs_[j] = JetPolynomial(Rational(1));
    return s;
}

JetPolynomial PoleSeries::coef(int j) const {
    auto it = coeffs_.find(j);
    return it == coeffs_.end() ? JetPolynomial() : it->second;
}

int PoleSeries::max_pole_order() const {
    return coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
}

int PoleSeries::min_pole_order() const {
    return coeffs_.empty() ? -1 : coeffs_.begin()->first;
}

void PoleSeries::add_term(int j, const JetPolynomial& p) {
    if (p.is_zero()) return;
    auto it = coeffs_.find(j);
    if (it == coeffs_.end()) {
        coeffs_[j] = p;
    } else {
        it->second += p;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

PoleSeries PoleSeries::operator+(const PoleSeries& o) const {
    PoleSeries out = *this;
    for (auto& [j, p] : o.coeffs_) out.add_term(j, p);
    return out;
}

PoleSeries PoleSeries::operator-(const PoleSeries& o) const {
    PoleSeries out = *this;
    for (auto& [j, p] : o.coeffs_) out.add_term(j, -p);
    return out;
}

PoleSeries PoleSeries::operator*(const PoleSeries& o) const {
    PoleSeries out;
    for (auto& [ja, pa] : coeffs_)
        for (auto& [jb, pb] : o.coeffs_)
            out.add_term(ja + jb, pa * pb);
    return out;
}

PoleSeries PoleSeries::scaled(const Rational& c) const {
    PoleSeries out;
    if (c == 0) return out;
    for (auto& [j, p] : coeffs_) out.coeffs_[j] = p * c;
    return out;
}

PoleSeries PoleSeries::scaled(const JetPolynomial& q) const {
    PoleSeries out;
    for (auto& [j, p] : coeffs_) out.add_term(j, p * q);
    return out;
}

PoleSeries PoleSeries::derive() const {
    PoleSeries out;
    const JetPolynomial v1 = JetPolynomial::var(1);
    for (auto& [j, p] : coeffs_) {
        out.add_term(j, p.derive());
        if (j > 0) out.add_term(j + 1, (p * v1) * Rational(j));
    }
    return out;
}

PoleSeries PoleSeries::derive_n(int r) const {
    if (r < 0) throw std::invalid_argument("derive_n: r must be >= 0");
    PoleSeries out = *this;
    for (int i = 0; i < r; ++i) out = out.derive();
    return out;
}

std::string PoleSeries::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [j, p] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << '[' << p.str() << "] * (lambda-V)^(-" << j << ')';
    }
    return os.str();
}

} // namespace gwzero
