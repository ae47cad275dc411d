#include "gwzero/truncated_series.hpp"

#include <numeric>
#include <stdexcept>

namespace gwzero {

TruncatedSeries::TruncatedSeries(int nvars, int prec) : nvars_(nvars), prec_(prec) {
    if (nvars < 0 || prec < 0) throw std::invalid_argument("TruncatedSeries: bad shape");
}

int TruncatedSeries::degree(const std::vector<int>& exps) {
    return std::accumulate(exps.begin(), exps.end(), 0);
}

TruncatedSeries TruncatedSeries::constant(int nvars, int prec, const Rational& c) {
    TruncatedSeries s(nvars, prec);
    if (c != 0) s.terms_[std::vector<int>(nvars, 0)] = c;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(int nvars, int prec, const std::vector<int>& exps,
                                          const Rational& c) {
    if (static_cast<int>(exps.size()) != nvars)
        throw std::invalid_argument("TruncatedSeries::monomial: wrong exponent count");
    for (int e : exps)
        if (e < 0) throw std::invalid_argument("TruncatedSeries::monomial: negative exponent");
    TruncatedSeries s(nvars, prec);
    if (c != 0 && degree(exps) <= prec) s.terms_[exps] = c;
    return s;
}

TruncatedSeries TruncatedSeries::variable(int nvars, int prec, int var) {
    std::vector<int> exps(nvars, 0);
    exps.at(var) = 1;
    return monomial(nvars, prec, exps, Rational(1));
}

void TruncatedSeries::add_term(const std::vector<int>& exps, const Rational& c) {
    if (c == 0 || degree(exps) > prec_) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_[exps] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    if (nvars_ != o.nvars_) throw std::logic_error("TruncatedSeries: alphabet mismatch");
    TruncatedSeries out(nvars_, std::min(prec_, o.prec_));
    for (auto& [e, c] : terms_) out.add_term(e, c);
    for (auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    *this = *this + o;
    return *this;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    if (nvars_ != o.nvars_) throw std::logic_error("TruncatedSeries: alphabet mismatch");
    TruncatedSeries out(nvars_, std::min(prec_, o.prec_));
    for (auto& [e, c] : terms_) out.add_term(e, c);
    for (auto& [e, c] : o.terms_) out.add_term(e, Rational(-c));
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    if (nvars_ != o.nvars_) throw std::logic_error("TruncatedSeries: alphabet mismatch");
    TruncatedSeries out(nvars_, std::min(prec_, o.prec_));
    std::vector<int> exps(static_cast<size_t>(nvars_));
    for (auto& [ea, ca] : terms_) {
        int da = degree(ea);
        if (da > out.prec_) continue;
        for (auto& [eb, cb] : o.terms_) {
            if (da + degree(eb) > out.prec_) continue;
            for (int v = 0; v < nvars_; ++v) exps[static_cast<size_t>(v)] = ea[static_cast<size_t>(v)] + eb[static_cast<size_t>(v)];
            out.add_term(exps, Rational(ca * cb));
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& c) const {
    TruncatedSeries out(nvars_, prec_);
    if (c == 0) return out;
    for (auto& [e, coeff] : terms_) out.terms_[e] = coeff * c;
    return out;
}

TruncatedSeries TruncatedSeries::derivative(int var) const {
    if (var < 0 || var >= nvars_) throw std::invalid_argument("derivative: bad variable");
    if (prec_ == 0) throw std::domain_error("derivative: truncation margin exhausted");
    TruncatedSeries out(nvars_, prec_ - 1);
    for (auto& [e, c] : terms_) {
        int exp = e[static_cast<size_t>(var)];
        if (exp == 0) continue;
        std::vector<int> d = e;
        --d[static_cast<size_t>(var)];
        out.add_term(d, Rational(c * exp));
    }
    return out;
}

TruncatedSeries TruncatedSeries::pow(int e) const {
    if (e < 0) throw std::invalid_argument("pow: negative exponent; use reciprocal");
    TruncatedSeries out = constant(nvars_, prec_, Rational(1));
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
    Rational c0 = constant_term();
    if (c0 == 0) throw std::domain_error("reciprocal: constant term must be invertible");
    // 1/s = (1/c0) sum_k (-x)^k with x = s/c0 - 1 (no constant term)
    TruncatedSeries x = scaled(Rational(1) / c0) - constant(nvars_, prec_, Rational(1));
    TruncatedSeries acc = constant(nvars_, prec_, Rational(1));
    TruncatedSeries xp = constant(nvars_, prec_, Rational(1));
    for (int k = 1; k <= prec_; ++k) {
        xp = xp * x;
        if (xp.is_zero()) break;
        acc = acc + xp.scaled(rat(k % 2 == 0 ? 1 : -1));
    }
    return acc.scaled(Rational(1) / c0);
}

TruncatedSeries TruncatedSeries::log() const {
    if (constant_term() != 1) throw std::domain_error("log: constant term must be 1");
    TruncatedSeries x = *this - constant(nvars_, prec_, Rational(1));
    TruncatedSeries acc(nvars_, prec_);
    TruncatedSeries xp = constant(nvars_, prec_, Rational(1));
    for (int k = 1; k <= prec_; ++k) {
        xp = xp * x;
        if (xp.is_zero()) break;
        acc = acc + xp.scaled(rat(k % 2 == 0 ? -1 : 1, k));
    }
    return acc;
}

Rational TruncatedSeries::coefficient(const std::vector<int>& exps) const {
    if (static_cast<int>(exps.size()) != nvars_)
        throw std::invalid_argument("coefficient: wrong exponent count");
    if (degree(exps) > prec_)
        throw std::out_of_range("coefficient: request beyond truncation trust");
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational TruncatedSeries::constant_term() const {
    return coefficient(std::vector<int>(static_cast<size_t>(nvars_), 0));
}

TruncatedSeries TruncatedSeries::truncated(int new_prec) const {
    if (new_prec > prec_) throw std::invalid_argument("truncated: cannot raise trust");
    TruncatedSeries out(nvars_, new_prec);
    for (auto& [e, c] : terms_)
        if (degree(e) <= new_prec) out.terms_[e] = c;
    return out;
}

TruncatedSeries TruncatedSeries::remapped(int new_nvars, const std::vector<int>& image) const {
    if (static_cast<int>(image.size()) != nvars_)
        throw std::invalid_argument("remapped: image must cover every variable");
    TruncatedSeries out(new_nvars, prec_);
    for (auto& [e, c] : terms_) {
        std::vector<int> ne(static_cast<size_t>(new_nvars), 0);
        for (int v = 0; v < nvars_; ++v) {
            int target = image[static_cast<size_t>(v)];
            if (target < 0 || target >= new_nvars)
                throw std::invalid_argument("remapped: image out of range");
            ne[static_cast<size_t>(target)] += e[static_cast<size_t>(v)];
        }
        out.terms_[ne] = c;
    }
    return out;
}

} // namespace gwzero
