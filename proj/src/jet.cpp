#include "gwzero/jet.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gwzero {

void JetMonomial::check() const {
    for (auto& [k, e] : exps_) {
        if (k < 1) throw std::invalid_argument("JetMonomial: variable index must be >= 1");
        if (e == 0) throw std::logic_error("JetMonomial: stored zero exponent");
        if (k >= 2 && e < 0)
            throw std::invalid_argument("JetMonomial: negative exponent only allowed on V1");
    }
}

JetMonomial JetMonomial::variable(int k, int exponent) {
    JetMonomial m;
    if (exponent != 0) m.exps_.push_back({k, exponent});
    m.check();
    return m;
}

int JetMonomial::exponent(int k) const {
    for (auto& [var, e] : exps_)
        if (var == k) return e;
    return 0;
}

int JetMonomial::max_var() const {
    return exps_.empty() ? 0 : exps_.back().first;
}

JetMonomial JetMonomial::times(const JetMonomial& o) const {
    JetMonomial out;
    auto a = exps_.begin(), b = o.exps_.begin();
    while (a != exps_.end() || b != o.exps_.end()) {
        if (b == o.exps_.end() || (a != exps_.end() && a->first < b->first)) {
            out.exps_.push_back(*a++);
        } else if (a == exps_.end() || b->first < a->first) {
            out.exps_.push_back(*b++);
        } else {
            int e = a->second + b->second;
            if (e != 0) out.exps_.push_back({a->first, e});
            ++a;
            ++b;
        }
    }
    return out;
}

JetMonomial JetMonomial::shifted(int k, int delta) const {
    return times(variable(k, delta));
}

long JetMonomial::degree_weight_k() const {
    long d = 0;
    for (auto& [k, e] : exps_) d += static_cast<long>(k) * e;
    return d;
}

long JetMonomial::degree_weight_km1() const {
    long d = 0;
    for (auto& [k, e] : exps_) d += static_cast<long>(k - 1) * e;
    return d;
}

long JetMonomial::exponent_sum() const {
    long d = 0;
    for (auto& [k, e] : exps_) d += e;
    return d;
}

std::string JetMonomial::str() const {
    if (exps_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    // highest variable first, matching the canonical term order
    for (auto it = exps_.rbegin(); it != exps_.rend(); ++it) {
        if (!first) os << '*';
        first = false;
        os << 'V' << it->first;
        if (it->second != 1) os << '^' << it->second;
    }
    return os.str();
}

bool JetMonomialCanonicalBefore::operator()(const JetMonomial& a, const JetMonomial& b) const {
    int kmax = std::max(a.max_var(), b.max_var());
    for (int k = kmax; k >= 1; --k) {
        int ea = a.exponent(k), eb = b.exponent(k);
        if (ea != eb) return ea > eb;
    }
    return false;
}

JetPolynomial::JetPolynomial(const Rational& c) {
    if (c != 0) terms_[JetMonomial()] = c;
}

JetPolynomial::JetPolynomial(const JetMonomial& m, const Rational& c) {
    if (c != 0) terms_[m] = c;
}

JetPolynomial JetPolynomial::var(int k, int exponent) {
    return JetPolynomial(JetMonomial::variable(k, exponent), Rational(1));
}

Rational JetPolynomial::coefficient(const JetMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int JetPolynomial::max_var() const {
    int k = 0;
    for (auto& [m, c] : terms_) k = std::max(k, m.max_var());
    return k;
}

void JetPolynomial::add_term(const JetMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

JetPolynomial JetPolynomial::operator+(const JetPolynomial& o) const {
    JetPolynomial out = *this;
    for (auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

JetPolynomial& JetPolynomial::operator+=(const JetPolynomial& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

JetPolynomial JetPolynomial::operator-(const JetPolynomial& o) const {
    JetPolynomial out = *this;
    for (auto& [m, c] : o.terms_) out.add_term(m, Rational(-c));
    return out;
}

JetPolynomial JetPolynomial::operator-() const {
    JetPolynomial out;
    for (auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
}

JetPolynomial JetPolynomial::operator*(const JetPolynomial& o) const {
    JetPolynomial out;
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_)
            out.add_term(ma.times(mb), Rational(ca * cb));
    return out;
}

JetPolynomial JetPolynomial::operator*(const Rational& c) const {
    JetPolynomial out;
    if (c == 0) return out;
    for (auto& [m, coeff] : terms_) out.terms_[m] = coeff * c;
    return out;
}

JetPolynomial JetPolynomial::derive() const {
    JetPolynomial out;
    for (auto& [m, c] : terms_)
        for (auto& [k, e] : m.factors())
            out.add_term(m.shifted(k, -1).shifted(k + 1, +1), Rational(c * e));
    return out;
}

JetPolynomial JetPolynomial::partial(int k) const {
    if (k < 1) throw std::invalid_argument("partial: variable index must be >= 1");
    JetPolynomial out;
    for (auto& [m, c] : terms_) {
        int e = m.exponent(k);
        if (e != 0) out.add_term(m.shifted(k, -1), Rational(c * e));
    }
    return out;
}

JetPolynomial JetPolynomial::euler(Grading grading) const {
    JetPolynomial out;
    for (auto& [m, c] : terms_) {
        long w = grading == Grading::weight_k ? m.degree_weight_k() : m.degree_weight_km1();
        out.add_term(m, Rational(c * static_cast<long>(w)));
    }
    return out;
}

Rational JetPolynomial::evaluate(const std::map<int, Rational>& assignment) const {
    Rational total(0);
    for (auto& [m, c] : terms_) {
        Rational value = c;
        for (auto& [k, e] : m.factors()) {
            auto it = assignment.find(k);
            if (it == assignment.end())
                throw std::invalid_argument("evaluate: missing assignment for V" + std::to_string(k));
            if (it->second == 0 && e < 0)
                throw std::domain_error("evaluate: V1 -> 0 meets a negative exponent");
            value *= rat_pow(it->second, e);
        }
        total += value;
    }
    return total;
}

bool JetPolynomial::is_homogeneous(Grading grading, long degree) const {
    for (auto& [m, c] : terms_) {
        long d = grading == Grading::weight_k ? m.degree_weight_k() : m.degree_weight_km1();
        if (d != degree) return false;
    }
    return true;
}

std::string JetPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << '(' << rat_str(c) << ')';
        if (!m.is_constant()) os << '*' << m.str();
    }
    return os.str();
}

std::string JetPolynomial::json() const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (auto& [m, c] : terms_) {
        nlohmann::ordered_json exps = nlohmann::ordered_json::object();
        for (auto& [k, e] : m.factors()) exps[std::to_string(k)] = e;
        arr.push_back({{"coeff", rat_str(c)}, {"exps", std::move(exps)}});
    }
    return arr.dump();
}

JetPolynomial JetPolynomial::from_json(const std::string& text) {
    nlohmann::json arr = nlohmann::json::parse(text);
    JetPolynomial out;
    for (auto& term : arr) {
        JetMonomial m;
        for (auto& [key, value] : term.at("exps").items())
            m = m.times(JetMonomial::variable(std::stoi(key), value.get<int>()));
        out.add_term(m, rat_parse(term.at("coeff").get<std::string>()));
    }
    return out;
}

} // namespace gwzero
