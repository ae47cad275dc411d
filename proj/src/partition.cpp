#include "gwzero/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gwzero {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 0) throw std::invalid_argument("Partition: negative part");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int i) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::map<int, int> Partition::multiplicities() const {
    std::map<int, int> m;
    for (int p : parts_) ++m[p];
    return m;
}

Integer Partition::mult_factorial() const {
    Integer f(1);
    for (auto& [part, mult] : multiplicities()) f *= factorial_z(static_cast<unsigned long>(mult));
    return f;
}

std::vector<int> Partition::plus_one() const {
    std::vector<int> shifted;
    shifted.reserve(parts_.size());
    for (int p : parts_) shifted.push_back(p + 1);
    return shifted;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& current,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(current));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        current.push_back(p);
        enumerate_rec(remaining - p, p, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int k) {
    if (k < 0) throw std::invalid_argument("enumerate_partitions: k must be >= 0");
    std::vector<Partition> out;
    std::vector<int> current;
    enumerate_rec(k, k, current, out);
    if (k == 0) out.assign(1, Partition());
    return out;
}

void for_each_multiset(int n, int sum, int max_value,
                       const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> current;
    std::function<void(int, int, int)> rec = [&](int left, int remaining, int cap) {
        if (left == 0) {
            if (remaining == 0) emit(current);
            return;
        }
        for (int v = std::min(cap, remaining); v >= 0; --v) {
            if (remaining - v > static_cast<long>(left - 1) * v) continue;
            current.push_back(v);
            rec(left - 1, remaining - v, v);
            current.pop_back();
        }
    };
    rec(n, sum, std::min(max_value, sum));
}

Rational lagrange_number(const Partition& mu) {
    Integer num = factorial_z(static_cast<unsigned long>(mu.weight() + mu.length()));
    if (mu.length() % 2 != 0) num = -num;
    Integer den = mu.mult_factorial();
    for (auto& [part, mult] : mu.multiplicities()) {
        Integer fac = factorial_z(static_cast<unsigned long>(part + 1));
        for (int t = 0; t < mult; ++t) den *= fac;
    }
    return rat(num, den);
}

} // namespace gwzero
