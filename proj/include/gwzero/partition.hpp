#pragma once

#include "gwzero/rational.hpp"

#include <functional>
#include <map>
#include <vector>

namespace gwzero {

// Integer partition: non-increasing sequence of positive parts.
// The empty partition () is allowed (weight 0, length 0).
class Partition {
public:
    Partition() = default;
    // Normalizes: sorts descending and drops zero parts; negative parts rejected.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    int multiplicity(int i) const;
    std::map<int, int> multiplicities() const;

    // prod_i m_i(mu)!
    Integer mult_factorial() const;
    // mu + 1 = (mu_1+1, ..., mu_l+1); () + 1 = ().
    std::vector<int> plus_one() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string str() const;

private:
    std::vector<int> parts_;
};

// All partitions of weight k in reverse-lexicographic order, e.g.
// k=4 -> (4), (3,1), (2,2), (2,1,1), (1,1,1,1). k=0 -> [()]
std::vector<Partition> enumerate_partitions(int k);

// L(mu) = (|mu|+l(mu))! (-1)^{l(mu)} / ( m(mu)! prod_j (j+1)!^{m_j(mu)} )
Rational lagrange_number(const Partition& mu);

// Every non-increasing sequence of length n over 0..max_value with the given
// sum, in descending order (index multisets, zeros allowed).
void for_each_multiset(int n, int sum, int max_value,
                       const std::function<void(const std::vector<int>&)>& emit);

} // namespace gwzero
