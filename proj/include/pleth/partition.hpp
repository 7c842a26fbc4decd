#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pleth/numbers.hpp"

namespace pleth {

// Weakly decreasing sequence of positive integers. The empty partition
// (of 0) is valid. Value type with structural equality.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    // Number of parts equal to i.
    int multiplicity(int i) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

    // "[3,1,1]"; the empty partition prints as "[]".
    std::string to_string() const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const;
};

// Descending lexicographic order on the parts lists; the index order used
// in every table and serialized output.
struct DescLexLess {
    bool operator()(const Partition& a, const Partition& b) const {
        return a.parts() > b.parts();
    }
};

// All partitions of n, each exactly once, in descending lexicographic order.
std::vector<Partition> partitions_of(int n);

// z_rho = prod_i i^{m_i} m_i!, the centralizer order of cycle type rho.
Int z(const Partition& rho);

// (-1)^{n - l(rho)}, the sign character at cycle type rho.
int eps(const Partition& rho);

int count_odd_part_partitions(int n);

}  // namespace pleth
