#pragma once

#include <functional>
#include <vector>

#include "pleth/partition.hpp"

namespace pleth {

// Permutation of {1..n}. One-line notation is 1-indexed in all I/O;
// internally images are stored 0-indexed.
class Permutation {
public:
    static Permutation identity(int n);
    // one_line[i] is the image of i+1, values in 1..n.
    explicit Permutation(const std::vector<int>& one_line);

    int degree() const { return static_cast<int>(img_.size()); }
    // 0-indexed application.
    int operator()(int i) const { return img_[i]; }

    // (a.compose(b))(x) = a(b(x)).
    Permutation compose(const Permutation& b) const;
    Permutation inverse() const;

    Partition cycle_type() const;
    std::vector<int> one_line() const;  // 1-indexed

    bool operator==(const Permutation& o) const { return img_ == o.img_; }

private:
    Permutation() = default;
    std::vector<int> img_;
};

// Canonical permutation of cycle type rho: consecutive cycles, smallest
// elements first, largest cycle first.
Permutation representative(const Partition& rho);

// Visits all of S_n in lexicographic order of one-line notation.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);

}  // namespace pleth
