#include "pleth/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pleth {

Permutation Permutation::identity(int n) {
    Permutation p;
    p.img_.resize(n);
    std::iota(p.img_.begin(), p.img_.end(), 0);
    return p;
}

Permutation::Permutation(const std::vector<int>& one_line) {
    const int n = static_cast<int>(one_line.size());
    img_.assign(n, -1);
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
        int v = one_line[i];
        if (v < 1 || v > n || seen[v - 1])
            throw std::invalid_argument("Permutation: not a bijection on {1..n}");
        seen[v - 1] = true;
        img_[i] = v - 1;
    }
}

Permutation Permutation::compose(const Permutation& b) const {
    if (degree() != b.degree())
        throw std::invalid_argument("Permutation::compose: degree mismatch");
    Permutation r;
    r.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) r.img_[i] = img_[b.img_[i]];
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<int>(i);
    return r;
}

Partition Permutation::cycle_type() const {
    const int n = degree();
    std::vector<bool> seen(n, false);
    std::vector<int> lens;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = img_[j]) {
            seen[j] = true;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return Partition(lens);
}

std::vector<int> Permutation::one_line() const {
    std::vector<int> v(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) v[i] = img_[i] + 1;
    return v;
}

Permutation representative(const Partition& rho) {
    const int n = rho.size();
    std::vector<int> one_line(n);
    int base = 0;
    for (int len : rho.parts()) {
        for (int k = 0; k < len; ++k)
            one_line[base + k] = base + (k + 1) % len + 1;
        base += len;
    }
    return Permutation(one_line);
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    do {
        fn(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

}  // namespace pleth
