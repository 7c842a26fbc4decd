#include "pleth/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pleth {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] < 1)
            throw std::invalid_argument("Partition: parts must be positive");
        if (k + 1 < parts_.size() && parts_[k] < parts_[k + 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        size_ += parts_[k];
    }
}

int Partition::multiplicity(int i) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(parts_[k]);
    }
    s += ']';
    return s;
}

std::size_t PartitionHash::operator()(const Partition& p) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (int v : p.parts())
        h = h * 1099511628211ull ^ static_cast<std::size_t>(v);
    return h;
}

namespace {

void gen(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen(n - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen(n, n, cur, out);
    return out;
}

Int z(const Partition& rho) {
    Int r = 1;
    int prev = -1, run = 0;
    auto flush = [&](int val, int count) {
        for (int k = 0; k < count; ++k) r *= val;
        r *= factorial(count);
    };
    for (int p : rho.parts()) {
        if (p == prev) {
            ++run;
        } else {
            if (prev > 0) flush(prev, run);
            prev = p;
            run = 1;
        }
    }
    if (prev > 0) flush(prev, run);
    return r;
}

int eps(const Partition& rho) {
    return (rho.size() - rho.length()) % 2 == 0 ? 1 : -1;
}

int count_odd_part_partitions(int n) {
    int c = 0;
    for (const Partition& p : partitions_of(n)) {
        bool all_odd = true;
        for (int v : p.parts())
            if (v % 2 == 0) { all_odd = false; break; }
        if (all_odd) ++c;
    }
    return c;
}

}  // namespace pleth
