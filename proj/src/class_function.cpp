#include "pleth/class_function.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace pleth {

namespace {

struct TypeIndex {
    std::vector<Partition> types;
    std::unordered_map<Partition, int, PartitionHash> index;
};

const TypeIndex& type_index(int n) {
    static std::mutex mu;
    static std::map<int, TypeIndex> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        TypeIndex ti;
        ti.types = partitions_of(n);
        for (std::size_t i = 0; i < ti.types.size(); ++i)
            ti.index.emplace(ti.types[i], static_cast<int>(i));
        it = cache.emplace(n, std::move(ti)).first;
    }
    return it->second;
}

}  // namespace

const std::vector<Partition>& cycle_types(int n) { return type_index(n).types; }

int cycle_type_index(int n, const Partition& rho) {
    const auto& ti = type_index(n);
    auto it = ti.index.find(rho);
    if (it == ti.index.end())
        throw std::invalid_argument("cycle_type_index: " + rho.to_string() +
                                    " is not a partition of " + std::to_string(n));
    return it->second;
}

ClassFunction::ClassFunction(int n) : n_(n), values_(cycle_types(n).size()) {}

ClassFunction ClassFunction::trivial(int n) {
    ClassFunction f(n);
    for (auto& v : f.values_) v = 1;
    return f;
}

ClassFunction ClassFunction::sign(int n) {
    ClassFunction f(n);
    const auto& types = cycle_types(n);
    for (std::size_t i = 0; i < types.size(); ++i) f.values_[i] = eps(types[i]);
    return f;
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
    if (n_ != o.n_) throw std::invalid_argument("ClassFunction: degree mismatch");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
    if (n_ != o.n_) throw std::invalid_argument("ClassFunction: degree mismatch");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
}

ClassFunction& ClassFunction::operator*=(const Rat& c) {
    for (auto& v : values_) v *= c;
    return *this;
}

Rat inner_product(const ClassFunction& f, const ClassFunction& g) {
    if (f.n() != g.n()) throw std::invalid_argument("inner_product: degree mismatch");
    const auto& types = cycle_types(f.n());
    Rat acc = 0;
    for (std::size_t i = 0; i < types.size(); ++i)
        acc += f[static_cast<int>(i)] * g[static_cast<int>(i)] / Rat(z(types[i]));
    return acc;
}

}  // namespace pleth
