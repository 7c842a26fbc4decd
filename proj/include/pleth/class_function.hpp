#pragma once

#include <vector>

#include "pleth/partition.hpp"

namespace pleth {

// Cycle types of S_n in descending lexicographic order; cached per n.
const std::vector<Partition>& cycle_types(int n);
// Index of rho within cycle_types(n); throws if rho is not a partition of n.
int cycle_type_index(int n, const Partition& rho);

// Exact-rational-valued function on cycle types of S_n, stored densely in
// descending lexicographic cycle-type order.
class ClassFunction {
public:
    explicit ClassFunction(int n);
    static ClassFunction trivial(int n);
    static ClassFunction sign(int n);

    int n() const { return n_; }
    Rat& at(const Partition& rho) { return values_[cycle_type_index(n_, rho)]; }
    const Rat& at(const Partition& rho) const { return values_[cycle_type_index(n_, rho)]; }
    Rat& operator[](int idx) { return values_[idx]; }
    const Rat& operator[](int idx) const { return values_[idx]; }

    ClassFunction& operator+=(const ClassFunction& o);
    ClassFunction& operator-=(const ClassFunction& o);
    ClassFunction& operator*=(const Rat& c);
    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
    friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
    bool operator==(const ClassFunction& o) const { return n_ == o.n_ && values_ == o.values_; }

private:
    int n_;
    std::vector<Rat> values_;
};

// <f, g> = sum_rho z(rho)^{-1} f(rho) g(rho). All class functions here are
// rational-valued, so the conjugate in the defining formula is the identity.
Rat inner_product(const ClassFunction& f, const ClassFunction& g);

}  // namespace pleth
