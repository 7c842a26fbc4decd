#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pleth/class_function.hpp"
#include "pleth/permutation.hpp"

namespace pleth {

// n x n matrix of non-negative integers, row-major. Entries are bounded by
// the row sum m at desk scale; counts derived from these matrices are Int.
class IntMatrix {
public:
    explicit IntMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n, 0) {}

    int n() const { return n_; }
    std::int64_t& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    std::int64_t at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    const std::vector<std::int64_t>& entries() const { return e_; }

    IntMatrix transpose() const;
    // All row sums and all column sums equal to m.
    bool in_M(int m) const;

    bool operator==(const IntMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }
    // Row-major lexicographic; the order used for canonical representatives.
    bool operator<(const IntMatrix& o) const { return e_ < o.e_; }

private:
    int n_;
    std::vector<std::int64_t> e_;
};

struct IntMatrixHash {
    std::size_t operator()(const IntMatrix& a) const;
};

// Entrywise fixed-point condition: sigma A^T = A  <=>  A_{ij} = A_{sigma(j) i}.
bool is_fixed_by(const Permutation& sigma, const IntMatrix& a);

// N^m(sigma) = #{A in M(n,m) : sigma A^T = A}, by backtracking over the
// orbits of cells under (i,j) -> (sigma(j), i). Never materializes M(n,m).
Int count_fixed(const Permutation& sigma, int m);

// Same search, but emits each fixed matrix. Returns the count.
Int enumerate_fixed(const Permutation& sigma, int m,
                    const std::function<void(const IntMatrix&)>& fn);

// rho -> count_fixed(representative(rho), m).
ClassFunction n_class_function(int n, int m);

// <chi^lambda, N^m>. Guaranteed to be a non-negative integer; anything
// else throws ConsistencyError.
Int plethysm_sum(const Partition& lambda, int m);

// |M(n,m)| by exact dynamic programming over rows.
Int count_M(int n, int m);

// Every element of M(n,m) exactly once, row-major lexicographic order.
// Refuses when |M(n,m)| exceeds max_matrices.
void enumerate_M(int n, int m, const std::function<void(const IntMatrix&)>& fn,
                 const Int& max_matrices = Int(10000000));

struct FiberReport {
    bool ok = false;
    Int fiber_size = 0;      // common fiber cardinality, expected m!^n
    Int image_size = 0;      // expected count_fixed(sigma, m)
    Int preimage_total = 0;  // #{tau : tau^2 sigma^{-1} in S_m^n}
    std::string detail;      // witness on failure
};

// Enumerates all tau in S_{nm} with tau^2 sigma^{-1} in S_m^n, applies
// F(tau)_{ij} = #(P_i cap tau P_j), and checks the map is m!^n-to-1 and
// surjective onto {A in M(n,m) : sigma A^T = A}. Guard nm <= 8.
FiberReport fiber_check(int n, int m, const Permutation& sigma);

// m=1 specialization covering every sigma in S_n in one pass: blocks are
// singletons, F(tau) is the permutation matrix of tau, and the condition
// reduces to tau^2 = sigma. Guard n <= 8.
CheckReport fiber_check_all_m1(int n);

}  // namespace pleth
