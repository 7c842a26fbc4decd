#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "pleth/characters.hpp"
#include "pleth/matrix_count.hpp"

using namespace pleth;

TEST_CASE("count_fixed hand-checked values") {
    // Symmetric 2x2 matrices with row sums 2: diag(2,0)-type, diag(1,1), diag(0,2).
    CHECK(count_fixed(Permutation::identity(2), 2) == 3);
    // Permutation matrices of size 3.
    CHECK(count_fixed(Permutation::identity(3), 1) == 4);  // symmetric ones only
    CHECK(count_fixed(Permutation::identity(3), 2) == 11);
    // N^2 on S_3, the non-identity classes.
    CHECK(count_fixed(Permutation({2, 1, 3}), 2) == 1);
    CHECK(count_fixed(Permutation({2, 3, 1}), 2) == 2);
}

TEST_CASE("m=0 and m=1 conventions") {
    for (int n = 1; n <= 5; ++n) {
        for (const Partition& rho : cycle_types(n)) {
            CHECK(count_fixed(representative(rho), 0) == 1);
        }
        // #{A permutation matrix : sigma A^T = A} = #square roots of sigma.
        for (const Partition& rho : cycle_types(n)) {
            const Permutation sigma = representative(rho);
            CHECK(count_fixed(sigma, 1) == sqrt_count(sigma));
        }
    }
}

TEST_CASE("count_M and enumerate_M agree and are well-formed") {
    CHECK(count_M(2, 2) == 3);
    CHECK(count_M(3, 1) == 6);
    CHECK(count_M(3, 2) == 21);
    CHECK(count_M(3, 3) == 55);
    for (int n = 1; n <= 4; ++n) {
        for (int m = 0; m <= 3; ++m) {
            std::set<std::vector<std::int64_t>> seen;
            IntMatrix prev(n);
            bool first = true;
            enumerate_M(n, m, [&](const IntMatrix& a) {
                CHECK(a.in_M(m));
                if (!first) CHECK(prev < a);  // row-major lexicographic stream
                prev = a;
                first = false;
                seen.insert(a.entries());
            });
            CHECK(Int(seen.size()) == count_M(n, m));
        }
    }
}

TEST_CASE("enumerate_M guard refuses oversized requests") {
    CHECK_THROWS_AS(enumerate_M(4, 3, [](const IntMatrix&) {}, Int(10)), GuardExceeded);
}

TEST_CASE("count_fixed is a class function") {
    std::mt19937 rng(3);
    for (int n = 2; n <= 5; ++n) {
        std::vector<int> relabel(n);
        std::iota(relabel.begin(), relabel.end(), 1);
        for (const Partition& rho : cycle_types(n)) {
            const Permutation s = representative(rho);
            std::shuffle(relabel.begin(), relabel.end(), rng);
            std::vector<int> line(n);
            for (int i = 0; i < n; ++i) line[relabel[i] - 1] = relabel[s(i)];
            const Permutation conj(line);
            REQUIRE(conj.cycle_type() == rho);
            for (int m = 1; m <= 4; ++m)
                CHECK(count_fixed(s, m) == count_fixed(conj, m));
        }
    }
}

TEST_CASE("count_fixed against direct filtering of M(n,m)") {
    for (int n = 1; n <= 3; ++n) {
        for (int m = 0; m <= 3; ++m) {
            for (const Partition& rho : cycle_types(n)) {
                const Permutation sigma = representative(rho);
                Int direct = 0;
                enumerate_M(n, m, [&](const IntMatrix& a) {
                    if (is_fixed_by(sigma, a)) ++direct;
                });
                CHECK(direct == count_fixed(sigma, m));
            }
        }
    }
}

TEST_CASE("enumerate_fixed emits exactly the fixed matrices") {
    const Permutation sigma = representative(Partition({2, 1}));
    std::set<std::vector<std::int64_t>> emitted;
    const Int cnt = enumerate_fixed(sigma, 2, [&](const IntMatrix& a) {
        CHECK(a.in_M(2));
        CHECK(is_fixed_by(sigma, a));
        emitted.insert(a.entries());
    });
    CHECK(Int(emitted.size()) == cnt);
    CHECK(cnt == count_fixed(sigma, 2));
}

TEST_CASE("N^m at the identity counts symmetric matrices") {
    for (int n = 1; n <= 4; ++n) {
        for (int m = 0; m <= 3; ++m) {
            Int symmetric = 0;
            enumerate_M(n, m, [&](const IntMatrix& a) {
                if (a.transpose() == a) ++symmetric;
            });
            CHECK(symmetric == count_fixed(Permutation::identity(n), m));
        }
    }
}

TEST_CASE("plethysm_sum is a non-negative integer and matches known values") {
    CHECK(plethysm_sum(Partition({3}), 3) == 5);
    CHECK(plethysm_sum(Partition({1}), 9) == 1);
    for (int n = 1; n <= 4; ++n)
        for (const Partition& lambda : partitions_of(n))
            for (int m = 1; m <= 3; ++m) CHECK(plethysm_sum(lambda, m) >= 0);
}

TEST_CASE("fiber map is m!^n-to-1 and surjective, small cases") {
    for (auto [n, m] : {std::pair{1, 4}, {2, 2}, {2, 3}, {3, 2}}) {
        for_each_permutation(n, [&](const Permutation& sigma) {
            const FiberReport r = fiber_check(n, m, sigma);
            CHECK(r.ok);
            Int fib = 1;
            for (int i = 0; i < n; ++i) fib *= factorial(m);
            CHECK(r.fiber_size == fib);
            CHECK(r.image_size == count_fixed(sigma, m));
            CHECK(r.preimage_total == fib * r.image_size);
        });
    }
}

TEST_CASE("fiber map specialization at m=1") {
    for (int n = 1; n <= 6; ++n) {
        const CheckReport r = fiber_check_all_m1(n);
        CHECK(r.ok);
    }
}

TEST_CASE("fiber guard") {
    CHECK_THROWS_AS(fiber_check(3, 3, Permutation::identity(3)), GuardExceeded);
}
