#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "doctest.h"
#include "pleth/characters.hpp"
#include "pleth/orbits.hpp"

using namespace pleth;

namespace {

IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    IntMatrix a(static_cast<int>(rows.size()));
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) a.at(i, j) = rows[i][j];
    return a;
}

IntMatrix random_act(std::mt19937& rng, const IntMatrix& a) {
    const int n = a.n();
    std::vector<int> r(n), c(n);
    std::iota(r.begin(), r.end(), 0);
    std::iota(c.begin(), c.end(), 0);
    std::shuffle(r.begin(), r.end(), rng);
    std::shuffle(c.begin(), c.end(), rng);
    IntMatrix b(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b.at(i, j) = a.at(r[i], c[j]);
    return b;
}

}  // namespace

TEST_CASE("canonical_form is idempotent and constant on orbits") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        IntMatrix a(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a.at(i, j) = rng() % 5;
        const IntMatrix c = canonical_form(a);
        CHECK(canonical_form(c) == c);
        CHECK(!(c.entries() > a.entries()));  // minimal, so never above the input
        for (int k = 0; k < 3; ++k) CHECK(canonical_form(random_act(rng, a)) == c);
    }
}

TEST_CASE("canonical_form guard") {
    CHECK_THROWS_AS(canonical_form(IntMatrix(7)), GuardExceeded);
    CHECK_NOTHROW(canonical_form(IntMatrix(7), 8));
}

TEST_CASE("a circulant matrix is equivalent to its transpose") {
    const IntMatrix a = from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    CHECK(canonical_form(a) == canonical_form(a.transpose()));
}

TEST_CASE("the five classes of M(3,3)") {
    const auto classes = orbit_classes(3, 3);
    REQUIRE(classes.size() == 5);
    Int total = 0;
    for (const OrbitClass& c : classes) {
        CHECK(c.transpose_fixed);
        CHECK(c.orbit_size * c.stabilizer_size == factorial(3) * factorial(3));
        total += c.orbit_size;
    }
    CHECK(total == count_M(3, 3));
    // Representatives of the five shapes, one per class.
    const std::vector<IntMatrix> reps = {
        from_rows({{3, 0, 0}, {0, 3, 0}, {0, 0, 3}}),
        from_rows({{2, 1, 0}, {1, 2, 0}, {0, 0, 3}}),
        from_rows({{2, 1, 0}, {1, 1, 1}, {0, 1, 2}}),
        from_rows({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}),
        from_rows({{2, 1, 0}, {0, 2, 1}, {1, 0, 2}}),
    };
    std::map<IntMatrix, int> found;
    for (const OrbitClass& c : classes) found[c.canonical_rep] = 1;
    for (const IntMatrix& r : reps) CHECK(found.count(canonical_form(r)) == 1);
}

TEST_CASE("n_c values and the orbit decomposition of N^m") {
    for (int n = 1; n <= 3; ++n) {
        for (int m = 1; m <= 3; ++m) {
            ClassFunction total(n);
            for (const OrbitClass& c : orbit_classes(n, m)) {
                const ClassFunction f = n_c(c);
                const Rat one = inner_product(ClassFunction::trivial(n), f);
                CHECK(one == (c.transpose_fixed ? 1 : 0));
                if (c.transpose_fixed) total += f;
            }
            CHECK(total == n_class_function(n, m));
        }
    }
}

TEST_CASE("n_c of the diagonal class in M(2,2)") {
    const auto classes = orbit_classes(2, 2);
    REQUIRE(classes.size() == 2);
    // diag(2,2) and its antidiagonal mate form one orbit of size 2.
    const IntMatrix diag = from_rows({{2, 0}, {0, 2}});
    for (const OrbitClass& c : classes) {
        if (c.canonical_rep == canonical_form(diag)) {
            CHECK(c.orbit_size == 2);
            const ClassFunction f = n_c(c);
            CHECK(f.at(Partition({2})) == 0);     // neither member fixed by the swap
            CHECK(f.at(Partition({1, 1})) == 2);  // both symmetric
        } else {
            CHECK(c.orbit_size == 1);  // the all-ones matrix
            const ClassFunction f = n_c(c);
            CHECK(f.at(Partition({2})) == 1);
            CHECK(f.at(Partition({1, 1})) == 1);
        }
    }
}

TEST_CASE("stabilizer route equals the direct inner product") {
    for (int n = 1; n <= 3; ++n) {
        const CharacterTable& table = CharacterTable::get(n);
        for (int m = 1; m <= 3; ++m) {
            for (const OrbitClass& c : orbit_classes(n, m)) {
                if (!c.transpose_fixed) continue;
                const ClassFunction f = n_c(c);
                for (const Partition& lambda : table.lambdas())
                    CHECK(stabilizer_inner_product(c, lambda) ==
                          inner_product(table.character(lambda), f));
            }
        }
    }
}

TEST_CASE("per-class multiplicities are bounded by the dimension") {
    const CharacterTable& table = CharacterTable::get(3);
    for (int m = 1; m <= 3; ++m) {
        for (const OrbitClass& c : orbit_classes(3, m)) {
            const ClassFunction f = n_c(c);
            for (const Partition& lambda : table.lambdas()) {
                const Rat ip = inner_product(table.character(lambda), f);
                const Rat dim(character_dimension(lambda));
                CHECK(ip <= dim);
                CHECK(ip >= -dim);
            }
        }
    }
}

TEST_CASE("burnside count matches <1, N^m>") {
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 3; ++m) CHECK(burnside_check(n, m).ok);
}

TEST_CASE("m2_lambda reads off the block sizes") {
    CHECK(m2_lambda(from_rows({{2}})) == Partition({1}));
    CHECK(m2_lambda(from_rows({{1, 1}, {1, 1}})) == Partition({2}));
    CHECK(m2_lambda(from_rows({{2, 0}, {0, 2}})) == Partition({1, 1}));
    // One tridiagonal 3-block plus two loops.
    CHECK(m2_lambda(from_rows({{1, 1, 0, 0, 0},
                               {1, 0, 1, 0, 0},
                               {0, 1, 1, 0, 0},
                               {0, 0, 0, 2, 0},
                               {0, 0, 0, 0, 2}})) == Partition({3, 1, 1}));
}

TEST_CASE("m=2 classes are in bijection with partitions") {
    for (int n = 1; n <= 6; ++n) {
        const auto& classes = m2_classes(n);
        CHECK(classes.size() == partitions_of(n).size());
        std::map<Partition, int, DescLexLess> seen;
        for (const M2Class& c : classes) {
            ++seen[c.lambda_c];
            CHECK(inner_product(ClassFunction::trivial(n), c.values) == 1);
        }
        CHECK(seen.size() == classes.size());
    }
}

TEST_CASE("m=2 sign rule") {
    for (int n = 1; n <= 6; ++n) {
        const CheckReport r = m2_sign_check(n);
        CHECK(r.ok);
        CHECK(r.detail.empty());
    }
}

TEST_CASE("foulkes table routes agree on the small grid") {
    const FoulkesTable table = foulkes_table(3, 3);
    CHECK(table.cells.size() == 9);
    for (const FoulkesCell& c : table.cells) {
        CHECK(c.routes_agree);
        REQUIRE(c.orbit_route.has_value());
        CHECK(*c.orbit_route == c.character_route);
    }
    CHECK(table.violations.empty());
}
