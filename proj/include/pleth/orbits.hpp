#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pleth/class_function.hpp"
#include "pleth/ehrhart.hpp"
#include "pleth/matrix_count.hpp"

namespace pleth {

// One (S_n x S_n)-orbit of M(n,m).
struct OrbitClass {
    IntMatrix canonical_rep;
    Int orbit_size = 0;
    Int stabilizer_size = 0;
    bool transpose_fixed = false;

    explicit OrbitClass(IntMatrix rep) : canonical_rep(std::move(rep)) {}
};

// Row-major lexicographically minimal matrix in {P A Q : P, Q permutation
// matrices}, by branch-and-bound over row orders with column-sort lower
// bounds. Guard n <= max_n (m=2 callers go up to 8; orbit sizes there are
// small enough for the bound to bite early).
IntMatrix canonical_form(const IntMatrix& a, int max_n = 6);

// All (S_n x S_n)-orbits of M(n,m), ordered by canonical representative.
std::vector<OrbitClass> orbit_classes(int n, int m, const Int& max_matrices = Int(10000000));

// N^C: rho -> #{A in the orbit of C : sigma_rho A^T = A}. Materializes the
// orbit by closure under row/column swaps; guard on orbit size.
ClassFunction n_c(const OrbitClass& c, const Int& max_orbit = Int(1000000));

// (1/|Stab(s)|) sum over pairs (g,h) with g s^T h^{-1} = s of chi^lambda(gh),
// s the canonical representative. Guard n <= 4.
Rat stabilizer_inner_product(const OrbitClass& c, const Partition& lambda);

// #{transpose-fixed classes} == <1, N^m> == (1/n!) sum_sigma N^m(sigma).
CheckReport burnside_check(int n, int m);

// Block sizes of the irreducible-summand decomposition of an m=2 class,
// via connected components of the bipartite row/column incidence graph.
Partition m2_lambda(const IntMatrix& canonical_rep);

// One transpose-fixed class of M(n,2) with its full class function, found
// without enumerating M(n,2).
struct M2Class {
    IntMatrix canonical_rep;
    Partition lambda_c;
    ClassFunction values;

    M2Class(IntMatrix rep, Partition lc, ClassFunction v)
        : canonical_rep(std::move(rep)), lambda_c(std::move(lc)), values(std::move(v)) {}
};

// All transpose-fixed classes of M(n,2) with their N^C values, computed by
// enumerating sigma-fixed matrices per cycle type and canonicalizing.
// Guard n <= 8. Results are cached per n.
const std::vector<M2Class>& m2_classes(int n);

// Per-class sign rule of the m=2 classification: <sgn, N^C> is 1 when all
// parts of lambda_C are odd, else 0; plus #T(n,2)/~ = p(n) and the
// aggregate identities for <1, N^2> and <sgn, N^2>.
CheckReport m2_sign_check(int n);

struct FoulkesCell {
    int n = 0, m = 0;
    Int character_route = 0;            // <1, N^m>
    std::optional<Int> orbit_route;     // #transpose-fixed classes, when enumerable
    bool routes_agree = true;
};

struct FoulkesTable {
    std::vector<FoulkesCell> cells;
    // Pairs (n,m) with n <= m whose counts violate #T(n,m) <= #T(m,n).
    std::vector<std::pair<int, int>> violations;
};

FoulkesTable foulkes_table(int n_max, int m_max, const Int& max_matrices = Int(200000));

}  // namespace pleth
