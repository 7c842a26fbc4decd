#pragma once

#include <string>
#include <vector>

#include "pleth/class_function.hpp"

namespace pleth {

// period p >= 1 constituent polynomials, one per residue of m mod p,
// coefficients c_0..c_degree, exact rationals throughout.
struct Quasipolynomial {
    int period = 1;
    int degree = 0;
    std::vector<std::vector<Rat>> coeffs;  // [period][degree+1]

    // Constituent for (m mod period, normalized to 0..period-1) evaluated
    // at m; negative m explicitly allowed.
    Rat evaluate(const Int& m) const;
};

// deg N_rho = sum_{i<j} gcd(rho_i, rho_j) + sum_i floor((rho_i - 1)/2).
int degree_formula(const Partition& rho);

// (-1)^{deg N_rho} == (-1)^{n(n-1)/2} eps(rho)^{n-1}, checked symbolically.
bool parity_check(const Partition& rho);

struct FitOptions {
    int max_period = 12;
    int validation_points = 3;
    // Refuse before sampling N_rho at any m beyond this bound.
    int max_sample_m = 64;
};

// No candidate period validated; loud by design.
struct FitFailure : std::runtime_error {
    explicit FitFailure(const std::string& what) : std::runtime_error(what) {}
};

// Samples N_rho(m) for m = 0,1,2,... and accepts the smallest period whose
// per-residue divided-difference interpolants reproduce validation_points
// extra samples per residue exactly.
Quasipolynomial fit_n_rho(const Partition& rho, const FitOptions& opt = {});

// evaluate(Q_rho, m) == (-1)^{n(n-1)/2} eps(rho)^{n-1} evaluate(Q_rho, -m-n)
// for all rho |- n and m in [m_lo, m_hi], plus the vanishing window
// N^m = 0 for -n+1 <= m <= -1.
CheckReport reciprocity_check(int n, int m_lo, int m_hi, const FitOptions& opt = {});

// sum_rho z(rho)^{-1} chi^lambda(rho) Q_rho, aligned to the lcm of periods.
Quasipolynomial sum_quasipolynomial(const Partition& lambda, const FitOptions& opt = {});

// Leading-term and second-order-degree consistency of the plethysm-sum
// quasipolynomials for all lambda |- n. Guard n <= 4.
CheckReport asymptotics_check(int n, const FitOptions& opt = {});

}  // namespace pleth
