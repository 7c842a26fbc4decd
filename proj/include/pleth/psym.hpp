#pragma once

#include <map>

#include "pleth/class_function.hpp"

namespace pleth {

// Homogeneous symmetric function in the power-sum basis: sparse rational
// linear combination of p_rho with rho |- degree. Zero coefficients are
// never stored.
class PSymFunc {
public:
    explicit PSymFunc(int degree) : degree_(degree) {}

    int degree() const { return degree_; }
    const std::map<Partition, Rat, DescLexLess>& terms() const { return terms_; }
    Rat coefficient(const Partition& rho) const;
    void add_term(const Partition& rho, const Rat& c);
    PSymFunc& operator+=(const PSymFunc& o);
    PSymFunc& operator*=(const Rat& c);

private:
    int degree_;
    std::map<Partition, Rat, DescLexLess> terms_;
};

// s_lambda = sum_rho z(rho)^{-1} chi^lambda(rho) p_rho.
PSymFunc schur_in_p(const Partition& lambda);

// p_k[g]: every part of every index partition multiplied by k.
PSymFunc p_plethysm(int k, const PSymFunc& g);

// Bilinear extension of p_rho * p_sigma = p_{rho union sigma}.
PSymFunc multiply(const PSymFunc& f, const PSymFunc& g);

struct PlethysmResult {
    Partition lambda;
    int m = 0;
    std::map<Partition, Int, DescLexLess> coeffs;  // nu -> a_{lambda,m}^nu
    Int sum() const;
};

// Brute-force expansion of s_lambda[s_m] via the power-sum pipeline.
// Guard nm <= 12. Verifies every a^nu is a non-negative integer.
PlethysmResult plethysm_schur(const Partition& lambda, int m);

// sum_nu a_{lambda,m}^nu.
Int oracle_sum(const Partition& lambda, int m);

// Number of irreducibles in (s_m)^n, counted with multiplicity; equals
// N^m at the identity. Guard nm <= 12.
Int power_product_constituents(int n, int m);

}  // namespace pleth
