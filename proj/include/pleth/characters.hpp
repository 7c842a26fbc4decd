#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pleth/class_function.hpp"
#include "pleth/permutation.hpp"

namespace pleth {

// Full character table of S_n via the Murnaghan-Nakayama rule. Built once
// per n on demand; completed tables are immutable and shared.
class CharacterTable {
public:
    static const CharacterTable& get(int n);

    int n() const { return n_; }
    // Row/column index partitions, both in descending lexicographic order.
    const std::vector<Partition>& lambdas() const { return lambdas_; }
    const Int& value(const Partition& lambda, const Partition& rho) const;
    const Int& value(int lambda_idx, int rho_idx) const { return table_[lambda_idx][rho_idx]; }

    ClassFunction character(const Partition& lambda) const;

    // rows = lambda, columns = rho, integer entries.
    void write_csv(std::ostream& os) const;

private:
    explicit CharacterTable(int n);
    int n_;
    std::vector<Partition> lambdas_;
    std::vector<std::vector<Int>> table_;
};

// chi^lambda as a ClassFunction.
ClassFunction irreducible_character(const Partition& lambda);

// chi^lambda(1^n), the dimension.
Int character_dimension(const Partition& lambda);

// #{tau in S_k : tau^2 = sigma}, by exhaustive enumeration. Guard k <= 8.
Int sqrt_count(const Permutation& sigma);

// Checks sqrt_count(rep(rho)) == sum_nu chi^nu(rho) for every rho |- k.
// On failure fills `report` (if given) with the first failing cycle type.
bool theta_identity_check(int k, std::string* report = nullptr);

}  // namespace pleth
