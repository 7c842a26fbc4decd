#include "pleth/characters.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <unordered_map>
#include <utility>

namespace pleth {

namespace {

// Murnaghan-Nakayama recursion on beta-numbers (first-column hook lengths).
// Removing a border strip of length k from the shape with beta-set B means
// replacing some b in B by b-k >= 0 with b-k not in B; the sign is
// (-1)^{#elements of B strictly between b-k and b}.
struct MnKey {
    std::vector<int> shape;
    std::size_t idx;
    bool operator==(const MnKey& o) const { return idx == o.idx && shape == o.shape; }
};

struct MnKeyHash {
    std::size_t operator()(const MnKey& k) const {
        std::size_t h = k.idx * 0x9e3779b97f4a7c15ull;
        for (int v : k.shape) h = h * 1099511628211ull ^ static_cast<std::size_t>(v);
        return h;
    }
};

// Evaluation context: memo shared across one cycle-type column.
struct MnContext {
    const std::vector<int>& cycle_parts;  // processed front to back
    std::unordered_map<MnKey, Int, MnKeyHash> memo;
};

std::vector<int> beta_set(const std::vector<int>& shape) {
    const int l = static_cast<int>(shape.size());
    std::vector<int> beta(l);
    for (int i = 0; i < l; ++i) beta[i] = shape[i] + (l - 1 - i);
    return beta;  // strictly decreasing
}

std::vector<int> shape_from_beta(std::vector<int> beta) {
    std::sort(beta.rbegin(), beta.rend());
    const int l = static_cast<int>(beta.size());
    std::vector<int> shape(l);
    for (int i = 0; i < l; ++i) shape[i] = beta[i] - (l - 1 - i);
    while (!shape.empty() && shape.back() == 0) shape.pop_back();
    return shape;
}

Int mn_value(const std::vector<int>& shape, std::size_t idx, MnContext& ctx) {
    if (idx == ctx.cycle_parts.size()) return shape.empty() ? 1 : 0;
    MnKey key{shape, idx};
    auto it = ctx.memo.find(key);
    if (it != ctx.memo.end()) return it->second;

    const int k = ctx.cycle_parts[idx];
    std::vector<int> beta = beta_set(shape);
    Int acc = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int target = beta[i] - k;
        if (target < 0) continue;
        bool clash = false;
        int between = 0;
        for (std::size_t j = 0; j < beta.size(); ++j) {
            if (j == i) continue;
            if (beta[j] == target) { clash = true; break; }
            if (beta[j] > target && beta[j] < beta[i]) ++between;
        }
        if (clash) continue;
        std::vector<int> nb = beta;
        nb[i] = target;
        Int sub = mn_value(shape_from_beta(std::move(nb)), idx + 1, ctx);
        if (between % 2) acc -= sub; else acc += sub;
    }
    ctx.memo.emplace(std::move(key), acc);
    return acc;
}

}  // namespace

CharacterTable::CharacterTable(int n) : n_(n), lambdas_(partitions_of(n)) {
    const auto& types = cycle_types(n);
    table_.resize(lambdas_.size());
    for (auto& row : table_) row.resize(types.size());
    // One memo per cycle type: keys are (remaining-shape, cycle-part index).
    for (std::size_t r = 0; r < types.size(); ++r) {
        MnContext ctx{types[r].parts(), {}};
        for (std::size_t l = 0; l < lambdas_.size(); ++l)
            table_[l][r] = mn_value(lambdas_[l].parts(), 0, ctx);
    }
}

const CharacterTable& CharacterTable::get(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CharacterTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, std::unique_ptr<CharacterTable>(new CharacterTable(n))).first;
    return *it->second;
}

const Int& CharacterTable::value(const Partition& lambda, const Partition& rho) const {
    return table_[cycle_type_index(n_, lambda)][cycle_type_index(n_, rho)];
}

ClassFunction CharacterTable::character(const Partition& lambda) const {
    ClassFunction f(n_);
    const auto& row = table_[cycle_type_index(n_, lambda)];
    for (std::size_t i = 0; i < row.size(); ++i) f[static_cast<int>(i)] = row[i];
    return f;
}

void CharacterTable::write_csv(std::ostream& os) const {
    const auto& types = cycle_types(n_);
    os << "lambda";
    for (const auto& rho : types) os << ',' << '"' << rho.to_string() << '"';
    os << '\n';
    for (std::size_t l = 0; l < lambdas_.size(); ++l) {
        os << '"' << lambdas_[l].to_string() << '"';
        for (std::size_t r = 0; r < types.size(); ++r) os << ',' << table_[l][r];
        os << '\n';
    }
}

ClassFunction irreducible_character(const Partition& lambda) {
    return CharacterTable::get(lambda.size()).character(lambda);
}

Int character_dimension(const Partition& lambda) {
    const int n = lambda.size();
    return CharacterTable::get(n).value(lambda, Partition(std::vector<int>(n, 1)));
}

Int sqrt_count(const Permutation& sigma) {
    const int k = sigma.degree();
    if (k > 8)
        throw GuardExceeded("sqrt_count: enumeration guard k <= 8 exceeded (k=" +
                            std::to_string(k) + ")");
    Int count = 0;
    for_each_permutation(k, [&](const Permutation& tau) {
        if (tau.compose(tau) == sigma) ++count;
    });
    return count;
}

bool theta_identity_check(int k, std::string* report) {
    const CharacterTable& table = CharacterTable::get(k);
    for (const Partition& rho : cycle_types(k)) {
        Int chi_sum = 0;
        for (const Partition& nu : table.lambdas()) chi_sum += table.value(nu, rho);
        Int roots = k == 0 ? Int(1) : sqrt_count(representative(rho));
        if (roots != chi_sum) {
            if (report)
                *report = "theta identity fails at rho=" + rho.to_string() +
                          ": sqrt_count=" + roots.str() + " chi_sum=" + chi_sum.str();
            return false;
        }
    }
    return true;
}

}  // namespace pleth
