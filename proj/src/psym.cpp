#include "pleth/psym.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "pleth/characters.hpp"

namespace pleth {

Rat PSymFunc::coefficient(const Partition& rho) const {
    auto it = terms_.find(rho);
    return it == terms_.end() ? Rat(0) : it->second;
}

void PSymFunc::add_term(const Partition& rho, const Rat& c) {
    if (rho.size() != degree_)
        throw std::invalid_argument("PSymFunc::add_term: degree mismatch");
    auto it = terms_.find(rho);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(rho, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

PSymFunc& PSymFunc::operator+=(const PSymFunc& o) {
    if (degree_ != o.degree_)
        throw std::invalid_argument("PSymFunc::operator+=: degree mismatch");
    for (const auto& [rho, c] : o.terms_) add_term(rho, c);
    return *this;
}

PSymFunc& PSymFunc::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [rho, v] : terms_) v *= c;
    return *this;
}

PSymFunc schur_in_p(const Partition& lambda) {
    const int n = lambda.size();
    if (n > 16)
        throw GuardExceeded("schur_in_p: character-table guard n <= 16 exceeded");
    const CharacterTable& table = CharacterTable::get(n);
    PSymFunc f(n);
    for (const Partition& rho : cycle_types(n))
        f.add_term(rho, Rat(table.value(lambda, rho)) / Rat(z(rho)));
    return f;
}

PSymFunc p_plethysm(int k, const PSymFunc& g) {
    if (k < 1) throw std::invalid_argument("p_plethysm: k must be positive");
    PSymFunc f(g.degree() * k);
    for (const auto& [rho, c] : g.terms()) {
        std::vector<int> parts = rho.parts();
        for (int& v : parts) v *= k;
        f.add_term(Partition(std::move(parts)), c);
    }
    return f;
}

PSymFunc multiply(const PSymFunc& f, const PSymFunc& g) {
    PSymFunc r(f.degree() + g.degree());
    for (const auto& [a, ca] : f.terms()) {
        for (const auto& [b, cb] : g.terms()) {
            std::vector<int> parts;
            parts.reserve(a.length() + b.length());
            std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
                       std::back_inserter(parts), std::greater<int>());
            r.add_term(Partition(std::move(parts)), ca * cb);
        }
    }
    return r;
}

Int PlethysmResult::sum() const {
    Int s = 0;
    for (const auto& [nu, a] : coeffs) s += a;
    return s;
}

namespace {

// F -> its Schur expansion via the Hall pairing <p_tau, s_nu> = chi^nu(tau).
std::map<Partition, Int, DescLexLess> extract_schur(const PSymFunc& f) {
    const int d = f.degree();
    const CharacterTable& table = CharacterTable::get(d);
    std::map<Partition, Int, DescLexLess> out;
    for (const Partition& nu : table.lambdas()) {
        Rat a = 0;
        for (const auto& [tau, c] : f.terms()) a += c * Rat(table.value(nu, tau));
        if (denominator(a) != 1)
            throw ConsistencyError("extract_schur: non-integral multiplicity " + a.str() +
                                   " at nu=" + nu.to_string());
        if (a != 0) out.emplace(nu, numerator(a));
    }
    return out;
}

}  // namespace

PlethysmResult plethysm_schur(const Partition& lambda, int m) {
    const int n = lambda.size();
    if (n * m > 12)
        throw GuardExceeded("plethysm_schur: guard nm <= 12 exceeded (nm=" +
                            std::to_string(n * m) + ")");
    if (m < 1) throw std::invalid_argument("plethysm_schur: m must be positive");

    const PSymFunc g = schur_in_p(Partition(std::vector<int>{m}));
    // p_k[g] is reused across cycle types; memoize per part value.
    std::map<int, PSymFunc> part_pleth;
    auto get_part = [&](int k) -> const PSymFunc& {
        auto it = part_pleth.find(k);
        if (it == part_pleth.end()) it = part_pleth.emplace(k, p_plethysm(k, g)).first;
        return it->second;
    };

    const CharacterTable& table = CharacterTable::get(n);
    PSymFunc total(n * m);
    for (const Partition& rho : cycle_types(n)) {
        PSymFunc prod(0);
        prod.add_term(Partition(), 1);
        for (int k : rho.parts()) prod = multiply(prod, get_part(k));
        prod *= Rat(table.value(lambda, rho)) / Rat(z(rho));
        total += prod;
    }

    PlethysmResult result;
    result.lambda = lambda;
    result.m = m;
    result.coeffs = extract_schur(total);
    for (const auto& [nu, a] : result.coeffs)
        if (a < 0)
            throw ConsistencyError("plethysm_schur: negative coefficient " + a.str() +
                                   " at nu=" + nu.to_string());
    return result;
}

Int oracle_sum(const Partition& lambda, int m) { return plethysm_schur(lambda, m).sum(); }

Int power_product_constituents(int n, int m) {
    if (n * m > 12)
        throw GuardExceeded("power_product_constituents: guard nm <= 12 exceeded");
    const PSymFunc g = schur_in_p(Partition(std::vector<int>{m}));
    PSymFunc prod(0);
    prod.add_term(Partition(), 1);
    for (int i = 0; i < n; ++i) prod = multiply(prod, g);
    Int total = 0;
    for (const auto& [nu, a] : extract_schur(prod)) total += a;
    return total;
}

}  // namespace pleth
