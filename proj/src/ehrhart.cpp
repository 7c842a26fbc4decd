#include "pleth/ehrhart.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

#include "pleth/characters.hpp"
#include "pleth/matrix_count.hpp"

namespace pleth {

Rat Quasipolynomial::evaluate(const Int& m) const {
    Int r = m % period;
    if (r < 0) r += period;
    const auto& c = coeffs[static_cast<int>(r)];
    Rat acc = 0;
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * Rat(m) + c[k];
    return acc;
}

int degree_formula(const Partition& rho) {
    const auto& p = rho.parts();
    int d = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) d += std::gcd(p[i], p[j]);
        d += (p[i] - 1) / 2;
    }
    return d;
}

bool parity_check(const Partition& rho) {
    const int n = rho.size();
    int lhs = degree_formula(rho) % 2;
    int rhs = (n * (n - 1) / 2 + (n - 1) * (n - rho.length())) % 2;
    return lhs == rhs;
}

namespace {

// Newton interpolation at points x_k = r + k*step, expanded to monomial
// coefficients. values[k] = f(x_k).
std::vector<Rat> interpolate(int r, int step, const std::vector<Rat>& values) {
    const std::size_t d = values.size() - 1;
    // Divided differences.
    std::vector<Rat> dd = values;
    for (std::size_t level = 1; level <= d; ++level)
        for (std::size_t k = d; k >= level; --k)
            dd[k] = (dd[k] - dd[k - 1]) / Rat(static_cast<int>(level) * step);
    // Expand c_0 + c_1 (x - x_0) + c_2 (x - x_0)(x - x_1) + ...
    std::vector<Rat> poly(d + 1, Rat(0));
    std::vector<Rat> basis(d + 1, Rat(0));  // running product
    basis[0] = 1;
    std::size_t basis_deg = 0;
    for (std::size_t k = 0; k <= d; ++k) {
        for (std::size_t i = 0; i <= basis_deg; ++i) poly[i] += dd[k] * basis[i];
        if (k == d) break;
        // basis *= (x - x_k)
        const Rat x_k(r + static_cast<int>(k) * step);
        std::vector<Rat> next(d + 1, Rat(0));
        for (std::size_t i = 0; i <= basis_deg; ++i) {
            next[i + 1] += basis[i];
            next[i] -= x_k * basis[i];
        }
        basis = std::move(next);
        ++basis_deg;
    }
    return poly;
}

// Sample store for one rho, extended lazily.
struct Sampler {
    Permutation sigma;
    std::vector<Rat> samples;
    int guard;

    Sampler(const Partition& rho, int guard_) : sigma(representative(rho)), guard(guard_) {}

    const Rat& get(int m) {
        if (m > guard)
            throw GuardExceeded("fit_n_rho: sampling budget exceeded (m=" + std::to_string(m) +
                                " > " + std::to_string(guard) + ")");
        while (static_cast<int>(samples.size()) <= m)
            samples.push_back(Rat(count_fixed(sigma, static_cast<int>(samples.size()))));
        return samples[m];
    }
};

}  // namespace

namespace {

Quasipolynomial fit_n_rho_uncached(const Partition& rho, const FitOptions& opt);

}  // namespace

Quasipolynomial fit_n_rho(const Partition& rho, const FitOptions& opt) {
    static std::mutex mu;
    static std::map<std::tuple<std::vector<int>, int, int, int>, Quasipolynomial> cache;
    const auto key = std::make_tuple(rho.parts(), opt.max_period, opt.validation_points,
                                     opt.max_sample_m);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Quasipolynomial q = fit_n_rho_uncached(rho, opt);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, q);
    return q;
}

namespace {

Quasipolynomial fit_n_rho_uncached(const Partition& rho, const FitOptions& opt) {
    const int d = degree_formula(rho);
    Sampler sampler(rho, opt.max_sample_m);
    for (int p = 1; p <= opt.max_period; ++p) {
        Quasipolynomial q;
        q.period = p;
        q.coeffs.resize(p);
        bool valid = true;
        for (int r = 0; r < p && valid; ++r) {
            std::vector<Rat> values(d + 1);
            for (int k = 0; k <= d; ++k) values[k] = sampler.get(r + k * p);
            q.coeffs[r] = interpolate(r, p, values);
            for (int k = d + 1; k <= d + opt.validation_points && valid; ++k) {
                const Int x = r + k * p;
                if (q.evaluate(x) != sampler.get(static_cast<int>(x))) valid = false;
            }
        }
        if (!valid) continue;
        int deg = 0;
        for (int r = 0; r < p; ++r)
            for (int k = d; k >= 0; --k)
                if (q.coeffs[r][k] != 0) { deg = std::max(deg, k); break; }
        q.degree = deg;
        if (deg != d)
            throw ConsistencyError("fit_n_rho: fitted degree " + std::to_string(deg) +
                                   " != degree formula " + std::to_string(d) + " for rho=" +
                                   rho.to_string());
        return q;
    }
    throw FitFailure("fit_n_rho: no period <= " + std::to_string(opt.max_period) +
                     " validates for rho=" + rho.to_string());
}

}  // namespace

CheckReport reciprocity_check(int n, int m_lo, int m_hi, const FitOptions& opt) {
    CheckReport rep;
    const int sign_global = (n * (n - 1) / 2) % 2 ? -1 : 1;
    for (const Partition& rho : cycle_types(n)) {
        const Quasipolynomial q = fit_n_rho(rho, opt);
        int sign = sign_global;
        if ((n - 1) % 2 && eps(rho) < 0) sign = -sign;
        for (int m = m_lo; m <= m_hi; ++m) {
            const Rat lhs = q.evaluate(m);
            const Rat rhs = Rat(sign) * q.evaluate(Int(-m - n));
            if (lhs != rhs) {
                rep.ok = false;
                rep.detail = "reciprocity fails at rho=" + rho.to_string() +
                             " m=" + std::to_string(m);
                return rep;
            }
        }
        for (int m = -n + 1; m <= -1; ++m) {
            if (q.evaluate(m) != 0) {
                rep.ok = false;
                rep.detail = "vanishing window fails at rho=" + rho.to_string() +
                             " m=" + std::to_string(m);
                return rep;
            }
        }
    }
    return rep;
}

Quasipolynomial sum_quasipolynomial(const Partition& lambda, const FitOptions& opt) {
    const int n = lambda.size();
    const CharacterTable& table = CharacterTable::get(n);
    std::vector<Quasipolynomial> fits;
    int period = 1;
    int dmax = 0;
    for (const Partition& rho : cycle_types(n)) {
        fits.push_back(fit_n_rho(rho, opt));
        period = std::lcm(period, fits.back().period);
        dmax = std::max(dmax, fits.back().degree);
    }
    Quasipolynomial q;
    q.period = period;
    q.coeffs.assign(period, std::vector<Rat>(dmax + 1, Rat(0)));
    const auto& types = cycle_types(n);
    for (std::size_t i = 0; i < types.size(); ++i) {
        const Rat c = Rat(table.value(lambda, types[i])) / Rat(z(types[i]));
        const Quasipolynomial& f = fits[i];
        for (int r = 0; r < period; ++r) {
            const auto& src = f.coeffs[r % f.period];
            for (std::size_t k = 0; k < src.size(); ++k) q.coeffs[r][k] += c * src[k];
        }
    }
    int deg = 0;
    for (int r = 0; r < period; ++r)
        for (int k = dmax; k >= 0; --k)
            if (q.coeffs[r][k] != 0) { deg = std::max(deg, k); break; }
    q.degree = deg;
    for (int r = 0; r < period; ++r) q.coeffs[r].resize(deg + 1);
    return q;
}

namespace {

// Degree of a - scale * b, with the zero quasipolynomial reported as -1.
int difference_degree(const Quasipolynomial& a, const Quasipolynomial& b, const Rat& scale) {
    const int period = std::lcm(a.period, b.period);
    const int dmax = std::max(a.degree, b.degree);
    int deg = -1;
    for (int r = 0; r < period; ++r) {
        for (int k = dmax; k > deg; --k) {
            Rat ca = k <= a.degree ? a.coeffs[r % a.period][k] : Rat(0);
            Rat cb = k <= b.degree ? b.coeffs[r % b.period][k] : Rat(0);
            if (ca - scale * cb != 0) {
                deg = k;
                break;
            }
        }
    }
    return deg;
}

}  // namespace

CheckReport asymptotics_check(int n, const FitOptions& opt) {
    CheckReport rep;
    if (n > 4) {
        rep.ok = false;
        rep.detail = "asymptotics_check: guard n <= 4 exceeded";
        return rep;
    }
    const int top_degree = n * (n - 1) / 2;
    const Quasipolynomial q_ones = fit_n_rho(Partition(std::vector<int>(n, 1)), opt);
    // Leading Ehrhart coefficient is the relative volume; it must be the
    // same in every residue.
    const Rat vol = q_ones.coeffs[0][top_degree];
    for (int r = 1; r < q_ones.period; ++r) {
        if (q_ones.coeffs[r][top_degree] != vol) {
            rep.ok = false;
            rep.detail = "leading coefficient of Q_{1^n} varies across residues";
            return rep;
        }
    }
    const Quasipolynomial sum_triv = sum_quasipolynomial(Partition(std::vector<int>{n}), opt);
    const int second_bound = (n - 1) * (n - 2) / 2;
    for (const Partition& lambda : partitions_of(n)) {
        const Quasipolynomial s = sum_quasipolynomial(lambda, opt);
        const Rat dim = Rat(character_dimension(lambda));
        const Rat expect = dim * vol / Rat(factorial(n));
        if (s.degree != top_degree) {
            rep.ok = false;
            rep.detail = "sum quasipolynomial degree mismatch at lambda=" + lambda.to_string();
            return rep;
        }
        for (int r = 0; r < s.period; ++r) {
            if (s.coeffs[r][top_degree] != expect) {
                rep.ok = false;
                rep.detail = "leading coefficient mismatch at lambda=" + lambda.to_string();
                return rep;
            }
        }
        if (difference_degree(s, sum_triv, dim) > second_bound) {
            rep.ok = false;
            rep.detail = "second-order degree bound fails at lambda=" + lambda.to_string();
            return rep;
        }
    }
    return rep;
}

}  // namespace pleth
