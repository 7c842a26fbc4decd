#include "pleth/orbits.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_set>
#include <utility>

#include "pleth/characters.hpp"

namespace pleth {

namespace {

struct CanonicalSearch {
    const IntMatrix& a;
    int n;
    std::vector<std::int64_t> best;  // flattened n x n, row-major
    std::vector<int> best_rows;      // row order that produced `best`
    std::vector<std::vector<int>> auts;  // row parts of discovered automorphisms
    std::vector<int> chosen;
    std::vector<bool> used;
    std::vector<std::int64_t> scratch;

    explicit CanonicalSearch(const IntMatrix& a_)
        : a(a_), n(a_.n()), used(a_.n(), false), scratch(a_.n() * a_.n()) {}

    // Minimum over column orders of the row-major reading of the chosen
    // rows: sort columns ascending by their restricted column vectors.
    // A valid lower bound for any completion of this row prefix.
    void fill_bound(std::vector<std::int64_t>& out) const {
        const int k = static_cast<int>(chosen.size());
        int order[8 + 8];  // column indices; n <= canonical guard <= 8
        for (int c = 0; c < n; ++c) order[c] = c;
        std::sort(order, order + n, [&](int x, int y) {
            for (int i = 0; i < k; ++i) {
                const auto ax = a.at(chosen[i], x), ay = a.at(chosen[i], y);
                if (ax != ay) return ax < ay;
            }
            return false;
        });
        out.resize(static_cast<std::size_t>(k) * n);
        for (int i = 0; i < k; ++i)
            for (int c = 0; c < n; ++c)
                out[static_cast<std::size_t>(i) * n + c] = a.at(chosen[i], order[c]);
    }

    bool same_row(int r1, int r2) const {
        for (int c = 0; c < n; ++c)
            if (a.at(r1, c) != a.at(r2, c)) return false;
        return true;
    }

    void run() {
        chosen.reserve(n);
        dfs();
    }

    // Orbits of the remaining rows under the subgroup of discovered
    // automorphisms that fix the chosen prefix pointwise. Exploring one
    // candidate per orbit is enough: an automorphism fixing the prefix and
    // mapping r to r' carries every completion through r to an equal-reading
    // completion through r'.
    void prefix_orbits(int root[]) const {
        for (int r = 0; r < n; ++r) root[r] = r;
        auto find = [&](int x) {
            while (root[x] != x) x = root[x] = root[root[x]];
            return x;
        };
        for (const auto& g : auts) {
            bool fixes = true;
            for (int c : chosen)
                if (g[c] != c) { fixes = false; break; }
            if (!fixes) continue;
            for (int r = 0; r < n; ++r) root[find(r)] = find(g[r]);
        }
        for (int r = 0; r < n; ++r) root[r] = find(r);
    }

    void dfs() {
        const int k = static_cast<int>(chosen.size());
        // Candidate next rows, best-first by the bound they induce.
        std::vector<std::pair<std::vector<std::int64_t>, int>> cands;
        cands.reserve(n - k);
        for (int r = 0; r < n; ++r) {
            if (used[r]) continue;
            chosen.push_back(r);
            fill_bound(scratch);
            chosen.pop_back();
            cands.emplace_back(scratch, r);
        }
        std::sort(cands.begin(), cands.end());
        int orbit_root[8 + 8];
        prefix_orbits(orbit_root);
        int tried[8 + 8];
        int tried_count = 0;
        for (auto& [bound, r] : cands) {
            // Rows in one automorphism orbit (or literally identical rows)
            // generate equivalent subtrees.
            bool dup = false;
            for (int t = 0; t < tried_count && !dup; ++t)
                dup = orbit_root[tried[t]] == orbit_root[r] || same_row(tried[t], r);
            if (dup) continue;
            tried[tried_count++] = r;
            if (!best.empty() &&
                std::lexicographical_compare(best.begin(), best.begin() + bound.size(),
                                             bound.begin(), bound.end()))
                continue;  // bound strictly exceeds best prefix
            if (k + 1 == n) {
                if (best.empty() || bound < best) {
                    best = std::move(bound);
                    best_rows = chosen;
                    best_rows.push_back(r);
                } else if (bound == best) {
                    // Re-discovery of the optimum along a different row
                    // order: record the row part of the automorphism.
                    std::vector<int> g(n);
                    for (int i = 0; i < k; ++i) g[best_rows[i]] = chosen[i];
                    g[best_rows[k]] = r;
                    auts.push_back(std::move(g));
                }
                continue;
            }
            used[r] = true;
            chosen.push_back(r);
            dfs();
            chosen.pop_back();
            used[r] = false;
        }
    }
};

}  // namespace

IntMatrix canonical_form(const IntMatrix& a, int max_n) {
    if (a.n() > max_n)
        throw GuardExceeded("canonical_form: search guard n <= " + std::to_string(max_n) +
                            " exceeded (n=" + std::to_string(a.n()) + ")");
    CanonicalSearch search(a);
    search.run();
    IntMatrix out(a.n());
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j)
            out.at(i, j) = search.best[static_cast<std::size_t>(i) * a.n() + j];
    return out;
}

std::vector<OrbitClass> orbit_classes(int n, int m, const Int& max_matrices) {
    std::map<IntMatrix, Int> counts;
    enumerate_M(n, m, [&](const IntMatrix& a) { ++counts[canonical_form(a)]; }, max_matrices);
    const Int square = factorial(n) * factorial(n);
    std::vector<OrbitClass> out;
    out.reserve(counts.size());
    for (const auto& [rep, size] : counts) {
        OrbitClass c(rep);
        c.orbit_size = size;
        if (square % size != 0)
            throw ConsistencyError("orbit_classes: orbit size " + size.str() +
                                   " does not divide (n!)^2");
        c.stabilizer_size = square / size;
        c.transpose_fixed = canonical_form(rep.transpose()) == rep;
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

std::vector<IntMatrix> materialize_orbit(const IntMatrix& rep, const Int& max_orbit) {
    const int n = rep.n();
    std::unordered_set<IntMatrix, IntMatrixHash> seen;
    std::deque<IntMatrix> queue;
    seen.insert(rep);
    queue.push_back(rep);
    auto push = [&](IntMatrix b) {
        if (seen.insert(b).second) {
            if (Int(seen.size()) > max_orbit)
                throw GuardExceeded("n_c: orbit guard " + max_orbit.str() + " exceeded");
            queue.push_back(std::move(b));
        }
    };
    while (!queue.empty()) {
        IntMatrix a = std::move(queue.front());
        queue.pop_front();
        for (int k = 0; k + 1 < n; ++k) {
            IntMatrix r = a, c = a;
            for (int j = 0; j < n; ++j) std::swap(r.at(k, j), r.at(k + 1, j));
            for (int i = 0; i < n; ++i) std::swap(c.at(i, k), c.at(i, k + 1));
            push(std::move(r));
            push(std::move(c));
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace

ClassFunction n_c(const OrbitClass& c, const Int& max_orbit) {
    const int n = c.canonical_rep.n();
    const std::vector<IntMatrix> orbit = materialize_orbit(c.canonical_rep, max_orbit);
    if (Int(orbit.size()) != c.orbit_size)
        throw ConsistencyError("n_c: materialized orbit size " + std::to_string(orbit.size()) +
                               " != recorded " + c.orbit_size.str());
    ClassFunction f(n);
    const auto& types = cycle_types(n);
    for (std::size_t i = 0; i < types.size(); ++i) {
        const Permutation sigma = representative(types[i]);
        Int cnt = 0;
        for (const IntMatrix& a : orbit)
            if (is_fixed_by(sigma, a)) ++cnt;
        f[static_cast<int>(i)] = Rat(cnt);
    }
    return f;
}

namespace {

// (g A h^{-1})(i,j) = A(g^{-1}(i), h^{-1}(j)): g permutes rows, h columns.
IntMatrix act(const Permutation& g, const IntMatrix& a, const Permutation& h) {
    const int n = a.n();
    const Permutation gi = g.inverse(), hi = h.inverse();
    IntMatrix b(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b.at(i, j) = a.at(gi(i), hi(j));
    return b;
}

}  // namespace

Rat stabilizer_inner_product(const OrbitClass& c, const Partition& lambda) {
    const int n = c.canonical_rep.n();
    if (n > 4)
        throw GuardExceeded("stabilizer_inner_product: guard n <= 4 exceeded");
    const IntMatrix& s = c.canonical_rep;
    const IntMatrix st = s.transpose();
    const CharacterTable& table = CharacterTable::get(n);
    Int stab = 0;
    Rat acc = 0;
    for_each_permutation(n, [&](const Permutation& g) {
        for_each_permutation(n, [&](const Permutation& h) {
            if (act(g, s, h) == s) ++stab;
            if (act(g, st, h) == s)
                acc += Rat(table.value(lambda, g.compose(h).cycle_type()));
        });
    });
    if (Rat(stab) != Rat(c.stabilizer_size))
        throw ConsistencyError("stabilizer_inner_product: stabilizer size mismatch");
    return acc / Rat(stab);
}

CheckReport burnside_check(int n, int m) {
    CheckReport rep;
    Int fixed_classes = 0;
    for (const OrbitClass& c : orbit_classes(n, m))
        if (c.transpose_fixed) ++fixed_classes;
    const Rat avg = inner_product(ClassFunction::trivial(n), n_class_function(n, m));
    if (denominator(avg) != 1 || Rat(fixed_classes) != avg) {
        rep.ok = false;
        rep.detail = "burnside: #transpose-fixed classes = " + fixed_classes.str() +
                     ", <1, N^m> = " + avg.str();
    }
    return rep;
}

Partition m2_lambda(const IntMatrix& a) {
    const int n = a.n();
    // Union-find over rows (0..n-1) and columns (n..2n-1).
    std::vector<int> parent(2 * n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a.at(i, j) > 0) parent[find(i)] = find(n + j);
    std::map<int, int> row_count;
    for (int i = 0; i < n; ++i) ++row_count[find(i)];
    std::vector<int> sizes;
    for (const auto& [root, cnt] : row_count) sizes.push_back(cnt);
    std::sort(sizes.rbegin(), sizes.rend());
    return Partition(std::move(sizes));
}

const std::vector<M2Class>& m2_classes(int n) {
    if (n > 8)
        throw GuardExceeded("m2_classes: guard n <= 8 exceeded (n=" + std::to_string(n) + ")");
    static std::mutex mu;
    static std::map<int, std::vector<M2Class>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    const auto& types = cycle_types(n);
    // canonical rep -> N^C values per cycle-type index
    std::map<IntMatrix, std::vector<Int>> tally;
    for (std::size_t i = 0; i < types.size(); ++i) {
        const Permutation sigma = representative(types[i]);
        enumerate_fixed(sigma, 2, [&](const IntMatrix& a) {
            auto [it, inserted] = tally.emplace(canonical_form(a, 8), std::vector<Int>());
            if (inserted) it->second.assign(types.size(), 0);
            ++it->second[i];
        });
    }
    std::vector<M2Class> out;
    for (const auto& [rep, values] : tally) {
        ClassFunction f(n);
        for (std::size_t i = 0; i < values.size(); ++i) f[static_cast<int>(i)] = Rat(values[i]);
        out.emplace_back(rep, m2_lambda(rep), std::move(f));
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(n, std::move(out)).first->second;
}

CheckReport m2_sign_check(int n) {
    CheckReport rep;
    auto fail = [&](std::string why) {
        rep.ok = false;
        rep.detail = std::move(why);
        return rep;
    };
    const std::vector<M2Class>& classes = m2_classes(n);
    const std::vector<Partition> parts = partitions_of(n);
    if (classes.size() != parts.size())
        return fail("#T(n,2)/~ = " + std::to_string(classes.size()) + " != p(n) = " +
                    std::to_string(parts.size()));
    // lambda_C must hit every partition of n exactly once.
    std::map<Partition, int, DescLexLess> seen;
    for (const M2Class& c : classes) ++seen[c.lambda_c];
    for (const Partition& p : parts)
        if (seen[p] != 1) return fail("lambda_C is not a bijection at " + p.to_string());

    const ClassFunction triv = ClassFunction::trivial(n);
    const ClassFunction sgn = ClassFunction::sign(n);
    ClassFunction total(n);
    for (const M2Class& c : classes) {
        total += c.values;
        if (inner_product(triv, c.values) != 1)
            return fail("<1, N^C> != 1 at lambda_C=" + c.lambda_c.to_string());
        bool all_odd = true;
        for (int v : c.lambda_c.parts())
            if (v % 2 == 0) all_odd = false;
        const Rat sign_ip = inner_product(sgn, c.values);
        if (sign_ip != (all_odd ? 1 : 0))
            return fail("<sgn, N^C> = " + sign_ip.str() + " at lambda_C=" +
                        c.lambda_c.to_string());
    }
    if (!(total == n_class_function(n, 2)))
        return fail("sum of N^C over T(n,2)/~ differs from N^2");
    return rep;
}

FoulkesTable foulkes_table(int n_max, int m_max, const Int& max_matrices) {
    FoulkesTable table;
    std::map<std::pair<int, int>, Int> counts;
    for (int n = 1; n <= n_max; ++n) {
        for (int m = 1; m <= m_max; ++m) {
            FoulkesCell cell;
            cell.n = n;
            cell.m = m;
            const Rat ip = inner_product(ClassFunction::trivial(n), n_class_function(n, m));
            if (denominator(ip) != 1)
                throw ConsistencyError("foulkes_table: <1, N^m> non-integral");
            cell.character_route = numerator(ip);
            if (m == 2 && n <= 8) {
                cell.orbit_route = Int(m2_classes(n).size());
            } else if (n <= 6 && count_M(n, m) <= max_matrices) {
                Int fixed = 0;
                for (const OrbitClass& c : orbit_classes(n, m, max_matrices))
                    if (c.transpose_fixed) ++fixed;
                cell.orbit_route = fixed;
            }
            if (cell.orbit_route && *cell.orbit_route != cell.character_route)
                cell.routes_agree = false;
            counts[{n, m}] = cell.character_route;
            table.cells.push_back(std::move(cell));
        }
    }
    for (int n = 1; n <= n_max; ++n)
        for (int m = n; m <= m_max; ++m)
            if (counts.count({n, m}) && counts.count({m, n}) &&
                counts[{n, m}] > counts[{m, n}])
                table.violations.emplace_back(n, m);
    return table;
}

}  // namespace pleth
