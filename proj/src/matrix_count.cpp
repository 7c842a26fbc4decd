#include "pleth/matrix_count.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>

#include "pleth/characters.hpp"

namespace pleth {

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool IntMatrix::in_M(int m) const {
    for (int i = 0; i < n_; ++i) {
        std::int64_t rs = 0, cs = 0;
        for (int j = 0; j < n_; ++j) {
            if (at(i, j) < 0) return false;
            rs += at(i, j);
            cs += at(j, i);
        }
        if (rs != m || cs != m) return false;
    }
    return true;
}

std::size_t IntMatrixHash::operator()(const IntMatrix& a) const {
    std::size_t h = static_cast<std::size_t>(a.n()) * 0x9e3779b97f4a7c15ull;
    for (std::int64_t v : a.entries())
        h = h * 1099511628211ull ^ static_cast<std::size_t>(v);
    return h;
}

bool is_fixed_by(const Permutation& sigma, const IntMatrix& a) {
    const int n = a.n();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a.at(i, j) != a.at(sigma(j), i)) return false;
    return true;
}

namespace {

// One free variable per orbit of cells under (i,j) -> (sigma(j), i); all
// cells of an orbit share the variable's value.
struct CellOrbit {
    std::vector<std::pair<int, int>> cells;
    std::vector<std::pair<int, int>> row_load;  // (row, #cells of orbit in it)
    std::vector<std::pair<int, int>> col_load;
    int min_row = 0, min_col = 0;
};

struct FixedPointSearch {
    int n, m;
    std::vector<CellOrbit> orbits;
    std::vector<std::vector<int>> rows_done_after, cols_done_after;
    std::vector<int> row_sum, col_sum;
    IntMatrix work;
    const std::function<void(const IntMatrix&)>* emit = nullptr;
    Int count = 0;

    FixedPointSearch(const Permutation& sigma, int m_) : n(sigma.degree()), m(m_), work(n) {
        std::vector<int> orbit_of(static_cast<std::size_t>(n) * n, -1);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (orbit_of[i * n + j] >= 0) continue;
                CellOrbit ob;
                int ci = i, cj = j;
                while (orbit_of[ci * n + cj] < 0) {
                    orbit_of[ci * n + cj] = static_cast<int>(orbits.size());
                    ob.cells.emplace_back(ci, cj);
                    int ni = sigma(cj), nj = ci;
                    ci = ni;
                    cj = nj;
                }
                ob.min_row = ob.cells[0].first;
                ob.min_col = ob.cells[0].second;
                for (auto [r, c] : ob.cells) {
                    if (r < ob.min_row || (r == ob.min_row && c < ob.min_col)) {
                        ob.min_row = r;
                        ob.min_col = c;
                    }
                }
                std::vector<int> rl(n, 0), cl(n, 0);
                for (auto [r, c] : ob.cells) {
                    ++rl[r];
                    ++cl[c];
                }
                for (int k = 0; k < n; ++k) {
                    if (rl[k]) ob.row_load.emplace_back(k, rl[k]);
                    if (cl[k]) ob.col_load.emplace_back(k, cl[k]);
                }
                orbits.push_back(std::move(ob));
            }
        }
        std::sort(orbits.begin(), orbits.end(), [](const CellOrbit& a, const CellOrbit& b) {
            return std::pair(a.min_row, a.min_col) < std::pair(b.min_row, b.min_col);
        });
        // Rows/columns whose last unassigned cell lies in orbit k: their sum
        // is forced once orbit k gets its value.
        rows_done_after.assign(orbits.size(), {});
        cols_done_after.assign(orbits.size(), {});
        std::vector<int> row_last(n, -1), col_last(n, -1);
        for (std::size_t k = 0; k < orbits.size(); ++k) {
            for (auto& [r, c] : orbits[k].row_load) {
                (void)c;
                row_last[r] = static_cast<int>(k);
            }
            for (auto& [c, c2] : orbits[k].col_load) {
                (void)c2;
                col_last[c] = static_cast<int>(k);
            }
        }
        for (int r = 0; r < n; ++r) rows_done_after[row_last[r]].push_back(r);
        for (int c = 0; c < n; ++c) cols_done_after[col_last[c]].push_back(c);
        row_sum.assign(n, 0);
        col_sum.assign(n, 0);
    }

    void run() { dfs(0); }

    void dfs(std::size_t k) {
        if (k == orbits.size()) {
            ++count;
            if (emit) (*emit)(work);
            return;
        }
        const CellOrbit& ob = orbits[k];
        // Capacity bound from every row/column the orbit touches.
        int vmax = m;
        for (auto [r, cnt] : ob.row_load) vmax = std::min(vmax, (m - row_sum[r]) / cnt);
        for (auto [c, cnt] : ob.col_load) vmax = std::min(vmax, (m - col_sum[c]) / cnt);
        if (vmax < 0) return;
        // Rows/columns completed by this orbit force the value exactly.
        int vlo = 0, vhi = vmax;
        auto force = [&](int deficit, int cnt) {
            if (deficit % cnt != 0) {
                vlo = 1;
                vhi = 0;
                return;
            }
            int v = deficit / cnt;
            vlo = std::max(vlo, v);
            vhi = std::min(vhi, v);
        };
        for (int r : rows_done_after[k])
            for (auto [rr, cnt] : ob.row_load)
                if (rr == r) force(m - row_sum[r], cnt);
        for (int c : cols_done_after[k])
            for (auto [cc, cnt] : ob.col_load)
                if (cc == c) force(m - col_sum[c], cnt);
        for (int v = vlo; v <= vhi; ++v) {
            for (auto [r, cnt] : ob.row_load) row_sum[r] += v * cnt;
            for (auto [c, cnt] : ob.col_load) col_sum[c] += v * cnt;
            if (emit)
                for (auto [r, c] : ob.cells) work.at(r, c) = v;
            dfs(k + 1);
            for (auto [r, cnt] : ob.row_load) row_sum[r] -= v * cnt;
            for (auto [c, cnt] : ob.col_load) col_sum[c] -= v * cnt;
        }
    }
};

}  // namespace

Int count_fixed(const Permutation& sigma, int m) {
    FixedPointSearch search(sigma, m);
    search.run();
    return search.count;
}

Int enumerate_fixed(const Permutation& sigma, int m,
                    const std::function<void(const IntMatrix&)>& fn) {
    FixedPointSearch search(sigma, m);
    search.emit = &fn;
    search.run();
    return search.count;
}

ClassFunction n_class_function(int n, int m) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, ClassFunction> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({n, m});
        if (it != cache.end()) return it->second;
    }
    ClassFunction f(n);
    const auto& types = cycle_types(n);
    for (std::size_t i = 0; i < types.size(); ++i)
        f[static_cast<int>(i)] = Rat(count_fixed(representative(types[i]), m));
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::make_pair(n, m), f);
    return f;
}

Int plethysm_sum(const Partition& lambda, int m) {
    const Rat v = inner_product(irreducible_character(lambda), n_class_function(lambda.size(), m));
    if (denominator(v) != 1 || v < 0)
        throw ConsistencyError("plethysm_sum: <chi^" + lambda.to_string() + ", N^" +
                               std::to_string(m) + "> = " + v.str() +
                               " is not a non-negative integer");
    return numerator(v);
}

namespace {

Int count_M_rec(std::vector<int> resid, int rows_left,
                std::map<std::pair<std::vector<int>, int>, Int>& memo, int m) {
    if (rows_left == 0)
        return std::all_of(resid.begin(), resid.end(), [](int v) { return v == 0; }) ? 1 : 0;
    std::vector<int> key = resid;
    std::sort(key.begin(), key.end());
    auto mk = std::make_pair(std::move(key), rows_left);
    auto it = memo.find(mk);
    if (it != memo.end()) return it->second;

    const int n = static_cast<int>(resid.size());
    Int total = 0;
    // Enumerate the next row as a composition of m bounded by resid.
    std::vector<int> row(n, 0);
    auto rec = [&](auto&& self, int j, int left) -> void {
        if (j == n - 1) {
            if (left <= resid[j]) {
                resid[j] -= left;
                total += count_M_rec(resid, rows_left - 1, memo, m);
                resid[j] += left;
            }
            return;
        }
        for (int v = 0; v <= std::min(left, resid[j]); ++v) {
            resid[j] -= v;
            self(self, j + 1, left - v);
            resid[j] += v;
        }
    };
    rec(rec, 0, m);
    memo.emplace(std::move(mk), total);
    return total;
}

}  // namespace

Int count_M(int n, int m) {
    std::map<std::pair<std::vector<int>, int>, Int> memo;
    return count_M_rec(std::vector<int>(n, m), n, memo, m);
}

void enumerate_M(int n, int m, const std::function<void(const IntMatrix&)>& fn,
                 const Int& max_matrices) {
    const Int total = count_M(n, m);
    if (total > max_matrices)
        throw GuardExceeded("enumerate_M: |M(" + std::to_string(n) + "," + std::to_string(m) +
                            ")| = " + total.str() + " exceeds guard " + max_matrices.str());
    IntMatrix work(n);
    std::vector<int> col_resid(n, m);
    auto rec = [&](auto&& self, int i, int j, int left) -> void {
        if (i == n) {
            fn(work);
            return;
        }
        if (j == n - 1) {
            if (left <= col_resid[j]) {
                work.at(i, j) = left;
                col_resid[j] -= left;
                self(self, i + 1, 0, m);
                col_resid[j] += left;
            }
            return;
        }
        for (int v = 0; v <= std::min(left, col_resid[j]); ++v) {
            work.at(i, j) = v;
            col_resid[j] -= v;
            self(self, i, j + 1, left - v);
            col_resid[j] += v;
        }
    };
    rec(rec, 0, 0, m);
}

FiberReport fiber_check(int n, int m, const Permutation& sigma) {
    const int nm = n * m;
    if (nm > 8)
        throw GuardExceeded("fiber_check: nm <= 8 exceeded (nm=" + std::to_string(nm) + ")");
    FiberReport rep;
    Int expected_fiber = 1;
    for (int i = 0; i < n; ++i) expected_fiber *= factorial(m);

    std::map<IntMatrix, Int> fibers;
    bool bad = false;
    for_each_permutation(nm, [&](const Permutation& tau) {
        if (bad) return;
        // tau^2 sigma^{-1} in S_m^n  <=>  tau^2 P_j = P_{sigma(j)} for all j.
        const Permutation tau2 = tau.compose(tau);
        for (int j = 0; j < n; ++j)
            for (int r = 0; r < m; ++r)
                if (tau2(j * m + r) / m != sigma(j)) return;
        ++rep.preimage_total;
        IntMatrix a(n);
        for (int j = 0; j < n; ++j)
            for (int r = 0; r < m; ++r) ++a.at(tau(j * m + r) / m, j);
        if (!a.in_M(m) || !is_fixed_by(sigma, a)) {
            rep.detail = "image of tau not a sigma-fixed element of M(n,m)";
            bad = true;
            return;
        }
        ++fibers[a];
    });
    if (bad) return rep;

    rep.image_size = static_cast<Int>(fibers.size());
    rep.fiber_size = expected_fiber;
    for (const auto& [a, cnt] : fibers) {
        if (cnt != expected_fiber) {
            rep.detail = "fiber of size " + cnt.str() + " != m!^n = " + expected_fiber.str();
            return rep;
        }
    }
    const Int direct = count_fixed(sigma, m);
    if (rep.image_size != direct) {
        rep.detail = "image size " + rep.image_size.str() + " != count_fixed " + direct.str();
        return rep;
    }
    if (rep.preimage_total != expected_fiber * direct) {
        rep.detail = "preimage total " + rep.preimage_total.str() + " != m!^n * N^m(sigma)";
        return rep;
    }
    rep.ok = true;
    return rep;
}

CheckReport fiber_check_all_m1(int n) {
    CheckReport rep;
    if (n > 8)
        throw GuardExceeded("fiber_check_all_m1: guard n <= 8 exceeded");
    std::map<std::vector<int>, Int> tally;  // one-line of tau^2 -> #roots
    bool image_ok = true;
    for_each_permutation(n, [&](const Permutation& tau) {
        const Permutation tau2 = tau.compose(tau);
        ++tally[tau2.one_line()];
        // F(tau) is the permutation matrix of tau; it must satisfy
        // tau2 A^T = A and lie in M(n,1).
        IntMatrix a(n);
        for (int j = 0; j < n; ++j) a.at(tau(j), j) = 1;
        if (!a.in_M(1) || !is_fixed_by(tau2, a)) image_ok = false;
    });
    if (!image_ok) {
        rep.ok = false;
        rep.detail = "fiber_check_all_m1: some image is not a fixed element of M(n,1)";
        return rep;
    }
    bool ok = true;
    std::string witness;
    for_each_permutation(n, [&](const Permutation& sigma) {
        if (!ok) return;
        auto it = tally.find(sigma.one_line());
        const Int found = it == tally.end() ? Int(0) : it->second;
        if (found != count_fixed(sigma, 1)) {
            ok = false;
            witness = "sigma with cycle type " + sigma.cycle_type().to_string();
        }
    });
    if (!ok) {
        rep.ok = false;
        rep.detail = "fiber_check_all_m1: square-root count != N^1 at " + witness;
    }
    return rep;
}

}  // namespace pleth
