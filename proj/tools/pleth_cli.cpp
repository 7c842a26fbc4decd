#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pleth/characters.hpp"
#include "pleth/ehrhart.hpp"
#include "pleth/matrix_count.hpp"
#include "pleth/orbits.hpp"
#include "pleth/psym.hpp"

using json = nlohmann::ordered_json;
using namespace pleth;

namespace {

// ---------------------------------------------------------------------------
// serialization helpers

// Integers fit JSON numbers only up to 2^53; larger values go out as strings.
json to_json(const Int& v) {
    static const Int limit = Int(1) << 53;
    if (v > -limit && v < limit) return static_cast<std::int64_t>(v);
    return v.str();
}

json to_json(const Rat& v) {
    if (denominator(v) == 1) return to_json(numerator(v));
    return numerator(v).str() + "/" + denominator(v).str();
}

json to_json(const Partition& p) { return json(p.parts()); }

std::string rat_string(const Rat& v) {
    return numerator(v).str() + "/" + denominator(v).str();
}

Partition parse_partition(const std::string& s) {
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw CLI::ValidationError("partition", "bad part '" + tok + "'");
        parts.push_back(v);
    }
    if (parts.empty()) throw CLI::ValidationError("partition", "empty partition list");
    return Partition(std::move(parts));
}

int env_int(const char* name, int fallback) {
    const char* v = std::getenv(name);
    return v ? std::stoi(v) : fallback;
}

Int env_big(const char* name, Int fallback) {
    const char* v = std::getenv(name);
    return v ? Int(v) : fallback;
}

FitOptions fit_options_from_env() {
    FitOptions opt;
    opt.max_period = env_int("PLETH_MAX_PERIOD", opt.max_period);
    opt.validation_points = env_int("PLETH_VALIDATION_POINTS", opt.validation_points);
    opt.max_sample_m = env_int("PLETH_MAX_SAMPLE_M", opt.max_sample_m);
    return opt;
}

json quasipoly_json(const Quasipolynomial& q) {
    json constituents = json::array();
    for (const auto& c : q.coeffs) {
        json row = json::array();
        for (const Rat& v : c) row.push_back(rat_string(v));
        constituents.push_back(std::move(row));
    }
    return json{{"period", q.period}, {"degree", q.degree}, {"constituents", constituents}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------
// subcommands

int cmd_sum(const Partition& lambda, int m, bool verify) {
    const Int v = plethysm_sum(lambda, m);
    std::cout << v.str() << "\n";
    if (verify) {
        const Int o = oracle_sum(lambda, m);
        if (o != v) {
            std::cerr << "verification mismatch: character route " << v.str()
                      << ", oracle " << o.str() << "\n";
            return 3;
        }
    }
    return 0;
}

int cmd_oracle(const Partition& lambda, int m, bool sum_only) {
    if (sum_only) {
        std::cout << oracle_sum(lambda, m).str() << "\n";
        return 0;
    }
    const PlethysmResult r = plethysm_schur(lambda, m);
    json constituents = json::array();
    for (const auto& [nu, a] : r.coeffs)
        constituents.push_back(json{{"nu", to_json(nu)}, {"multiplicity", to_json(a)}});
    emit(json{{"lambda", to_json(lambda)},
              {"m", m},
              {"constituents", constituents},
              {"sum", to_json(r.sum())}});
    return 0;
}

int cmd_nchar(int n, int m) {
    const ClassFunction f = n_class_function(n, m);
    json out = json::object();
    const auto& types = cycle_types(n);
    for (std::size_t i = 0; i < types.size(); ++i)
        out[types[i].to_string()] = to_json(f[static_cast<int>(i)]);
    emit(out);
    return 0;
}

int cmd_quasipoly(const std::string& rho_arg, const std::string& lambda_arg) {
    const FitOptions opt = fit_options_from_env();
    const int max_n = env_int("PLETH_MAX_N", 4);
    const Partition p = parse_partition(rho_arg.empty() ? lambda_arg : rho_arg);
    if (p.size() > max_n)
        throw GuardExceeded("quasipoly: sampling guard n <= " + std::to_string(max_n) +
                            " exceeded (n=" + std::to_string(p.size()) + ")");
    emit(quasipoly_json(rho_arg.empty() ? sum_quasipolynomial(p, opt) : fit_n_rho(p, opt)));
    return 0;
}

int cmd_classes(int n, int m) {
    const Int max_matrices = env_big("PLETH_MAX_MATRICES", Int(10000000));
    const Int max_orbit = env_big("PLETH_MAX_ORBIT", Int(1000000));
    const CharacterTable& table = CharacterTable::get(n);
    json out = json::array();
    for (const OrbitClass& c : orbit_classes(n, m, max_matrices)) {
        json entry;
        entry["canonical_rep"] = c.canonical_rep.entries();
        entry["orbit_size"] = to_json(c.orbit_size);
        entry["stabilizer_size"] = to_json(c.stabilizer_size);
        entry["transpose_fixed"] = c.transpose_fixed;
        if (m == 2) entry["lambda_C"] = to_json(m2_lambda(c.canonical_rep));
        const ClassFunction f = n_c(c, max_orbit);
        json ips = json::object();
        for (const Partition& lambda : table.lambdas())
            ips[lambda.to_string()] = to_json(inner_product(table.character(lambda), f));
        entry["inner_products"] = std::move(ips);
        out.push_back(std::move(entry));
    }
    emit(out);
    return 0;
}

int cmd_foulkes(int n_max, int m_max, bool pretty) {
    const Int max_matrices = env_big("PLETH_MAX_MATRICES", Int(200000));
    const FoulkesTable table = foulkes_table(n_max, m_max, max_matrices);
    if (pretty) {
        std::cout << "n m character_route orbit_route agree\n";
        for (const FoulkesCell& c : table.cells) {
            std::cout << c.n << " " << c.m << " " << c.character_route.str() << " "
                      << (c.orbit_route ? c.orbit_route->str() : std::string("-")) << " "
                      << (c.routes_agree ? "yes" : "NO") << "\n";
        }
        if (table.violations.empty()) {
            std::cout << "no violations of #T(n,m)/~ <= #T(m,n)/~ for n <= m\n";
        } else {
            for (auto [n, m] : table.violations)
                std::cout << "violation at (n,m)=(" << n << "," << m << ")\n";
        }
        return 0;
    }
    json cells = json::array();
    for (const FoulkesCell& c : table.cells) {
        json entry{{"n", c.n},
                   {"m", c.m},
                   {"character_route", to_json(c.character_route)}};
        entry["orbit_route"] = c.orbit_route ? to_json(*c.orbit_route) : json(nullptr);
        entry["routes_agree"] = c.routes_agree;
        cells.push_back(std::move(entry));
    }
    json violations = json::array();
    for (auto [n, m] : table.violations) violations.push_back(json::array({n, m}));
    emit(json{{"cells", cells}, {"violations", violations}});
    return 0;
}

int cmd_chartable(int n) {
    CharacterTable::get(n).write_csv(std::cout);
    return 0;
}

// ---------------------------------------------------------------------------
// paper-suite

struct Suite {
    std::vector<std::string> only;
    int n_max = 0;   // 0 = per-check defaults
    int nm_max = 8;  // fiber checks
    bool extended = false;
    bool any_fail = false;

    bool wants(const std::string& name) const {
        return only.empty() || std::find(only.begin(), only.end(), name) != only.end();
    }

    int cap(int fallback) const { return n_max > 0 ? n_max : fallback; }

    void line(const std::string& name, bool ok, const std::string& detail = "") {
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << name;
        if (!detail.empty()) std::cout << " — " << detail;
        std::cout << "\n";
        if (!ok) any_fail = true;
    }

    void skip(const std::string& name, const std::string& detail) {
        std::cout << "[SKIP] " << name << " — " << detail << "\n";
    }
};

void suite_theta(Suite& s) {
    const int k_max = s.extended ? 8 : 6;
    for (int k = 1; k <= k_max; ++k) {
        std::string report;
        const bool ok = theta_identity_check(k, &report);
        s.line("theta identity, square roots vs character sum, k=" + std::to_string(k), ok,
               report);
    }
}

void suite_fiber(Suite& s) {
    for (int n = 1; n <= std::min(s.nm_max, 8); ++n) {
        const CheckReport r = fiber_check_all_m1(n);
        s.line("fiber map, m=1, all sigma in S_" + std::to_string(n), r.ok, r.detail);
    }
    for (int n = 2; n <= s.nm_max / 2; ++n) {
        for (int m = 2; n * m <= s.nm_max; ++m) {
            bool ok = true;
            std::string detail;
            for_each_permutation(n, [&](const Permutation& sigma) {
                if (!ok) return;
                const FiberReport r = fiber_check(n, m, sigma);
                if (!r.ok) {
                    ok = false;
                    detail = r.detail;
                }
            });
            s.line("fiber map, n=" + std::to_string(n) + " m=" + std::to_string(m) +
                       ", all sigma",
                   ok, detail);
        }
    }
}

void suite_routes(Suite& s) {
    auto sweep = [&](int n, int m, bool& ok, std::string& detail) {
        for (const Partition& lambda : partitions_of(n)) {
            const Int a = oracle_sum(lambda, m);
            const Int b = plethysm_sum(lambda, m);
            if (a != b) {
                ok = false;
                detail = "lambda=" + lambda.to_string() + " m=" + std::to_string(m) +
                         ": oracle " + a.str() + " vs character route " + b.str();
                return;
            }
        }
    };
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 4 && ok; ++n)
        for (int m = 1; m <= 3 && ok; ++m) sweep(n, m, ok, detail);
    for (int n = 1; n <= 3 && ok; ++n)
        for (int m = 1; m <= 4 && ok; ++m) sweep(n, m, ok, detail);
    for (int m = 1; m <= 6 && ok; ++m) sweep(2, m, ok, detail);
    s.line("sum of plethysm multiplicities, oracle vs <chi, N^m>, both routes", ok, detail);
}

void suite_ehrhart(Suite& s) {
    const FitOptions opt = fit_options_from_env();
    for (int n = 1; n <= std::min(s.cap(4), 4); ++n) {
        bool ok = true;
        std::string detail;
        for (const Partition& rho : cycle_types(n)) {
            const Quasipolynomial q = fit_n_rho(rho, opt);  // throws if degree mismatches
            const Permutation sigma = representative(rho);
            const int extra = 2 * (q.degree + 1) * q.period;
            for (int m = 0; m < extra; ++m) {
                if (q.evaluate(m) != Rat(count_fixed(sigma, m))) {
                    ok = false;
                    detail = "rho=" + rho.to_string() + " m=" + std::to_string(m);
                    break;
                }
            }
            if (!ok) break;
        }
        s.line("Ehrhart fit, degree formula + fresh-sample validation, n=" + std::to_string(n),
               ok, detail);
    }
}

void suite_parity(Suite& s) {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 30 && ok; ++n) {
        int max_deg = -1;
        Partition argmax;
        for (const Partition& rho : partitions_of(n)) {
            if (!parity_check(rho)) {
                ok = false;
                detail = "parity fails at rho=" + rho.to_string();
                break;
            }
            const int d = degree_formula(rho);
            if (d > max_deg) {
                max_deg = d;
                argmax = rho;
            }
        }
        if (ok && (max_deg != n * (n - 1) / 2 || argmax.length() != n)) {
            ok = false;
            detail = "degree bound fails at n=" + std::to_string(n);
        }
    }
    s.line("degree parity + degree bound, all rho of n <= 30", ok, detail);
}

void suite_reciprocity(Suite& s) {
    const FitOptions opt = fit_options_from_env();
    for (int n = 1; n <= std::min(s.cap(4), 4); ++n) {
        const CheckReport r = reciprocity_check(n, 0, 10, opt);
        s.line("reciprocity + vanishing window, n=" + std::to_string(n) + ", m=0..10", r.ok,
               r.detail);
    }
}

void suite_asymptotics(Suite& s) {
    const FitOptions opt = fit_options_from_env();
    for (int n = 1; n <= std::min(s.cap(4), 4); ++n) {
        const CheckReport r = asymptotics_check(n, opt);
        s.line("asymptotic leading term, n=" + std::to_string(n), r.ok, r.detail);
    }
}

void suite_burnside(Suite& s) {
    for (int n = 1; n <= std::min(s.cap(4), 4); ++n) {
        for (int m = 1; m <= 3; ++m) {
            const CheckReport r = burnside_check(n, m);
            s.line("transpose-fixed class count vs <1, N^m>, n=" + std::to_string(n) +
                       " m=" + std::to_string(m),
                   r.ok, r.detail);
        }
    }
}

void suite_orbits(Suite& s) {
    const Int max_orbit = env_big("PLETH_MAX_ORBIT", Int(1000000));
    for (int n = 1; n <= std::min(s.cap(4), 4); ++n) {
        const CharacterTable& table = CharacterTable::get(n);
        for (int m = 1; m <= 3; ++m) {
            bool ok = true;
            std::string detail;
            ClassFunction total(n);
            Int matrices = 0;
            for (const OrbitClass& c : orbit_classes(n, m)) {
                matrices += c.orbit_size;
                const ClassFunction f = n_c(c, max_orbit);
                const Rat one_ip = inner_product(ClassFunction::trivial(n), f);
                if (c.transpose_fixed) {
                    total += f;
                    if (one_ip != 1) {
                        ok = false;
                        detail = "<1, N^C> != 1 for a transpose-fixed class";
                        break;
                    }
                } else if (one_ip != 0) {
                    ok = false;
                    detail = "<1, N^s> != 0 for a non-transpose-fixed class";
                    break;
                }
                for (const Partition& lambda : table.lambdas()) {
                    const Rat ip = inner_product(table.character(lambda), f);
                    const Rat dim(character_dimension(lambda));
                    if (ip > dim || ip < -dim) {
                        ok = false;
                        detail = "|<chi, N^C>| > dim at lambda=" + lambda.to_string();
                        break;
                    }
                    if (c.transpose_fixed && stabilizer_inner_product(c, lambda) != ip) {
                        ok = false;
                        detail = "stabilizer route mismatch at lambda=" + lambda.to_string();
                        break;
                    }
                }
                if (!ok) break;
            }
            if (ok && matrices != count_M(n, m)) {
                ok = false;
                detail = "orbit sizes do not sum to |M(n,m)|";
            }
            if (ok && !(total == n_class_function(n, m))) {
                ok = false;
                detail = "sum of N^C over transpose-fixed classes differs from N^m";
            }
            s.line("orbit decomposition + per-class identities, n=" + std::to_string(n) +
                       " m=" + std::to_string(m),
                   ok, detail);
        }
    }
}

void suite_m2(Suite& s) {
    for (int n = 1; n <= 10; ++n) {
        const ClassFunction f = n_class_function(n, 2);
        const Rat one = inner_product(ClassFunction::trivial(n), f);
        const Rat sgn = inner_product(ClassFunction::sign(n), f);
        const bool ok = one == Rat(static_cast<int>(partitions_of(n).size())) &&
                        sgn == Rat(count_odd_part_partitions(n));
        s.line("<1, N^2> = p(n) and <sgn, N^2> = #odd-part partitions, n=" + std::to_string(n),
               ok);
    }
    for (int n = 1; n <= std::min(s.cap(8), 8); ++n) {
        const CheckReport r = m2_sign_check(n);
        s.line("m=2 classification, lambda_C bijection + sign rule, n=" + std::to_string(n),
               r.ok, r.detail);
    }
}

void suite_foulkes(Suite& s) {
    const Int max_matrices = env_big("PLETH_MAX_MATRICES", Int(200000));
    const FoulkesTable table = foulkes_table(std::min(s.cap(4), 6), 4, max_matrices);
    bool ok = true;
    std::string detail;
    for (const FoulkesCell& c : table.cells) {
        if (!c.routes_agree) {
            ok = false;
            detail = "routes disagree at (n,m)=(" + std::to_string(c.n) + "," +
                     std::to_string(c.m) + ")";
            break;
        }
    }
    s.line("transpose-fixed class counts, orbit route vs character route", ok, detail);
    std::string viols;
    for (auto [n, m] : table.violations)
        viols += " (" + std::to_string(n) + "," + std::to_string(m) + ")";
    s.line("#T(n,m)/~ <= #T(m,n)/~ for computed pairs with n <= m", table.violations.empty(),
           viols.empty() ? "no counterexamples in range (not a proof)" : "violations:" + viols);
}

int cmd_paper_suite(Suite& s) {
    if (s.wants("theta")) suite_theta(s);
    if (s.wants("fiber")) suite_fiber(s);
    if (s.wants("routes")) suite_routes(s);
    if (s.wants("ehrhart")) suite_ehrhart(s);
    if (s.wants("parity")) suite_parity(s);
    if (s.wants("reciprocity")) suite_reciprocity(s);
    if (s.wants("asymptotics")) suite_asymptotics(s);
    if (s.wants("burnside")) suite_burnside(s);
    if (s.wants("orbits")) suite_orbits(s);
    if (s.wants("m2")) suite_m2(s);
    if (s.wants("foulkes")) suite_foulkes(s);
    if (s.wants("example13"))
        s.skip("degree-15 quasipolynomial for n=6, lambda=[6]",
               "not reproducible by direct enumeration at this scale; "
               "the n <= 4 quasipolynomial checks stand in its place");
    return s.any_fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations around counting the irreducible constituents of s_lambda[s_m]"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "worker thread bound (results are independent of it)")
        ->check(CLI::PositiveNumber);

    std::string lambda_arg, rho_arg;
    int n = 0, m = 0;
    bool verify = false, full = false, sum_only = false, pretty = false;
    int n_max = 4, m_max = 4;

    auto* sum = app.add_subcommand("sum", "<chi^lambda, N^m> via the matrix-count character");
    sum->add_option("--lambda", lambda_arg, "partition, comma-separated parts")->required();
    sum->add_option("--m", m, "inner Schur row length")->required()->check(CLI::NonNegativeNumber);
    sum->add_flag("--verify", verify, "cross-check against the symmetric-function oracle");

    auto* oracle = app.add_subcommand("oracle", "brute-force expansion of s_lambda[s_m]");
    oracle->add_option("--lambda", lambda_arg)->required();
    oracle->add_option("--m", m)->required()->check(CLI::NonNegativeNumber);
    oracle->add_flag("--full", full, "emit all constituents (default)");
    oracle->add_flag("--sum-only", sum_only, "emit just the constituent count");

    auto* nchar = app.add_subcommand("nchar", "the class function N^m on S_n");
    nchar->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    nchar->add_option("--m", m)->required()->check(CLI::NonNegativeNumber);

    auto* quasipoly = app.add_subcommand("quasipoly", "fitted quasipolynomial, JSON");
    auto* qrho = quasipoly->add_option("--rho", rho_arg, "fit N_rho for this cycle type");
    quasipoly->add_option("--lambda", lambda_arg, "sum quasipolynomial for this shape")
        ->excludes(qrho);

    auto* classes = app.add_subcommand("classes", "permutation-equivalence classes of M(n,m)");
    classes->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    classes->add_option("--m", m)->required()->check(CLI::NonNegativeNumber);

    auto* foulkes = app.add_subcommand("foulkes", "transpose-fixed class counts, both routes");
    foulkes->add_option("--n-max", n_max)->check(CLI::PositiveNumber);
    foulkes->add_option("--m-max", m_max)->check(CLI::PositiveNumber);
    foulkes->add_flag("--pretty", pretty, "plain table instead of JSON");

    auto* chartable = app.add_subcommand("chartable", "character table of S_n as CSV");
    chartable->add_option("--n", n)->required()->check(CLI::PositiveNumber);

    Suite suite;
    auto* paper = app.add_subcommand("paper-suite", "desk-scale verification battery");
    paper->add_option("--only", suite.only,
                      "restrict to named checks: theta fiber routes ehrhart parity "
                      "reciprocity asymptotics burnside orbits m2 foulkes example13");
    paper->add_option("--n-max", suite.n_max)->check(CLI::PositiveNumber);
    paper->add_option("--nm-max", suite.nm_max)->check(CLI::PositiveNumber);
    paper->add_flag("--extended", suite.extended, "larger theta guard (k <= 8)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sum->parsed()) return cmd_sum(parse_partition(lambda_arg), m, verify);
        if (oracle->parsed()) return cmd_oracle(parse_partition(lambda_arg), m, sum_only);
        if (nchar->parsed()) return cmd_nchar(n, m);
        if (quasipoly->parsed()) {
            if (rho_arg.empty() && lambda_arg.empty())
                throw CLI::ValidationError("quasipoly", "need --rho or --lambda");
            return cmd_quasipoly(rho_arg, lambda_arg);
        }
        if (classes->parsed()) return cmd_classes(n, m);
        if (foulkes->parsed()) return cmd_foulkes(n_max, m_max, pretty);
        if (chartable->parsed()) return cmd_chartable(n);
        if (paper->parsed()) return cmd_paper_suite(suite);
    } catch (const GuardExceeded& e) {
        std::cerr << "guard exceeded: " << e.what() << "\n";
        return 2;
    } catch (const FitFailure& e) {
        std::cerr << "fit failure: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
