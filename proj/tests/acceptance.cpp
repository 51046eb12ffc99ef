// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "laguerre/bijections.hpp"
#include "laguerre/claims.hpp"
#include "laguerre/genfun.hpp"
#include "laguerre/involution.hpp"
#include "laguerre/mfs_action.hpp"
#include "laguerre/stat_registry.hpp"

using namespace laguerre;

namespace {

struct Result {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int number;
    std::string title;
    double limit_seconds;  // 0: no limit
    std::function<Result()> run;
};

// Runs each claim for n = 1..n_max and records the first failure.
Result claims_up_to(const std::vector<std::string>& ids, int n_max, const ClaimOptions& opts = {}) {
    Result r;
    long long checked = 0;
    for (const auto& id : ids) {
        const bool ok = verify_claim(id, n_max, opts, [&](const ClaimReport& rep) {
            checked += rep.checked;
            if (!rep.pass && r.pass) {
                r.pass = false;
                r.detail = id + " fails at n=" + std::to_string(rep.n) +
                           (rep.counterexample ? " " + rep.counterexample->dump() : "");
            }
        });
        if (!ok) return r;
    }
    r.detail = std::to_string(ids.size()) + " claims, n<=" + std::to_string(n_max) + ", " + std::to_string(checked) +
               " objects";
    return r;
}

Result both(Result a, const Result& b) {
    if (!a.pass) return a;
    if (!b.pass) return b;
    a.detail += "; " + b.detail;
    return a;
}

Result cardinality() {
    for (int n = 1; n <= 10; ++n) {
        long long count = 0;
        for_each_history(n, [&](const LaguerreHistory&) { ++count; });
        if (count != factorial(n))
            return {false, "n=" + std::to_string(n) + " has " + std::to_string(count) + " histories"};
    }
    return {true, "n!=|histories| for n<=10"};
}

Result involution() {
    Result r = claims_up_to({"thm3.2-involution"}, 8);
    if (!r.pass) return r;
    std::array<std::uint64_t, 14> coverage{};
    for (int n = 1; n <= 5; ++n)
        for_each_history(n, [&](const LaguerreHistory& W) { check_xi_cases(W, xi(W), xi_case_table(), &coverage); });
    for (int row = 0; row < 14; ++row)
        if (coverage[row] == 0) return {false, "case row " + std::to_string(row + 1) + " unused by n=5"};
    r.detail += "; all 14 case rows used by n=5";
    return r;
}

Result round_trips() {
    for (int n = 1; n <= 8; ++n) {
        std::string bad;
        for_each_permutation(n, [&](const Permutation& pi) {
            if (!bad.empty()) return;
            if (phi_fv_inv(phi_fv(pi)) != pi) bad = "fv on " + to_string(pi);
            else if (phi_fz_inv(phi_fz(pi)) != pi) bad = "fz on " + to_string(pi);
            else if (phi_yzl_inv(phi_yzl(pi)) != pi) bad = "yzl on " + to_string(pi);
        });
        for_each_history(n, [&](const LaguerreHistory& W) {
            if (!bad.empty()) return;
            if (!(phi_fv(phi_fv_inv(W)) == W)) bad = "fv-inv on " + to_string(W);
            else if (!(phi_fz(phi_fz_inv(W)) == W)) bad = "fz-inv on " + to_string(W);
            else if (!(phi_yzl(phi_yzl_inv(W)) == W)) bad = "yzl-inv on " + to_string(W);
        });
        if (!bad.empty()) return {false, "round trip fails: " + bad};
    }
    return {true, "three bijections, both directions, n<=8"};
}

Result anchors() {
    const LaguerreHistory anchor = parse_history("NNNDESDSS/0,0,0,2,1,3,2,2,1");
    auto P = [](const char* s) { return parse_permutation(s); };
    if (!(phi_fv(P("618742593")) == anchor)) return {false, "fv anchor"};
    if (!(phi_fz(P("947612853")) == anchor)) return {false, "fz anchor"};
    if (!(phi_yzl(P("671395482")) == anchor)) return {false, "yzl anchor"};
    const Permutation rho = conjugated_map(P("671395482"), ConjugatedMap::Rho);
    if (rho != P("937628145")) return {false, "rho gives " + to_string(rho)};
    const Permutation mfs = mfs_full(P("596137428"));
    if (mfs != P("695147328")) return {false, "mfs gives " + to_string(mfs)};
    return {true, "fv, fz, yzl, rho, mfs examples exact"};
}

Result mahonian_suite() {
    const MultiPoly q8 = q_factorial(8);
    if (q8.dense_coefficients().size() != 29 || q8.value_at_ones() != 40320) return {false, "[8]_q! shape"};
    if (mahonian_ids().size() != 35) return {false, std::to_string(mahonian_ids().size()) + " registered statistics"};
    return both(claims_up_to({"tab3-mahonian", "tab2-mahonian", "thm4.20", "lem4.21", "lem4.22"}, 8),
                claims_up_to({"eq34"}, 7));
}

Result moments() {
    auto ints = [](const std::vector<BigInt>& v) {
        std::ostringstream out;
        for (std::size_t k = 0; k < v.size(); ++k) out << (k ? "," : "") << v[k];
        return out.str();
    };
    const auto a0 = ints(jacobi_moments([](int k) { return BigInt(2 * k + 1); }, [](int k) { return BigInt(k) * k; }, 8));
    const auto a1 =
        ints(jacobi_moments([](int k) { return BigInt(2 * k + 2); }, [](int k) { return BigInt(k) * (k + 1); }, 6));
    if (a0 != "1,1,2,6,24,120,720,5040") return {false, "alpha=0 gives " + a0};
    if (a1 != "1,2,6,24,120,720") return {false, "alpha=1 gives " + a1};
    Result r = claims_up_to({"moments-alpha0", "moments-alpha1"}, 8);
    r.detail = a0 + " / " + a1 + "; " + r.detail;
    return r;
}

Result specializations() {
    const std::map<std::string, Monomial> eulerian = {
        {"t1", {{"t", 1}}}, {"t2", {{"t", 1}}}, {"t3", {}}, {"t4", {}}, {"r", {}},
        {"s", {}},          {"x", {}},          {"v", {}},  {"w", {}}};
    const std::string a3 = to_string(specialize(a_polynomial(3), eulerian, {"t"}));
    if (a3 != "1 + 4 t + t^2") return {false, "A_3 gives " + a3};
    const long long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
    for (int n = 1; n <= 7; ++n) {
        const MultiPoly direct = qt_catalan_direct(n);
        if (!(direct == qt_catalan_limit(n))) return {false, "p->0 limit differs at n=" + std::to_string(n)};
        if (direct.value_at_ones() != catalan[n]) return {false, "Catalan number wrong at n=" + std::to_string(n)};
    }
    return {true, "A_3 Eulerian; limit path equals direct sum and C_n for n<=7"};
}

// Whole-field corruptions of each case-table row.
Result mutation_sensitivity() {
    int mutants = 0, caught = 0;
    std::string missed;
    for (int row = 0; row < 14; ++row)
        for (int field = 0; field < 5; ++field) {
            XiCaseTable t = xi_case_table();
            XiCase& c = t[row];
            switch (field) {
                case 0: c.g_here += 1; break;
                case 1: c.g_next += 1; break;
                case 2: c.b_lo += 1; break;
                case 3: c.v_j = c.v_j == StepClass::NE ? StepClass::SdE : StepClass::NE; break;
                default: c.diff_lo += 2; c.diff_hi += 2; break;
            }
            ClaimOptions o;
            o.table = &t;
            ++mutants;
            bool detected = false;
            for (const char* id : {"thm3.2-involution", "cor1.1"})
                for (int n = 1; n <= 4 && !detected; ++n)
                    if (!run_claim(id, n, o).pass) detected = true;
            if (detected) ++caught;
            else if (missed.empty()) missed = "row " + std::to_string(row + 1) + " field " + std::to_string(field);
        }
    if (caught != mutants) return {false, std::to_string(mutants - caught) + " mutants survive, first " + missed};
    return {true, std::to_string(mutants) + " single-row mutants all caught by n<=4"};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "cardinality", 60, cardinality},
        {2, "involution", 120, involution},
        {3, "involution corollaries", 0, [] { return claims_up_to({"cor3.3", "cor3.6", "cor1.1"}, 7); }},
        {4, "bijectivity", 0, round_trips},
        {5, "anchors", 0, anchors},
        {6, "pointwise propositions", 0,
         [] {
             return claims_up_to({"prop4.3", "prop4.10", "prop4.17", "lem4.14", "cor4.4", "csz-corollary",
                                  "eta-corollary", "rho-corollary"},
                                 8);
         }},
        {7, "equidistributions", 0,
         [] { return both(claims_up_to({"eq14", "eq17", "eq18", "eq19"}, 8), claims_up_to({"eq19-restricted"}, 10)); }},
        {8, "mfs action and extrema", 0, [] { return claims_up_to({"thm4.6", "fact4.8"}, 7); }},
        {9, "mahonian suite", 0, mahonian_suite},
        {10, "fz factorizations", 0, [] { return claims_up_to({"thm4.23-eq35", "thm4.23-eq36"}, 8); }},
        {11, "moments", 0, moments},
        {12, "specializations", 0, specializations},
        {13, "mutation sensitivity", 0, mutation_sensitivity},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Result r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (r.pass && c.limit_seconds > 0 && secs > c.limit_seconds) {
            r.pass = false;
            r.detail += "; over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit";
        }
        if (!r.pass) ++failures;
        std::printf("criterion %2d %-24s %s  %.2fs  %s\n", c.number, c.title.c_str(), r.pass ? "PASS" : "FAIL", secs,
                    r.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
