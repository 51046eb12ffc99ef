#include "laguerre/claims.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>

#include "laguerre/bijections.hpp"
#include "laguerre/mfs_action.hpp"
#include "laguerre/patterns.hpp"
#include "laguerre/perm_stats.hpp"
#include "laguerre/stat_registry.hpp"
#include "laguerre/sweep.hpp"

namespace laguerre {

namespace {

using nlohmann::json;

// Thrown inside an enumeration callback to leave the enumeration early.
struct StopSweep {};

// Records the first failed comparison of a pointwise check.
class Check {
public:
    void eq(const char* what, const IntMultiset& a, const IntMultiset& b) {
        if (!reason && !(a == b)) reason = std::string(what) + ": " + to_string(a) + " vs " + to_string(b);
    }
    void eq(const char* what, long long a, long long b) {
        if (!reason && a != b) reason = std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b);
    }
    void eq(const char* what, const Permutation& a, const Permutation& b) {
        if (!reason && !(a == b)) reason = std::string(what) + ": " + to_string(a) + " vs " + to_string(b);
    }
    void eq(const char* what, const LaguerreHistory& a, const LaguerreHistory& b) {
        if (!reason && !(a == b)) reason = std::string(what) + ": " + to_string(a) + " vs " + to_string(b);
    }
    void holds(const std::string& what, bool ok) {
        if (!reason && !ok) reason = what;
    }

    std::optional<std::string> reason;
};

struct PartResult {
    long long checked = 0;
    std::optional<json> counterexample;
};

ClaimOutcome merge_parts(const std::vector<PartResult>& parts) {
    ClaimOutcome out;
    for (const auto& p : parts) {
        out.checked += p.checked;
        if (p.counterexample) {
            out.pass = false;
            out.counterexample = p.counterexample;
            break;
        }
    }
    return out;
}

void lower_to(std::atomic<int>& a, int v) {
    int cur = a.load();
    while (v < cur && !a.compare_exchange_weak(cur, v)) {
    }
}

// Applies `check` to every object of every part. A part stops at its first
// failure, and parts after the earliest failing part give up as soon as they
// notice, so the merged result does not depend on the thread count.
template <class Obj>
ClaimOutcome sweep(int parts, int threads,
                   const std::function<void(int, const std::function<void(const Obj&)>&)>& enumerate_part,
                   const char* key, const std::function<void(const Obj&, Check&)>& check) {
    std::atomic<int> first_bad{parts};
    const auto results = run_partitioned<PartResult>(parts, threads, [&](int p) {
        PartResult r;
        try {
            enumerate_part(p, [&](const Obj& obj) {
                if (p > first_bad.load()) throw StopSweep{};
                ++r.checked;
                Check c;
                try {
                    check(obj, c);
                } catch (const Error& e) {
                    c.reason = std::string("exception: ") + e.what();
                }
                if (c.reason) {
                    r.counterexample = json{{key, to_string(obj)}, {"reason", *c.reason}};
                    lower_to(first_bad, p);
                    throw StopSweep{};
                }
            });
        } catch (const StopSweep&) {
        }
        return r;
    });
    return merge_parts(results);
}

using PermCheck = std::function<void(const Permutation&, Check&)>;
using HistCheck = std::function<void(const LaguerreHistory&, Check&)>;

ClaimOutcome sweep_permutations(int n, int threads, const PermCheck& check) {
    return sweep<Permutation>(
        n, threads,
        [n](int p, const std::function<void(const Permutation&)>& fn) { for_each_permutation_starting_with(n, p + 1, fn); },
        "permutation", check);
}

ClaimOutcome sweep_histories(int n, int threads, const HistCheck& check) {
    const auto prefixes = history_prefixes(n, std::min(n, 3));
    return sweep<LaguerreHistory>(
        static_cast<int>(prefixes.size()), threads,
        [&](int p, const std::function<void(const LaguerreHistory&)>& fn) {
            for_each_history_with_prefix(n, prefixes[p], fn);
        },
        "history", check);
}

using Key = std::vector<long long>;
using Tally = std::map<Key, long long>;
using KeyPair = std::function<std::pair<Key, Key>(StatEvaluator&)>;

// Equidistribution of two statistic tuples: the two tallies must coincide.
ClaimOutcome compare_tallies(const std::vector<std::pair<Tally, Tally>>& parts, long long count) {
    Tally left, right;
    for (const auto& [l, r] : parts) {
        for (const auto& [k, c] : l) left[k] += c;
        for (const auto& [k, c] : r) right[k] += c;
    }
    ClaimOutcome out;
    out.checked = count;
    if (left == right) return out;
    out.pass = false;
    Tally keys = left;
    for (const auto& [k, c] : right) keys[k];
    for (const auto& [k, c] : keys) {
        const long long a = left.count(k) ? left.at(k) : 0;
        const long long b = right.count(k) ? right.at(k) : 0;
        if (a != b) {
            out.counterexample = json{{"tuple", k}, {"left", a}, {"right", b}};
            break;
        }
    }
    return out;
}

ClaimOutcome equidistribution(int n, int threads, const KeyPair& keys) {
    const auto parts = run_partitioned<std::pair<Tally, Tally>>(n, threads, [&](int p) {
        std::pair<Tally, Tally> t;
        for_each_permutation_starting_with(n, p + 1, [&](const Permutation& pi) {
            StatEvaluator ev(pi);
            auto [l, r] = keys(ev);
            ++t.first[l];
            ++t.second[r];
        });
        return t;
    });
    return compare_tallies(parts, factorial(n));
}

ClaimOutcome equidistribution_avoiding(int n, const std::vector<int>& pattern, const KeyPair& keys) {
    std::pair<Tally, Tally> t;
    long long count = 0;
    for_each_avoider(n, pattern, [&](const Permutation& pi) {
        StatEvaluator ev(pi);
        auto [l, r] = keys(ev);
        ++t.first[l];
        ++t.second[r];
        ++count;
    });
    return compare_tallies({t}, count);
}

// Every listed statistic must have distribution [n]_q! over S_n.
ClaimOutcome mahonian_distributions(int n, int threads, const std::vector<std::string>& ids) {
    using Counts = std::vector<std::map<long long, long long>>;
    const auto parts = run_partitioned<Counts>(n, threads, [&](int p) {
        Counts c(ids.size());
        for_each_permutation_starting_with(n, p + 1, [&](const Permutation& pi) {
            StatEvaluator ev(pi);
            for (std::size_t k = 0; k < ids.size(); ++k) ++c[k][ev.value(ids[k])];
        });
        return c;
    });
    const MultiPoly expected = q_factorial(n);
    ClaimOutcome out;
    out.checked = factorial(n);
    for (std::size_t k = 0; k < ids.size(); ++k) {
        MultiPoly got({"q"});
        for (const auto& part : parts)
            for (const auto& [deg, cnt] : part[k]) got.add_term({static_cast<int>(deg)}, cnt);
        if (!(got == expected)) {
            out.pass = false;
            out.counterexample = json{{"statistic", ids[k]}, {"distribution", to_string(got)}, {"expected", to_string(expected)}};
            return out;
        }
    }
    return out;
}

long long card(const IntMultiset& m) { return m.cardinality(); }


// ---------------------------------------------------------------------------

ClaimOutcome involution_claim(int n, const ClaimOptions& o, const XiFunction& inv) {
    const XiCaseTable& table = o.table ? *o.table : xi_case_table();
    return sweep_histories(n, o.threads, [&](const LaguerreHistory& W, Check& c) {
        const LaguerreHistory V = inv(W);
        c.eq("involution applied twice", inv(V), W);
        c.holds("defining conditions fail for the image", verify_xi_contract(W, V));
        const XiCaseCheck cases = check_xi_cases(W, V, table);
        if (!cases.ok)
            c.holds("case table, step " + std::to_string(cases.step) + ", row " + std::to_string(cases.row + 1) + ": " +
                        cases.reason,
                    false);
    });
}

ClaimOutcome cor33(int n, const ClaimOptions& o, const XiFunction& inv) {
    return sweep_histories(n, o.threads, [&](const LaguerreHistory& W, Check& c) {
        const auto a = history_statistics(W);
        const auto b = history_statistics(inv(W));
        c.eq("ht-wt", card(a.ht) - card(a.wt), card(b.ht) - card(b.wt));
        c.eq("neb vs sdea", card(a.neb), card(b.sdea));
        c.eq("sdeb vs nea", card(a.sdeb), card(b.nea));
        c.eq("nea vs sdeb", card(a.nea), card(b.sdeb));
        c.eq("sdea vs neb", card(a.sdea), card(b.neb));
    });
}

ClaimOutcome cor36(int n, const ClaimOptions& o, const XiFunction& inv) {
    return sweep_histories(n, o.threads, [&](const LaguerreHistory& W, Check& c) {
        const auto a = history_statistics(W);
        const auto b = history_statistics(inv(W));
        const int m = n + 1;
        c.eq("Neb", a.neb, kappa(m, b.sdea));
        c.eq("Sdeb", a.sdeb, kappa(m, b.nea));
        c.eq("Nea", a.nea, kappa(m, b.sdeb));
        c.eq("Sdea", a.sdea, kappa(m, b.neb));
        c.eq("Ht", a.ht, kappa(m, (b.ht + b.neb) - b.sdea));
        c.eq("Wt", a.wt, kappa(m, (b.wt + b.neb) - b.sdea));
        const IntMultiset all = IntMultiset::interval(1, n - 1);
        c.eq("Nde complement", all - a.nde, kappa(n, b.nde));
        c.eq("Asc complement", all - a.asc, kappa(n, b.asc));
    });
}

// A_n(t1,t2,t3,t4,r,s,x,v,w) = r^{n-1} s^{n-1} x^{n+1} A_n(t4, t3/(vw), t2 vw, t1, 1/r, 1/s, 1/x, v, w)
bool a_functional_equation(int n, int threads) {
    const MultiPoly a = a_polynomial(n, threads);
    const std::map<std::string, Monomial> subst = {
        {"t1", {{"t4", 1}}}, {"t2", {{"t3", 1}, {"v", -1}, {"w", -1}}}, {"t3", {{"t2", 1}, {"v", 1}, {"w", 1}}},
        {"t4", {{"t1", 1}}}, {"r", {{"r", -1}}}, {"s", {{"s", -1}}}, {"x", {{"x", -1}}}};
    MultiPoly factor(a_variables());
    factor.add_term({0, 0, 0, 0, n - 1, n - 1, n + 1, 0, 0}, 1);
    return a == factor * specialize(a, subst, a_variables());
}

ClaimOutcome cor11(int n, const ClaimOptions& o, const XiFunction& inv) {
    ClaimOutcome out = sweep_histories(n, o.threads, [&](const LaguerreHistory& W, Check& c) {
        const auto w = a_exponents(W);
        const auto v = a_exponents(inv(W));
        const std::array<int, 9> expected = {v[3], v[2], v[1], v[0], n - 1 - v[4], n - 1 - v[5], n + 1 - v[6],
                                             v[7] - v[1] + v[2], v[8] - v[1] + v[2]};
        c.holds("monomial exponents differ from the transformed exponents of the image", w == expected);
    });
    if (out.pass && !a_functional_equation(n, o.threads)) {
        out.pass = false;
        out.counterexample = json{{"reason", "functional equation of the generating polynomial fails"}};
    }
    return out;
}

ClaimOutcome prop43(int n, const ClaimOptions& o) {
    return sweep_permutations(n, o.threads, [&](const Permutation& pi, Check& c) {
        const auto L = linear_family(pi);
        const auto P = pattern_multisets(pi);
        const auto H = history_statistics(phi_fv(pi));
        c.eq("last letter vs cs", pi(n), H.cs);
        c.eq("Dtb", L.dtb, H.sdeb);
        c.eq("Dta", L.dta, H.sdea);
        c.eq("Dbb", L.dbb, H.ndeb);
        c.eq("Dba", L.dba, H.ndea);
        c.eq("Abb", L.abb, H.neb);
        c.eq("Aba", L.aba, H.nea);
        c.eq("Ides", L.ides, H.asc);
        c.eq("Ddif", L.ddif, H.ht);
        c.eq("Dt+2-31", L.dt + P.two_31, H.wt);
        c.eq("2-13", P.two_13, (H.wt - H.nea) - H.sdea);
        c.eq("2-31", P.two_31, (H.wt - H.sdeb) - H.sdea);
        c.eq("31-2", P.thirtyone_2, H.ht - H.wt);
        c.eq("2-13 from 2-31", P.two_13, (P.two_31 - L.aba) + L.dtb);
        c.eq("31-2 from Ddif", P.thirtyone_2, (L.ddif - L.dt) - P.two_31);
    });
}

ClaimOutcome cor44(int n, const ClaimOptions& o, const XiFunction& inv) {
    return sweep_permutations(n, o.threads, [&](const Permutation& pi, Check& c) {
        const Permutation s = phi_fv_inv(inv(phi_fv(pi)));
        const auto L = linear_family(pi), Ls = linear_family(s);
        const auto P = pattern_multisets(pi), Ps = pattern_multisets(s);
        const int m = n + 1;
        c.eq("Dtb", L.dtb, kappa(m, Ls.aba));
        c.eq("Dta", L.dta, kappa(m, Ls.abb));
        c.eq("Abb", L.abb, kappa(m, Ls.dta));
        c.eq("Aba", L.aba, kappa(m, Ls.dtb));
        c.eq("2-13", P.two_13, kappa(m, Ps.two_31));
        c.eq("2-31", P.two_31, kappa(m, Ps.two_13));
        c.eq("31-2", P.thirtyone_2, kappa(m, Ps.thirtyone_2));
        const IntMultiset all = IntMultiset::interval(1, n - 1);
        c.eq("Db complement", all - L.db, kappa(n, Ls.db));
        c.eq("Ides complement", all - L.ides, kappa(n, Ls.ides));
    });
}

ClaimOutcome thm46(int n, const ClaimOptions& o) {
    return sweep_permutations(n, o.threads, [&](const Permutation& pi, Check& c) {
        const Permutation s = mfs_full(pi);
        const auto K = starred_kinds(pi), Ks = starred_kinds(s);
        const auto P = pattern_multisets(pi), Ps = pattern_multisets(s);
        const long long des = card(linear_family(pi).des), des_s = card(linear_family(s).des);
        c.eq("involution", mfs_full(s), pi);
        c.eq("des", des_s, n - 1 - des);
        c.eq("2-13", Ps.two_13, P.two_13);
        c.eq("31-2", Ps.thirtyone_2, P.thirtyone_2);
        // The final descending run counts as reaching down to 0, which adds
        // every letter below the last one on both sides.
        c.eq("2-31", Ps.two_31 + IntMultiset::interval(1, s(n) - 1),
             ((P.two_31 + IntMultiset::interval(1, pi(n) - 1)) + K.double_descents) - K.double_ascents);
        c.eq("lpk = lval + 1", card(K.peaks), card(K.valleys) + 1);
        c.eq("des = lval + ldd", des, card(K.valleys) + card(K.double_descents));
        c.eq("ldd vs image lda", card(K.double_descents), card(Ks.double_ascents));
        c.eq("lda vs image ldd", card(K.double_ascents), card(Ks.double_descents));
        c.eq("peaks preserved", K.peaks, Ks.peaks);
        c.eq("valleys preserved", K.valleys, Ks.valleys);
    });
}

// Coordinate statistics counted through consecutive valley/peak pairs under
// the zero boundary, compared with the direct definitions.
ClaimOutcome fact48(int n, const ClaimOptions& o) {
    return sweep_permutations(n, o.threads, [&](const Permutation& pi, Check& c) {
        std::vector<int> extrema;
        std::vector<LinearKind> kind(n + 1);
        for (int p = 1; p <= n; ++p) {
            kind[p] = linear_kind_at(pi, p, Boundary::Zero);
            if (kind[p] == LinearKind::Peak || kind[p] == LinearKind::Valley) extrema.push_back(p);
        }
        // The final descending run ends at the last letter, which then acts as its valley.
        if (kind[n] != LinearKind::Peak) {
            extrema.push_back(n);
            kind[n] = LinearKind::Valley;
        }
        for (int i = 1; i <= n; ++i) {
            int a213 = 0, a231 = 0, a312 = 0;
            for (std::size_t t = 0; t + 1 < extrema.size(); ++t) {
                const int j = extrema[t], k = extrema[t + 1];
                if (kind[j] == LinearKind::Valley && kind[k] == LinearKind::Peak) {
                    if (i < j && pi(j) < pi(i) && pi(i) < pi(k)) ++a213;
                } else if (kind[j] == LinearKind::Peak && kind[k] == LinearKind::Valley) {
                    const bool between = pi(k) < pi(i) && pi(i) < pi(j);
                    if (i < j && between) ++a231;
                    if (k < i && between) ++a312;
                }
            }
            c.eq("2-13 at position", a213, coordinate_stat(pi, Coordinate::Two13, i));
            c.eq("2-31 at position", a231, coordinate_stat(pi, Coordinate::Two31, i));
            c.eq("31-2 at position", a312, coordinate_stat(pi, Coordinate::ThirtyOne2, i));
        }
    });
}

ClaimOutcome prop410(int n, const ClaimOptions& o) {
    return sweep_permutations(n, o.threads, [&](const Permutation& pi, Check& c) {
        const auto C = cyclic_family(pi);
        const auto H = history_statistics(phi_fz(pi));
        c.eq("last letter vs cs", pi(n), H.cs);
        c.eq("Excb", C.excb, H.sdeb);
        c.eq("Exca", C.exca, H.sdea);
        c.eq("Epb", C.epb, H.ndeb);
        c.eq("Epa", C.epa, H.ndea);
        c.eq("Nexcb", C.nexcb, H.neb);
        c.eq("Nexca", C.nexca, H.nea);
        c.eq("Edif", C.edif, H.ht);
        c.eq("Exc+Ine", C.exc + C.ine, H.wt);
        c.eq("(Ine+Excb)-Nexca", (C.ine + C.excb) - C.nexca, (H.wt - H.nea) - H.sdea);
        c.eq("Ine", C.ine, (H.wt - H.sdeb) - H.sdea);
        c.eq("Edif-Exc-Ine", (C.edif - C.exc) - C.ine, H.ht - H.wt);
    });
}

ClaimOutcome csz_corollary(int n, const ClaimOptions& o) {
    return sweep_permutations(n, o.threads, [&](const Permutation& pi, Check& c) {
        const Permutation s = phi_csz(pi);
        const auto L = linear_family(pi);
        const auto P = pattern_multisets(pi);
        const auto C = cyclic_family(s);
        c.eq("last letter", pi(n), s(n));
        c.eq("Dt vs Exc", L.dt, C.exc);
        c.eq("Db vs Ep", L.db, C.ep);
        c.eq("Ab vs Nexcb+Nexca", L.ab, C.nexcb + C.nexca);
        c.eq("2-13", P.two_13, (C.ine + C.excb) - C.nexca);
        c.eq("2-31 vs Ine", P.two_31, C.ine);
        c.eq("31-2", P.thirtyone_2, (C.edif - C.exc) - C.ine);
        c.eq("Dbot vs Ebot", L.dbot, C.ebot);
        c.eq("Ddif vs Edif", L.ddif, C.edif);
    });
}

ClaimOutcome eta_corollary(int n, const ClaimOptions& o, const XiFunction& inv) {
    return sweep_permutations(n, o.threads, [&](const Permutation& pi, Check& c) {
        const Permutation s = phi_fz_inv(inv(phi_fz(pi)));
        const auto C = cyclic_family(pi), Cs = cyclic_family(s);
        const int m = n + 1;
        auto ab = [](const CyclicStatRecord& r) { return r.nexcb + r.nexca; };
        auto two13 = [](const CyclicStatRecord& r) { return (r.ine + r.excb) - r.nexca; };
        auto rest = [](const CyclicStatRecord& r) { return (r.edif - r.exc) - r.ine; };
        c.eq("Exc", C.exc, kappa(m, ab(Cs)));
        c.eq("Nexcb+Nexca", ab(C), kappa(m, Cs.exc));
        c.eq("(Ine+Excb)-Nexca", two13(C), kappa(m, Cs.ine));
        c.eq("Ine", C.ine, kappa(m, two13(Cs)));
        c.eq("Edif-Exc-Ine", rest(C), kappa(m, rest(Cs)));
        c.eq("Ep complement", IntMultiset::interval(1, n - 1) - C.ep, kappa(n, Cs.ep));
    });
}

ClaimOutcome prop417(int n, const ClaimOptions& o) {
    return sweep_permutations(n, o.threads, [&](const Permutation& pi, Check& c) {
        const auto S = shifted_family(pi);
        const auto H = history_statistics(phi_yzl(pi));
        c.eq("Vnepb", S.vnepb, H.sdeb);
        c.eq("Vnepa", S.vnepa, H.sdea);
        c.eq("Vnexb", S.vnexb, H.ndeb);
        c.eq("Vnexa", S.vnexa, H.ndea);
        c.eq("Vepb", S.vepb, H.neb);
        c.eq("Vepa", S.vepa, H.nea);
        c.eq("Vedif", S.vedif, H.ht);
        c.eq("Vnep+Vnest", S.vnepb + S.vnepa + S.vnest_multiset, H.wt);
        c.eq("(Vnest+Vnepb)-Vepa", (S.vnest_multiset + S.vnepb) - S.vepa, (H.wt - H.nea) - H.sdea);
        c.eq("Vnest", S.vnest_multiset, (H.wt - H.sdeb) - H.sdea);
        c.eq("Vedif rest", ((S.vedif - S.vnepb) - S.vnepa) - S.vnest_multiset, H.ht - H.wt);
    });
}

ClaimOutcome lem414(int n, const ClaimOptions& o) {
    return sweep_permutations(n, o.threads, [&](const Permutation& pi, Check& c) {
        c.eq("pone vs cs", shifted_family(pi).pone, critical_step(phi_yzl(pi)));
    });
}

ClaimOutcome rho_corollary(int n, const ClaimOptions& o, const XiFunction& inv) {
    return sweep_permutations(n, o.threads, [&](const Permutation& pi, Check& c) {
        const Permutation s = phi_yzl_inv(inv(phi_yzl(pi)));
        const auto S = shifted_family(pi), Ss = shifted_family(s);
        const int m = n + 1;
        auto mixed = [](const ShiftedStatRecord& r) { return (r.vnest_multiset + r.vnepb) - r.vepa; };
        auto rest = [](const ShiftedStatRecord& r) { return ((r.vedif - r.vnepb) - r.vnepa) - r.vnest_multiset; };
        c.eq("Vnepb", S.vnepb, kappa(m, Ss.vepa));
        c.eq("Vnepa", S.vnepa, kappa(m, Ss.vepb));
        c.eq("Vepb", S.vepb, kappa(m, Ss.vnepa));
        c.eq("Vepa", S.vepa, kappa(m, Ss.vnepb));
        c.eq("(Vnest+Vnepb)-Vepa", mixed(S), kappa(m, Ss.vnest_multiset));
        c.eq("Vnest", S.vnest_multiset, kappa(m, mixed(Ss)));
        c.eq("Vedif rest", rest(S), kappa(m, rest(Ss)));
        c.eq("Vnex complement", IntMultiset::interval(1, n - 1) - S.vnex, kappa(n, Ss.vnex));
    });
}

ClaimOutcome tab3(int n, const ClaimOptions& o) {
    const auto& sums = mahonian_pattern_sums();
    ClaimOutcome out = sweep_permutations(n, o.threads, [&](const Permutation& pi, Check& c) {
        StatEvaluator ev(pi);
        for (const auto& [id, literals] : sums) {
            long long total = 0;
            for (const auto& lit : literals) total += vincular_count(pi, parse_pattern(lit));
            c.eq(id.c_str(), ev.value(id), total);
        }
        c.eq("inv vs inversions", ev.value("inv"), inversions(pi));
        c.eq("maj vs major index", ev.value("maj"), major_index(pi));
    });
    if (!out.pass) return out;
    return mahonian_distributions(n, o.threads, classical_mahonian_ids());
}

ClaimOutcome thm420(int n, const ClaimOptions& o) {
    return sweep_permutations(n, o.threads, [&](const Permutation& pi, Check& c) {
        StatEvaluator ev(pi), ec(complement(pi));
        c.eq("mad' vs sist'' of complement", ev.value("mad_p"), ec.value("sist_pp"));
        c.eq("madl' vs sist' of complement", ev.value("madl_p"), ec.value("sist_p"));
        c.eq("makl' vs makl of complement", ev.value("makl_p"), ec.value("makl"));
    });
}

ClaimOutcome lem421(int n, const ClaimOptions& o) {
    return sweep_permutations(n, o.threads, [&](const Permutation& pi, Check& c) {
        StatEvaluator ev(pi);
        c.eq("2u13 + u12 vs 2u31 + last - 1", ev.pattern("2u13") + ev.pattern("u12"), ev.pattern("2u31") + pi(n) - 1);
    });
}

ClaimOutcome lem422(int n, const ClaimOptions& o) {
    return sweep_permutations(n, o.threads, [&](const Permutation& pi, Check& c) {
        StatEvaluator ev(pi);
        const long long lhs = ev.pattern("3u12") + ev.pattern("u12_3") + ev.pattern("2u13") + ev.pattern("u13_2") +
                              ev.pattern("u12") + static_cast<long long>(n) * ev.value("des") -
                              (ev.pattern("1u32") + ev.pattern("u32_1") + ev.pattern("2u31") + ev.pattern("u31_2") +
                               2 * ev.pattern("u21"));
        c.eq("pattern identity", lhs, static_cast<long long>(n) * (n - 3) / 2 + pi(n));
    });
}

ClaimOutcome eq34(int n, const ClaimOptions& o) {
    static const char* const unprimed[] = {"den", "inv", "fz3", "fz4"};
    return sweep_permutations(n, o.threads, [&](const Permutation& pi, Check& c) {
        StatEvaluator ev(pi), er(rci(pi));
        for (int k = 0; k < 4; ++k) {
            const std::string y = "yzl" + std::to_string(k + 1);
            const std::string base = unprimed[k];
            c.eq(y.c_str(), ev.value(y), er.value(base + "_p"));
            c.eq((y + "_p").c_str(), ev.value(y + "_p"), er.value(base));
        }
    });
}

ClaimOutcome eq35(int n, const ClaimOptions& o, const XiFunction& inv) {
    return sweep_permutations(n, o.threads, [&](const Permutation& pi, Check& c) {
        const LaguerreHistory W = phi_fz(pi);
        c.eq("conjugated map vs theta", phi_fz_inv(inv(W)), theta(pi));
        c.eq("theta conjugated by the FZ map", phi_fz(theta(pi)), inv(W));
    });
}

ClaimOutcome eq36(int n, const ClaimOptions& o, const XiFunction& inv) {
    return sweep_permutations(n, o.threads, [&](const Permutation& pi, Check& c) {
        const LaguerreHistory Y = phi_yzl(pi);
        const Permutation r = rci(pi);
        c.eq("theta of rci vs kreweras", theta(r), kreweras(pi));
        c.eq("FZ of theta of rci", Y, phi_fz(theta(r)));
        c.eq("FZ of kreweras", Y, phi_fz(kreweras(pi)));
        c.eq("involution of FZ of rci", Y, inv(phi_fz(r)));
    });
}

ClaimOutcome moments(int n, bool alpha1) {
    ClaimOutcome out;
    const auto mu = alpha1 ? jacobi_moments([](int k) { return BigInt(2 * k + 2); },
                                            [](int k) { return BigInt(k) * (k + 1); }, n + 1)
                           : jacobi_moments([](int k) { return BigInt(2 * k + 1); },
                                            [](int k) { return BigInt(k) * k; }, n + 1);
    BigInt expected = 1;
    for (int k = 2; k <= (alpha1 ? n + 1 : n); ++k) expected *= k;
    out.checked = 1;
    if (mu[n] != expected) {
        out.pass = false;
        out.counterexample = json{{"moment", mu[n].str()}, {"expected", expected.str()}};
        return out;
    }
    if (!alpha1) {
        long long histories = 0;
        for_each_history(n, [&](const LaguerreHistory&) { ++histories; });
        out.checked += histories;
        if (BigInt(histories) != mu[n]) {
            out.pass = false;
            out.counterexample = json{{"moment", mu[n].str()}, {"histories", histories}};
        }
    }
    return out;
}

Key keys(StatEvaluator& ev, std::initializer_list<const char*> ids) {
    Key k;
    for (const char* id : ids) k.push_back(ev.value(id));
    return k;
}

}  // namespace

json to_json(const ClaimReport& r) {
    json j = {{"claim", r.claim}, {"n", r.n}, {"status", r.pass ? "pass" : "fail"}, {"checked", r.checked}};
    if (r.counterexample) j["counterexample"] = *r.counterexample;
    j["millis"] = r.millis;
    return j;
}

const std::vector<std::string>& claim_ids() {
    static const std::vector<std::string> ids = {
        "thm3.2-involution", "cor3.3",        "cor3.6",          "cor1.1",          "prop4.3",      "cor4.4",
        "eq14",              "eq17",          "eq18",            "eq19",            "eq19-restricted", "thm4.6",
        "fact4.8",           "prop4.10",      "csz-corollary",   "eta-corollary",   "prop4.17",     "lem4.14",
        "rho-corollary",     "tab2-mahonian", "tab3-mahonian",   "thm4.20",         "lem4.21",      "lem4.22",
        "eq34",              "thm4.23-eq35",  "thm4.23-eq36",    "moments-alpha0",  "moments-alpha1"};
    return ids;
}

bool is_known_claim(const std::string& id) {
    const auto& ids = claim_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

ClaimOutcome run_claim(const std::string& id, int n, const ClaimOptions& o) {
    if (!is_known_claim(id)) throw UnknownClaim(id);
    if (n < 1) throw InvalidInput("n must be at least 1");
    const XiFunction inv = o.involution ? o.involution : XiFunction([](const LaguerreHistory& W) { return xi(W); });
    const long long top = n - 1;

    if (id == "thm3.2-involution") return involution_claim(n, o, inv);
    if (id == "cor3.3") return cor33(n, o, inv);
    if (id == "cor3.6") return cor36(n, o, inv);
    if (id == "cor1.1") return cor11(n, o, inv);
    if (id == "prop4.3") return prop43(n, o);
    if (id == "cor4.4") return cor44(n, o, inv);
    if (id == "eq14")
        return equidistribution(n, o.threads, [&](StatEvaluator& ev) {
            Key l = keys(ev, {"des", "ides", "2-13", "2-31", "31-2"});
            return std::pair{l, Key{top - l[0], top - l[1], l[3], l[2], l[4]}};
        });
    if (id == "eq17")
        return equidistribution(n, o.threads, [&](StatEvaluator& ev) {
            return std::pair{keys(ev, {"des", "2-31", "31-2"}),
                             Key{top - ev.value("des"), ev.value("2-13"), ev.value("31-2")}};
        });
    if (id == "eq18")
        return equidistribution(n, o.threads, [&](StatEvaluator& ev) {
            Key l = keys(ev, {"des", "2-13", "31-2"});
            return std::pair{l, Key{top - l[0], l[1], l[2]}};
        });
    if (id == "eq19")
        return equidistribution(n, o.threads, [&](StatEvaluator& ev) {
            return std::pair{keys(ev, {"des", "2-13", "31-2"}), keys(ev, {"des", "2-31", "31-2"})};
        });
    if (id == "eq19-restricted")
        return equidistribution_avoiding(n, {3, 1, 2}, [&](StatEvaluator& ev) {
            return std::pair{keys(ev, {"des", "2-13"}), keys(ev, {"des", "2-31"})};
        });
    if (id == "thm4.6") return thm46(n, o);
    if (id == "fact4.8") return fact48(n, o);
    if (id == "prop4.10") return prop410(n, o);
    if (id == "csz-corollary") return csz_corollary(n, o);
    if (id == "eta-corollary") return eta_corollary(n, o, inv);
    if (id == "prop4.17") return prop417(n, o);
    if (id == "lem4.14") return lem414(n, o);
    if (id == "rho-corollary") return rho_corollary(n, o, inv);
    if (id == "tab2-mahonian") return mahonian_distributions(n, o.threads, derived_mahonian_ids());
    if (id == "tab3-mahonian") return tab3(n, o);
    if (id == "thm4.20") return thm420(n, o);
    if (id == "lem4.21") return lem421(n, o);
    if (id == "lem4.22") return lem422(n, o);
    if (id == "eq34") return eq34(n, o);
    if (id == "thm4.23-eq35") return eq35(n, o, inv);
    if (id == "thm4.23-eq36") return eq36(n, o, inv);
    if (id == "moments-alpha0") return moments(n, false);
    return moments(n, true);
}

bool verify_claim(const std::string& id, int n_max, const ClaimOptions& opts,
                  const std::function<void(const ClaimReport&)>& on_report) {
    if (!is_known_claim(id)) throw UnknownClaim(id);
    for (int n = 1; n <= n_max; ++n) {
        const auto start = std::chrono::steady_clock::now();
        const ClaimOutcome r = run_claim(id, n, opts);
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        on_report(ClaimReport{id, n, r.pass, r.checked, r.counterexample, ms});
        if (!r.pass) return false;
    }
    return true;
}

}  // namespace laguerre
