#include "laguerre/genfun.hpp"

#include <map>

#include "laguerre/errors.hpp"
#include "laguerre/involution.hpp"
#include "laguerre/patterns.hpp"
#include "laguerre/stat_registry.hpp"
#include "laguerre/sweep.hpp"

namespace laguerre {

namespace {

using Tally = std::map<std::vector<int>, long long>;

MultiPoly tally_to_poly(const std::vector<std::string>& vars, const std::vector<Tally>& parts) {
    MultiPoly p(vars);
    for (const auto& t : parts)
        for (const auto& [e, c] : t) p.add_term(e, c);
    return p;
}

}  // namespace

const std::vector<std::string>& a_variables() {
    static const std::vector<std::string> vars = {"t1", "t2", "t3", "t4", "r", "s", "x", "v", "w"};
    return vars;
}

std::array<int, 9> a_exponents(const LaguerreHistory& W) {
    const HistoryStatRecord r = history_statistics(W);
    auto card = [](const IntMultiset& m) { return static_cast<int>(m.cardinality()); };
    return {card(r.sdeb), card(r.sdea), card(r.neb), card(r.nea), card(r.nde),
            card(r.asc),  r.cs,         card(r.ht),  card(r.wt)};
}

MultiPoly a_polynomial(int n, int threads) {
    if (n < 1) throw InvalidInput("n must be at least 1");
    const auto prefixes = history_prefixes(n, std::min(n, 3));
    const auto parts = run_partitioned<Tally>(static_cast<int>(prefixes.size()), threads, [&](int p) {
        Tally t;
        for_each_history_with_prefix(n, prefixes[p], [&](const LaguerreHistory& W) {
            const auto e = a_exponents(W);
            ++t[std::vector<int>(e.begin(), e.end())];
        });
        return t;
    });
    return tally_to_poly(a_variables(), parts);
}

std::optional<LaguerreHistory> a_symmetry_violation(int n, const XiFunction& involution) {
    std::optional<LaguerreHistory> bad;
    for_each_history(n, [&](const LaguerreHistory& W) {
        if (bad) return;
        const auto w = a_exponents(W);
        const auto v = a_exponents(involution(W));
        // v = (sdeb, sdea, neb, nea, nde, asc, cs, ht, wt) of the image.
        const std::array<int, 9> expected = {v[3],         v[2],         v[1],
                                             v[0],         n - 1 - v[4], n - 1 - v[5],
                                             n + 1 - v[6], v[7] - v[1] + v[2], v[8] - v[1] + v[2]};
        if (w != expected) bad = W;
    });
    return bad;
}

bool verify_a_symmetry(int n) { return verify_a_symmetry(n, [](const LaguerreHistory& W) { return xi(W); }); }

bool verify_a_symmetry(int n, const XiFunction& involution) { return !a_symmetry_violation(n, involution); }

MultiPoly joint_distribution(int n, const std::vector<std::string>& stats, const std::optional<std::vector<int>>& avoid,
                             int threads) {
    if (n < 1) throw InvalidInput("n must be at least 1");
    for (const auto& id : stats)
        if (!is_known_statistic(id)) throw UnknownStatistic(id);
    std::vector<std::string> vars;
    if (stats.size() == 1) {
        vars.push_back("q");
    } else {
        for (std::size_t k = 1; k <= stats.size(); ++k) vars.push_back("q" + std::to_string(k));
    }
    auto record = [&](Tally& t, const Permutation& pi) {
        StatEvaluator ev(pi);
        std::vector<int> e(stats.size());
        for (std::size_t k = 0; k < stats.size(); ++k) e[k] = static_cast<int>(ev.value(stats[k]));
        ++t[e];
    };
    std::vector<Tally> parts;
    if (avoid) {
        parts.resize(1);
        for_each_avoider(n, *avoid, [&](const Permutation& pi) { record(parts[0], pi); });
    } else {
        parts = run_partitioned<Tally>(n, threads, [&](int p) {
            Tally t;
            for_each_permutation_starting_with(n, p + 1, [&](const Permutation& pi) { record(t, pi); });
            return t;
        });
    }
    return tally_to_poly(vars, parts);
}

MultiPoly qt_catalan_direct(int n) {
    if (n < 1) throw InvalidInput("n must be at least 1");
    MultiPoly p({"t", "q"});
    for_each_avoider(n, {2, 1, 3}, [&](const Permutation& pi) {
        StatEvaluator ev(pi);
        p.add_term({static_cast<int>(ev.value("des")), static_cast<int>(ev.value("31-2"))}, 1);
    });
    return p;
}

MultiPoly qt_catalan_limit(int n) {
    // (t1, t2, t3, t4, r, s, x, v, w) -> (t, t/p, 1, 1/p, 1, 1, 1, q, p/q)
    const std::map<std::string, Monomial> subst = {
        {"t1", {{"t", 1}}}, {"t2", {{"t", 1}, {"p", -1}}}, {"t3", {}}, {"t4", {{"p", -1}}},
        {"r", {}},          {"s", {}},                     {"x", {}},  {"v", {{"q", 1}}},
        {"w", {{"p", 1}, {"q", -1}}}};
    const MultiPoly pq = specialize(a_polynomial(n), subst, {"t", "p", "q"});
    const int lowest = pq.min_degree("p");
    if (lowest < 0) throw NegativePDegree("p-degree " + std::to_string(lowest) + " at n = " + std::to_string(n));
    return pq.coefficient_of("p", 0);
}

MultiPoly qt_catalan(int n) {
    MultiPoly direct = qt_catalan_direct(n);
    if (!(direct == qt_catalan_limit(n)))
        throw InternalInconsistency("(q,t)-Catalan paths disagree at n = " + std::to_string(n));
    return direct;
}

std::vector<BigInt> jacobi_moments(const Sequence& b, const Sequence& lam, int count) {
    if (count < 1) throw InvalidInput("count must be at least 1");
    std::vector<BigInt> out;
    // paths[k]: weighted paths of the current length ending at height k.
    std::vector<BigInt> paths(count + 1, 0);
    paths[0] = 1;
    out.push_back(1);
    for (int len = 1; len < count; ++len) {
        std::vector<BigInt> next(count + 1, 0);
        for (int k = 0; k <= count; ++k) {
            if (paths[k] == 0) continue;
            if (k + 1 <= count) next[k + 1] += paths[k];
            next[k] += paths[k] * b(k);
            if (k > 0) next[k - 1] += paths[k] * lam(k);
        }
        paths = std::move(next);
        out.push_back(paths[0]);
    }
    return out;
}

}  // namespace laguerre
