#include "laguerre/stat_registry.hpp"

#include <algorithm>

namespace laguerre {

const std::vector<std::string>& classical_mahonian_ids() {
    static const std::vector<std::string> ids = {
        "mak",  "mad",    "makl",   "madl",    "maj",  "inv",    "bast",    "bast_p", "bast_pp",
        "foze", "foze_p", "foze_pp", "sist",   "sist_p", "sist_pp", "den",   "sor"};
    return ids;
}

const std::vector<std::string>& derived_mahonian_ids() {
    static const std::vector<std::string> ids = {
        "mak_p", "mad_p", "makl_p", "madl_p", "fz3",  "fz4",    "inv_p",  "den_p",  "fz3_p",
        "fz4_p", "yzl1",  "yzl2",   "yzl3",   "yzl4", "yzl1_p", "yzl2_p", "yzl3_p", "yzl4_p"};
    return ids;
}

const std::vector<std::string>& mahonian_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> all = classical_mahonian_ids();
        for (const auto& id : derived_mahonian_ids()) all.push_back(id);
        return all;
    }();
    return ids;
}

const std::map<std::string, std::vector<std::string>>& mahonian_pattern_sums() {
    static const std::map<std::string, std::vector<std::string>> sums = {
        {"maj", {"1u32", "2u31", "3u21", "u21"}},
        {"inv", {"u23_1", "u31_2", "u32_1", "u21"}},
        {"mak", {"1u32", "2u31", "u32_1", "u21"}},
        {"makl", {"1u32", "u31_2", "u32_1", "u21"}},
        {"mad", {"2u31", "2u31", "u31_2", "u21"}},
        {"madl", {"2u31", "u31_2", "u31_2", "u21"}},
        {"bast", {"u13_2", "u21_3", "u32_1", "u21"}},
        {"bast_p", {"u13_2", "u31_2", "u32_1", "u21"}},
        {"bast_pp", {"1u32", "3u12", "3u21", "u21"}},
        {"foze", {"u21_3", "3u21", "u13_2", "u21"}},
        {"foze_p", {"1u32", "2u31", "2u31", "u21"}},
        {"foze_pp", {"u23_1", "u31_2", "u31_2", "u21"}},
        {"sist", {"u13_2", "u13_2", "2u13", "u21"}},
        {"sist_p", {"u13_2", "u13_2", "2u31", "u21"}},
        {"sist_pp", {"u13_2", "2u31", "2u31", "u21"}},
    };
    return sums;
}

const std::vector<std::string>& basic_statistic_ids() {
    static const std::vector<std::string> ids = {
        "des",  "ides",  "exc",   "nexc",  "ddif",     "dbot",      "edif",     "ebot",     "ine",
        "vedif", "vbot", "vnest", "nest",  "pone",     "last",      "lpk",      "lval",     "lda",
        "ldd",  "lpk_star", "lval_star", "lda_star", "ldd_star", "cpk", "cval", "cda", "cdd"};
    return ids;
}

const LinearStatRecord& StatEvaluator::linear() {
    if (!linear_) linear_ = linear_family(pi_);
    return *linear_;
}

const CyclicStatRecord& StatEvaluator::cyclic() {
    if (!cyclic_) cyclic_ = cyclic_family(pi_);
    return *cyclic_;
}

const ShiftedStatRecord& StatEvaluator::shifted() {
    if (!shifted_) shifted_ = shifted_family(pi_);
    return *shifted_;
}

const PatternMultisets& StatEvaluator::patterns() {
    if (!patterns_) patterns_ = pattern_multisets(pi_);
    return *patterns_;
}

const LinearKinds& StatEvaluator::starred() {
    if (!starred_) starred_ = linear_kinds(pi_, Boundary::Zero);
    return *starred_;
}

long long StatEvaluator::pattern(const std::string& literal) {
    auto it = pattern_cache_.find(literal);
    if (it != pattern_cache_.end()) return it->second;
    const long long v = vincular_count(pi_, parse_pattern(literal));
    pattern_cache_.emplace(literal, v);
    return v;
}

long long StatEvaluator::mahonian_value(const std::string& id) {
    const long long n = pi_.size();
    const long long last = pi_(pi_.size());
    const auto& sums = mahonian_pattern_sums();

    if (id == "mak") return linear().dbot.cardinality() + patterns().two_31.cardinality();
    if (id == "mad") return linear().ddif.cardinality() + patterns().two_31.cardinality();
    if (id == "makl") return linear().dbot.cardinality() + patterns().thirtyone_2.cardinality();
    if (id == "madl") return linear().ddif.cardinality() + patterns().thirtyone_2.cardinality();
    if (id == "den") return cyclic().ebot.cardinality() + cyclic().ine.cardinality();
    if (id == "sor") return sorting_index(pi_);
    if (auto it = sums.find(id); it != sums.end()) {
        long long total = 0;
        for (const auto& lit : it->second) total += pattern(lit);
        return total;
    }

    const long long des = linear().des.cardinality();
    if (id == "mak_p") return value("mak") + (1 - n) * des + last + n * (n - 3) / 2;
    if (id == "mad_p") return value("mad") + 2 * last - n - 1;
    if (id == "makl_p") return value("makl") - n * des + n * (n - 1) / 2;
    if (id == "madl_p") return value("madl") - des + last - 1;

    const auto& cyc = cyclic();
    const long long exc = cyc.exc.cardinality();
    const long long edif = cyc.edif.cardinality(), ebot = cyc.ebot.cardinality(), ine = cyc.ine.cardinality();
    if (id == "fz3") return ebot + edif - exc - ine;
    if (id == "fz4") return 2 * edif - exc - ine;
    if (id == "inv_p") return value("inv") + 2 * last - 1 - n;
    if (id == "den_p") return value("den") + (1 - n) * exc + last + n * (n - 3) / 2;
    if (id == "fz3_p") return value("fz3") - n * exc + n * (n - 1) / 2;
    if (id == "fz4_p") return value("fz4") - exc + last - 1;

    const auto& sh = shifted();
    const long long vbot = sh.vbot.cardinality(), vedif = sh.vedif.cardinality();
    const long long vnest = sh.vnest_multiset.cardinality(), pone = sh.pone;
    if (id == "yzl1") return vbot + vnest;
    if (id == "yzl2") return vedif + vnest;
    if (id == "yzl3") return vbot + vedif - (n - 1 - exc) - vnest;
    if (id == "yzl4") return 2 * vedif - (n - 1 - exc) - vnest;
    if (id == "yzl1_p") return value("yzl1") + (n - 1) * exc + pone + (-n * n + n - 2) / 2;
    if (id == "yzl2_p") return value("yzl2") + 2 * pone - n - 1;
    if (id == "yzl3_p") return value("yzl3") + n * exc - n * (n - 1) / 2;
    if (id == "yzl4_p") return value("yzl4") + exc + pone - n;
    throw UnknownStatistic(id);
}

long long StatEvaluator::value(const std::string& id) {
    const auto& mids = mahonian_ids();
    if (std::find(mids.begin(), mids.end(), id) != mids.end()) return mahonian_value(id);

    if (id == "des") return linear().des.cardinality();
    if (id == "ides") return linear().ides.cardinality();
    if (id == "ddif") return linear().ddif.cardinality();
    if (id == "dbot") return linear().dbot.cardinality();
    if (id == "exc") return cyclic().exc.cardinality();
    if (id == "nexc") return cyclic().nexc.cardinality();
    if (id == "edif") return cyclic().edif.cardinality();
    if (id == "ebot") return cyclic().ebot.cardinality();
    if (id == "ine") return cyclic().ine.cardinality();
    if (id == "cpk") return cyclic().cpk.cardinality();
    if (id == "cval") return cyclic().cval.cardinality();
    if (id == "cda") return cyclic().cda.cardinality();
    if (id == "cdd") return cyclic().cdd.cardinality();
    if (id == "vedif") return shifted().vedif.cardinality();
    if (id == "vbot") return shifted().vbot.cardinality();
    if (id == "vnest") return shifted().vnest_multiset.cardinality();
    if (id == "pone") return shifted().pone;
    if (id == "nest") {
        long long s = 0;
        for (int x : shifted().nest) s += x;
        return s;
    }
    if (id == "last") return pi_(pi_.size());
    if (id == "lpk" || id == "lval" || id == "lda" || id == "ldd") {
        const LinearKinds k = linear_kinds(pi_, Boundary::MinusPlusInfinity);
        if (id == "lpk") return k.peaks.cardinality();
        if (id == "lval") return k.valleys.cardinality();
        if (id == "lda") return k.double_ascents.cardinality();
        return k.double_descents.cardinality();
    }
    if (id == "lpk_star") return starred().peaks.cardinality();
    if (id == "lval_star") return starred().valleys.cardinality();
    if (id == "lda_star") return starred().double_ascents.cardinality();
    if (id == "ldd_star") return starred().double_descents.cardinality();
    if (id == "2-13") return patterns().two_13.cardinality();
    if (id == "2-31") return patterns().two_31.cardinality();
    if (id == "31-2") return patterns().thirtyone_2.cardinality();

    try {
        return pattern(id);
    } catch (const ParseError&) {
        throw UnknownStatistic(id);
    }
}

long long statistic_value(const Permutation& pi, const std::string& id) { return StatEvaluator(pi).value(id); }

long long mahonian(const Permutation& pi, const std::string& id) {
    const auto& ids = mahonian_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw UnknownStatistic(id);
    return StatEvaluator(pi).value(id);
}

bool is_known_statistic(const std::string& id) {
    try {
        statistic_value(Permutation::identity(1), id);
        return true;
    } catch (const UnknownStatistic&) {
        return false;
    }
}

nlohmann::json statistics_to_json(const Permutation& pi) {
    StatEvaluator ev(pi);
    const auto& L = ev.linear();
    const auto& C = ev.cyclic();
    const auto& S = ev.shifted();
    const auto& P = ev.patterns();
    nlohmann::json j;
    j["permutation"] = to_json(pi);
    j["linear"] = {{"Des", to_json(L.des)},   {"Ides", to_json(L.ides)}, {"Dt", to_json(L.dt)},
                   {"Db", to_json(L.db)},     {"Ab", to_json(L.ab)},     {"Dtb", to_json(L.dtb)},
                   {"Dta", to_json(L.dta)},   {"Dbb", to_json(L.dbb)},   {"Dba", to_json(L.dba)},
                   {"Abb", to_json(L.abb)},   {"Aba", to_json(L.aba)},   {"Ddif", to_json(L.ddif)},
                   {"Dbot", to_json(L.dbot)}, {"2-13", to_json(P.two_13)}, {"2-31", to_json(P.two_31)},
                   {"31-2", to_json(P.thirtyone_2)}};
    j["cyclic"] = {{"Exc", to_json(C.exc)},     {"Nexc", to_json(C.nexc)},   {"Ep", to_json(C.ep)},
                   {"Excb", to_json(C.excb)},   {"Exca", to_json(C.exca)},   {"Nexcb", to_json(C.nexcb)},
                   {"Nexca", to_json(C.nexca)}, {"Epb", to_json(C.epb)},     {"Epa", to_json(C.epa)},
                   {"Edif", to_json(C.edif)},   {"Ebot", to_json(C.ebot)},   {"Ine", to_json(C.ine)},
                   {"side", C.side},            {"Cpk", to_json(C.cpk)},     {"Cval", to_json(C.cval)},
                   {"Cda", to_json(C.cda)},     {"Cdd", to_json(C.cdd)}};
    j["shifted"] = {{"pone", S.pone},
                    {"nest", S.nest},
                    {"vnest", S.vnest},
                    {"Scval", to_json(S.scval)},
                    {"Scpk", to_json(S.scpk)},
                    {"Scda", to_json(S.scda)},
                    {"Scdd", to_json(S.scdd)},
                    {"Ep", to_json(S.ep)},
                    {"Nep", to_json(S.nep)},
                    {"Vnex", to_json(S.vnex)},
                    {"Vnepb", to_json(S.vnepb)},
                    {"Vnepa", to_json(S.vnepa)},
                    {"Vnexb", to_json(S.vnexb)},
                    {"Vnexa", to_json(S.vnexa)},
                    {"Vepb", to_json(S.vepb)},
                    {"Vepa", to_json(S.vepa)},
                    {"Vedif", to_json(S.vedif)},
                    {"Vbot", to_json(S.vbot)},
                    {"Vnest", to_json(S.vnest_multiset)}};
    nlohmann::json m = nlohmann::json::object();
    for (const auto& id : mahonian_ids()) m[id] = ev.value(id);
    j["mahonian"] = m;
    return j;
}

}  // namespace laguerre
