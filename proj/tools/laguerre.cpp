// Command-line front end. Exit codes: 0 success, 1 failed claim, 2 bad
// arguments, 3 unparsable input, 4 input violating an invariant, 5 unknown
// statistic or claim.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "laguerre/bijections.hpp"
#include "laguerre/claims.hpp"
#include "laguerre/genfun.hpp"
#include "laguerre/involution.hpp"
#include "laguerre/mfs_action.hpp"
#include "laguerre/stat_registry.hpp"

using namespace laguerre;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kClaimFailed = 1, kBadArgs = 2, kParse = 3, kInvariant = 4, kUnknownName = 5 };

struct BadArgs : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { Text, Json, Csv };

int max_n() {
    if (const char* env = std::getenv("LAGUERRE_MAX_N")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw BadArgs(std::string("LAGUERRE_MAX_N is not an integer: ") + env);
        }
    }
    return 10;
}

void check_n(int n) {
    if (n < 1) throw BadArgs("n must be at least 1");
    if (n > max_n())
        throw BadArgs("n = " + std::to_string(n) + " exceeds the limit " + std::to_string(max_n()) +
                      " (set LAGUERRE_MAX_N to raise it)");
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

// ---------------------------------------------------------------------------

int cmd_enumerate(int n, const std::string& kind, Format fmt) {
    check_n(n);
    long long count = 0;
    json items = json::array();
    if (fmt == Format::Csv) {
        for (int i = 1; i <= n; ++i) std::cout << (i > 1 ? "," : "") << (kind == "perms" ? "p" : "step") << i;
        if (kind == "histories")
            for (int i = 1; i <= n; ++i) std::cout << ",c" << i;
        std::cout << "\n";
    }
    if (kind == "perms") {
        for_each_permutation(n, [&](const Permutation& pi) {
            ++count;
            if (fmt == Format::Text) {
                std::cout << to_string(pi) << "\n";
            } else if (fmt == Format::Json) {
                items.push_back(to_json(pi));
            } else {
                for (int i = 1; i <= n; ++i) std::cout << (i > 1 ? "," : "") << pi(i);
                std::cout << "\n";
            }
        });
    } else {
        for_each_history(n, [&](const LaguerreHistory& W) {
            ++count;
            if (fmt == Format::Text) {
                std::cout << to_string(W) << "\n";
            } else if (fmt == Format::Json) {
                items.push_back(to_json(W));
            } else {
                for (int i = 1; i <= n; ++i) std::cout << (i > 1 ? "," : "") << step_letter(W.step(i));
                for (int i = 1; i <= n; ++i) std::cout << "," << W.weight(i);
                std::cout << "\n";
            }
        });
    }
    if (fmt == Format::Text) std::cout << "count: " << count << "\n";
    if (fmt == Format::Json) std::cout << json{{"kind", kind}, {"n", n}, {"items", items}, {"count", count}}.dump() << "\n";
    return kOk;
}

bool takes_history(const std::string& via) {
    return via == "fv-inv" || via == "fz-inv" || via == "yzl-inv" || via == "xi";
}

int cmd_map(const std::string& via, const std::string& input, Format fmt) {
    std::string out;
    if (takes_history(via)) {
        const LaguerreHistory W = parse_history(input);
        if (via == "fv-inv") out = to_string(phi_fv_inv(W));
        else if (via == "fz-inv") out = to_string(phi_fz_inv(W));
        else if (via == "yzl-inv") out = to_string(phi_yzl_inv(W));
        else out = to_string(xi(W));
    } else {
        const Permutation pi = parse_permutation(input);
        if (via == "fv") out = to_string(phi_fv(pi));
        else if (via == "fz") out = to_string(phi_fz(pi));
        else if (via == "yzl") out = to_string(phi_yzl(pi));
        else if (via == "csz") out = to_string(phi_csz(pi));
        else if (via == "phi") out = to_string(conjugated_map(pi, ConjugatedMap::PhiInv));
        else if (via == "eta") out = to_string(conjugated_map(pi, ConjugatedMap::Eta));
        else if (via == "rho") out = to_string(conjugated_map(pi, ConjugatedMap::Rho));
        else if (via == "theta") out = to_string(theta(pi));
        else if (via == "kreweras") out = to_string(kreweras(pi));
        else if (via == "mfs") out = to_string(mfs_full(pi));
        else if (via == "r") out = to_string(reverse(pi));
        else if (via == "c") out = to_string(complement(pi));
        else if (via == "i") out = to_string(inverse(pi));
        else out = to_string(rci(pi));
    }
    if (fmt == Format::Text) std::cout << out << "\n";
    else if (fmt == Format::Json) std::cout << json{{"via", via}, {"input", input}, {"output", out}}.dump() << "\n";
    else std::cout << "via,input,output\n" << via << "," << csv_field(input) << "," << csv_field(out) << "\n";
    return kOk;
}

int cmd_stat(const std::string& perm, const std::string& stat, Format fmt) {
    const Permutation pi = parse_permutation(perm);
    if (stat == "all") {
        std::cout << statistics_to_json(pi).dump(2) << "\n";
        return kOk;
    }
    const long long v = statistic_value(pi, stat);
    if (fmt == Format::Text) std::cout << v << "\n";
    else if (fmt == Format::Json) std::cout << json{{"permutation", to_string(pi)}, {"stat", stat}, {"value", v}}.dump() << "\n";
    else std::cout << "permutation,stat,value\n" << csv_field(to_string(pi)) << "," << csv_field(stat) << "," << v << "\n";
    return kOk;
}

int cmd_distribution(int n, const std::string& stats, const std::string& avoid, Format fmt, int threads) {
    check_n(n);
    const auto ids = split(stats, ',');
    if (ids.empty()) throw BadArgs("no statistics given");
    std::optional<std::vector<int>> pattern;
    if (!avoid.empty()) pattern = parse_permutation(avoid).word();
    const MultiPoly p = joint_distribution(n, ids, pattern, threads);
    if (fmt == Format::Text) {
        std::cout << to_string(p) << "\n";
    } else if (fmt == Format::Json) {
        json j = {{"n", n}, {"stats", ids}, {"variables", p.variables()}, {"polynomial", to_json(p)}};
        if (pattern) j["avoid"] = *pattern;
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& v : p.variables()) std::cout << v << ",";
        std::cout << "coeff\n";
        for (const auto& [e, c] : p.terms()) {
            for (int x : e) std::cout << x << ",";
            std::cout << c.str() << "\n";
        }
    }
    return kOk;
}

int cmd_verify(const std::string& claim, int n_max, Format fmt, int threads, bool timing) {
    check_n(n_max);
    std::vector<std::string> ids;
    if (claim == "all") ids = claim_ids();
    else if (is_known_claim(claim)) ids = {claim};
    else throw UnknownClaim(claim);

    if (fmt == Format::Csv) std::cout << "claim,n,status,checked,millis,counterexample\n";
    ClaimOptions opts;
    opts.threads = threads;
    bool all_pass = true;
    for (const auto& id : ids) {
        all_pass &= verify_claim(id, n_max, opts, [&](ClaimReport r) {
            if (!timing) r.millis = 0;
            const std::string ce = r.counterexample ? r.counterexample->dump() : "";
            if (fmt == Format::Json) {
                std::cout << to_json(r).dump() << std::endl;
            } else if (fmt == Format::Csv) {
                std::cout << r.claim << "," << r.n << "," << (r.pass ? "pass" : "fail") << "," << r.checked << ","
                          << r.millis << "," << csv_field(ce) << std::endl;
            } else {
                std::cout << r.claim << " n=" << r.n << " " << (r.pass ? "pass" : "fail") << " checked=" << r.checked;
                if (timing) std::cout << " time=" << r.millis << "ms";
                if (r.counterexample) std::cout << " counterexample=" << ce;
                std::cout << std::endl;
            }
        });
    }
    return all_pass ? kOk : kClaimFailed;
}

int cmd_moments(int alpha, int count, Format fmt) {
    if (alpha < 0) throw BadArgs("alpha must be nonnegative");
    if (count < 1) throw BadArgs("count must be at least 1");
    const auto mu = jacobi_moments([alpha](int k) { return BigInt(2 * k + 1 + alpha); },
                                   [alpha](int k) { return BigInt(k) * (k + alpha); }, count);
    if (fmt == Format::Text) {
        for (std::size_t k = 0; k < mu.size(); ++k) std::cout << (k ? " " : "") << mu[k].str();
        std::cout << "\n";
    } else if (fmt == Format::Json) {
        json arr = json::array();
        for (const auto& m : mu) arr.push_back(m.str());
        std::cout << json{{"alpha", alpha}, {"moments", arr}}.dump() << "\n";
    } else {
        std::cout << "k,moment\n";
        for (std::size_t k = 0; k < mu.size(); ++k) std::cout << k << "," << mu[k].str() << "\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Laguerre histories, permutation statistics and their bijections"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    int threads = 1;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--threads", threads, "Worker threads for exhaustive sweeps")->check(CLI::PositiveNumber);

    int n = 0;
    std::string kind = "perms";
    auto* enumerate = app.add_subcommand("enumerate", "List all permutations or histories of length n");
    enumerate->add_option("--n", n)->required();
    enumerate->add_option("--kind", kind)->check(CLI::IsMember({"perms", "histories"}));

    std::string via, input;
    auto* map = app.add_subcommand("map", "Apply a bijection, involution or symmetry");
    map->add_option("--via", via)->required()->check(CLI::IsMember(
        {"fv", "fv-inv", "fz", "fz-inv", "yzl", "yzl-inv", "csz", "xi", "phi", "eta", "rho", "theta", "kreweras", "mfs",
         "r", "c", "i", "rci"}));
    map->add_option("input", input, "Permutation or history")->required();

    std::string perm, stat;
    auto* stat_cmd = app.add_subcommand("stat", "Evaluate a statistic on a permutation");
    stat_cmd->add_option("--perm", perm)->required();
    stat_cmd->add_option("--stat", stat)->required();

    std::string stats, avoid;
    auto* dist = app.add_subcommand("distribution", "Joint distribution of statistics over S_n");
    dist->add_option("--n", n)->required();
    dist->add_option("--stats", stats, "Comma-separated statistic ids")->required();
    dist->add_option("--avoid", avoid, "Restrict to permutations avoiding this classical pattern");

    std::string claim;
    int n_max = 0;
    bool no_timing = false;
    auto* verify = app.add_subcommand("verify", "Check a registered claim exhaustively for n = 1..n-max");
    verify->add_option("--claim", claim, "Claim id or `all`")->required();
    verify->add_option("--n-max", n_max)->required();
    verify->add_flag("--no-timing", no_timing, "Report 0 ms so output is reproducible");

    int alpha = 0, count = 8;
    auto* moments = app.add_subcommand("moments", "Moments of the Laguerre continued fraction");
    moments->add_option("--alpha", alpha);
    moments->add_option("--count", count);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadArgs;
    }

    const Format fmt = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
    try {
        if (*enumerate) return cmd_enumerate(n, kind, fmt);
        if (*map) return cmd_map(via, input, fmt);
        if (*stat_cmd) return cmd_stat(perm, stat, fmt);
        if (*dist) return cmd_distribution(n, stats, avoid, fmt, threads);
        if (*verify) return cmd_verify(claim, n_max, fmt, threads, !no_timing);
        return cmd_moments(alpha, count, fmt);
    } catch (const BadArgs& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadArgs;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const UnknownStatistic& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUnknownName;
    } catch (const UnknownClaim& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUnknownName;
    } catch (const Error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kInvariant;
    }
}
