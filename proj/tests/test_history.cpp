#include "printers.hpp"

#include <functional>
#include <set>
#include <vector>

#include "laguerre/history.hpp"
#include "laguerre/permutation.hpp"

using namespace laguerre;

namespace {

const char* const kNineSteps = "NNNDESDSS/0,0,0,2,1,3,2,2,1";

std::vector<Step> word(const std::string& letters) {
    std::vector<Step> w;
    for (char ch : letters) w.push_back(step_from_letter(ch));
    return w;
}

// Every (word, weights) pair accepted by the validating constructor, found by
// trying all words and all weight vectors with entries in [0, n].
std::set<std::string> brute_force_histories(int n) {
    std::set<std::string> out;
    std::vector<Step> w(n);
    std::vector<int> c(n);
    const Step steps[] = {Step::N, Step::E, Step::dE, Step::S};
    std::function<void(int)> weights = [&](int i) {
        if (i == n) {
            try {
                out.insert(to_string(LaguerreHistory::from_word_and_weights(w, c)));
            } catch (const InvalidInput&) {
            }
            return;
        }
        for (int v = 0; v <= n; ++v) {
            c[i] = v;
            weights(i + 1);
        }
    };
    std::function<void(int)> words = [&](int i) {
        if (i == n) {
            weights(0);
            return;
        }
        for (Step s : steps) {
            w[i] = s;
            words(i + 1);
        }
    };
    words(0);
    return out;
}

}  // namespace

TEST_CASE("construction and heights") {
    const auto W = LaguerreHistory::from_word_and_weights(word("NNNDESDSS"), {0, 0, 0, 2, 1, 3, 2, 2, 1});
    CHECK(W.heights() == std::vector<int>{0, 1, 2, 3, 3, 3, 2, 2, 1});
    CHECK(to_string(W) == kNineSteps);

    const auto E = LaguerreHistory::from_word_and_weights(word("E"), {0});
    CHECK(E.heights() == std::vector<int>{0});
}

TEST_CASE("validation names the first bad index") {
    try {
        LaguerreHistory::from_word_and_weights(word("D"), {0});
        FAIL("expected WeightOutOfBounds");
    } catch (const WeightOutOfBounds& e) {
        CHECK(e.index() == 1);
    }
    try {
        LaguerreHistory::from_word_and_weights(word("NSSN"), {0, 1, 0, 0});
        FAIL("expected PathBelowAxis");
    } catch (const PathBelowAxis& e) {
        CHECK(e.index() == 3);
    }
    CHECK_THROWS_AS(LaguerreHistory::from_word_and_weights(word("NE"), {0, 0}), PathNotClosed);
    CHECK_THROWS_AS(LaguerreHistory::from_word_and_weights(word("NS"), {0, 0}), WeightOutOfBounds);
    CHECK_THROWS_AS(LaguerreHistory::from_word_and_weights(word("NS"), {0, 2}), WeightOutOfBounds);
    CHECK_THROWS_AS(LaguerreHistory::from_word_and_weights({}, {}), InvalidInput);
}

TEST_CASE("critical step") {
    CHECK(critical_step(parse_history(kNineSteps)) == 3);
    CHECK(critical_step(parse_history("E/0")) == 1);
    CHECK(critical_step(parse_history("EE/0,0")) == 2);
}

TEST_CASE("statistics of the nine-step example") {
    const auto r = history_statistics(parse_history(kNineSteps));
    CHECK(r.cs == 3);
    CHECK(r.sdeb.empty());
    CHECK(r.sdea == IntMultiset{4, 6, 7, 8, 9});
    CHECK(r.ndeb == IntMultiset{1, 2});
    CHECK(r.ndea == IntMultiset{4, 7});
    CHECK(r.neb == IntMultiset{1, 2});
    CHECK(r.nea == IntMultiset{5});
    CHECK(r.nde == IntMultiset{1, 2, 3, 4, 7});
    CHECK(r.asc == IntMultiset{3, 5, 7});
    CHECK(r.ht == parse_multiset("{2,3^2,4^3,5^3,6^3,7^2,8^2,9}"));
    CHECK(r.wt == parse_multiset("{4^2,5,6^3,7^2,8^2,9}"));
}

TEST_CASE("statistics of the small histories") {
    const auto e = history_statistics(parse_history("E/0"));
    CHECK(e.cs == 1);
    CHECK(e.neb.empty());
    CHECK(e.nea.empty());
    CHECK(e.sdeb.empty());
    CHECK(e.sdea.empty());
    CHECK(e.ht.empty());
    CHECK(e.wt.empty());
    CHECK(e.asc.empty());

    const auto ns = history_statistics(parse_history("NS/0,1"));
    CHECK(ns.cs == 1);
    CHECK(ns.sdea == IntMultiset{2});
    CHECK(ns.ht == IntMultiset{2});
    CHECK(ns.wt == IntMultiset{2});
    CHECK(ns.asc == IntMultiset{1});
}

TEST_CASE("enumeration matches a brute-force search") {
    CHECK(enumerate_histories(1).size() == 1);
    const auto two = enumerate_histories(2);
    REQUIRE(two.size() == 2);
    CHECK(to_string(two[0]) == "NS/0,1");
    CHECK(to_string(two[1]) == "EE/0,0");
    for (int n = 1; n <= 5; ++n) {
        std::set<std::string> got;
        for (const auto& W : enumerate_histories(n)) got.insert(to_string(W));
        CHECK(got == brute_force_histories(n));
    }
}

TEST_CASE("enumeration order and counts") {
    for (int n = 1; n <= 8; ++n) {
        long long count = 0;
        std::vector<Step> prev_w;
        std::vector<int> prev_c;
        bool ordered = true;
        for_each_history(n, [&](const LaguerreHistory& W) {
            if (count > 0 && !(std::tie(prev_w, prev_c) < std::tie(W.steps(), W.weights()))) ordered = false;
            prev_w = W.steps();
            prev_c = W.weights();
            ++count;
        });
        CHECK(count == factorial(n));
        CHECK(ordered);
    }
}

TEST_CASE("prefix enumeration concatenates to the full enumeration") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<std::string> whole, parts;
        for_each_history(n, [&](const LaguerreHistory& W) { whole.push_back(to_string(W)); });
        for (const auto& p : history_prefixes(n, std::min(n, 3)))
            for_each_history_with_prefix(n, p, [&](const LaguerreHistory& W) { parts.push_back(to_string(W)); });
        CHECK(whole == parts);
    }
}

TEST_CASE("invariants over all histories of length at most 7") {
    for (int n = 1; n <= 7; ++n) {
        for_each_history(n, [&](const LaguerreHistory& W) {
            const auto r = history_statistics(W);
            CHECK(r.ht.cardinality() >= r.wt.cardinality());
            CHECK_NOTHROW((void)(r.ht - r.wt));
            CHECK((r.cs == n) == (W.weight(n) == 0));
            CHECK(is_ne(W.step(r.cs)));
            CHECK(LaguerreHistory::from_word_and_weights(W.steps(), W.weights()) == W);
            CHECK(parse_history(to_string(W)) == W);
            CHECK(history_from_json(to_json(W)) == W);
            for (int i = 1; i <= n; ++i)
                if (W.height(i) == 0 && W.step(i) != Step::N) CHECK(W.step(i) == Step::E);
        });
    }
}

TEST_CASE("text and JSON forms") {
    const auto W = parse_history("NS/0,1");
    CHECK(to_json(W).dump() == R"({"c":[0,1],"h":[0,1],"w":["N","S"]})");
    CHECK_THROWS_AS(parse_history("NS0,1"), ParseError);
    CHECK_THROWS_AS(parse_history("NX/0,1"), ParseError);
    CHECK_THROWS_AS(parse_history("NS/0,a"), ParseError);
    CHECK_THROWS_AS(parse_history("NS/0"), ParseError);
    CHECK_THROWS_AS(parse_history("ND/0,1"), InvalidInput);
}
