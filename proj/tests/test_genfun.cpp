#include "printers.hpp"

#include "laguerre/genfun.hpp"
#include "laguerre/involution.hpp"
#include "laguerre/multipoly.hpp"
#include "laguerre/perm_stats.hpp"

using namespace laguerre;

namespace {

MultiPoly poly(const std::vector<std::string>& vars, const std::vector<std::pair<std::vector<int>, int>>& terms) {
    MultiPoly p(vars);
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

MultiPoly rename(const MultiPoly& p, const std::vector<std::string>& names) {
    std::map<std::string, Monomial> subst;
    for (std::size_t k = 0; k < names.size(); ++k) subst[p.variables()[k]] = {{names[k], 1}};
    return specialize(p, subst, names);
}

std::vector<long long> as_ints(const std::vector<BigInt>& v) {
    std::vector<long long> out;
    for (const auto& x : v) out.push_back(static_cast<long long>(x));
    return out;
}

const std::map<std::string, Monomial> kEulerian = {{"t1", {{"t", 1}}}, {"t2", {{"t", 1}}}, {"t3", {}}, {"t4", {}},
                                                   {"r", {}},          {"s", {}},          {"x", {}},  {"v", {}},
                                                   {"w", {}}};

}  // namespace

TEST_CASE("polynomial arithmetic and printing") {
    const auto a = poly({"q"}, {{{0}, 1}, {{1}, 2}, {{2}, 2}, {{3}, 1}});
    CHECK(to_string(a) == "1 + 2 q + 2 q^2 + q^3");
    CHECK(a == q_factorial(3));
    CHECK(to_string(poly({"q1", "q2"}, {{{0, 0}, 2}, {{1, 0}, -1}, {{2, -1}, 1}})) == "2 - q1 + q1^2 q2^-1");
    CHECK(to_string(MultiPoly({"q"})) == "0");
    CHECK((a - a).is_zero());
    const auto one_plus_q = poly({"q"}, {{{0}, 1}, {{1}, 1}});
    CHECK(one_plus_q * poly({"q"}, {{{0}, 1}, {{1}, 1}, {{2}, 1}}) == a);
    CHECK(a.value_at_ones() == 6);
    CHECK(a.min_degree("q") == 0);
    CHECK(as_ints(a.dense_coefficients()) == std::vector<long long>{1, 2, 2, 1});
    const auto j = to_json(a);
    CHECK(j.size() == 4);
    CHECK(j[1]["coeff"] == 2);
    CHECK(j[1]["exps"]["q"] == 1);
    const auto q8 = q_factorial(8);
    CHECK(q8.dense_coefficients().size() == 29);
    CHECK(q8.value_at_ones() == 40320);
}

TEST_CASE("big coefficients stay exact") {
    MultiPoly p({"q"});
    BigInt big = 1;
    for (int k = 0; k < 100; ++k) big *= 10;
    p.add_term({1}, big);
    CHECK(to_json(p)[0]["coeff"].is_string());
    CHECK(to_string(p) == big.str() + " q");
}

TEST_CASE("small A polynomials") {
    const auto& vars = a_variables();
    CHECK(a_polynomial(1) == poly(vars, {{{0, 0, 0, 0, 0, 0, 1, 0, 0}, 1}}));
    // t3 x^2 + t2 r s x v w
    CHECK(a_polynomial(2) ==
          poly(vars, {{{0, 0, 1, 0, 0, 0, 2, 0, 0}, 1}, {{0, 1, 0, 0, 1, 1, 1, 1, 1}, 1}}));
    for (int n = 1; n <= 7; ++n) CHECK(a_polynomial(n).value_at_ones() == factorial(n));
    CHECK(a_polynomial(6, 1) == a_polynomial(6, 3));
}

TEST_CASE("Eulerian specializations") {
    const auto e2 = specialize(a_polynomial(2), kEulerian, {"t"});
    CHECK(to_string(e2) == "1 + t");
    CHECK(to_string(specialize(a_polynomial(3), kEulerian, {"t"})) == "1 + 4 t + t^2");
    for (int n = 1; n <= 6; ++n) {
        CHECK(specialize(a_polynomial(n), kEulerian, {"t"}) == rename(joint_distribution(n, {"des"}), {"t"}));
        auto with_s = kEulerian;
        with_s["s"] = {{"s", 1}};
        CHECK(specialize(a_polynomial(n), with_s, {"t", "s"}) ==
              rename(joint_distribution(n, {"des", "ides"}), {"t", "s"}));
    }
}

TEST_CASE("(p,q)-Eulerian specialization and its p = 0 limit") {
    const std::map<std::string, Monomial> pq = {
        {"t1", {{"t", 1}}}, {"t2", {{"t", 1}, {"p", -1}}}, {"t3", {}}, {"t4", {{"p", -1}}},
        {"r", {}},          {"s", {}},                     {"x", {}},  {"v", {{"q", 1}}},
        {"w", {{"p", 1}, {"q", -1}}}};
    for (int n = 1; n <= 6; ++n) {
        const auto lhs = specialize(a_polynomial(n), pq, {"t", "p", "q"});
        CHECK(lhs.min_degree("p") >= 0);
        CHECK(lhs == rename(joint_distribution(n, {"des", "2-13", "31-2"}), {"t", "p", "q"}));
        CHECK(rename(joint_distribution(n, {"des", "31-2"}, std::vector<int>{2, 1, 3}), {"t", "q"}) ==
              qt_catalan_limit(n));
    }
}

TEST_CASE("(q,t)-Catalan polynomials") {
    const long long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
    for (int n = 1; n <= 7; ++n) {
        const auto c = qt_catalan(n);
        CHECK(c.value_at_ones() == catalan[n]);
        CHECK(c == qt_catalan_direct(n));
    }
    CHECK(to_string(qt_catalan(2)) == "1 + t");
    CHECK_THROWS_AS(qt_catalan(0), InvalidInput);
}

TEST_CASE("functional equation under the involution") {
    for (int n = 1; n <= 7; ++n) CHECK(verify_a_symmetry(n));
    // Turn the first E step of positive height and weight in the image into dE.
    auto corrupted = [](const LaguerreHistory& W) {
        const LaguerreHistory X = xi(W);
        std::vector<Step> w = X.steps();
        for (int i = 1; i <= X.size(); ++i)
            if (X.step(i) == Step::E && X.height(i) >= 1 && X.weight(i) >= 1) {
                w[i - 1] = Step::dE;
                return LaguerreHistory::from_word_and_weights(w, X.weights());
            }
        return X;
    };
    CHECK(verify_a_symmetry(2, corrupted));
    CHECK_FALSE(verify_a_symmetry(3, corrupted));
    CHECK(a_symmetry_violation(3, corrupted).has_value());
}

TEST_CASE("joint distributions") {
    CHECK(to_string(joint_distribution(3, {"inv"})) == "1 + 2 q + 2 q^2 + q^3");
    CHECK(to_string(joint_distribution(3, {"des"})) == "1 + 4 q + q^2");
    CHECK(joint_distribution(3, {"des", "inv"}).variables() == std::vector<std::string>{"q1", "q2"});
    CHECK(joint_distribution(4, {"des"}, std::vector<int>{3, 1, 2}).value_at_ones() == 14);
    CHECK(joint_distribution(6, {"des", "2-13"}, std::nullopt, 1) ==
          joint_distribution(6, {"des", "2-13"}, std::nullopt, 4));
    CHECK_THROWS_AS(joint_distribution(3, {"nope"}), UnknownStatistic);
    CHECK_THROWS_AS(joint_distribution(0, {"des"}), InvalidInput);
}

TEST_CASE("continued fraction moments") {
    auto laguerre_b = [](int a) { return [a](int k) { return BigInt(2 * k + 1 + a); }; };
    auto laguerre_l = [](int a) { return [a](int k) { return BigInt(k) * (k + a); }; };
    CHECK(as_ints(jacobi_moments(laguerre_b(0), laguerre_l(0), 8)) ==
          std::vector<long long>{1, 1, 2, 6, 24, 120, 720, 5040});
    CHECK(as_ints(jacobi_moments(laguerre_b(1), laguerre_l(1), 6)) == std::vector<long long>{1, 2, 6, 24, 120, 720});
    CHECK(as_ints(jacobi_moments([](int) { return BigInt(0); }, [](int) { return BigInt(1); }, 7)) ==
          std::vector<long long>{1, 0, 1, 0, 2, 0, 5});
    const auto m = jacobi_moments(laguerre_b(0), laguerre_l(0), 11);
    for (int n = 1; n <= 10; ++n) CHECK(m[n] == static_cast<long long>(enumerate_histories(n).size()));
    CHECK(jacobi_moments(laguerre_b(0), laguerre_l(0), 31)[30].str() == "265252859812191058636308480000000");
    CHECK_THROWS_AS(jacobi_moments(laguerre_b(0), laguerre_l(0), 0), InvalidInput);
}
