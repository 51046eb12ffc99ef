#include "printers.hpp"

#include "laguerre/mfs_action.hpp"
#include "laguerre/patterns.hpp"
#include "laguerre/perm_stats.hpp"

using namespace laguerre;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

// 2-31 at every position, counted through consecutive peak/valley pairs under
// the zero boundary. With `tail_valley` the last letter closes the final
// descending run as a valley.
std::vector<int> two_31_by_extrema(const Permutation& pi, bool tail_valley) {
    const int n = pi.size();
    std::vector<int> extrema;
    std::vector<LinearKind> kind(n + 1);
    for (int p = 1; p <= n; ++p) {
        kind[p] = linear_kind_at(pi, p, Boundary::Zero);
        if (kind[p] == LinearKind::Peak || kind[p] == LinearKind::Valley) extrema.push_back(p);
    }
    if (tail_valley && kind[n] != LinearKind::Peak) {
        extrema.push_back(n);
        kind[n] = LinearKind::Valley;
    }
    std::vector<int> out(n, 0);
    for (int i = 1; i <= n; ++i)
        for (std::size_t t = 0; t + 1 < extrema.size(); ++t) {
            const int j = extrema[t], k = extrema[t + 1];
            if (kind[j] == LinearKind::Peak && kind[k] == LinearKind::Valley && i < j && pi(k) < pi(i) && pi(i) < pi(j))
                ++out[i - 1];
        }
    return out;
}

std::vector<int> two_31_direct(const Permutation& pi) {
    std::vector<int> out;
    for (int i = 1; i <= pi.size(); ++i) out.push_back(coordinate_stat(pi, Coordinate::Two31, i));
    return out;
}

}  // namespace

TEST_CASE("x-factorization") {
    const auto f = x_factorization(P("28531746"), 3);
    CHECK(f.w1 == std::vector<int>{2});
    CHECK(f.w2 == std::vector<int>{8, 5});
    CHECK(f.w3.empty());
    CHECK(f.w4 == std::vector<int>{1, 7, 4, 6});
    CHECK(mfs_phi_x(P("28531746"), 3) == P("23851746"));
    // 1 is a valley: nothing moves.
    CHECK(mfs_phi_x(P("28531746"), 1) == P("28531746"));
}

TEST_CASE("full action on a nine-letter permutation") {
    CHECK(mfs_full(P("596137428")) == P("695147328"));
    CHECK(mfs_full(P("1")) == P("1"));
    CHECK(mfs_full(P("12")) == P("21"));
}

TEST_CASE("local maps are commuting involutions") {
    for (int n = 1; n <= 6; ++n)
        for_each_permutation(n, [&](const Permutation& pi) {
            for (int x = 1; x <= n; ++x) {
                CHECK(mfs_phi_x(mfs_phi_x(pi, x), x) == pi);
                for (int y = x + 1; y <= n; ++y)
                    CHECK(mfs_phi_x(mfs_phi_x(pi, x), y) == mfs_phi_x(mfs_phi_x(pi, y), x));
            }
            std::vector<int> all(n), reversed(n);
            for (int x = 1; x <= n; ++x) all[x - 1] = reversed[n - x] = x;
            CHECK(mfs_phi_set(pi, all) == mfs_full(pi));
            CHECK(mfs_phi_set(pi, reversed) == mfs_full(pi));
            const auto K = starred_kinds(pi), Ks = starred_kinds(mfs_full(pi));
            CHECK(Ks.double_ascents == K.double_descents);
            CHECK(Ks.double_descents == K.double_ascents);
            CHECK(Ks.peaks == K.peaks);
            CHECK(Ks.valleys == K.valleys);
        });
}

TEST_CASE("2-31 under the full action needs the tail correction") {
    auto literal = [](const Permutation& pi) {
        const auto K = starred_kinds(pi);
        return pattern_multisets(mfs_full(pi)).two_31 ==
               (pattern_multisets(pi).two_31 + K.double_descents) - K.double_ascents;
    };
    // For 12 the double ascent 1 is not in 2-31 at all, so the difference is undefined.
    CHECK_THROWS_AS(literal(P("12")), ContainmentViolation);
    bool some_unequal = false;
    for_each_permutation(4, [&](const Permutation& pi) {
        try {
            if (!literal(pi)) some_unequal = true;
        } catch (const ContainmentViolation&) {
        }
    });
    CHECK(some_unequal);
    for (int n = 1; n <= 7; ++n)
        for_each_permutation(n, [&](const Permutation& pi) {
            const Permutation s = mfs_full(pi);
            const auto K = starred_kinds(pi);
            CHECK(pattern_multisets(s).two_31 + IntMultiset::interval(1, s(n) - 1) ==
                  ((pattern_multisets(pi).two_31 + IntMultiset::interval(1, pi(n) - 1)) + K.double_descents) -
                      K.double_ascents);
        });
}

TEST_CASE("2-31 through peak/valley pairs needs the tail valley") {
    CHECK(two_31_by_extrema(P("231"), false) != two_31_direct(P("231")));
    for (int n = 1; n <= 7; ++n)
        for_each_permutation(n, [&](const Permutation& pi) {
            CHECK(two_31_by_extrema(pi, true) == two_31_direct(pi));
        });
}
