#include "printers.hpp"

#include <array>

#include "laguerre/bijections.hpp"
#include "laguerre/claims.hpp"
#include "laguerre/involution.hpp"

using namespace laguerre;

namespace {

bool claim_fails_by(int n_max, const XiCaseTable& table) {
    ClaimOptions o;
    o.table = &table;
    for (int n = 1; n <= n_max; ++n)
        if (!run_claim("thm3.2-involution", n, o).pass) return true;
    return false;
}

}  // namespace

TEST_CASE("small cases") {
    CHECK(to_string(xi(parse_history("E/0"))) == "E/0");
    CHECK(to_string(xi(parse_history("EE/0,0"))) == "NS/0,1");
    CHECK(to_string(xi(parse_history("NS/0,1"))) == "EE/0,0");
}

TEST_CASE("nine-step example agrees with theta through the FZ map") {
    const auto W = phi_fz(parse_permutation("947612853"));
    CHECK(xi(W) == phi_fz(parse_permutation("528943617")));
    CHECK(xi(xi(W)) == W);
}

TEST_CASE("contract checker") {
    const auto E = parse_history("E/0");
    CHECK(verify_xi_contract(E, E));
    const auto EE = parse_history("EE/0,0");
    CHECK_FALSE(verify_xi_contract(EE, EE));
    CHECK(verify_xi_contract(EE, parse_history("NS/0,1")));
    CHECK_FALSE(verify_xi_contract(EE, parse_history("E/0")));
}

TEST_CASE("involution and contract, exhaustively up to length 7") {
    for (int n = 1; n <= 7; ++n) {
        for_each_history(n, [&](const LaguerreHistory& W) {
            const auto V = xi(W);
            CHECK(xi(V) == W);
            CHECK(verify_xi_contract(W, V));
            CHECK(critical_step(V) == n + 1 - critical_step(W));
        });
    }
}

TEST_CASE("every case-table row is used by length 5") {
    std::array<std::uint64_t, 14> coverage{};
    for (int n = 1; n <= 5; ++n)
        for_each_history(n, [&](const LaguerreHistory& W) {
            CHECK(check_xi_cases(W, xi(W), xi_case_table(), &coverage).ok);
        });
    for (int r = 0; r < 14; ++r) CHECK_MESSAGE(coverage[r] > 0, "row " << r + 1);
}

TEST_CASE("corrupting any field of any row is caught by length 4") {
    for (int row = 0; row < 14; ++row) {
        for (int field = 0; field < 5; ++field) {
            XiCaseTable t = xi_case_table();
            XiCase& r = t[row];
            switch (field) {
                case 0: r.g_here += 1; break;
                case 1: r.g_next += 1; break;
                case 2: r.b_lo += 1; break;
                case 3: r.v_j = r.v_j == StepClass::NE ? StepClass::SdE : StepClass::NE; break;
                case 4: r.diff_lo += 2; r.diff_hi += 2; break;
            }
            CHECK_MESSAGE(claim_fails_by(4, t), "row " << row + 1 << " field " << field);
        }
    }
}

TEST_CASE("a half-shifted difference range needs length 5 in two rows") {
    // Rows 8 and 11 allow g_{j+1} - g_j in {0, -1}; the -1 branch first occurs at length 5.
    for (int row : {7, 10}) {
        XiCaseTable t = xi_case_table();
        t[row].diff_lo += 1;
        t[row].diff_hi += 1;
        CHECK_FALSE(claim_fails_by(4, t));
        CHECK(claim_fails_by(5, t));
    }
}

TEST_CASE("statistic exchanges under the involution up to length 7") {
    for (const char* id : {"cor3.3", "cor3.6"})
        for (int n = 1; n <= 7; ++n) CHECK_MESSAGE(run_claim(id, n).pass, id << " n=" << n);
}
