#include "laguerre/involution.hpp"

#include <vector>

namespace laguerre {

LaguerreHistory xi(const LaguerreHistory& W) {
    const int n = W.size();
    const int m = critical_step(W);
    const int pivot = n + 1 - m;

    // Class of v_j (true = NE) and g_j, 1-based with g_{n+1} = 0.
    std::vector<bool> ne(n + 2, false);
    std::vector<int> g(n + 2, 0);
    for (int j = 1; j <= n; ++j) {
        const int k = n + 1 - j;
        ne[j] = (j == pivot) ? true : is_sde(W.step(k));
        int gj = W.height(k);
        if (j > pivot && !ne[j]) gj += 1;
        if (j < pivot && ne[j]) gj -= 1;
        g[j] = gj;
    }

    std::vector<Step> v(n);
    std::vector<int> b(n);
    for (int j = 1; j <= n; ++j) {
        const int diff = g[j + 1] - g[j];
        Step s;
        if (diff == 1 && ne[j]) {
            s = Step::N;
        } else if (diff == -1 && !ne[j]) {
            s = Step::S;
        } else if (diff == 0) {
            s = ne[j] ? Step::E : Step::dE;
        } else {
            throw InternalInconsistency("involution: step " + std::to_string(j) + " of " + to_string(W) +
                                        " has incompatible class and height change");
        }
        v[j - 1] = s;
        const int k = n + 1 - j;
        b[j - 1] = g[j] - W.height(k) + W.weight(k);
    }

    LaguerreHistory V = [&] {
        try {
            return LaguerreHistory::from_word_and_weights(std::move(v), std::move(b));
        } catch (const InvalidInput& e) {
            throw InternalInconsistency("involution produced an invalid history from " + to_string(W) + ": " +
                                        e.what());
        }
    }();
    for (int j = 1; j <= n; ++j)
        if (V.height(j) != g[j]) throw InternalInconsistency("involution: height mismatch on " + to_string(W));
    if (critical_step(V) != pivot)
        throw InternalInconsistency("involution: critical step of image is not n+1-m for " + to_string(W));
    return V;
}

bool verify_xi_contract(const LaguerreHistory& W, const LaguerreHistory& V) {
    const int n = W.size();
    if (V.size() != n) return false;
    const int m = critical_step(W);
    const int pivot = n + 1 - m;
    if (critical_step(V) != pivot) return false;
    for (int j = 1; j <= n; ++j) {
        const int k = n + 1 - j;
        if (j != pivot && is_ne(V.step(j)) != is_sde(W.step(k))) return false;
        int expected = W.height(k);
        if (j > pivot && is_sde(V.step(j))) expected += 1;
        else if (j < pivot && is_ne(V.step(j))) expected -= 1;
        if (V.height(j) != expected) return false;
        if (V.weight(j) != V.height(j) - W.height(k) + W.weight(k)) return false;
    }
    return true;
}

namespace {

constexpr StepClass NE = StepClass::NE;
constexpr StepClass SdE = StepClass::SdE;

XiCase general(CasePosition pos, StepClass vj, StepClass vn, StepClass wh, StepClass wp, int gh, int gn,
               int blo) {
    XiCase r{};
    r.position = pos;
    r.v_j = vj;
    r.v_next = vn;
    r.w_here = wh;
    r.w_prev = wp;
    r.g_here = gh;
    r.g_next = gn;
    r.absolute_heights = false;
    if (vj == NE) {
        r.diff_lo = 0;
        r.diff_hi = 1;
    } else {
        r.diff_lo = -1;
        r.diff_hi = 0;
    }
    r.b_lo = blo;
    r.b_hi = 0;
    r.b_up_to_g = true;
    return r;
}

XiCase last(CasePosition pos, Step tag, int gh, int diff, int b) {
    XiCase r{};
    r.position = pos;
    r.v_j = is_ne(tag) ? NE : SdE;
    r.v_next = NE;
    r.w_here = NE;
    r.w_prev = NE;
    r.g_here = gh;
    r.g_next = 0;
    r.absolute_heights = true;
    r.diff_lo = r.diff_hi = diff;
    r.b_lo = r.b_hi = b;
    r.b_up_to_g = false;
    r.exact_tag = tag;
    return r;
}

XiCaseTable make_table() {
    using P = CasePosition;
    XiCaseTable t = {
        general(P::AtCritical, NE, NE, NE, SdE, 0, 0, 0),
        general(P::AtCritical, NE, SdE, NE, NE, 0, +1, 0),
        general(P::JustBefore, NE, NE, SdE, NE, -1, 0, 0),
        general(P::JustBefore, SdE, NE, NE, NE, 0, 0, 1),
        general(P::Before, NE, NE, SdE, SdE, -1, -1, 0),
        general(P::Before, NE, SdE, SdE, NE, -1, 0, 0),
        general(P::Before, SdE, NE, NE, SdE, 0, -1, 1),
        general(P::Before, SdE, SdE, NE, NE, 0, 0, 1),
        general(P::After, NE, NE, SdE, SdE, 0, 0, 1),
        general(P::After, NE, SdE, SdE, NE, 0, +1, 1),
        general(P::After, SdE, NE, NE, SdE, +1, 0, 1),
        general(P::After, SdE, SdE, NE, NE, +1, +1, 1),
        last(P::LastFromFirst, Step::E, 0, 0, 0),
        last(P::LastOther, Step::S, 1, -1, 1),
    };
    // At the critical position b_j is exactly 0.
    for (int r = 0; r < 2; ++r) {
        t[r].b_up_to_g = false;
        t[r].b_lo = t[r].b_hi = 0;
    }
    return t;
}

StepClass class_of(Step s) { return is_ne(s) ? NE : SdE; }

}  // namespace

const XiCaseTable& xi_case_table() {
    static const XiCaseTable table = make_table();
    return table;
}

XiCaseCheck check_xi_cases(const LaguerreHistory& W, const LaguerreHistory& V, const XiCaseTable& table,
                           std::array<std::uint64_t, 14>* coverage) {
    const int n = W.size();
    const int m = critical_step(W);
    auto fail = [](int j, int row, std::string why) {
        XiCaseCheck r;
        r.ok = false;
        r.step = j;
        r.row = row;
        r.reason = std::move(why);
        return r;
    };
    if (V.size() != n) return fail(0, -1, "length mismatch");

    for (int j = 1; j <= n; ++j) {
        CasePosition pos;
        if (j == n) pos = (m == 1) ? CasePosition::LastFromFirst : CasePosition::LastOther;
        else if (j == n + 1 - m) pos = CasePosition::AtCritical;
        else if (j == n - m) pos = CasePosition::JustBefore;
        else if (j < n - m) pos = CasePosition::Before;
        else pos = CasePosition::After;

        const bool last_step = (j == n);
        const Step vj = V.step(j);
        const StepClass cvj = class_of(vj);
        const StepClass cwh = class_of(W.step(n + 1 - j));

        int row = -1;
        for (int r = 0; r < 14; ++r) {
            const XiCase& x = table[r];
            if (x.position != pos) continue;
            if (last_step) {
                if (x.w_here != cwh) continue;
            } else {
                if (x.v_j != cvj || x.w_here != cwh) continue;
                if (x.v_next != class_of(V.step(j + 1))) continue;
                if (x.w_prev != class_of(W.step(n - j))) continue;
            }
            row = r;
            break;
        }
        if (row < 0) return fail(j, -1, "no case matches");
        if (coverage) ++(*coverage)[row];

        const XiCase& x = table[row];
        const int gj = V.height(j);
        const int gnext = last_step ? 0 : V.height(j + 1);
        if (x.absolute_heights) {
            if (gj != x.g_here) return fail(j, row, "g_j differs from the case value");
            if (gnext != x.g_next) return fail(j, row, "g_{j+1} differs from the case value");
            if (x.exact_tag && vj != *x.exact_tag) return fail(j, row, "step tag differs from the case value");
            if (x.v_j != cvj) return fail(j, row, "step class differs from the case value");
        } else {
            if (gj != W.height(n + 1 - j) + x.g_here) return fail(j, row, "g_j differs from the case formula");
            if (gnext != W.height(n - j) + x.g_next) return fail(j, row, "g_{j+1} differs from the case formula");
        }
        const int diff = gnext - gj;
        if (diff < x.diff_lo || diff > x.diff_hi) return fail(j, row, "g_{j+1}-g_j outside the case range");
        const int bj = V.weight(j);
        const int bhi = x.b_up_to_g ? gj : x.b_hi;
        if (bj < x.b_lo || bj > bhi) return fail(j, row, "b_j outside the case range");
    }
    return {};
}

}  // namespace laguerre
