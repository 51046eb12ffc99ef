#ifndef LAGUERRE_INVOLUTION_HPP
#define LAGUERRE_INVOLUTION_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "laguerre/history.hpp"

namespace laguerre {

/// The involution on histories of length n that reverses the path and
/// moves the critical step from m to n+1-m. Built step by step from the
/// defining conditions; throws InternalInconsistency if they cannot be met.
LaguerreHistory xi(const LaguerreHistory& W);

/// Checks the four defining conditions of the involution directly for a
/// pair (W, V), without calling xi.
bool verify_xi_contract(const LaguerreHistory& W, const LaguerreHistory& V);

// ---------------------------------------------------------------------------
// Case table for the construction, used only as an independent verifier.
//
// Each step j of V = xi(W) falls into exactly one case, keyed by where j sits
// relative to n+1-m (m = cs(W)) and by the NE/SdE classes of v_j, v_{j+1},
// w_{n+1-j}, w_{n-j}. A case predicts g_j, g_{j+1}, g_{j+1}-g_j and the range
// of b_j.

enum class CasePosition : std::uint8_t {
    AtCritical,      // j = n+1-m, j < n
    JustBefore,      // j = n-m
    Before,          // j < n-m
    After,           // n+1-m < j < n
    LastFromFirst,   // j = n and m = 1
    LastOther,       // j = n and m > 1
};

enum class StepClass : std::uint8_t { NE, SdE };

struct XiCase {
    CasePosition position;
    // Classes of v_j, v_{j+1}, w_{n+1-j}, w_{n-j}; ignored for the two last-step cases.
    StepClass v_j, v_next, w_here, w_prev;
    // For the last-step cases these are absolute values of g_j and g_{j+1};
    // otherwise offsets relative to h_{n+1-j} and h_{n-j}.
    int g_here, g_next;
    bool absolute_heights;
    // Allowed values of g_{j+1} - g_j.
    int diff_lo, diff_hi;
    // b_j lies in [b_lo, g_j] when b_up_to_g, otherwise in [b_lo, b_hi].
    int b_lo, b_hi;
    bool b_up_to_g;
    // For the last-step cases the exact tag of v_j is fixed.
    std::optional<Step> exact_tag;
};

using XiCaseTable = std::array<XiCase, 14>;

const XiCaseTable& xi_case_table();

struct XiCaseCheck {
    bool ok = true;
    int step = 0;       // first failing j (1-based), 0 if ok
    int row = -1;       // 0-based table row matched at that step, -1 if none
    std::string reason;
};

/// Classifies every step of V against `table` and checks the row predictions.
/// Row hits are accumulated into `coverage` when given.
XiCaseCheck check_xi_cases(const LaguerreHistory& W, const LaguerreHistory& V, const XiCaseTable& table,
                           std::array<std::uint64_t, 14>* coverage = nullptr);

}  // namespace laguerre

#endif  // LAGUERRE_INVOLUTION_HPP
