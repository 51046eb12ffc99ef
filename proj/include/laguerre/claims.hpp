#ifndef LAGUERRE_CLAIMS_HPP
#define LAGUERRE_CLAIMS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "laguerre/genfun.hpp"
#include "laguerre/involution.hpp"

namespace laguerre {

class UnknownClaim : public Error {
public:
    explicit UnknownClaim(const std::string& id) : Error("unknown claim: " + id), id_(id) {}
    const std::string& id() const noexcept { return id_; }

private:
    std::string id_;
};

struct ClaimOptions {
    int threads = 1;
    // Case table used by the involution checks; nullptr means xi_case_table().
    const XiCaseTable* table = nullptr;
    // Involution under test; empty means xi.
    XiFunction involution;
};

// Result of one claim at one n. `checked` counts the objects examined in
// enumeration order, up to and including the first counterexample.
struct ClaimOutcome {
    bool pass = true;
    long long checked = 0;
    std::optional<nlohmann::json> counterexample;
};

struct ClaimReport {
    std::string claim;
    int n = 0;
    bool pass = true;
    long long checked = 0;
    std::optional<nlohmann::json> counterexample;
    long long millis = 0;
};

nlohmann::json to_json(const ClaimReport& r);

// Registered claim ids in a fixed order.
const std::vector<std::string>& claim_ids();
bool is_known_claim(const std::string& id);

// Exhaustive check of one claim at one n. Throws UnknownClaim.
ClaimOutcome run_claim(const std::string& id, int n, const ClaimOptions& opts = {});

// Runs the claim for n = 1..n_max, handing each report to `on_report` as soon
// as it is ready, and stops after the first failing n. Returns true iff all
// checked n pass.
bool verify_claim(const std::string& id, int n_max, const ClaimOptions& opts,
                  const std::function<void(const ClaimReport&)>& on_report);

}  // namespace laguerre

#endif  // LAGUERRE_CLAIMS_HPP
