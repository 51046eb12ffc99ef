#ifndef LAGUERRE_STAT_REGISTRY_HPP
#define LAGUERRE_STAT_REGISTRY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "laguerre/perm_stats.hpp"

namespace laguerre {

// The 35 Mahonian statistic ids, primes spelled `_p`:
// mak mad makl madl, maj inv bast bast_p bast_pp foze foze_p foze_pp sist
// sist_p sist_pp den sor, mak_p mad_p makl_p madl_p fz3 fz4 inv_p den_p fz3_p
// fz4_p yzl1..yzl4 yzl1_p..yzl4_p.
const std::vector<std::string>& mahonian_ids();
// The 17 statistics given as pattern sums or by name in the classical table
// (the subset of mahonian_ids() from mak to sor).
const std::vector<std::string>& classical_mahonian_ids();
// The 18 statistics given by closed forms (mak_p ... yzl4_p).
const std::vector<std::string>& derived_mahonian_ids();

// Four vincular pattern literals whose counts add up to the statistic, for
// every classical id except den and sor.
const std::map<std::string, std::vector<std::string>>& mahonian_pattern_sums();

// Numeric statistics other than the Mahonian ones.
const std::vector<std::string>& basic_statistic_ids();

/// Evaluates statistics of one permutation, computing each family at most once.
///
/// Accepted ids: everything in mahonian_ids() and basic_statistic_ids(), the
/// coordinate names `2-13`, `2-31`, `31-2`, and any vincular pattern literal
/// (e.g. `2u31`, `u31_2`, `312`). Anything else throws UnknownStatistic.
class StatEvaluator {
public:
    explicit StatEvaluator(const Permutation& pi) : pi_(pi) {}

    long long value(const std::string& id);
    long long pattern(const std::string& literal);

    const Permutation& permutation() const { return pi_; }
    const LinearStatRecord& linear();
    const CyclicStatRecord& cyclic();
    const ShiftedStatRecord& shifted();
    const PatternMultisets& patterns();
    const LinearKinds& starred();  // zero boundary

private:
    long long mahonian_value(const std::string& id);

    Permutation pi_;
    std::optional<LinearStatRecord> linear_;
    std::optional<CyclicStatRecord> cyclic_;
    std::optional<ShiftedStatRecord> shifted_;
    std::optional<PatternMultisets> patterns_;
    std::optional<LinearKinds> starred_;
    std::map<std::string, long long> pattern_cache_;
};

long long statistic_value(const Permutation& pi, const std::string& id);
long long mahonian(const Permutation& pi, const std::string& id);
bool is_known_statistic(const std::string& id);

// Every family of one permutation as a JSON object.
nlohmann::json statistics_to_json(const Permutation& pi);

}  // namespace laguerre

#endif  // LAGUERRE_STAT_REGISTRY_HPP
