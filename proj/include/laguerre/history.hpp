#ifndef LAGUERRE_HISTORY_HPP
#define LAGUERRE_HISTORY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "laguerre/errors.hpp"
#include "laguerre/multiset.hpp"

namespace laguerre {

// Declaration order is the enumeration order of steps: N < E < dE < S.
enum class Step : std::uint8_t { N, E, dE, S };

inline bool is_ne(Step s) { return s == Step::N || s == Step::E; }
inline bool is_sde(Step s) { return s == Step::S || s == Step::dE; }
inline bool is_nde(Step s) { return s == Step::N || s == Step::dE; }
inline bool is_se(Step s) { return s == Step::S || s == Step::E; }

// Height change contributed by a step.
inline int step_delta(Step s) { return s == Step::N ? 1 : (s == Step::S ? -1 : 0); }

// Text letter: N, S, E, or D for the dotted east step.
char step_letter(Step s);
Step step_from_letter(char ch);

class PathBelowAxis : public InvalidInput {
public:
    explicit PathBelowAxis(int index);
    int index() const noexcept { return index_; }

private:
    int index_;
};

class PathNotClosed : public InvalidInput {
public:
    PathNotClosed();
};

class WeightOutOfBounds : public InvalidInput {
public:
    explicit WeightOutOfBounds(int index);
    int index() const noexcept { return index_; }

private:
    int index_;
};

/// Restricted Laguerre history with shifted weight bounds.
///
/// A Motzkin path of length n with steps N, S, E and dotted dE, heights
/// h_i (before step i) and weights c_i with 0 <= c_i <= h_i on N/E steps and
/// 1 <= c_i <= h_i on S/dE steps. Vectors are stored 0-based; every public
/// index-valued quantity (critical step, statistic sets) is 1-based.
class LaguerreHistory {
public:
    // Validates and computes heights. Throws PathBelowAxis, PathNotClosed or
    // WeightOutOfBounds naming the first violating (1-based) index.
    static LaguerreHistory from_word_and_weights(std::vector<Step> w, std::vector<int> c);

    int size() const noexcept { return static_cast<int>(w_.size()); }
    // 1-based accessors.
    Step step(int i) const { return w_[i - 1]; }
    int height(int i) const { return h_[i - 1]; }
    int weight(int i) const { return c_[i - 1]; }

    const std::vector<Step>& steps() const noexcept { return w_; }
    const std::vector<int>& heights() const noexcept { return h_; }
    const std::vector<int>& weights() const noexcept { return c_; }

    friend bool operator==(const LaguerreHistory& a, const LaguerreHistory& b) {
        return a.w_ == b.w_ && a.c_ == b.c_;
    }

private:
    friend class HistoryEnumerator;

    std::vector<Step> w_;
    std::vector<int> h_;
    std::vector<int> c_;
};

// Last index i with c_i = 0.
int critical_step(const LaguerreHistory& W);

struct HistoryStatRecord {
    int cs = 0;
    IntMultiset neb, sdeb, ndeb;  // indices before cs
    IntMultiset nea, sdea, ndea;  // indices after cs
    IntMultiset nde;              // NdE indices in [n-1]
    IntMultiset asc;
    IntMultiset ht, wt;           // h_i (resp. c_i) copies of i
};

HistoryStatRecord history_statistics(const LaguerreHistory& W);

// Calls fn on every history of length n, in lexicographic order on (w, c)
// with N < E < dE < S.
void for_each_history(int n, const std::function<void(const LaguerreHistory&)>& fn);

// Same order, restricted to histories whose word starts with `prefix`.
void for_each_history_with_prefix(int n, const std::vector<Step>& prefix,
                                  const std::function<void(const LaguerreHistory&)>& fn);

// All step prefixes of length `len` that extend to some history of length n,
// in enumeration order. Concatenating the prefix-restricted enumerations in
// this order reproduces for_each_history.
std::vector<std::vector<Step>> history_prefixes(int n, int len);

std::vector<LaguerreHistory> enumerate_histories(int n);

// `NNNDESDSS/0,0,0,2,1,3,2,2,1`
std::string to_string(const LaguerreHistory& W);
LaguerreHistory parse_history(const std::string& text);

nlohmann::json to_json(const LaguerreHistory& W);
LaguerreHistory history_from_json(const nlohmann::json& j);

}  // namespace laguerre

#endif  // LAGUERRE_HISTORY_HPP
