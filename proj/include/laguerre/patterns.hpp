#ifndef LAGUERRE_PATTERNS_HPP
#define LAGUERRE_PATTERNS_HPP

#include <functional>
#include <string>
#include <vector>

#include "laguerre/multiset.hpp"
#include "laguerre/permutation.hpp"

namespace laguerre {

/// Vincular pattern: a permutation of [k] in which some neighbouring letters
/// must also be neighbours in the host permutation.
struct VincularPattern {
    std::vector<int> values;
    // glued[a] (0-based) ties letters a and a+1 together.
    std::vector<bool> glued;

    int size() const { return static_cast<int>(values.size()); }
    friend bool operator==(const VincularPattern&, const VincularPattern&) = default;
};

// Literal syntax: plain digits are free letters; `u` followed by digits (up to
// the next `_`, `u` or end) or `u(...)` is a glued block. Examples: `2u31`,
// `u31_2`, `1u32`, `u21`, `312`, `u(31)42`.
VincularPattern parse_pattern(const std::string& literal);
std::string to_literal(const VincularPattern& p);

// Number of occurrences of p in pi.
long long vincular_count(const Permutation& pi, const VincularPattern& p);

// Coordinate statistics at position i (1-based):
//   two_13(i) = #{j : i < j < n, pi(j) < pi(i) < pi(j+1)}
//   two_31(i) = #{j : i < j < n, pi(j+1) < pi(i) < pi(j)}
//   thirtyone_2(i) = #{j : 1 <= j < i-1, pi(j+1) < pi(i) < pi(j)}
enum class Coordinate { Two13, Two31, ThirtyOne2 };
int coordinate_stat(const Permutation& pi, Coordinate which, int i);

struct PatternMultisets {
    IntMultiset two_13, two_31, thirtyone_2;
};
// Value pi(i) with multiplicity equal to its coordinate statistic.
PatternMultisets pattern_multisets(const Permutation& pi);

// True when pi has no (classical) occurrence of the permutation `pattern`.
bool classical_avoids(const Permutation& pi, const std::vector<int>& pattern);

// Lexicographic enumeration of the permutations of [n] avoiding `pattern`,
// pruning prefixes that already contain it.
void for_each_avoider(int n, const std::vector<int>& pattern, const std::function<void(const Permutation&)>& fn);

}  // namespace laguerre

#endif  // LAGUERRE_PATTERNS_HPP
