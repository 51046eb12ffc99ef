#ifndef LAGUERRE_MULTISET_HPP
#define LAGUERRE_MULTISET_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "laguerre/errors.hpp"

namespace laguerre {

// Some value would get a negative multiplicity in a strict difference.
class ContainmentViolation : public Error {
public:
    explicit ContainmentViolation(int value);
    int value() const noexcept { return value_; }

private:
    int value_;
};

// A value handed to kappa(n, .) lies outside the open interval (0, n).
class OutOfRange : public Error {
public:
    OutOfRange(int value, int n);
    int value() const noexcept { return value_; }

private:
    int value_;
};

/// Finite multiset of positive integers.
///
/// Stored as a value-sorted map with strictly positive multiplicities, so two
/// multisets compare equal exactly when they hold the same elements.
class IntMultiset {
public:
    using Map = std::map<int, std::int64_t>;

    IntMultiset() = default;
    // Each listed value contributes one copy.
    IntMultiset(std::initializer_list<int> values);

    static IntMultiset from_values(const std::vector<int>& values);
    static IntMultiset from_pairs(const std::vector<std::pair<int, std::int64_t>>& pairs);
    // {lo, lo+1, ..., hi}; empty when lo > hi.
    static IntMultiset interval(int lo, int hi);

    void add(int value, std::int64_t multiplicity = 1);

    std::int64_t multiplicity(int value) const;
    std::int64_t cardinality() const noexcept { return cardinality_; }
    bool empty() const noexcept { return entries_.empty(); }
    bool contains(int value) const { return entries_.count(value) != 0; }
    const Map& entries() const noexcept { return entries_; }

    // Sum of value * multiplicity over all entries.
    std::int64_t weighted_sum() const;

    friend bool operator==(const IntMultiset&, const IntMultiset&) = default;

private:
    Map entries_;
    std::int64_t cardinality_ = 0;
};

IntMultiset disjoint_union(const IntMultiset& a, const IntMultiset& b);

// Throws ContainmentViolation if b is not contained in a.
IntMultiset strict_difference(const IntMultiset& a, const IntMultiset& b);

// Replaces every value v by n - v. Requires 0 < v < n for all values.
IntMultiset kappa(int n, const IntMultiset& a);

// Shorthands used heavily by the identity checks: a ⊔ b and a ∖ b.
inline IntMultiset operator+(const IntMultiset& a, const IntMultiset& b) { return disjoint_union(a, b); }
inline IntMultiset operator-(const IntMultiset& a, const IntMultiset& b) { return strict_difference(a, b); }

// Text form `{4^2,5,6^3}`; the empty multiset prints as `{}`.
std::string to_string(const IntMultiset& m);
IntMultiset parse_multiset(const std::string& text);

// JSON form: array of [value, multiplicity] pairs sorted by value.
nlohmann::json to_json(const IntMultiset& m);
IntMultiset multiset_from_json(const nlohmann::json& j);

}  // namespace laguerre

#endif  // LAGUERRE_MULTISET_HPP
