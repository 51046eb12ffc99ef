#ifndef LAGUERRE_PERMUTATION_HPP
#define LAGUERRE_PERMUTATION_HPP

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "laguerre/errors.hpp"

namespace laguerre {

/// Permutation of [n] in one-line notation. All accessors are 1-based.
class Permutation {
public:
    Permutation() = default;
    // Throws InvalidInput unless `word` is a rearrangement of 1..n with n >= 1.
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);

    int size() const noexcept { return static_cast<int>(word_.size()); }
    int operator()(int i) const { return word_[i - 1]; }
    // Position of value v.
    int position_of(int v) const { return inv_[v - 1]; }
    const std::vector<int>& word() const noexcept { return word_; }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.word_ == b.word_; }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.word_ < b.word_; }

private:
    std::vector<int> word_;
    std::vector<int> inv_;
};

Permutation inverse(const Permutation& p);
Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);
// r(c(p)) and r(c(i(p))).
Permutation reverse_complement(const Permutation& p);
Permutation rci(const Permutation& p);

// Comma-separated (`6,1,8,7,4,2,5,9,3`) or, for n <= 9, a bare digit string (`618742593`).
Permutation parse_permutation(const std::string& text);
std::string to_string(const Permutation& p);
nlohmann::json to_json(const Permutation& p);
Permutation permutation_from_json(const nlohmann::json& j);

// Lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);
// Lexicographic order among permutations with p(1) = first.
void for_each_permutation_starting_with(int n, int first, const std::function<void(const Permutation&)>& fn);
std::vector<Permutation> enumerate_permutations(int n);

// n! as a 64-bit integer (n <= 20).
long long factorial(int n);

}  // namespace laguerre

#endif  // LAGUERRE_PERMUTATION_HPP
