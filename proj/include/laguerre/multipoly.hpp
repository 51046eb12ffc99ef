#ifndef LAGUERRE_MULTIPOLY_HPP
#define LAGUERRE_MULTIPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace laguerre {

using BigInt = boost::multiprecision::cpp_int;

// Product of variables with integer (possibly negative) exponents, by name.
using Monomial = std::map<std::string, int>;

/// Sparse Laurent polynomial with integer coefficients over a fixed, ordered
/// list of variables. Zero coefficients are never stored.
class MultiPoly {
public:
    using Exponents = std::vector<int>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> variables);
    static MultiPoly constant(std::vector<std::string> variables, const BigInt& c);

    const std::vector<std::string>& variables() const noexcept { return vars_; }
    const std::map<Exponents, BigInt>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    int variable_index(const std::string& name) const;  // -1 if absent

    void add_term(const Exponents& e, const BigInt& c);
    BigInt coefficient(const Exponents& e) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

    // Same variables and same terms.
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    // Sum of all coefficients (every variable set to 1).
    BigInt value_at_ones() const;
    // Smallest exponent of one variable over all terms; 0 for the zero polynomial.
    int min_degree(const std::string& var) const;
    // Terms whose exponent of `var` is `degree`, with `var` dropped.
    MultiPoly coefficient_of(const std::string& var, int degree) const;
    // Coefficients of a one-variable polynomial from degree 0 upward.
    // Throws InvalidInput on negative exponents or more than one variable.
    std::vector<BigInt> dense_coefficients() const;

private:
    void check_same_vars(const MultiPoly& o) const;

    std::vector<std::string> vars_;
    std::map<Exponents, BigInt> terms_;
};

// Replaces each variable of p by a monomial in `new_variables`. Variables
// missing from `subst` are kept as themselves and must appear in `new_variables`.
MultiPoly specialize(const MultiPoly& p, const std::map<std::string, Monomial>& subst,
                     const std::vector<std::string>& new_variables);

// Terms by total degree, ties by exponent tuple in lexicographic order:
// `1 + 2 q + 2 q^2 + q^3`, `2 - q1 + q1^2 q2^-1`.
std::string to_string(const MultiPoly& p);
// [{"coeff": "2", "exps": {"q": 1}}, ...] in the order of to_string. Coefficients
// are JSON integers when they fit in 64 bits and decimal strings otherwise.
nlohmann::json to_json(const MultiPoly& p);

// [n]_q! = prod_{k=1}^{n} (1 + q + ... + q^{k-1}) in the single variable `var`.
MultiPoly q_factorial(int n, const std::string& var = "q");

}  // namespace laguerre

#endif  // LAGUERRE_MULTIPOLY_HPP
