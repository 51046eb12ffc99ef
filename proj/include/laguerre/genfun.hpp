#ifndef LAGUERRE_GENFUN_HPP
#define LAGUERRE_GENFUN_HPP

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "laguerre/history.hpp"
#include "laguerre/multipoly.hpp"
#include "laguerre/permutation.hpp"

namespace laguerre {

// t1 t2 t3 t4 r s x v w
const std::vector<std::string>& a_variables();

// Exponents of the history's monomial in a_variables() order:
// sdeb, sdea, neb, nea, nde, asc, cs, ht, wt.
std::array<int, 9> a_exponents(const LaguerreHistory& W);

// Sum of the monomials of all histories of length n.
MultiPoly a_polynomial(int n, int threads = 1);

using XiFunction = std::function<LaguerreHistory(const LaguerreHistory&)>;

// First history whose monomial differs from the transformed monomial of its
// image under `involution` (the exponent form of the functional equation of
// the generating function), or nothing if every history agrees.
std::optional<LaguerreHistory> a_symmetry_violation(int n, const XiFunction& involution);
bool verify_a_symmetry(int n);
bool verify_a_symmetry(int n, const XiFunction& involution);

// Sum over S_n, or over the permutations avoiding `avoid` (classical
// pattern), of q^{stat}. Variable `q` for one statistic, q1..qk for several.
// Throws UnknownStatistic for an unregistered id.
MultiPoly joint_distribution(int n, const std::vector<std::string>& stats,
                             const std::optional<std::vector<int>>& avoid = std::nullopt, int threads = 1);

// Sum over 213-avoiders of t^des q^{31-2}, in variables (t, q).
MultiPoly qt_catalan_direct(int n);
// The same polynomial as the p -> 0 limit of the (p, q)-Eulerian
// specialization of a_polynomial(n). Throws NegativePDegree if a negative
// power of p survives.
MultiPoly qt_catalan_limit(int n);
// qt_catalan_direct(n), after checking it against qt_catalan_limit(n);
// throws InternalInconsistency if they differ.
MultiPoly qt_catalan(int n);

using Sequence = std::function<BigInt(int)>;

// mu_0 .. mu_{count-1}: weighted Motzkin paths from height 0 back to 0, where
// a level step at height k weighs b(k), a down step from height k weighs
// lam(k) and up steps weigh 1.
std::vector<BigInt> jacobi_moments(const Sequence& b, const Sequence& lam, int count);

}  // namespace laguerre

#endif  // LAGUERRE_GENFUN_HPP
