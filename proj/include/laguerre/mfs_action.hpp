#ifndef LAGUERRE_MFS_ACTION_HPP
#define LAGUERRE_MFS_ACTION_HPP

#include <vector>

#include "laguerre/perm_stats.hpp"
#include "laguerre/permutation.hpp"

namespace laguerre {

// pi = w1 w2 x w3 w4, where w2 and w3 are the maximal runs of letters
// greater than x next to x (boundary letters are 0).
struct XFactorization {
    std::vector<int> w1, w2, w3, w4;
};
XFactorization x_factorization(const Permutation& pi, int x);

// Swaps w2 and w3 of the x-factorization unless x is a valley
// (zero boundary). Involution; maps for distinct x commute.
Permutation mfs_phi_x(const Permutation& pi, int x);

// Applies mfs_phi_x for every x in `xs`, in the given order.
Permutation mfs_phi_set(const Permutation& pi, const std::vector<int>& xs);

// mfs_phi_x for every x in [n]: every double ascent becomes a double
// descent and vice versa.
Permutation mfs_full(const Permutation& pi);

// Peaks, valleys, double ascents and double descents with pi(0) = pi(n+1) = 0.
inline LinearKinds starred_kinds(const Permutation& pi) { return linear_kinds(pi, Boundary::Zero); }

}  // namespace laguerre

#endif  // LAGUERRE_MFS_ACTION_HPP
