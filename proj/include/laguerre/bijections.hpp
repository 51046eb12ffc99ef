#ifndef LAGUERRE_BIJECTIONS_HPP
#define LAGUERRE_BIJECTIONS_HPP

#include <string>
#include <vector>

#include "laguerre/history.hpp"
#include "laguerre/permutation.hpp"

namespace laguerre {

// Step i records the linear type of value i (boundary -inf, +inf):
// valley N, peak S, double ascent E, double descent dE.
// Weight: 2-31 coordinate of value i, plus one on S/dE.
LaguerreHistory phi_fv(const Permutation& pi);
// Slot insertion; throws SlotIndexOutOfRange only on a bug.
Permutation phi_fv_inv(const LaguerreHistory& W);

// Step i records the cyclic type of i: valley N, peak S, double descent E,
// double ascent dE. Weight: side number of i, plus one on S/dE.
LaguerreHistory phi_fz(const Permutation& pi);
// The two-row words w_E (top: N/dE indices, bottom: S/dE values) and w_N
// (top: S/E indices, bottom: N/E values). Stacking the columns and sorting by
// the top row gives phi_fz_inv(W).
struct FzWords {
    std::vector<int> top_e, bottom_e, top_n, bottom_n;
};
FzWords fz_words(const LaguerreHistory& W);

// Two-row word construction; throws PlacementImpossible only on a bug.
Permutation phi_fz_inv(const LaguerreHistory& W);

// Step i is read off the arcs at i and i+1 of the permutation diagram, with
// special rules at pone and n. Weight: vnest_i, plus one on S/dE.
LaguerreHistory phi_yzl(const Permutation& pi);
// Semi-arc construction; throws ArcMismatch only on a bug.
Permutation phi_yzl_inv(const LaguerreHistory& W);

// phi_fz_inv(phi_fv(pi)). Keeps the last letter.
Permutation phi_csz(const Permutation& pi);

// theta_n = n+1-pi(n), theta_i = n+1-pi(n-i) for i < n. An involution.
Permutation theta(const Permutation& pi);

// pi^{-1}(2) ... pi^{-1}(n) pi^{-1}(1).
Permutation kreweras(const Permutation& pi);

// Maps on S_n obtained by transporting the history involution through one
// of the three bijections. Always computed by composition.
enum class ConjugatedMap { PhiInv, Eta, Rho };
Permutation conjugated_map(const Permutation& pi, ConjugatedMap which);
// "phi_inv", "eta", "rho"; throws InvalidInput otherwise.
ConjugatedMap conjugated_map_from_name(const std::string& name);

}  // namespace laguerre

#endif  // LAGUERRE_BIJECTIONS_HPP
