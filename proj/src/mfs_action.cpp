#include "laguerre/mfs_action.hpp"

namespace laguerre {

XFactorization x_factorization(const Permutation& pi, int x) {
    const int n = pi.size();
    if (x < 1 || x > n) throw InvalidInput("x must lie in [1, n]");
    const std::vector<int>& w = pi.word();
    const int p = pi.position_of(x) - 1;
    int lo = p, hi = p;
    while (lo > 0 && w[lo - 1] > x) --lo;
    while (hi + 1 < n && w[hi + 1] > x) ++hi;
    XFactorization f;
    f.w1.assign(w.begin(), w.begin() + lo);
    f.w2.assign(w.begin() + lo, w.begin() + p);
    f.w3.assign(w.begin() + p + 1, w.begin() + hi + 1);
    f.w4.assign(w.begin() + hi + 1, w.end());
    return f;
}

Permutation mfs_phi_x(const Permutation& pi, int x) {
    if (linear_kind_at(pi, pi.position_of(x), Boundary::Zero) == LinearKind::Valley) return pi;
    const XFactorization f = x_factorization(pi, x);
    std::vector<int> w = f.w1;
    w.insert(w.end(), f.w3.begin(), f.w3.end());
    w.push_back(x);
    w.insert(w.end(), f.w2.begin(), f.w2.end());
    w.insert(w.end(), f.w4.begin(), f.w4.end());
    return Permutation(std::move(w));
}

Permutation mfs_phi_set(const Permutation& pi, const std::vector<int>& xs) {
    Permutation out = pi;
    for (int x : xs) out = mfs_phi_x(out, x);
    return out;
}

Permutation mfs_full(const Permutation& pi) {
    Permutation out = pi;
    for (int x = 1; x <= pi.size(); ++x) out = mfs_phi_x(out, x);
    return out;
}

}  // namespace laguerre
