#include "laguerre/bijections.hpp"

#include <list>

#include "laguerre/involution.hpp"
#include "laguerre/patterns.hpp"
#include "laguerre/perm_stats.hpp"

namespace laguerre {

namespace {

int sde_bonus(Step s) { return is_sde(s) ? 1 : 0; }

}  // namespace

LaguerreHistory phi_fv(const Permutation& pi) {
    const int n = pi.size();
    std::vector<Step> w(n);
    std::vector<int> c(n);
    for (int i = 1; i <= n; ++i) {
        const int pos = pi.position_of(i);
        Step s = Step::E;
        switch (linear_kind_at(pi, pos, Boundary::MinusPlusInfinity)) {
            case LinearKind::Peak: s = Step::S; break;
            case LinearKind::Valley: s = Step::N; break;
            case LinearKind::DoubleAscent: s = Step::E; break;
            case LinearKind::DoubleDescent: s = Step::dE; break;
        }
        w[i - 1] = s;
        c[i - 1] = coordinate_stat(pi, Coordinate::Two31, pos) + sde_bonus(s);
    }
    return LaguerreHistory::from_word_and_weights(std::move(w), std::move(c));
}

Permutation phi_fv_inv(const LaguerreHistory& W) {
    const int n = W.size();
    // 0 marks an empty slot.
    std::list<int> word{0};
    int empty = 1;
    for (int i = 1; i <= n; ++i) {
        const int c = W.weight(i);
        if (c < 0 || c >= empty) throw SlotIndexOutOfRange("slot " + std::to_string(c) + " at step " + std::to_string(i));
        // The c-th empty slot counted from the right, starting at 0.
        auto it = word.end();
        int seen = -1;
        while (seen < c) {
            --it;
            if (*it == 0) ++seen;
        }
        switch (W.step(i)) {
            case Step::S:
                *it = i;
                --empty;
                break;
            case Step::N:
                *it = i;
                word.insert(it, 0);
                word.insert(std::next(it), 0);
                ++empty;
                break;
            case Step::E:
                *it = i;
                word.insert(std::next(it), 0);
                break;
            case Step::dE:
                *it = i;
                word.insert(it, 0);
                break;
        }
    }
    if (empty != 1 || word.back() != 0) throw SlotIndexOutOfRange("sentinel slot not left at the right end");
    word.pop_back();
    return Permutation(std::vector<int>(word.begin(), word.end()));
}

LaguerreHistory phi_fz(const Permutation& pi) {
    const int n = pi.size();
    const CyclicStatRecord cyc = cyclic_family(pi);
    std::vector<Step> w(n);
    std::vector<int> c(n);
    for (int i = 1; i <= n; ++i) {
        Step s = Step::E;
        switch (cyclic_kind(pi, i)) {
            case CyclicKind::Valley: s = Step::N; break;
            case CyclicKind::Peak: s = Step::S; break;
            case CyclicKind::DoubleDescent: s = Step::E; break;
            case CyclicKind::DoubleAscent: s = Step::dE; break;
        }
        w[i - 1] = s;
        c[i - 1] = cyc.side[pi.position_of(i) - 1] + sde_bonus(s);
    }
    return LaguerreHistory::from_word_and_weights(std::move(w), std::move(c));
}

namespace {

// Puts x into the k-th (0-based) free cell of `row`, counting from the left
// or from the right.
void place(std::vector<int>& row, int x, int k, bool from_left) {
    const int m = static_cast<int>(row.size());
    int seen = -1;
    for (int t = 0; t < m; ++t) {
        const int idx = from_left ? t : m - 1 - t;
        if (row[idx] != 0) continue;
        if (++seen == k) {
            row[idx] = x;
            return;
        }
    }
    throw PlacementImpossible("no free cell " + std::to_string(k) + " for " + std::to_string(x));
}

}  // namespace

FzWords fz_words(const LaguerreHistory& W) {
    const int n = W.size();
    FzWords r;
    std::vector<int> bottom_e, bottom_n;
    for (int i = 1; i <= n; ++i) {
        const Step s = W.step(i);
        if (is_nde(s)) r.top_e.push_back(i);
        if (is_sde(s)) bottom_e.push_back(i);
        if (is_se(s)) r.top_n.push_back(i);
        if (is_ne(s)) bottom_n.push_back(i);
    }
    if (r.top_e.size() != bottom_e.size() || r.top_n.size() != bottom_n.size())
        throw PlacementImpossible("row lengths differ");

    r.bottom_e.assign(bottom_e.size(), 0);
    r.bottom_n.assign(bottom_n.size(), 0);
    for (int x : bottom_e) place(r.bottom_e, x, W.weight(x) - 1, true);
    for (auto it = bottom_n.rbegin(); it != bottom_n.rend(); ++it) place(r.bottom_n, *it, W.weight(*it), false);
    return r;
}

Permutation phi_fz_inv(const LaguerreHistory& W) {
    const FzWords r = fz_words(W);
    std::vector<int> word(W.size(), 0);
    for (std::size_t t = 0; t < r.top_e.size(); ++t) word[r.top_e[t] - 1] = r.bottom_e[t];
    for (std::size_t t = 0; t < r.top_n.size(); ++t) word[r.top_n[t] - 1] = r.bottom_n[t];
    return Permutation(std::move(word));
}

LaguerreHistory phi_yzl(const Permutation& pi) {
    const int n = pi.size();
    const ShiftedStatRecord sh = shifted_family(pi);
    std::vector<Step> w(n);
    std::vector<int> c(n);
    for (int i = 1; i <= n; ++i) {
        Step s;
        if (i == n) {
            s = sh.pone != n ? Step::S : Step::E;
        } else if (i == sh.pone) {
            s = i + 1 <= pi.position_of(i + 1) ? Step::N : Step::E;
        } else if (sh.scval.contains(i)) {
            s = Step::N;
        } else if (sh.scpk.contains(i)) {
            s = Step::S;
        } else if (sh.scda.contains(i)) {
            s = Step::E;
        } else {
            s = Step::dE;
        }
        w[i - 1] = s;
        c[i - 1] = sh.vnest[i - 1] + sde_bonus(s);
    }
    return LaguerreHistory::from_word_and_weights(std::move(w), std::move(c));
}

namespace {

enum class Arc { None, AR, AL, BL, BR };

void set_arc(std::vector<Arc>& slot, int node, Arc a, const char* what) {
    if (slot[node] != Arc::None) throw ArcMismatch(std::string("node ") + std::to_string(node) + " gets a second " + what + " arc");
    slot[node] = a;
}

}  // namespace

Permutation phi_yzl_inv(const LaguerreHistory& W) {
    const int n = W.size();
    const int k = critical_step(W);
    const HistoryStatRecord rec = history_statistics(W);

    // Outward (AR/BL) and inward (AL/BR) arc at every node, 1-based.
    std::vector<Arc> out(n + 1, Arc::None), in(n + 1, Arc::None);
    set_arc(out, k, Arc::BL, "outward");
    if (k != n) set_arc(out, n, Arc::BL, "outward");
    set_arc(in, 1, Arc::BR, "inward");
    if (k < n) set_arc(in, k + 1, W.step(k) == Step::N ? Arc::BR : Arc::AL, "inward");
    for (int i = 1; i < n; ++i) {
        if (i == k) continue;
        switch (W.step(i)) {
            case Step::N:
                set_arc(out, i, Arc::AR, "outward");
                set_arc(in, i + 1, Arc::BR, "inward");
                break;
            case Step::E:
                set_arc(out, i, Arc::AR, "outward");
                set_arc(in, i + 1, Arc::AL, "inward");
                break;
            case Step::dE:
                set_arc(out, i, Arc::BL, "outward");
                set_arc(in, i + 1, Arc::BR, "inward");
                break;
            case Step::S:
                set_arc(out, i, Arc::BL, "outward");
                set_arc(in, i + 1, Arc::AL, "inward");
                break;
        }
    }
    for (int i = 1; i <= n; ++i)
        if (out[i] == Arc::None || in[i] == Arc::None) throw ArcMismatch("node " + std::to_string(i) + " lacks an arc");

    auto nest_of = [&](int i) {
        const Step s = W.step(i);
        return W.weight(i) - sde_bonus(s) + (rec.sdeb.contains(i) ? 1 : 0) - (rec.nea.contains(i) ? 1 : 0);
    };

    std::vector<int> word(n, 0);
    std::vector<int> al, br;
    for (int i = 1; i <= n; ++i) {
        if (in[i] == Arc::AL) al.push_back(i);
        if (in[i] == Arc::BR) br.push_back(i);
    }
    // AR sources right to left, each to the (nest+1)-th remaining AL from the right.
    for (int i = n; i >= 1; --i) {
        if (out[i] != Arc::AR) continue;
        const int r = nest_of(i);
        if (r < 0 || r >= static_cast<int>(al.size())) throw ArcMismatch("no AL arc for " + std::to_string(i));
        const auto it = al.end() - 1 - r;
        if (*it <= i) throw ArcMismatch("AR arc of " + std::to_string(i) + " points left");
        word[i - 1] = *it;
        al.erase(it);
    }
    // BL sources left to right, each to the (nest+1)-th remaining BR from the left.
    for (int i = 1; i <= n; ++i) {
        if (out[i] != Arc::BL) continue;
        const int r = nest_of(i);
        if (r < 0 || r >= static_cast<int>(br.size())) throw ArcMismatch("no BR arc for " + std::to_string(i));
        const auto it = br.begin() + r;
        if (*it > i) throw ArcMismatch("BL arc of " + std::to_string(i) + " points right");
        word[i - 1] = *it;
        br.erase(it);
    }
    if (!al.empty() || !br.empty()) throw ArcMismatch("unmatched inward arcs");
    return Permutation(std::move(word));
}

Permutation phi_csz(const Permutation& pi) { return phi_fz_inv(phi_fv(pi)); }

Permutation theta(const Permutation& pi) {
    const int n = pi.size();
    std::vector<int> w(n);
    for (int i = 1; i < n; ++i) w[i - 1] = n + 1 - pi(n - i);
    w[n - 1] = n + 1 - pi(n);
    return Permutation(std::move(w));
}

Permutation kreweras(const Permutation& pi) {
    const int n = pi.size();
    std::vector<int> w(n);
    for (int i = 2; i <= n; ++i) w[i - 2] = pi.position_of(i);
    w[n - 1] = pi.position_of(1);
    return Permutation(std::move(w));
}

Permutation conjugated_map(const Permutation& pi, ConjugatedMap which) {
    switch (which) {
        case ConjugatedMap::PhiInv: return phi_fv_inv(xi(phi_fv(pi)));
        case ConjugatedMap::Eta: return phi_fz_inv(xi(phi_fz(pi)));
        case ConjugatedMap::Rho: return phi_yzl_inv(xi(phi_yzl(pi)));
    }
    throw InvalidInput("unknown conjugated map");
}

ConjugatedMap conjugated_map_from_name(const std::string& name) {
    if (name == "phi_inv") return ConjugatedMap::PhiInv;
    if (name == "eta") return ConjugatedMap::Eta;
    if (name == "rho") return ConjugatedMap::Rho;
    throw InvalidInput("unknown map: " + name);
}

}  // namespace laguerre
