#include "laguerre/perm_stats.hpp"

namespace laguerre {

LinearKind linear_kind_at(const Permutation& pi, int position, Boundary boundary) {
    const int n = pi.size();
    const int x = pi(position);
    // Both -inf and 0 lie below every letter on the left; on the right the
    // boundary is above (+inf) or below (0).
    const bool left_smaller = position == 1 || pi(position - 1) < x;
    const bool right_larger =
        position == n ? boundary == Boundary::MinusPlusInfinity : pi(position + 1) > x;
    if (left_smaller && !right_larger) return LinearKind::Peak;
    if (!left_smaller && right_larger) return LinearKind::Valley;
    if (left_smaller) return LinearKind::DoubleAscent;
    return LinearKind::DoubleDescent;
}

LinearKinds linear_kinds(const Permutation& pi, Boundary boundary) {
    LinearKinds k;
    for (int i = 1; i <= pi.size(); ++i) {
        switch (linear_kind_at(pi, i, boundary)) {
            case LinearKind::Peak: k.peaks.add(pi(i)); break;
            case LinearKind::Valley: k.valleys.add(pi(i)); break;
            case LinearKind::DoubleAscent: k.double_ascents.add(pi(i)); break;
            case LinearKind::DoubleDescent: k.double_descents.add(pi(i)); break;
        }
    }
    return k;
}

LinearStatRecord linear_family(const Permutation& pi) {
    LinearStatRecord r;
    const int n = pi.size();
    const int last = pi(n);
    for (int i = 1; i < n; ++i) {
        const int a = pi(i), b = pi(i + 1);
        if (a > b) {
            r.des.add(i);
            r.dt.add(a);
            r.db.add(b);
            if (a < last) r.dtb.add(a);
            if (a > last) r.dta.add(a);
            if (b < last) r.dbb.add(b);
            if (b > last) r.dba.add(b);
            for (int v = b + 1; v <= a; ++v) r.ddif.add(v);
            r.dbot.add(b, b);
        } else {
            r.ab.add(a);
            if (a < last) r.abb.add(a);
            if (a > last) r.aba.add(a);
        }
        if (pi.position_of(i) > pi.position_of(i + 1)) r.ides.add(i);
    }
    return r;
}

CyclicKind cyclic_kind(const Permutation& pi, int value) {
    const int i = value;
    const int before = pi.position_of(i), after = pi(i);
    if (before < i && i < after) return CyclicKind::DoubleAscent;
    if (before >= i && i >= after) return CyclicKind::DoubleDescent;
    if (before < i && i > after) return CyclicKind::Peak;
    return CyclicKind::Valley;
}

CyclicStatRecord cyclic_family(const Permutation& pi) {
    CyclicStatRecord r;
    const int n = pi.size();
    const int last = pi(n);
    r.side.assign(n, 0);
    for (int i = 1; i <= n; ++i) {
        const int v = pi(i);
        const bool excedance = v > i;
        if (excedance) {
            r.exc.add(v);
            r.ep.add(i);
            if (v < last) r.excb.add(v);
            if (v > last) r.exca.add(v);
            if (i < last) r.epb.add(i);
            if (i > last) r.epa.add(i);
            for (int u = i + 1; u <= v; ++u) r.edif.add(u);
            r.ebot.add(i, i);
            int s = 0;
            for (int j = 1; j < i; ++j)
                if (pi(j) > j && pi(j) > v) ++s;
            r.side[i - 1] = s;
        } else {
            r.nexc.add(v);
            if (v < last) r.nexcb.add(v);
            if (v > last) r.nexca.add(v);
            int s = 0;
            for (int j = i + 1; j <= n; ++j)
                if (pi(j) <= j && pi(j) < v) ++s;
            r.side[i - 1] = s;
        }
        r.ine.add(v, r.side[i - 1]);
        switch (cyclic_kind(pi, i)) {
            case CyclicKind::Peak: r.cpk.add(i); break;
            case CyclicKind::Valley: r.cval.add(i); break;
            case CyclicKind::DoubleAscent: r.cda.add(i); break;
            case CyclicKind::DoubleDescent: r.cdd.add(i); break;
        }
    }
    return r;
}

ShiftedStatRecord shifted_family(const Permutation& pi) {
    ShiftedStatRecord r;
    const int n = pi.size();
    r.pone = pi.position_of(1);
    r.nest.assign(n, 0);
    r.vnest.assign(n, 0);
    for (int i = 1; i <= n; ++i) {
        const int v = pi(i);
        int nest = 0;
        for (int j = 1; j <= n; ++j) {
            if (j < i && i < v && v < pi(j)) ++nest;
            else if (pi(j) < v && v <= i && i < j) ++nest;
        }
        r.nest[i - 1] = nest;
        int vnest = nest;
        if (v <= i && i < r.pone) vnest -= 1;
        else if (v > i && i > r.pone) vnest += 1;
        r.vnest[i - 1] = vnest;
        r.vnest_multiset.add(i, vnest);

        if (v > i) {
            r.ep.add(i);
            if (i < r.pone) r.vepb.add(i);
            if (i > r.pone) r.vepa.add(i);
            for (int u = i + 1; u <= v - 1; ++u) r.vedif.add(u);
        } else {
            r.nep.add(i);
            if (i < r.pone) r.vnepb.add(i);
            if (i > r.pone) r.vnepa.add(i);
        }
        if (i < n) {
            const bool up_here = i < v;
            const bool next_from_left = i + 1 > pi.position_of(i + 1);
            if (up_here && !next_from_left) r.scval.add(i);
            else if (!up_here && next_from_left) r.scpk.add(i);
            else if (up_here) r.scda.add(i);
            else r.scdd.add(i);
            // i+1 is not an excedance value.
            if (pi.position_of(i + 1) >= i + 1) {
                r.vnex.add(i);
                if (i < r.pone) r.vnexb.add(i);
                if (i > r.pone) r.vnexa.add(i);
                r.vbot.add(i, i);
            }
        }
    }
    for (int u = r.pone + 1; u <= n; ++u) r.vedif.add(u);
    return r;
}

long long inversions(const Permutation& pi) {
    long long count = 0;
    for (int i = 1; i <= pi.size(); ++i)
        for (int j = i + 1; j <= pi.size(); ++j)
            if (pi(i) > pi(j)) ++count;
    return count;
}

long long major_index(const Permutation& pi) {
    long long m = 0;
    for (int i = 1; i < pi.size(); ++i)
        if (pi(i) > pi(i + 1)) m += i;
    return m;
}

long long sorting_index(const Permutation& pi) {
    std::vector<int> w = pi.word();
    std::vector<int> where(w.size() + 1);
    for (int i = 0; i < static_cast<int>(w.size()); ++i) where[w[i]] = i + 1;
    long long total = 0;
    for (int j = static_cast<int>(w.size()); j >= 1; --j) {
        const int i = where[j];
        if (i == j) continue;
        const int moved = w[j - 1];
        w[i - 1] = moved;
        where[moved] = i;
        w[j - 1] = j;
        where[j] = j;
        total += j - i;
    }
    return total;
}

}  // namespace laguerre
