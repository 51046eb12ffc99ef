#include "laguerre/patterns.hpp"

#include <algorithm>
#include <cctype>

namespace laguerre {

namespace {

void validate_pattern(const VincularPattern& p, const std::string& literal) {
    const int k = p.size();
    if (k < 1 || k > 9) throw ParseError("pattern must have 1 to 9 letters: " + literal);
    std::vector<bool> seen(k + 1, false);
    for (int v : p.values) {
        if (v < 1 || v > k || seen[v]) throw ParseError("pattern letters must be a permutation of 1..k: " + literal);
        seen[v] = true;
    }
}

// True if the letters at `pos` (increasing positions in pi) are order-isomorphic to `values`.
bool order_isomorphic(const Permutation& pi, const int* pos, const std::vector<int>& values) {
    const int k = static_cast<int>(values.size());
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if ((pi(pos[a]) < pi(pos[b])) != (values[a] < values[b])) return false;
    return true;
}

long long count_from(const Permutation& pi, const VincularPattern& p, int* pos, int a) {
    const int k = p.size(), n = pi.size();
    if (a == k) return order_isomorphic(pi, pos, p.values) ? 1 : 0;
    // Leave room for the remaining k-a-1 letters.
    const int last = n - (k - a - 1);
    if (a > 0 && p.glued[a - 1]) {
        const int q = pos[a - 1] + 1;
        if (q > last) return 0;
        pos[a] = q;
        return count_from(pi, p, pos, a + 1);
    }
    long long total = 0;
    for (int q = (a == 0 ? 1 : pos[a - 1] + 1); q <= last; ++q) {
        pos[a] = q;
        total += count_from(pi, p, pos, a + 1);
    }
    return total;
}

}  // namespace

VincularPattern parse_pattern(const std::string& literal) {
    VincularPattern p;
    std::size_t i = 0;
    const std::string& s = literal;
    auto digit = [&](char ch) { return ch >= '1' && ch <= '9'; };
    while (i < s.size()) {
        const char ch = s[i];
        if (digit(ch)) {
            if (!p.values.empty()) p.glued.push_back(false);
            p.values.push_back(ch - '0');
            ++i;
        } else if (ch == '_') {
            ++i;
        } else if (ch == 'u') {
            ++i;
            const bool paren = i < s.size() && s[i] == '(';
            if (paren) ++i;
            std::size_t start = p.values.size();
            while (i < s.size() && digit(s[i])) {
                if (!p.values.empty()) p.glued.push_back(p.values.size() > start);
                p.values.push_back(s[i] - '0');
                ++i;
            }
            if (p.values.size() - start < 2) throw ParseError("glued block needs at least two letters: " + literal);
            if (paren) {
                if (i >= s.size() || s[i] != ')') throw ParseError("unclosed glued block: " + literal);
                ++i;
            }
        } else {
            throw ParseError("bad pattern literal: " + literal);
        }
    }
    validate_pattern(p, literal);
    return p;
}

std::string to_literal(const VincularPattern& p) {
    std::string out;
    const int k = p.size();
    int a = 0;
    bool prev_was_block = false;
    while (a < k) {
        int b = a;
        while (b + 1 < k && p.glued[b]) ++b;
        if (b > a) {
            out += 'u';
            for (int x = a; x <= b; ++x) out += static_cast<char>('0' + p.values[x]);
            prev_was_block = true;
        } else {
            if (prev_was_block) out += '_';
            out += static_cast<char>('0' + p.values[a]);
            prev_was_block = false;
        }
        a = b + 1;
    }
    return out;
}

long long vincular_count(const Permutation& pi, const VincularPattern& p) {
    if (p.size() > pi.size()) return 0;
    int pos[9];
    return count_from(pi, p, pos, 0);
}

int coordinate_stat(const Permutation& pi, Coordinate which, int i) {
    const int n = pi.size();
    const int x = pi(i);
    int count = 0;
    switch (which) {
        case Coordinate::Two13:
            for (int j = i + 1; j < n; ++j)
                if (pi(j) < x && x < pi(j + 1)) ++count;
            break;
        case Coordinate::Two31:
            for (int j = i + 1; j < n; ++j)
                if (pi(j + 1) < x && x < pi(j)) ++count;
            break;
        case Coordinate::ThirtyOne2:
            for (int j = 1; j < i - 1; ++j)
                if (pi(j + 1) < x && x < pi(j)) ++count;
            break;
    }
    return count;
}

PatternMultisets pattern_multisets(const Permutation& pi) {
    PatternMultisets r;
    for (int i = 1; i <= pi.size(); ++i) {
        r.two_13.add(pi(i), coordinate_stat(pi, Coordinate::Two13, i));
        r.two_31.add(pi(i), coordinate_stat(pi, Coordinate::Two31, i));
        r.thirtyone_2.add(pi(i), coordinate_stat(pi, Coordinate::ThirtyOne2, i));
    }
    return r;
}

bool classical_avoids(const Permutation& pi, const std::vector<int>& pattern) {
    VincularPattern p{pattern, std::vector<bool>(pattern.empty() ? 0 : pattern.size() - 1, false)};
    validate_pattern(p, "classical pattern");
    return vincular_count(pi, p) == 0;
}

namespace {

// Does the word w (values, 0-based), whose last letter is new, contain an
// occurrence of `pattern` that uses the last letter?
bool completes_occurrence(const std::vector<int>& w, const std::vector<int>& pattern, std::vector<int>& pick,
                          int a, int from) {
    const int k = static_cast<int>(pattern.size());
    const int last = static_cast<int>(w.size()) - 1;
    if (a == k - 1) {
        pick[a] = last;
        for (int x = 0; x < k; ++x)
            for (int y = x + 1; y < k; ++y)
                if ((w[pick[x]] < w[pick[y]]) != (pattern[x] < pattern[y])) return false;
        return true;
    }
    for (int q = from; q < last; ++q) {
        pick[a] = q;
        if (completes_occurrence(w, pattern, pick, a + 1, q + 1)) return true;
    }
    return false;
}

}  // namespace

void for_each_avoider(int n, const std::vector<int>& pattern, const std::function<void(const Permutation&)>& fn) {
    if (n < 1) throw InvalidInput("permutation length must be at least 1");
    VincularPattern p{pattern, std::vector<bool>(pattern.empty() ? 0 : pattern.size() - 1, false)};
    validate_pattern(p, "classical pattern");
    std::vector<int> w;
    std::vector<bool> used(n + 1, false);
    std::vector<int> pick(pattern.size());
    std::function<void()> rec = [&]() {
        if (static_cast<int>(w.size()) == n) {
            fn(Permutation(w));
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[v]) continue;
            w.push_back(v);
            if (!completes_occurrence(w, pattern, pick, 0, 0)) {
                used[v] = true;
                rec();
                used[v] = false;
            }
            w.pop_back();
        }
    };
    rec();
}

}  // namespace laguerre
