#include "laguerre/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace laguerre {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    const int n = size();
    if (n < 1) throw InvalidInput("permutation must have at least one entry");
    inv_.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        const int v = word_[i];
        if (v < 1 || v > n || inv_[v - 1] != 0)
            throw InvalidInput("not a permutation of 1.." + std::to_string(n));
        inv_[v - 1] = i + 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation inverse(const Permutation& p) {
    std::vector<int> w(p.size());
    for (int v = 1; v <= p.size(); ++v) w[v - 1] = p.position_of(v);
    return Permutation(std::move(w));
}

Permutation reverse(const Permutation& p) {
    std::vector<int> w(p.word().rbegin(), p.word().rend());
    return Permutation(std::move(w));
}

Permutation complement(const Permutation& p) {
    std::vector<int> w(p.word());
    for (int& v : w) v = p.size() + 1 - v;
    return Permutation(std::move(w));
}

Permutation reverse_complement(const Permutation& p) { return reverse(complement(p)); }

Permutation rci(const Permutation& p) { return reverse(complement(inverse(p))); }

Permutation parse_permutation(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw ParseError("empty permutation");
    std::vector<int> w;
    if (s.find(',') == std::string::npos) {
        for (char ch : s) {
            if (ch < '1' || ch > '9') throw ParseError("bad permutation: " + text);
            w.push_back(ch - '0');
        }
    } else {
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty() || item.size() > 6 ||
                !std::all_of(item.begin(), item.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
                throw ParseError("bad permutation entry '" + item + "' in: " + text);
            w.push_back(std::stoi(item));
        }
        if (s.back() == ',') throw ParseError("bad permutation: " + text);
    }
    return Permutation(std::move(w));
}

std::string to_string(const Permutation& p) {
    std::string out;
    for (int i = 1; i <= p.size(); ++i) {
        if (i > 1) out += ',';
        out += std::to_string(p(i));
    }
    return out;
}

nlohmann::json to_json(const Permutation& p) { return p.word(); }

Permutation permutation_from_json(const nlohmann::json& j) {
    try {
        return Permutation(j.get<std::vector<int>>());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad permutation JSON: ") + e.what());
    }
}

void for_each_permutation_starting_with(int n, int first, const std::function<void(const Permutation&)>& fn) {
    if (n < 1) throw InvalidInput("permutation length must be at least 1");
    if (first < 1 || first > n) return;
    std::vector<int> rest;
    for (int v = 1; v <= n; ++v)
        if (v != first) rest.push_back(v);
    std::vector<int> w(n);
    w[0] = first;
    do {
        std::copy(rest.begin(), rest.end(), w.begin() + 1);
        fn(Permutation(w));
    } while (std::next_permutation(rest.begin(), rest.end()));
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
    for (int first = 1; first <= n; ++first) for_each_permutation_starting_with(n, first, fn);
}

std::vector<Permutation> enumerate_permutations(int n) {
    std::vector<Permutation> out;
    for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

long long factorial(int n) {
    long long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace laguerre
