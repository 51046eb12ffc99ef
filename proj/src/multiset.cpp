#include "laguerre/multiset.hpp"

#include <cctype>
#include <sstream>

namespace laguerre {

ContainmentViolation::ContainmentViolation(int value)
    : Error("strict difference: value " + std::to_string(value) + " would get negative multiplicity"),
      value_(value) {}

OutOfRange::OutOfRange(int value, int n)
    : Error("kappa_" + std::to_string(n) + ": value " + std::to_string(value) + " not in (0, " +
            std::to_string(n) + ")"),
      value_(value) {}

IntMultiset::IntMultiset(std::initializer_list<int> values) {
    for (int v : values) add(v);
}

IntMultiset IntMultiset::from_values(const std::vector<int>& values) {
    IntMultiset m;
    for (int v : values) m.add(v);
    return m;
}

IntMultiset IntMultiset::from_pairs(const std::vector<std::pair<int, std::int64_t>>& pairs) {
    IntMultiset m;
    for (const auto& [v, k] : pairs) m.add(v, k);
    return m;
}

IntMultiset IntMultiset::interval(int lo, int hi) {
    IntMultiset m;
    for (int v = lo; v <= hi; ++v) m.add(v);
    return m;
}

void IntMultiset::add(int value, std::int64_t multiplicity) {
    if (multiplicity < 0) throw InvalidInput("negative multiplicity for value " + std::to_string(value));
    if (multiplicity == 0) return;
    entries_[value] += multiplicity;
    cardinality_ += multiplicity;
}

std::int64_t IntMultiset::multiplicity(int value) const {
    auto it = entries_.find(value);
    return it == entries_.end() ? 0 : it->second;
}

std::int64_t IntMultiset::weighted_sum() const {
    std::int64_t s = 0;
    for (const auto& [v, k] : entries_) s += static_cast<std::int64_t>(v) * k;
    return s;
}

IntMultiset disjoint_union(const IntMultiset& a, const IntMultiset& b) {
    IntMultiset r = a;
    for (const auto& [v, k] : b.entries()) r.add(v, k);
    return r;
}

IntMultiset strict_difference(const IntMultiset& a, const IntMultiset& b) {
    for (const auto& [v, k] : b.entries()) {
        if (a.multiplicity(v) < k) throw ContainmentViolation(v);
    }
    IntMultiset r;
    for (const auto& [v, k] : a.entries()) r.add(v, k - b.multiplicity(v));
    return r;
}

IntMultiset kappa(int n, const IntMultiset& a) {
    IntMultiset r;
    for (const auto& [v, k] : a.entries()) {
        if (v <= 0 || v >= n) throw OutOfRange(v, n);
        r.add(n - v, k);
    }
    return r;
}

std::string to_string(const IntMultiset& m) {
    std::string out = "{";
    bool first = true;
    for (const auto& [v, k] : m.entries()) {
        if (!first) out += ',';
        first = false;
        out += std::to_string(v);
        if (k != 1) out += '^' + std::to_string(k);
    }
    out += '}';
    return out;
}

namespace {

std::int64_t parse_int(const std::string& s, const std::string& whole) {
    if (s.empty()) throw ParseError("bad multiset literal: " + whole);
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw ParseError("bad multiset literal: " + whole);
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError("bad multiset literal: " + whole);
    try {
        return std::stoll(s);
    } catch (const std::exception&) {
        throw ParseError("bad multiset literal: " + whole);
    }
}

}  // namespace

IntMultiset parse_multiset(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.size() < 2 || s.front() != '{' || s.back() != '}') throw ParseError("bad multiset literal: " + text);
    s = s.substr(1, s.size() - 2);
    IntMultiset m;
    if (s.empty()) return m;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto caret = item.find('^');
        std::int64_t v = parse_int(item.substr(0, caret), text);
        std::int64_t k = caret == std::string::npos ? 1 : parse_int(item.substr(caret + 1), text);
        if (k <= 0) throw ParseError("bad multiset literal: " + text);
        m.add(static_cast<int>(v), k);
    }
    return m;
}

nlohmann::json to_json(const IntMultiset& m) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [v, k] : m.entries()) j.push_back({v, k});
    return j;
}

IntMultiset multiset_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("multiset JSON must be an array");
    IntMultiset m;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw ParseError("multiset JSON entries must be [value, multiplicity]");
        auto k = e[1].get<std::int64_t>();
        if (k <= 0) throw ParseError("multiset JSON multiplicity must be positive");
        m.add(e[0].get<int>(), k);
    }
    return m;
}

}  // namespace laguerre
