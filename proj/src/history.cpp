#include "laguerre/history.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace laguerre {

char step_letter(Step s) {
    switch (s) {
        case Step::N: return 'N';
        case Step::E: return 'E';
        case Step::dE: return 'D';
        case Step::S: return 'S';
    }
    return '?';
}

Step step_from_letter(char ch) {
    switch (ch) {
        case 'N': return Step::N;
        case 'E': return Step::E;
        case 'D': return Step::dE;
        case 'S': return Step::S;
        default: throw ParseError(std::string("unknown step letter '") + ch + "'");
    }
}

PathBelowAxis::PathBelowAxis(int index)
    : InvalidInput("path goes below the axis at step " + std::to_string(index)), index_(index) {}

PathNotClosed::PathNotClosed() : InvalidInput("path does not end on the axis") {}

WeightOutOfBounds::WeightOutOfBounds(int index)
    : InvalidInput("weight out of bounds at step " + std::to_string(index)), index_(index) {}

LaguerreHistory LaguerreHistory::from_word_and_weights(std::vector<Step> w, std::vector<int> c) {
    if (w.empty()) throw InvalidInput("history must have at least one step");
    if (w.size() != c.size()) throw InvalidInput("step word and weight sequence differ in length");
    const int n = static_cast<int>(w.size());
    std::vector<int> h(n);
    int height = 0;
    for (int i = 0; i < n; ++i) {
        h[i] = height;
        height += step_delta(w[i]);
        if (height < 0) throw PathBelowAxis(i + 1);
    }
    if (height != 0) throw PathNotClosed();
    for (int i = 0; i < n; ++i) {
        const int lo = is_sde(w[i]) ? 1 : 0;
        if (c[i] < lo || c[i] > h[i]) throw WeightOutOfBounds(i + 1);
    }
    LaguerreHistory W;
    W.w_ = std::move(w);
    W.h_ = std::move(h);
    W.c_ = std::move(c);
    return W;
}

int critical_step(const LaguerreHistory& W) {
    const auto& c = W.weights();
    for (int i = W.size(); i >= 1; --i)
        if (c[i - 1] == 0) return i;
    throw InternalInconsistency("history without a zero weight");
}

HistoryStatRecord history_statistics(const LaguerreHistory& W) {
    HistoryStatRecord r;
    const int n = W.size();
    r.cs = critical_step(W);
    for (int i = 1; i <= n; ++i) {
        const Step s = W.step(i);
        if (i < r.cs) {
            if (is_ne(s)) r.neb.add(i);
            if (is_sde(s)) r.sdeb.add(i);
            if (is_nde(s)) r.ndeb.add(i);
        } else if (i > r.cs) {
            if (is_ne(s)) r.nea.add(i);
            if (is_sde(s)) r.sdea.add(i);
            if (is_nde(s)) r.ndea.add(i);
        }
        if (i < n) {
            if (is_nde(s)) r.nde.add(i);
            const int ci = W.weight(i), cn = W.weight(i + 1);
            if ((is_ne(s) && ci < cn) || (is_sde(s) && ci <= cn)) r.asc.add(i);
        }
        r.ht.add(i, W.height(i));
        r.wt.add(i, W.weight(i));
    }
    return r;
}

class HistoryEnumerator {
public:
    HistoryEnumerator(int n, const std::function<void(const LaguerreHistory&)>& fn) : n_(n), fn_(fn) {
        W_.w_.resize(n);
        W_.h_.resize(n);
        W_.c_.resize(n);
    }

    // Fills steps from position `pos` (0-based) onwards starting at `height`.
    void words(int pos, int height) {
        if (pos == n_) {
            if (height == 0) weights();
            return;
        }
        const int remaining_after = n_ - pos - 1;
        W_.h_[pos] = height;
        for (Step s : {Step::N, Step::E, Step::dE, Step::S}) {
            if (is_sde(s) && height == 0) continue;
            const int next = height + step_delta(s);
            if (next > remaining_after) continue;
            W_.w_[pos] = s;
            words(pos + 1, next);
        }
    }

    bool set_prefix(const std::vector<Step>& prefix, int& height) {
        height = 0;
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            const Step s = prefix[i];
            if (is_sde(s) && height == 0) return false;
            W_.h_[i] = height;
            W_.w_[i] = s;
            height += step_delta(s);
            if (height > n_ - static_cast<int>(i) - 1) return false;
        }
        return true;
    }

private:
    // Odometer over weights of the current word, last index fastest.
    void weights() {
        for (int i = 0; i < n_; ++i) W_.c_[i] = is_sde(W_.w_[i]) ? 1 : 0;
        while (true) {
            fn_(W_);
            int i = n_ - 1;
            while (i >= 0 && W_.c_[i] == W_.h_[i]) {
                W_.c_[i] = is_sde(W_.w_[i]) ? 1 : 0;
                --i;
            }
            if (i < 0) return;
            ++W_.c_[i];
        }
    }

    int n_;
    const std::function<void(const LaguerreHistory&)>& fn_;
    LaguerreHistory W_;
};

void for_each_history(int n, const std::function<void(const LaguerreHistory&)>& fn) {
    for_each_history_with_prefix(n, {}, fn);
}

void for_each_history_with_prefix(int n, const std::vector<Step>& prefix,
                                  const std::function<void(const LaguerreHistory&)>& fn) {
    if (n < 1) throw InvalidInput("history length must be at least 1");
    if (static_cast<int>(prefix.size()) > n) return;
    HistoryEnumerator e(n, fn);
    int height = 0;
    if (!e.set_prefix(prefix, height)) return;
    e.words(static_cast<int>(prefix.size()), height);
}

std::vector<std::vector<Step>> history_prefixes(int n, int len) {
    if (n < 1) throw InvalidInput("history length must be at least 1");
    len = std::clamp(len, 0, n);
    std::vector<std::vector<Step>> out;
    std::vector<Step> cur;
    std::function<void(int)> rec = [&](int height) {
        const int pos = static_cast<int>(cur.size());
        if (pos == len) {
            if (pos < n || height == 0) out.push_back(cur);
            return;
        }
        const int remaining_after = n - pos - 1;
        for (Step s : {Step::N, Step::E, Step::dE, Step::S}) {
            if (is_sde(s) && height == 0) continue;
            const int next = height + step_delta(s);
            if (next > remaining_after) continue;
            cur.push_back(s);
            rec(next);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

std::vector<LaguerreHistory> enumerate_histories(int n) {
    std::vector<LaguerreHistory> out;
    for_each_history(n, [&](const LaguerreHistory& W) { out.push_back(W); });
    return out;
}

std::string to_string(const LaguerreHistory& W) {
    std::string out;
    for (Step s : W.steps()) out += step_letter(s);
    out += '/';
    for (int i = 0; i < W.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(W.weights()[i]);
    }
    return out;
}

LaguerreHistory parse_history(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    const auto slash = s.find('/');
    if (slash == std::string::npos) throw ParseError("history must look like WORD/c1,c2,...: " + text);
    std::vector<Step> w;
    for (char ch : s.substr(0, slash)) w.push_back(step_from_letter(ch));
    std::vector<int> c;
    std::stringstream ss(s.substr(slash + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](char ch) {
                return std::isdigit(static_cast<unsigned char>(ch));
            }))
            throw ParseError("bad weight '" + item + "' in history: " + text);
        try {
            c.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw ParseError("bad weight '" + item + "' in history: " + text);
        }
    }
    if (w.size() != c.size()) throw ParseError("step word and weights differ in length: " + text);
    if (w.empty()) throw ParseError("empty history: " + text);
    return LaguerreHistory::from_word_and_weights(std::move(w), std::move(c));
}

nlohmann::json to_json(const LaguerreHistory& W) {
    nlohmann::json w = nlohmann::json::array();
    for (Step s : W.steps()) w.push_back(std::string(1, step_letter(s)));
    return {{"w", w}, {"h", W.heights()}, {"c", W.weights()}};
}

LaguerreHistory history_from_json(const nlohmann::json& j) {
    try {
        std::vector<Step> w;
        for (const auto& s : j.at("w")) {
            const auto str = s.get<std::string>();
            if (str.size() != 1) throw ParseError("bad step in history JSON: " + str);
            w.push_back(step_from_letter(str[0]));
        }
        auto c = j.at("c").get<std::vector<int>>();
        auto W = LaguerreHistory::from_word_and_weights(std::move(w), std::move(c));
        if (j.contains("h") && j.at("h").get<std::vector<int>>() != W.heights())
            throw InvalidInput("heights in history JSON do not match the step word");
        return W;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad history JSON: ") + e.what());
    }
}

}  // namespace laguerre
