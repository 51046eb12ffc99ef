#include "laguerre/multipoly.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "laguerre/errors.hpp"

namespace laguerre {

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        for (std::size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i] == vars_[j]) throw InvalidInput("duplicate variable " + vars_[i]);
}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const BigInt& c) {
    MultiPoly p(std::move(variables));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
}

int MultiPoly::variable_index(const std::string& name) const {
    const auto it = std::find(vars_.begin(), vars_.end(), name);
    return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

void MultiPoly::add_term(const Exponents& e, const BigInt& c) {
    if (e.size() != vars_.size()) throw InvalidInput("exponent tuple has the wrong length");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BigInt MultiPoly::coefficient(const Exponents& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void MultiPoly::check_same_vars(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw InvalidInput("polynomials use different variables");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_same_vars(b);
    MultiPoly out(a.vars_);
    MultiPoly::Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            out.add_term(e, ca * cb);
        }
    return out;
}

BigInt MultiPoly::value_at_ones() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

int MultiPoly::min_degree(const std::string& var) const {
    const int k = variable_index(var);
    if (k < 0) throw InvalidInput("unknown variable " + var);
    if (terms_.empty()) return 0;
    int m = terms_.begin()->first[k];
    for (const auto& [e, c] : terms_) m = std::min(m, e[k]);
    return m;
}

MultiPoly MultiPoly::coefficient_of(const std::string& var, int degree) const {
    const int k = variable_index(var);
    if (k < 0) throw InvalidInput("unknown variable " + var);
    std::vector<std::string> rest = vars_;
    rest.erase(rest.begin() + k);
    MultiPoly out(rest);
    for (const auto& [e, c] : terms_) {
        if (e[k] != degree) continue;
        Exponents r = e;
        r.erase(r.begin() + k);
        out.add_term(r, c);
    }
    return out;
}

std::vector<BigInt> MultiPoly::dense_coefficients() const {
    if (vars_.size() > 1) throw InvalidInput("dense_coefficients needs at most one variable");
    std::vector<BigInt> out;
    for (const auto& [e, c] : terms_) {
        const int d = e.empty() ? 0 : e[0];
        if (d < 0) throw InvalidInput("negative exponent");
        if (static_cast<int>(out.size()) <= d) out.resize(d + 1, 0);
        out[d] = c;
    }
    return out;
}

MultiPoly specialize(const MultiPoly& p, const std::map<std::string, Monomial>& subst,
                     const std::vector<std::string>& new_variables) {
    MultiPoly out(new_variables);
    const auto& vars = p.variables();
    // Exponent contribution of one unit of each old variable.
    std::vector<MultiPoly::Exponents> image(vars.size(), MultiPoly::Exponents(new_variables.size(), 0));
    for (std::size_t k = 0; k < vars.size(); ++k) {
        const auto it = subst.find(vars[k]);
        const Monomial m = it != subst.end() ? it->second : Monomial{{vars[k], 1}};
        for (const auto& [name, e] : m) {
            const int idx = out.variable_index(name);
            if (idx < 0) throw InvalidInput("substitution uses undeclared variable " + name);
            image[k][idx] += e;
        }
    }
    MultiPoly::Exponents e(new_variables.size());
    for (const auto& [old, c] : p.terms()) {
        std::fill(e.begin(), e.end(), 0);
        for (std::size_t k = 0; k < vars.size(); ++k)
            for (std::size_t j = 0; j < e.size(); ++j) e[j] += old[k] * image[k][j];
        out.add_term(e, c);
    }
    return out;
}

namespace {

std::vector<std::pair<MultiPoly::Exponents, BigInt>> ordered_terms(const MultiPoly& p) {
    std::vector<std::pair<MultiPoly::Exponents, BigInt>> t(p.terms().begin(), p.terms().end());
    auto total = [](const MultiPoly::Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); };
    std::stable_sort(t.begin(), t.end(), [&](const auto& a, const auto& b) { return total(a.first) < total(b.first); });
    return t;
}

std::string monomial_text(const std::vector<std::string>& vars, const MultiPoly::Exponents& e) {
    std::string out;
    for (std::size_t k = 0; k < vars.size(); ++k) {
        if (e[k] == 0) continue;
        if (!out.empty()) out += ' ';
        out += vars[k];
        if (e[k] != 1) out += '^' + std::to_string(e[k]);
    }
    return out;
}

}  // namespace

std::string to_string(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : ordered_terms(p)) {
        const std::string mono = monomial_text(p.variables(), e);
        const BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) out += c < 0 ? "-" : "";
        else out += c < 0 ? " - " : " + ";
        first = false;
        if (mono.empty()) {
            out += mag.str();
        } else {
            if (mag != 1) out += mag.str() + ' ';
            out += mono;
        }
    }
    return out;
}

nlohmann::json to_json(const MultiPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, c] : ordered_terms(p)) {
        nlohmann::json exps = nlohmann::json::object();
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k] != 0) exps[p.variables()[k]] = e[k];
        nlohmann::json coeff;
        if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
            coeff = c.convert_to<long long>();
        else
            coeff = c.str();
        arr.push_back({{"coeff", coeff}, {"exps", exps}});
    }
    return arr;
}

MultiPoly q_factorial(int n, const std::string& var) {
    MultiPoly out = MultiPoly::constant({var}, 1);
    for (int k = 1; k <= n; ++k) {
        MultiPoly bracket({var});
        for (int d = 0; d < k; ++d) bracket.add_term({d}, 1);
        out = out * bracket;
    }
    return out;
}

}  // namespace laguerre
