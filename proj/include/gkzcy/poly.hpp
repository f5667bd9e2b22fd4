#pragma once

#include "gkzcy/arith.hpp"

#include <map>
#include <string>
#include <vector>

namespace gkzcy {

// Sparse multivariate polynomial over Q. Monomials are exponent vectors of a
// fixed length; the zero polynomial has an empty term map.
class Poly {
public:
    using Mon = std::vector<int>;

    Poly() = default;
    explicit Poly(int nvars) : nvars_(nvars) {}
    static Poly constant(int nvars, const Rat& c) {
        Poly p(nvars);
        if (c != 0) p.terms_[Mon(nvars, 0)] = c;
        return p;
    }
    static Poly variable(int nvars, int i, const Rat& c = Rat(1)) {
        Poly p(nvars);
        Mon m(nvars, 0);
        m[i] = 1;
        if (c != 0) p.terms_[m] = c;
        return p;
    }
    static Poly linear(const QVec& coeffs, const Rat& constant = Rat(0)) {
        Poly p((int)coeffs.size());
        for (size_t i = 0; i < coeffs.size(); ++i)
            if (coeffs[i] != 0) p.terms_[Poly::unit((int)coeffs.size(), (int)i)] = coeffs[i];
        if (constant != 0) p.terms_[Mon(coeffs.size(), 0)] += constant;
        p.prune();
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Mon, Rat>& terms() const { return terms_; }
    Rat coefficient(const Mon& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }
    Rat constant_term() const { return coefficient(Mon(nvars_, 0)); }
    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, total(m));
        return d;
    }
    bool is_homogeneous() const {
        int d = -2;
        for (const auto& [m, c] : terms_) {
            if (d == -2) d = total(m);
            else if (total(m) != d) return false;
        }
        return true;
    }
    Poly homogeneous_part(int d) const {
        Poly p(nvars_);
        for (const auto& [m, c] : terms_)
            if (total(m) == d) p.terms_[m] = c;
        return p;
    }

    void add_term(const Mon& m, const Rat& c) {
        terms_[m] += c;
        if (terms_[m] == 0) terms_.erase(m);
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) terms_[m] += c;
        prune();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) terms_[m] -= c;
        prune();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly p(a.nvars_);
        for (const auto& [m1, c1] : a.terms_)
            for (const auto& [m2, c2] : b.terms_) {
                Mon m(a.nvars_);
                for (int i = 0; i < a.nvars_; ++i) m[i] = m1[i] + m2[i];
                p.terms_[m] += c1 * c2;
            }
        p.prune();
        return p;
    }
    friend Poly operator*(const Rat& c, Poly p) {
        for (auto& [m, v] : p.terms_) v *= c;
        p.prune();
        return p;
    }
    bool operator==(const Poly&) const = default;

    std::string str(const std::vector<std::string>& names) const;

    static int total(const Mon& m) {
        int s = 0;
        for (int e : m) s += e;
        return s;
    }
    static Mon unit(int nvars, int i) {
        Mon m(nvars, 0);
        m[i] = 1;
        return m;
    }

private:
    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = it->second == 0 ? terms_.erase(it) : std::next(it);
    }
    int nvars_ = 0;
    std::map<Mon, Rat> terms_;
};

inline std::string Poly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    // highest degree first, then reverse-lex, for readable output
    std::vector<std::pair<Mon, Rat>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        int da = total(a.first), db = total(b.first);
        if (da != db) return da > db;
        return a.first > b.first;
    });
    for (size_t k = 0; k < ts.size(); ++k) {
        const auto& [m, c] = ts[k];
        std::string term;
        bool trivial = true;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            trivial = false;
            if (!term.empty()) term += "*";
            term += names[i];
            if (m[i] > 1) term += "^" + std::to_string(m[i]);
        }
        Rat a = c;
        std::string sign = a < 0 ? "-" : (k ? "+" : "");
        if (a < 0) a = -a;
        std::string coeff = to_string(a);
        if (trivial) s += sign + coeff;
        else if (a == 1) s += sign + term;
        else s += sign + coeff + "*" + term;
    }
    return s;
}

}  // namespace gkzcy
