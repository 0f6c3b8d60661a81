#pragma once

// Sparse polynomials in A, B, C with exact rational coefficients.

#include "shadow_markov/markov.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace shadow_markov {

using Rational = boost::multiprecision::cpp_rational;

/// Exponent triple (i, j, k) of A^i B^j C^k.
struct Monomial {
    std::array<std::uint32_t, 3> exp{};

    Monomial() = default;
    Monomial(std::uint32_t i, std::uint32_t j, std::uint32_t k) : exp{i, j, k} {}

    std::uint32_t degree() const { return exp[0] + exp[1] + exp[2]; }
    std::uint32_t operator[](Slot s) const { return exp[index(s)]; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic: total degree first, then A, B, C exponents.
struct GradedLex {
    bool operator()(const Monomial& x, const Monomial& y) const {
        if (x.degree() != y.degree()) return x.degree() < y.degree();
        return x.exp < y.exp;
    }
};

inline Monomial operator*(const Monomial& x, const Monomial& y) {
    return {x.exp[0] + y.exp[0], x.exp[1] + y.exp[1], x.exp[2] + y.exp[2]};
}

inline std::string to_string(const Monomial& m) {
    static constexpr std::array<char, 3> names{'A', 'B', 'C'};
    std::string out;
    for (std::size_t v = 0; v < 3; ++v) {
        if (m.exp[v] == 0) continue;
        if (!out.empty()) out += '*';
        out += names[v];
        if (m.exp[v] > 1) out += '^' + std::to_string(m.exp[v]);
    }
    return out.empty() ? "1" : out;
}

class TriPoly {
public:
    using Terms = std::map<Monomial, Rational, GradedLex>;

    TriPoly() = default;
    TriPoly(Rational constant) {  // NOLINT
        if (constant != 0) terms_.emplace(Monomial{}, std::move(constant));
    }
    TriPoly(long long constant) : TriPoly(Rational(constant)) {}  // NOLINT

    static TriPoly monomial(const Monomial& m, Rational coeff = 1) {
        TriPoly p;
        p.add_term(m, coeff);
        return p;
    }
    static TriPoly variable(Slot s) {
        Monomial m;
        m.exp[index(s)] = 1;
        return monomial(m);
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coefficient(const Monomial& m) const {
        const auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Adds coeff * m, erasing the term if it cancels.
    void add_term(const Monomial& m, const Rational& coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TriPoly& operator+=(const TriPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    TriPoly& operator-=(const TriPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend TriPoly operator+(TriPoly x, const TriPoly& y) { return x += y; }
    friend TriPoly operator-(TriPoly x, const TriPoly& y) { return x -= y; }
    friend TriPoly operator-(const TriPoly& x) { return TriPoly{} - x; }

    friend TriPoly operator*(const TriPoly& x, const TriPoly& y) {
        TriPoly out;
        for (const auto& [mx, cx] : x.terms_) {
            for (const auto& [my, cy] : y.terms_) out.add_term(mx * my, cx * cy);
        }
        return out;
    }

    friend bool operator==(const TriPoly&, const TriPoly&) = default;

private:
    Terms terms_;
};

inline TriPoly pow(const TriPoly& base, std::uint32_t e) {
    TriPoly result(1);
    TriPoly b = base;
    while (e > 0) {
        if (e & 1U) result = result * b;
        e >>= 1U;
        if (e > 0) b = b * b;
    }
    return result;
}

/// p with the variable in `slot` replaced by q.
inline TriPoly compose(const TriPoly& p, Slot slot, const TriPoly& q) {
    std::vector<TriPoly> powers{TriPoly(1)};
    TriPoly out;
    for (const auto& [m, c] : p.terms()) {
        const std::uint32_t e = m[slot];
        while (powers.size() <= e) powers.push_back(powers.back() * q);
        Monomial rest = m;
        rest.exp[index(slot)] = 0;
        out += TriPoly::monomial(rest, c) * powers[e];
    }
    return out;
}

/// A^2 + B^2 + C^2 - 3ABC
inline TriPoly markov_form() {
    const TriPoly a = TriPoly::variable(Slot::A);
    const TriPoly b = TriPoly::variable(Slot::B);
    const TriPoly c = TriPoly::variable(Slot::C);
    return a * a + b * b + c * c - TriPoly(3) * a * b * c;
}

/// Remainder of p modulo the Markov form, viewed as a monic quadratic in A.
/// The result has A-degree at most 1 and is zero exactly when p is a
/// polynomial multiple of the form.
inline TriPoly reduce_mod_markov(TriPoly p) {
    const TriPoly form = markov_form();
    for (;;) {
        const auto top = std::max_element(p.terms().begin(), p.terms().end(), [](const auto& x, const auto& y) {
            return x.first.exp[0] < y.first.exp[0];
        });
        if (top == p.terms().end() || top->first.exp[0] < 2) return p;
        Monomial quotient = top->first;
        quotient.exp[0] -= 2;
        p -= TriPoly::monomial(quotient, top->second) * form;
    }
}

/// Highest graded-lex term first, e.g. "9*B^2*C^2 - 6*A*B*C + A^2".
inline std::string to_string(const TriPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        const bool unit = m == Monomial{};
        if (mag != 1 || unit) {
            out += mag.str();
            if (!unit) out += '*';
        }
        if (!unit) out += to_string(m);
    }
    return out;
}

}  // namespace shadow_markov
