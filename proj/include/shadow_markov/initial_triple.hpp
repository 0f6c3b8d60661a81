#pragma once

#include "shadow_markov/dual_int.hpp"

#include <string>
#include <string_view>

namespace shadow_markov {

/// Shadows (alpha1, beta1, gamma1) of the fundamental triple
/// (1 + alpha1 e, 1 + beta1 e, 1 + gamma1 e).
class InitialTriple {
public:
    InitialTriple() = default;
    InitialTriple(BigInt alpha1, BigInt beta1, BigInt gamma1)
        : alpha1_(std::move(alpha1)), beta1_(std::move(beta1)), gamma1_(std::move(gamma1)) {}
    InitialTriple(long long alpha1, long long beta1, long long gamma1)
        : alpha1_(alpha1), beta1_(beta1), gamma1_(gamma1) {}

    const BigInt& alpha1() const { return alpha1_; }
    const BigInt& beta1() const { return beta1_; }
    const BigInt& gamma1() const { return gamma1_; }

    BigInt sigma() const { return alpha1_ + beta1_ + gamma1_; }

    /// Deformation coefficient X = 3 - sigma e.
    DualInt coefficient() const { return {BigInt(3), BigInt(-sigma())}; }

    friend bool operator==(const InitialTriple&, const InitialTriple&) = default;

private:
    BigInt alpha1_;
    BigInt beta1_;
    BigInt gamma1_;
};

inline InitialTriple operator+(const InitialTriple& x, const InitialTriple& y) {
    return {x.alpha1() + y.alpha1(), x.beta1() + y.beta1(), x.gamma1() + y.gamma1()};
}

inline InitialTriple operator*(const BigInt& k, const InitialTriple& s) {
    return {k * s.alpha1(), k * s.beta1(), k * s.gamma1()};
}

inline std::string to_string(const InitialTriple& s) {
    return s.alpha1().str() + "," + s.beta1().str() + "," + s.gamma1().str();
}

/// "a,b,c" with optional whitespace.
inline InitialTriple parse_initial_triple(std::string_view text) {
    const std::string s = detail::strip_spaces(text);
    const auto first = s.find(',');
    const auto second = first == std::string::npos ? first : s.find(',', first + 1);
    if (first == std::string::npos || second == std::string::npos || s.find(',', second + 1) != std::string::npos) {
        throw ParseError("expected three comma-separated integers, got '" + std::string(text) + "'");
    }
    const std::string_view view(s);
    return {detail::parse_integer(view.substr(0, first)),
            detail::parse_integer(view.substr(first + 1, second - first - 1)),
            detail::parse_integer(view.substr(second + 1))};
}

}  // namespace shadow_markov
