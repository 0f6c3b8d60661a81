#pragma once

// Mutations and residuals of the shadow Markov equation
//     A^2 + B^2 + C^2 = X ABC,   X = 3 - sigma e,
// descent of a solution to its fundamental triple, and the residual of the
// HPZ equation (a^2+b^2+c^2-3abc) + (ab+bc+ac-3abc) e, which mutations do
// not preserve.

#include "shadow_markov/dual_int.hpp"
#include "shadow_markov/initial_triple.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace shadow_markov {

class NotMarkov : public DomainError {
public:
    using DomainError::DomainError;
};

class DescentStuck : public DomainError {
public:
    using DomainError::DomainError;
};

enum class Slot : std::uint8_t { A = 0, B = 1, C = 2 };

inline constexpr std::array<Slot, 3> kAllSlots{Slot::A, Slot::B, Slot::C};

inline constexpr std::size_t index(Slot s) { return static_cast<std::size_t>(s); }

inline Slot slot_from_index(long long i) {
    if (i < 0 || i > 2) throw std::out_of_range("slot index must be 0, 1 or 2");
    return static_cast<Slot>(i);
}

struct DualTriple {
    std::array<DualInt, 3> slots;

    DualTriple() = default;
    DualTriple(DualInt a, DualInt b, DualInt c) : slots{std::move(a), std::move(b), std::move(c)} {}

    DualInt& operator[](Slot s) { return slots[index(s)]; }
    const DualInt& operator[](Slot s) const { return slots[index(s)]; }

    friend bool operator==(const DualTriple&, const DualTriple&) = default;
};

inline std::string to_string(const DualTriple& t) {
    return to_string(t.slots[0]) + "," + to_string(t.slots[1]) + "," + to_string(t.slots[2]);
}

/// "A,B,C" where each entry is a dual number in canonical text form.
inline DualTriple parse_triple(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ',') {
            parts.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    if (parts.size() != 3) throw ParseError("expected three comma-separated dual numbers, got '" + std::string(text) + "'");
    return {parse_dual(parts[0]), parse_dual(parts[1]), parse_dual(parts[2])};
}

/// (1 + alpha1 e, 1 + beta1 e, 1 + gamma1 e)
inline DualTriple fundamental_triple(const InitialTriple& seed) {
    return {DualInt(BigInt(1), seed.alpha1()), DualInt(BigInt(1), seed.beta1()), DualInt(BigInt(1), seed.gamma1())};
}

namespace detail {

inline std::array<Slot, 2> others(Slot s) {
    switch (s) {
        case Slot::A: return {Slot::B, Slot::C};
        case Slot::B: return {Slot::A, Slot::C};
        case Slot::C: break;
    }
    return {Slot::A, Slot::B};
}

}  // namespace detail

/// Exchange relation A' = (B^2 + C^2) / A on the given slot, by exact dual
/// division. Real part a' = (b^2 + c^2)/a, shadow
/// alpha' = (2 b beta + 2 c gamma - a' alpha)/a.
inline DualTriple mutate(const DualTriple& t, Slot slot) {
    const auto [p, q] = detail::others(slot);
    DualTriple out = t;
    out[slot] = exact_div(square(t[p]) + square(t[q]), t[slot]);
    return out;
}

/// Division-free form A' = X B C - A, equal to mutate() on solutions of
/// A^2 + B^2 + C^2 = X ABC.
inline DualTriple mutate_linear(const DualTriple& t, Slot slot, const DualInt& x) {
    const auto [p, q] = detail::others(slot);
    DualTriple out = t;
    out[slot] = x * t[p] * t[q] - t[slot];
    return out;
}

/// out[i] = t[order[i]]
inline DualTriple permute(const DualTriple& t, const std::array<Slot, 3>& order) {
    return {t[order[0]], t[order[1]], t[order[2]]};
}

struct Residual {
    DualInt value;

    bool vanishes() const { return value.is_zero(); }
    friend bool operator==(const Residual&, const Residual&) = default;
};

/// A^2 + B^2 + C^2 - X ABC
inline Residual residual(const DualTriple& t, const DualInt& x) {
    const auto& [a, b, c] = t.slots;
    return {square(a) + square(b) + square(c) - x * a * b * c};
}

/// Residual against the coefficient 3 - sigma e determined by a seed.
inline Residual residual(const DualTriple& t, const InitialTriple& seed) { return residual(t, seed.coefficient()); }

/// X = (A^2 + B^2 + C^2) / (ABC), the unique coefficient a solution satisfies.
inline DualInt solution_coefficient(const DualTriple& t) {
    const auto& [a, b, c] = t.slots;
    return exact_div(square(a) + square(b) + square(c), a * b * c);
}

inline bool is_classical_markov(const BigInt& a, const BigInt& b, const BigInt& c) {
    return a * a + b * b + c * c == 3 * a * b * c;
}

inline bool is_classical_markov(const DualTriple& t) {
    return is_classical_markov(t.slots[0].real, t.slots[1].real, t.slots[2].real);
}

struct Descent {
    DualTriple terminal;
    std::vector<Slot> moves;  // in the order they were applied during descent
};

/// Mutates the slot with the maximal real part (lowest index on ties) until
/// every real part equals 1.
inline Descent reduce_to_fundamental(const DualTriple& t) {
    for (const auto& x : t.slots) {
        if (x.real.sign() <= 0) throw NotMarkov("descent needs positive real parts: " + to_string(t));
    }
    if (!is_classical_markov(t)) throw NotMarkov("real parts do not satisfy a^2+b^2+c^2=3abc: " + to_string(t));

    Descent result{t, {}};
    auto& cur = result.terminal;
    const auto is_fundamental = [&cur] {
        return std::all_of(cur.slots.begin(), cur.slots.end(), [](const DualInt& x) { return x.real == 1; });
    };
    while (!is_fundamental()) {
        const auto top = std::max_element(cur.slots.begin(), cur.slots.end(),
                                          [](const DualInt& x, const DualInt& y) { return x.real < y.real; });
        const Slot slot = slot_from_index(top - cur.slots.begin());
        const BigInt before = top->real;
        cur = mutate(cur, slot);
        const auto after = std::max_element(cur.slots.begin(), cur.slots.end(),
                                            [](const DualInt& x, const DualInt& y) { return x.real < y.real; });
        if (!(after->real < before)) throw DescentStuck("mutation did not decrease the maximum at " + to_string(cur));
        result.moves.push_back(slot);
    }
    return result;
}

/// Inverse of a descent: applies the logged moves in reverse order.
inline DualTriple replay_descent(const DualTriple& terminal, const std::vector<Slot>& moves) {
    DualTriple t = terminal;
    for (auto it = moves.rbegin(); it != moves.rend(); ++it) t = mutate(t, *it);
    return t;
}

/// (a^2 + b^2 + c^2 - 3abc) + (ab + bc + ac - 3abc) e
inline DualInt hpz_residual(const BigInt& a, const BigInt& b, const BigInt& c) {
    const BigInt abc3 = 3 * a * b * c;
    return {a * a + b * b + c * c - abc3, a * b + b * c + a * c - abc3};
}

}  // namespace shadow_markov
