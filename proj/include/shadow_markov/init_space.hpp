#pragma once

// Dependence of the shadow tree on the seed (alpha1, beta1, gamma1).
//
// Real parts never depend on the seed, and every shadow is a linear form
// alpha1*u + beta1*v + gamma1*t in the seed. The seeds (0,1,1), (1,1,1) and
// (0,1,0) form an integral basis of the seed lattice.

#include "shadow_markov/initial_triple.hpp"
#include "shadow_markov/tree.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace shadow_markov {

struct ShadowCoefficients {
    BigInt u;  // coefficient of alpha1
    BigInt v;  // coefficient of beta1
    BigInt t;  // coefficient of gamma1

    BigInt apply(const InitialTriple& seed) const { return seed.alpha1() * u + seed.beta1() * v + seed.gamma1() * t; }

    friend bool operator==(const ShadowCoefficients&, const ShadowCoefficients&) = default;
};

/// Reads (u, v, t) off the unit seeds, then checks the result against an
/// unrelated seed; a mismatch would mean shadows are not linear in the seed.
inline ShadowCoefficients shadow_coefficients(const TreePath& path, Slot trunk_slot = Slot::A) {
    ShadowCoefficients k{node_at({1, 0, 0}, path, trunk_slot).newest.shadow,
                         node_at({0, 1, 0}, path, trunk_slot).newest.shadow,
                         node_at({0, 0, 1}, path, trunk_slot).newest.shadow};
    const InitialTriple probe{7, -3, 11};
    if (node_at(probe, path, trunk_slot).newest.shadow != k.apply(probe)) {
        throw std::logic_error("shadow at path '" + path.str() + "' is not linear in the seed");
    }
    return k;
}

/// seed = x*(0,1,1) + y*(1,1,1) + z*(0,1,0)
struct BasisCoefficients {
    BigInt x;
    BigInt y;
    BigInt z;

    friend bool operator==(const BasisCoefficients&, const BasisCoefficients&) = default;
};

inline const std::array<InitialTriple, 3>& seed_basis() {
    static const std::array<InitialTriple, 3> basis{InitialTriple{0, 1, 1}, InitialTriple{1, 1, 1},
                                                    InitialTriple{0, 1, 0}};
    return basis;
}

// The basis matrix has determinant -1, so the inverse is integral:
//   alpha = y, beta = x + y + z, gamma = x + y.
inline BasisCoefficients decompose(const InitialTriple& seed) {
    return {seed.gamma1() - seed.alpha1(), seed.alpha1(), seed.beta1() - seed.gamma1()};
}

inline InitialTriple recombine(const BasisCoefficients& c) {
    const auto& b = seed_basis();
    return c.x * b[0] + c.y * b[1] + c.z * b[2];
}

enum class Verdict { AllPositive, NegativeShadow, ZeroShadow };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::AllPositive: return "all-positive";
        case Verdict::NegativeShadow: return "negative-shadow";
        case Verdict::ZeroShadow: return "zero-shadow";
    }
    return "?";
}

struct PositivityReport {
    InitialTriple seed;
    std::size_t depth = 0;
    Verdict verdict = Verdict::AllPositive;
    TreePath violation_path;  // meaningful unless verdict == AllPositive
    DualInt violation_value;

    friend bool operator==(const PositivityReport&, const PositivityReport&) = default;
};

/// Breadth-first (L before R) scan of generated regions; seed regions are
/// exempt. Reports the first shadow <= 0.
inline PositivityReport check_positivity(const InitialTriple& seed, std::size_t depth, Slot trunk_slot = Slot::A) {
    PositivityReport report{seed, depth, Verdict::AllPositive, {}, {}};
    std::vector<TreeNode> level{trunk(seed, trunk_slot)};
    for (std::size_t d = 0;; ++d) {
        for (const auto& n : level) {
            if (n.newest.shadow.sign() <= 0) {
                report.verdict = n.newest.shadow.is_zero() ? Verdict::ZeroShadow : Verdict::NegativeShadow;
                report.violation_path = n.path;
                report.violation_value = n.newest;
                return report;
            }
        }
        if (d == depth) break;
        std::vector<TreeNode> next;
        next.reserve(level.size() * 2);
        for (const auto& n : level) {
            next.push_back(child(n, Direction::Left));
            next.push_back(child(n, Direction::Right));
        }
        level = std::move(next);
    }
    return report;
}

/// Every seed in [-bound, bound]^3, in lexicographic order of
/// (alpha1, beta1, gamma1). Seeds are independent and are checked on up to
/// `threads` workers; the output order does not depend on the thread count.
inline std::vector<PositivityReport> positivity_search(long long bound, std::size_t depth, unsigned threads = 0,
                                                       Slot trunk_slot = Slot::A) {
    if (bound < 0) throw std::invalid_argument("bound must be non-negative");
    std::vector<InitialTriple> seeds;
    for (long long a = -bound; a <= bound; ++a) {
        for (long long b = -bound; b <= bound; ++b) {
            for (long long c = -bound; c <= bound; ++c) seeds.emplace_back(a, b, c);
        }
    }

    std::vector<PositivityReport> reports(seeds.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < seeds.size(); i = next++) reports[i] = check_positivity(seeds[i], depth, trunk_slot);
    };

    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, seeds.size()));
    {
        std::vector<std::jthread> pool;
        for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
        worker();
    }
    return reports;
}

}  // namespace shadow_markov
