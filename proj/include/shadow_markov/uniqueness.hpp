#pragma once

// Bounded-degree certification that, among the deformations
//     A^2 + B^2 + C^2 = 3ABC + P(A, B, C) e,
// only P = c * ABC is preserved by the mutations A' = (B^2 + C^2)/A.
//
// To first order in e a mutation sends A to 3BC - A, and invariance of the
// deformed equation becomes
//     P(3BC - A, B, C) = (3BC/A - 1) P(A, B, C)
// at every point of the Markov surface M = A^2 + B^2 + C^2 - 3ABC = 0.
// Multiplying by A keeps everything polynomial:
//     A P(3BC - A, B, C) - (3BC - A) P(A, B, C) = 0  (mod M).
//
// Only P mod M matters. On a solution M itself is a multiple of e, so
// adding M R to P changes P e by M R e = 0, and the two equations have the
// same solutions. The certificate therefore works in the quotient by M.
// Without the quotient, ABC * M passes the plain polynomial identity from
// D = 3 on, because M is unchanged by A -> 3BC - A; that count is reported
// separately as identity_nullspace_dimension.

#include "shadow_markov/markov.hpp"
#include "shadow_markov/rational_linalg.hpp"
#include "shadow_markov/tripoly.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace shadow_markov {

namespace detail {

/// 3 * (product of the other two variables) - variable
inline TriPoly mutation_image(Slot slot) {
    const auto [p, q] = others(slot);
    return TriPoly(3) * TriPoly::variable(p) * TriPoly::variable(q) - TriPoly::variable(slot);
}

}  // namespace detail

/// P(3BC - A, B, C) for slot A, and the analogous substitution for B or C.
inline TriPoly substitute_mutation(const TriPoly& p, Slot slot = Slot::A) {
    return compose(p, slot, detail::mutation_image(slot));
}

/// A P(3BC - A, B, C) - (3BC - A) P(A, B, C); zero iff P is invariant under
/// the mutation of `slot`.
inline TriPoly invariance_constraint(const TriPoly& p, Slot slot = Slot::A) {
    const TriPoly image = detail::mutation_image(slot);
    return TriPoly::variable(slot) * compose(p, slot, image) - image * p;
}

enum class SlotMode { SingleSlot, AllSlots };

struct InvarianceReport {
    std::uint32_t max_degree = 0;
    SlotMode mode = SlotMode::AllSlots;
    std::size_t unknowns = 0;
    std::size_t equations = 0;
    /// Rank of the constraint system taken modulo M.
    std::size_t rank = 0;
    /// Dimension of the invariant P modulo multiples of M.
    std::size_t nullspace_dimension = 0;
    /// Reduced representatives, one per dimension, in echelon form.
    std::vector<TriPoly> basis;
    /// Dimension of the P satisfying the constraint as an exact identity.
    std::size_t identity_nullspace_dimension = 0;
    std::vector<TriPoly> identity_basis;
};

namespace detail {

inline std::vector<Monomial> box_monomials(std::uint32_t max_degree) {
    std::vector<Monomial> out;
    for (std::uint32_t i = 0; i <= max_degree; ++i) {
        for (std::uint32_t j = 0; j <= max_degree; ++j) {
            for (std::uint32_t k = 0; k <= max_degree; ++k) out.emplace_back(i, j, k);
        }
    }
    std::sort(out.begin(), out.end(), GradedLex{});
    return out;
}

/// Nullspace of the linear map sending unknown u to images[u]; images is
/// indexed [slot][unknown].
inline EchelonForm solve_constraints(const std::vector<std::vector<TriPoly>>& images, std::size_t unknowns,
                                     std::size_t& equations) {
    EchelonForm echelon(unknowns);
    equations = 0;
    for (const auto& per_slot : images) {
        std::map<Monomial, RationalVector, GradedLex> rows;
        for (std::size_t u = 0; u < unknowns; ++u) {
            for (const auto& [m, c] : per_slot[u].terms()) {
                auto [it, inserted] = rows.try_emplace(m, RationalVector(unknowns));
                it->second[u] = c;
            }
        }
        equations += rows.size();
        for (auto& [m, row] : rows) echelon.insert(std::move(row));
    }
    return echelon;
}

inline TriPoly combine(const std::vector<Monomial>& monomials, const RationalVector& v) {
    TriPoly p;
    for (std::size_t u = 0; u < v.size(); ++u) p.add_term(monomials[u], v[u]);
    return p;
}

}  // namespace detail

/// Unknowns are the coefficients of A^i B^j C^k with i, j, k <= max_degree.
/// SingleSlot imposes only the A-slot constraint; AllSlots imposes all three.
inline InvarianceReport certify_uniqueness(std::uint32_t max_degree, SlotMode mode = SlotMode::AllSlots) {
    if (max_degree < 1) throw std::invalid_argument("max_degree must be at least 1");

    const std::vector<Monomial> unknowns = detail::box_monomials(max_degree);
    const std::vector<Slot> slots =
        mode == SlotMode::AllSlots ? std::vector<Slot>(kAllSlots.begin(), kAllSlots.end()) : std::vector<Slot>{Slot::A};

    // The constraint is linear in P, so it is enough to know the image of
    // each monomial unknown.
    std::vector<std::vector<TriPoly>> exact(slots.size()), reduced(slots.size());
    for (std::size_t s = 0; s < slots.size(); ++s) {
        for (const auto& m : unknowns) {
            exact[s].push_back(invariance_constraint(TriPoly::monomial(m), slots[s]));
            reduced[s].push_back(reduce_mod_markov(exact[s].back()));
        }
    }

    InvarianceReport report;
    report.max_degree = max_degree;
    report.mode = mode;
    report.unknowns = unknowns.size();

    std::size_t ignored = 0;
    for (const auto& v : detail::solve_constraints(exact, unknowns.size(), ignored).nullspace()) {
        report.identity_basis.push_back(detail::combine(unknowns, v));
    }
    report.identity_nullspace_dimension = report.identity_basis.size();

    const EchelonForm system = detail::solve_constraints(reduced, unknowns.size(), report.equations);
    report.rank = system.rank();

    // Pass each solution to its remainder mod M and row-reduce the
    // remainders. Columns run from the highest graded-lex monomial down, so
    // each basis element is led by its own leading term.
    std::vector<TriPoly> remainders;
    std::map<Monomial, std::size_t, GradedLex> seen;
    for (const auto& v : system.nullspace()) {
        remainders.push_back(reduce_mod_markov(detail::combine(unknowns, v)));
        for (const auto& [m, c] : remainders.back().terms()) seen.emplace(m, 0);
    }
    std::vector<Monomial> columns;
    for (auto it = seen.rbegin(); it != seen.rend(); ++it) {
        it->second = columns.size();
        columns.push_back(it->first);
    }
    EchelonForm quotient(columns.size());
    for (const auto& r : remainders) {
        RationalVector row(columns.size());
        for (const auto& [m, c] : r.terms()) row[seen.at(m)] = c;
        quotient.insert(std::move(row));
    }
    for (const auto& row : quotient.rows()) report.basis.push_back(detail::combine(columns, row));
    report.nullspace_dimension = report.basis.size();
    return report;
}

}  // namespace shadow_markov
