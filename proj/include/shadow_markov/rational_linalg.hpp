#pragma once

// Exact linear algebra over the rationals: an incrementally maintained
// reduced row echelon form and its nullspace. No rounding anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace shadow_markov {

using Rational = boost::multiprecision::cpp_rational;
using RationalVector = std::vector<Rational>;

class EchelonForm {
public:
    explicit EchelonForm(std::size_t columns) : columns_(columns) {}

    std::size_t columns() const { return columns_; }
    std::size_t rank() const { return rows_.size(); }

    /// Adds a row to the span; returns false if it was already dependent.
    bool insert(RationalVector row) {
        if (row.size() != columns_) throw std::invalid_argument("row length does not match column count");
        for (const auto& r : rows_) {
            if (row[r.pivot] == 0) continue;
            const Rational f = row[r.pivot];
            for (std::size_t c = r.pivot; c < columns_; ++c) {
                if (r.values[c] != 0) row[c] -= f * r.values[c];
            }
        }
        const auto lead = std::find_if(row.begin(), row.end(), [](const Rational& x) { return x != 0; });
        if (lead == row.end()) return false;

        const auto pivot = static_cast<std::size_t>(lead - row.begin());
        const Rational inv = 1 / row[pivot];
        for (std::size_t c = pivot; c < columns_; ++c) {
            if (row[c] != 0) row[c] *= inv;
        }
        // keep the form reduced: clear the new pivot column in older rows
        for (auto& r : rows_) {
            if (r.values[pivot] == 0) continue;
            const Rational f = r.values[pivot];
            for (std::size_t c = pivot; c < columns_; ++c) {
                if (row[c] != 0) r.values[c] -= f * row[c];
            }
        }
        const auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                                          [](const Row& r, std::size_t p) { return r.pivot < p; });
        rows_.insert(pos, Row{pivot, std::move(row)});
        return true;
    }

    /// The nonzero rows of the reduced form, ordered by pivot column.
    std::vector<RationalVector> rows() const {
        std::vector<RationalVector> out;
        out.reserve(rows_.size());
        for (const auto& r : rows_) out.push_back(r.values);
        return out;
    }

    /// One basis vector per free column, with that column set to 1.
    std::vector<RationalVector> nullspace() const {
        std::vector<bool> is_pivot(columns_, false);
        for (const auto& r : rows_) is_pivot[r.pivot] = true;

        std::vector<RationalVector> basis;
        for (std::size_t free = 0; free < columns_; ++free) {
            if (is_pivot[free]) continue;
            RationalVector v(columns_);
            v[free] = 1;
            for (const auto& r : rows_) v[r.pivot] = -r.values[free];
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    struct Row {
        std::size_t pivot;
        RationalVector values;
    };

    std::size_t columns_;
    std::vector<Row> rows_;  // sorted by pivot
};

}  // namespace shadow_markov
