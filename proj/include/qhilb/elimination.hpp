#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "qhilb/field.hpp"

namespace qhilb {

template <class T>
struct SparseEntry {
    std::uint32_t col;
    T val;
};

template <class T>
using SparseRow = std::vector<SparseEntry<T>>;

/// Row echelon basis over F_p, built one sparse row at a time. A row's pivot
/// is its smallest column; stored pivot rows are monic.
class ModPEchelon {
public:
    ModPEchelon(std::size_t ncols, std::uint32_t p);

    /// `row` must be sorted by column with values in [1, p). Returns true when
    /// the row is independent of the rows inserted so far.
    bool insert(SparseRow<std::uint32_t> row);
    std::size_t rank() const { return rows_.size(); }

private:
    std::uint32_t p_;
    std::vector<std::int32_t> pivot_of_;
    std::vector<SparseRow<std::uint32_t>> rows_;
    SparseRow<std::uint32_t> scratch_;
};

/// Integer-preserving (fraction-free) elimination over Q with the same pivot
/// rule as ModPEchelon. Rows are combined as b*row - a*pivot with (a, b)
/// divided by their gcd, and stored pivot rows are primitive with positive
/// leading entry.
class FractionFreeEchelon {
public:
    explicit FractionFreeEchelon(std::size_t ncols);

    bool insert(SparseRow<BigInt> row);
    std::size_t rank() const { return rows_.size(); }

private:
    std::vector<std::int32_t> pivot_of_;
    std::vector<SparseRow<BigInt>> rows_;
};

/// Sorts by column, sums duplicate columns and drops zeros.
template <class T, class Add, class IsZero>
void canonicalize(SparseRow<T>& row, Add add, IsZero is_zero) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
    std::size_t out = 0;
    for (std::size_t k = 0; k < row.size();) {
        auto acc = row[k];
        std::size_t m = k + 1;
        for (; m < row.size() && row[m].col == acc.col; ++m) acc.val = add(acc.val, row[m].val);
        if (!is_zero(acc.val)) row[out++] = std::move(acc);
        k = m;
    }
    row.resize(out);
}

}  // namespace qhilb
