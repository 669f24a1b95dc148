#include "qhilb/elimination.hpp"

#include <boost/multiprecision/integer.hpp>

namespace qhilb {

ModPEchelon::ModPEchelon(std::size_t ncols, std::uint32_t p) : p_(p), pivot_of_(ncols, -1) {}

bool ModPEchelon::insert(SparseRow<std::uint32_t> row) {
    const std::uint64_t p = p_;
    while (!row.empty()) {
        const auto lead = row.front().col;
        const auto idx = pivot_of_[lead];
        if (idx < 0) {
            const std::uint64_t inv = inverse_mod(row.front().val, p_);
            for (auto& e : row) e.val = static_cast<std::uint32_t>(e.val * inv % p);
            pivot_of_[lead] = static_cast<std::int32_t>(rows_.size());
            rows_.push_back(std::move(row));
            return true;
        }
        // row -= f * pivot, where f is row's leading value (pivot is monic).
        const auto& piv = rows_[static_cast<std::size_t>(idx)];
        const std::uint64_t f = p - row.front().val;
        scratch_.clear();
        std::size_t a = 1, b = 1;
        while (a < row.size() || b < piv.size()) {
            if (b == piv.size() || (a < row.size() && row[a].col < piv[b].col)) {
                scratch_.push_back(row[a++]);
            } else if (a == row.size() || piv[b].col < row[a].col) {
                scratch_.push_back({piv[b].col, static_cast<std::uint32_t>(f * piv[b].val % p)});
                ++b;
            } else {
                const auto v = static_cast<std::uint32_t>((row[a].val + f * piv[b].val) % p);
                if (v != 0) scratch_.push_back({row[a].col, v});
                ++a;
                ++b;
            }
        }
        std::swap(row, scratch_);
    }
    return false;
}

FractionFreeEchelon::FractionFreeEchelon(std::size_t ncols) : pivot_of_(ncols, -1) {}

bool FractionFreeEchelon::insert(SparseRow<BigInt> row) {
    SparseRow<BigInt> next;
    while (!row.empty()) {
        const auto lead = row.front().col;
        const auto idx = pivot_of_[lead];
        if (idx < 0) {
            BigInt g = 0;
            for (const auto& e : row) {
                g = boost::multiprecision::gcd(g, e.val);
                if (g == 1) break;
            }
            if (row.front().val < 0) g = -g;
            if (g != 1)
                for (auto& e : row) e.val /= g;
            pivot_of_[lead] = static_cast<std::int32_t>(rows_.size());
            rows_.push_back(std::move(row));
            return true;
        }
        // row <- b*row - a*pivot with a/b = row_lead/pivot_lead in lowest terms.
        const auto& piv = rows_[static_cast<std::size_t>(idx)];
        const BigInt g = boost::multiprecision::gcd(row.front().val, piv.front().val);
        const BigInt a = row.front().val / g;
        const BigInt b = piv.front().val / g;
        next.clear();
        next.reserve(row.size() + piv.size());
        std::size_t i = 1, j = 1;
        while (i < row.size() || j < piv.size()) {
            if (j == piv.size() || (i < row.size() && row[i].col < piv[j].col)) {
                next.push_back({row[i].col, b == 1 ? row[i].val : BigInt(b * row[i].val)});
                ++i;
            } else if (i == row.size() || piv[j].col < row[i].col) {
                next.push_back({piv[j].col, BigInt(-a * piv[j].val)});
                ++j;
            } else {
                BigInt v = b * row[i].val - a * piv[j].val;
                if (v != 0) next.push_back({row[i].col, std::move(v)});
                ++i;
                ++j;
            }
        }
        std::swap(row, next);
        if (b != 1 && !row.empty()) {
            BigInt c = 0;
            for (const auto& e : row) {
                c = boost::multiprecision::gcd(c, e.val);
                if (c == 1) break;
            }
            if (c != 1)
                for (auto& e : row) e.val /= c;
        }
    }
    return false;
}

}  // namespace qhilb
