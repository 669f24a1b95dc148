#pragma once

// Test-only oracles and helpers. Nothing here calls into the code paths it is
// used to check (dense elimination vs the sparse eliminator, bounded root scan
// vs the library's root closure).

#include <optional>
#include <string>
#include <vector>

#include "qhilb/dynkin.hpp"
#include "qhilb/field.hpp"
#include "qhilb/matrix.hpp"
#include "qhilb/quiver.hpp"

namespace qhilb::test {

inline Quiver data_quiver(const std::string& name) {
    return Quiver::load(std::string(QHILB_TEST_DATA) + "/" + name + ".quiver");
}

inline std::string data_path(const std::string& name) {
    return std::string(QHILB_TEST_DATA) + "/" + name + ".quiver";
}

/// Rank by dense Gauss-Jordan over Q.
inline std::size_t dense_rank(std::vector<std::vector<Rational>> m) {
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][c] == 0) continue;
            const Rational f = m[i][c] / m[rank][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

/// Rank by dense elimination over F_p.
inline std::size_t dense_rank_mod(std::vector<std::vector<long long>> m, long long p) {
    auto pw = [p](long long b, long long e) {
        long long r = 1;
        b %= p;
        for (; e; e >>= 1, b = b * b % p)
            if (e & 1) r = r * b % p;
        return r;
    };
    for (auto& row : m)
        for (auto& x : row) x = ((x % p) + p) % p;
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        const long long inv = pw(m[rank][c], p - 2);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][c] == 0) continue;
            const long long f = m[i][c] * inv % p;
            for (std::size_t j = c; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

/// All d in {0..6}^r, d != 0, with q(d) = 1, in lexicographic order.
inline std::vector<std::vector<long long>> exhaustive_roots(const Quiver& q) {
    const auto r = q.vertex_count();
    std::vector<std::vector<long long>> out;
    std::vector<long long> d(r, 0);
    for (;;) {
        std::size_t k = r;
        while (k > 0 && d[k - 1] == 6) d[--k] = 0;
        if (k == 0) break;
        ++d[k - 1];
        long long s = 0;
        for (auto x : d) s += x * x;
        for (const auto& a : q.arrows()) s -= d[a.tail] * d[a.head];
        if (s == 1) out.push_back(d);
    }
    return out;
}

/// First weight vector regular over `field`: all ones over Q, otherwise the
/// first hit of a scan over (F_p^*)^r. nullopt when none exists.
inline std::optional<WeightVector> find_regular_weight(const Quiver& q, const Field& field) {
    const auto r = q.vertex_count();
    const auto roots = exhaustive_roots(q);
    auto regular = [&](const std::vector<long long>& v) {
        for (const auto& d : roots) {
            long long s = 0;
            for (std::size_t i = 0; i < r; ++i) s += v[i] * d[i];
            if (field.is_rational() ? s == 0 : s % field.characteristic() == 0) return false;
        }
        return true;
    };
    auto make = [&](const std::vector<long long>& v) {
        std::vector<Rational> e(v.begin(), v.end());
        return WeightVector(field, e);
    };
    if (field.is_rational()) return make(std::vector<long long>(r, 1));
    const long long p = field.characteristic();
    std::vector<long long> v(r, 1);
    for (;;) {
        if (regular(v)) return make(v);
        std::size_t k = r;
        while (k > 0 && v[k - 1] == p - 1) v[--k] = 1;
        if (k == 0) return std::nullopt;
        ++v[k - 1];
    }
}

inline WeightVector weights(const Field& f, std::vector<long long> v) {
    return WeightVector(f, std::vector<Rational>(v.begin(), v.end()));
}

/// Quiver with vertex labels permuted by `perm` (vertex v becomes perm[v]).
inline Quiver relabeled(const Quiver& q, const std::vector<std::size_t>& perm) {
    std::vector<Arrow> arrows;
    for (const auto& a : q.arrows()) arrows.push_back({a.name, perm[a.tail], perm[a.head]});
    return Quiver(q.vertex_count(), arrows);
}

}  // namespace qhilb::test
