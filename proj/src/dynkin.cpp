#include "qhilb/dynkin.hpp"

#include <algorithm>
#include <set>

#include "qhilb/errors.hpp"

namespace qhilb {

namespace {

// Entries of a positive root of any ADE type never exceed 6 (the largest
// coefficient of the E8 highest root).
constexpr long long kMaxRootCoefficient = 6;

std::vector<std::pair<std::size_t, std::size_t>> canonical_edges(const DynkinType& t) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    const auto n = t.rank;
    switch (t.family) {
        case DynkinFamily::A:
            for (std::size_t k = 0; k + 1 < n; ++k) e.emplace_back(k, k + 1);
            break;
        case DynkinFamily::D:
            for (std::size_t k = 0; k + 3 < n; ++k) e.emplace_back(k, k + 1);
            e.emplace_back(n - 3, n - 2);
            e.emplace_back(n - 3, n - 1);
            break;
        case DynkinFamily::E:
            for (std::size_t k = 0; k + 2 < n; ++k) e.emplace_back(k, k + 1);
            e.emplace_back(2, n - 1);
            break;
    }
    return e;
}

// Canonical Nakayama involution on diagram positions.
std::vector<std::size_t> canonical_nakayama(const DynkinType& t) {
    const auto n = t.rank;
    std::vector<std::size_t> nu(n);
    for (std::size_t k = 0; k < n; ++k) nu[k] = k;
    switch (t.family) {
        case DynkinFamily::A:
            for (std::size_t k = 0; k < n; ++k) nu[k] = n - 1 - k;
            break;
        case DynkinFamily::D:
            if (n % 2 == 1) std::swap(nu[n - 2], nu[n - 1]);
            break;
        case DynkinFamily::E:
            if (n == 6) {
                std::swap(nu[0], nu[4]);
                std::swap(nu[1], nu[3]);
            }
            break;
    }
    return nu;
}

std::vector<DynkinType> candidates(std::size_t n) {
    std::vector<DynkinType> c{{DynkinFamily::A, n}};
    if (n >= 4) c.push_back({DynkinFamily::D, n});
    if (n >= 6 && n <= 8) c.push_back({DynkinFamily::E, n});
    return c;
}

// Backtracking isomorphism between the underlying graphs. `order` lists the
// quiver's vertices so that each one after the first has an earlier neighbour.
bool extend(const IntMatrix& cq, const IntMatrix& cd, const std::vector<std::size_t>& order,
            std::size_t depth, std::vector<std::size_t>& map, std::vector<bool>& used) {
    const auto n = cq.size();
    if (depth == n) return true;
    const auto v = order[depth];
    for (std::size_t pos = 0; pos < n; ++pos) {
        if (used[pos]) continue;
        bool ok = true;
        for (std::size_t k = 0; k < depth && ok; ++k) {
            const auto u = order[k];
            ok = cq(u, v) == cd(map[u], pos);
        }
        if (!ok) continue;
        map[v] = pos;
        used[pos] = true;
        if (extend(cq, cd, order, depth + 1, map, used)) return true;
        used[pos] = false;
    }
    return false;
}

std::optional<std::vector<std::size_t>> find_isomorphism(const Quiver& q, const DynkinType& t) {
    const auto cq = q.adjacency();
    const auto cd = canonical_quiver(t).adjacency();
    const auto n = q.vertex_count();
    std::vector<std::size_t> order{0};
    std::vector<bool> seen(n, false);
    seen[0] = true;
    for (std::size_t k = 0; k < order.size(); ++k)
        for (std::size_t w = 0; w < n; ++w)
            if (!seen[w] && cq(order[k], w) != 0) {
                seen[w] = true;
                order.push_back(w);
            }
    std::vector<std::size_t> map(n, n);
    std::vector<bool> used(n, false);
    if (extend(cq, cd, order, 0, map, used)) return map;
    return std::nullopt;
}

}  // namespace

std::string DynkinType::name() const {
    const char* f = family == DynkinFamily::A ? "A" : family == DynkinFamily::D ? "D" : "E";
    return f + std::to_string(rank);
}

std::vector<DynkinType> standard_dynkin_types() {
    std::vector<DynkinType> out;
    for (std::size_t n = 1; n <= 8; ++n) out.push_back({DynkinFamily::A, n});
    for (std::size_t n = 4; n <= 8; ++n) out.push_back({DynkinFamily::D, n});
    for (std::size_t n = 6; n <= 8; ++n) out.push_back({DynkinFamily::E, n});
    return out;
}

Quiver canonical_quiver(const DynkinType& type) {
    if (type.rank == 0 || (type.family == DynkinFamily::D && type.rank < 4) ||
        (type.family == DynkinFamily::E && (type.rank < 6 || type.rank > 8)))
        throw InputError("no Dynkin diagram of type " + type.name());
    std::vector<Arrow> arrows;
    for (const auto& [u, v] : canonical_edges(type))
        arrows.push_back({"a" + std::to_string(arrows.size() + 1), u, v});
    return Quiver(type.rank, std::move(arrows));
}

std::string QuiverClass::to_string() const {
    switch (verdict) {
        case Verdict::Dynkin: return "Dynkin " + type->name();
        case Verdict::ExtendedDynkin: return "ExtendedDynkin";
        case Verdict::Wild: return "Wild";
    }
    return {};
}

long long tits_form(const Quiver& q, std::span<const long long> d) {
    if (d.size() != q.vertex_count()) throw SizeMismatch("dimension vector has wrong length");
    long long s = 0;
    for (auto x : d) s += x * x;
    for (const auto& a : q.arrows()) s -= d[a.tail] * d[a.head];
    return s;
}

QuiverClass classify(const Quiver& q) {
    // Symmetric LDL^t of the Tits matrix 2I - C over the rationals. A zero
    // pivot with a nonzero remaining row, or a negative pivot, means the form
    // is indefinite.
    const auto n = q.vertex_count();
    const auto c = q.adjacency();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = (i == j ? 2 : 0) - Rational(c(i, j));

    bool degenerate = false;
    QuiverClass out;
    for (std::size_t k = 0; k < n; ++k) {
        const Rational piv = m[k][k];
        if (piv < 0) return out;
        if (piv == 0) {
            for (std::size_t j = k + 1; j < n; ++j)
                if (m[k][j] != 0) return out;
            degenerate = true;
            continue;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            const Rational f = m[i][k] / piv;
            for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    if (degenerate) {
        out.verdict = Verdict::ExtendedDynkin;
        return out;
    }
    out.verdict = Verdict::Dynkin;
    for (const auto& t : candidates(n)) {
        if (auto map = find_isomorphism(q, t)) {
            out.type = t;
            out.relabeling = std::move(*map);
            return out;
        }
    }
    throw Error("positive definite Tits form but no ADE diagram matched");
}

RootData root_data(const Quiver& q) {
    if (!classify(q).is_dynkin()) throw NotDynkin("root data requested for a non-Dynkin quiver");
    // Every non-simple positive root of a simply-laced system is a positive
    // root plus a simple root, so closing the simple roots under
    // "add e_i while q stays 1" reaches all of them.
    const auto n = q.vertex_count();
    std::set<std::vector<long long>> roots;
    std::vector<std::vector<long long>> frontier;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<long long> e(n, 0);
        e[i] = 1;
        roots.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<std::vector<long long>> next;
        for (const auto& d : frontier)
            for (std::size_t i = 0; i < n; ++i) {
                auto e = d;
                if (++e[i] > kMaxRootCoefficient) continue;
                if (tits_form(q, e) == 1 && roots.insert(e).second) next.push_back(std::move(e));
            }
        frontier = std::move(next);
    }
    RootData rd;
    rd.positive_roots.assign(roots.begin(), roots.end());
    rd.coxeter_number = 2 * rd.positive_roots.size() / n;
    if (2 * rd.positive_roots.size() % n != 0) throw Error("root count not divisible by rank");
    return rd;
}

NakayamaData nakayama_matrix(const Quiver& q) {
    const auto cls = classify(q);
    if (!cls.is_dynkin()) throw NotDynkin("Nakayama permutation requested for a non-Dynkin quiver");
    const auto n = q.vertex_count();
    const auto nu_pos = canonical_nakayama(*cls.type);
    std::vector<std::size_t> vertex_at(n);
    for (std::size_t v = 0; v < n; ++v) vertex_at[cls.relabeling[v]] = v;
    NakayamaData out;
    out.permutation.resize(n);
    for (std::size_t v = 0; v < n; ++v) out.permutation[v] = vertex_at[nu_pos[cls.relabeling[v]]];
    out.matrix = IntMatrix::permutation(out.permutation);
    return out;
}

bool is_sincere(const Quiver& q, const WeightVector& v) {
    if (v.size() != q.vertex_count())
        throw SizeMismatch("weight vector has " + std::to_string(v.size()) + " entries, quiver has " +
                           std::to_string(q.vertex_count()) + " vertices");
    return v.is_sincere();
}

bool is_regular(const Quiver& q, const WeightVector& v, const RootData& roots) {
    if (!classify(q).is_dynkin()) throw NotDynkin("regularity is defined for Dynkin quivers");
    is_sincere(q, v);
    for (const auto& d : roots.positive_roots) {
        Rational pairing = 0;
        for (std::size_t i = 0; i < d.size(); ++i) pairing += v[i] * d[i];
        if (v.field().is_zero(pairing)) return false;
    }
    return true;
}

}  // namespace qhilb
