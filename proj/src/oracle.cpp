#include "qhilb/oracle.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>
#include <boost/multiprecision/integer.hpp>

#include "qhilb/elimination.hpp"
#include "qhilb/errors.hpp"

namespace qhilb {

namespace {

using Key = std::vector<std::uint32_t>;

struct KeyHash {
    std::size_t operator()(const Key& k) const { return boost::hash_range(k.begin(), k.end()); }
};

/// All paths of length 0..max_len in the double quiver, grouped by endpoints.
/// Each group is a flat array with stride = length.
class PathTable {
public:
    PathTable(const DoubleQuiver& q, std::size_t max_len) : r_(q.vertex_count) {
        table_.resize(max_len + 1, std::vector<std::vector<std::uint32_t>>(r_ * r_));
        counts0_.assign(r_ * r_, 0);
        for (std::size_t i = 0; i < r_; ++i) counts0_[i * r_ + i] = 1;
        for (std::size_t len = 1; len <= max_len; ++len)
            for (std::size_t i = 0; i < r_; ++i)
                for (std::size_t k = 0; k < r_; ++k) {
                    const auto n_prev = count(len - 1, i, k);
                    const auto& prev = table_[len - 1][i * r_ + k];
                    for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
                        const auto& a = q.arrows[ai];
                        if (a.tail != k) continue;
                        auto& dst = table_[len][i * r_ + a.head];
                        for (std::size_t p = 0; p < n_prev; ++p) {
                            dst.insert(dst.end(), prev.begin() + p * (len - 1),
                                       prev.begin() + (p + 1) * (len - 1));
                            dst.push_back(static_cast<std::uint32_t>(ai));
                        }
                    }
                }
    }

    std::size_t count(std::size_t len, std::size_t i, std::size_t j) const {
        if (len == 0) return counts0_[i * r_ + j];
        return table_[len][i * r_ + j].size() / len;
    }
    const std::uint32_t* path(std::size_t len, std::size_t i, std::size_t j, std::size_t k) const {
        return table_[len][i * r_ + j].data() + k * len;
    }

private:
    std::size_t r_;
    std::vector<std::vector<std::vector<std::uint32_t>>> table_;
    std::vector<std::size_t> counts0_;
};

/// Exponent vectors of the central generators, grouped by weighted degree.
std::vector<std::vector<std::vector<unsigned>>> central_monomials(
    const std::vector<CentralGenerator>& gens, std::size_t max_degree) {
    std::vector<std::vector<std::vector<unsigned>>> by_deg(max_degree + 1);
    std::vector<unsigned> e(gens.size(), 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t g, std::size_t deg) {
        if (g == gens.size()) {
            by_deg[deg].push_back(e);
            return;
        }
        const auto w = static_cast<std::size_t>(gens[g].adams);
        for (unsigned k = 0; deg + k * w <= max_degree; ++k) {
            e[g] = k;
            rec(g + 1, deg + k * w);
        }
        e[g] = 0;
    };
    rec(0, 0);
    return by_deg;
}

struct Relation {
    std::size_t degree;
    std::size_t source;
    std::size_t target;
    std::vector<NcTerm> terms;
};

std::vector<Relation> checked_relations(const GradedPresentation& pres) {
    for (const auto& g : pres.central)
        if (g.adams < 1) throw InhomogeneousRelation("central generator " + g.name + " has Adams degree < 1");
    std::vector<Relation> out;
    for (const auto& rel : pres.relations) {
        if (rel.is_zero()) continue;
        Relation r{0, rel.terms().front().source, rel.terms().front().target, rel.terms()};
        bool first = true;
        for (const auto& t : rel.terms()) {
            if (t.central.size() != pres.central.size())
                throw InputError("relation term has the wrong number of central exponents");
            std::size_t deg = t.path.size();
            for (std::size_t g = 0; g < t.central.size(); ++g)
                deg += t.central[g] * static_cast<std::size_t>(pres.central[g].adams);
            if (first) r.degree = deg;
            first = false;
            if (deg != r.degree) throw InhomogeneousRelation("relation mixes Adams degrees");
            if (t.source != r.source || t.target != r.target)
                throw InhomogeneousRelation("relation terms lie in different (source, target) blocks");
        }
        out.push_back(std::move(r));
    }
    return out;
}

void check_monomial_counts(const GradedPresentation& pres,
                           const std::vector<std::vector<std::vector<unsigned>>>& central,
                           std::size_t max_degree, std::size_t cap) {
    const auto& c = pres.quiver.adjacency;
    const auto r = pres.quiver.vertex_count;
    // Path counts of length L are the entry sums of C^L.
    std::vector<BigInt> paths_of_len;
    IntMatrix power = IntMatrix::identity(r);
    for (std::size_t len = 0; len <= max_degree; ++len) {
        paths_of_len.push_back(power.entry_sum());
        power = power * c;
    }
    for (std::size_t n = 0; n <= max_degree; ++n) {
        BigInt total = 0;
        for (std::size_t w = 0; w <= n; ++w) total += paths_of_len[n - w] * central[w].size();
        if (total > cap)
            throw DegreeOverflow("degree " + std::to_string(n) + " has " + total.str() +
                                 " monomials, above the cap of " + std::to_string(cap));
    }
}

struct ModPRing {
    using Elem = std::uint32_t;
    using Echelon = ModPEchelon;
    std::uint32_t p;

    Echelon echelon(std::size_t ncols) const { return Echelon(ncols, p); }
    Elem add(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t{a} + b) % p); }
    static bool is_zero(Elem a) { return a == 0; }
};

struct IntegerRing {
    using Elem = BigInt;
    using Echelon = FractionFreeEchelon;

    static Echelon echelon(std::size_t ncols) { return Echelon(ncols); }
    static Elem add(const Elem& a, const Elem& b) { return a + b; }
    static bool is_zero(const Elem& a) { return a == 0; }
};

template <class Ring>
struct RingRelation {
    const Relation* rel;
    std::vector<typename Ring::Elem> coeffs;
};

std::vector<RingRelation<ModPRing>> to_ring(const std::vector<Relation>& rels, const Field& f,
                                            const ModPRing&) {
    std::vector<RingRelation<ModPRing>> out;
    for (const auto& r : rels) {
        RingRelation<ModPRing> rr{&r, {}};
        for (const auto& t : r.terms) rr.coeffs.push_back(f.reduce(t.coeff));
        out.push_back(std::move(rr));
    }
    return out;
}

// Over Q each relation is scaled by the lcm of its denominators.
std::vector<RingRelation<IntegerRing>> to_ring(const std::vector<Relation>& rels, const Field&,
                                               const IntegerRing&) {
    std::vector<RingRelation<IntegerRing>> out;
    for (const auto& r : rels) {
        BigInt l = 1;
        for (const auto& t : r.terms) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(t.coeff));
        RingRelation<IntegerRing> rr{&r, {}};
        for (const auto& t : r.terms) {
            const Rational scaled = t.coeff * l;
            rr.coeffs.push_back(boost::multiprecision::numerator(scaled));
        }
        out.push_back(std::move(rr));
    }
    return out;
}

template <class Ring>
class BlockSolver {
public:
    BlockSolver(const GradedPresentation& pres, const Ring& ring,
                const std::vector<RingRelation<Ring>>& rels, const PathTable& paths,
                const std::vector<std::vector<std::vector<unsigned>>>& central)
        : pres_(pres), ring_(ring), rels_(rels), paths_(paths), central_(central) {}

    /// Dimension of the quotient in degree n, block (i, j).
    std::size_t dimension(std::size_t n, std::size_t i, std::size_t j) const {
        const auto ng = pres_.central.size();

        std::vector<Key> keys;
        for (std::size_t w = 0; w <= n; ++w) {
            const auto len = n - w;
            const auto count = paths_.count(len, i, j);
            for (const auto& c : central_[w])
                for (std::size_t k = 0; k < count; ++k) {
                    Key key(c.begin(), c.end());
                    const auto* p = paths_.path(len, i, j, k);
                    key.insert(key.end(), p, p + len);
                    keys.push_back(std::move(key));
                }
        }
        if (keys.empty()) return 0;
        std::sort(keys.begin(), keys.end());
        std::unordered_map<Key, std::uint32_t, KeyHash> index;
        index.reserve(keys.size());
        for (std::size_t k = 0; k < keys.size(); ++k) index.emplace(keys[k], static_cast<std::uint32_t>(k));

        auto echelon = ring_.echelon(keys.size());
        SparseRow<typename Ring::Elem> row;
        Key key;
        for (const auto& rr : rels_) {
            const auto& rel = *rr.rel;
            if (rel.degree > n) continue;
            const auto rest = n - rel.degree;
            for (std::size_t w = 0; w <= rest; ++w) {
                const auto len = rest - w;
                for (const auto& c : central_[w])
                    for (std::size_t a = 0; a <= len; ++a) {
                        const auto b = len - a;
                        const auto n_left = paths_.count(a, i, rel.source);
                        const auto n_right = paths_.count(b, rel.target, j);
                        for (std::size_t l = 0; l < n_left; ++l) {
                            const auto* left = paths_.path(a, i, rel.source, l);
                            for (std::size_t m = 0; m < n_right; ++m) {
                                const auto* right = paths_.path(b, rel.target, j, m);
                                row.clear();
                                for (std::size_t t = 0; t < rel.terms.size(); ++t) {
                                    const auto& term = rel.terms[t];
                                    key.clear();
                                    for (std::size_t g = 0; g < ng; ++g) key.push_back(c[g] + term.central[g]);
                                    key.insert(key.end(), left, left + a);
                                    for (auto x : term.path) key.push_back(static_cast<std::uint32_t>(x));
                                    key.insert(key.end(), right, right + b);
                                    row.push_back({index.at(key), rr.coeffs[t]});
                                }
                                canonicalize(
                                    row, [this](const auto& x, const auto& y) { return ring_.add(x, y); },
                                    [](const auto& x) { return Ring::is_zero(x); });
                                if (!row.empty()) echelon.insert(row);
                            }
                        }
                    }
            }
        }
        return keys.size() - echelon.rank();
    }

private:
    const GradedPresentation& pres_;
    const Ring& ring_;
    const std::vector<RingRelation<Ring>>& rels_;
    const PathTable& paths_;
    const std::vector<std::vector<std::vector<unsigned>>>& central_;
};

template <class Ring>
std::vector<IntMatrix> solve_all(const GradedPresentation& pres, const Ring& ring,
                                 const std::vector<Relation>& rels, std::size_t max_degree,
                                 const std::vector<std::vector<std::vector<unsigned>>>& central,
                                 unsigned threads) {
    const auto r = pres.quiver.vertex_count;
    const PathTable paths(pres.quiver, max_degree);
    const auto ring_rels = to_ring(rels, pres.field, ring);
    const BlockSolver<Ring> solver(pres, ring, ring_rels, paths, central);

    struct Task {
        std::size_t n, i, j;
    };
    std::vector<Task> tasks;
    // Largest degrees first so the expensive blocks start early.
    for (std::size_t n = max_degree + 1; n-- > 0;)
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) tasks.push_back({n, i, j});

    std::vector<std::size_t> dims(tasks.size(), 0);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const auto k = next.fetch_add(1);
            if (k >= tasks.size()) return;
            try {
                dims[k] = solver.dimension(tasks[k].n, tasks[k].i, tasks[k].j);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(tasks.size()));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<IntMatrix> out(max_degree + 1, IntMatrix::zero(r));
    for (std::size_t k = 0; k < tasks.size(); ++k) out[tasks[k].n](tasks[k].i, tasks[k].j) = dims[k];
    return out;
}

}  // namespace

std::size_t monomial_cap_from_env() {
    if (const char* s = std::getenv("QH_MONOMIAL_CAP")) {
        char* end = nullptr;
        const auto v = std::strtoull(s, &end, 10);
        if (end != s && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultMonomialCap;
}

std::vector<IntMatrix> graded_quotient_dims(const GradedPresentation& pres, std::size_t max_degree,
                                            const OracleOptions& options) {
    const auto rels = checked_relations(pres);
    const auto central = central_monomials(pres.central, max_degree);
    check_monomial_counts(pres, central, max_degree, options.monomial_cap);
    if (pres.field.is_rational())
        return solve_all(pres, IntegerRing{}, rels, max_degree, central, options.threads);
    return solve_all(pres, ModPRing{pres.field.characteristic()}, rels, max_degree, central,
                     options.threads);
}

IntMatrix infer_nakayama(const std::vector<IntMatrix>& coeffs, const IntMatrix& c, std::size_t h) {
    if (coeffs.size() < h + 1)
        throw InputError("need coefficients through degree " + std::to_string(h) + " to infer P");
    IntMatrix p;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        IntMatrix prod = coeffs[k];
        if (k >= 1) prod -= c * coeffs[k - 1];
        if (k >= 2) prod += coeffs[k - 2];
        if (k == 0) {
            if (!prod.is_identity())
                throw NotAPermutationResidue("degree 0 residue is not the identity");
        } else if (k == h) {
            std::vector<std::size_t> perm;
            if (!prod.as_permutation(perm))
                throw NotAPermutationResidue("degree " + std::to_string(h) +
                                             " residue is not a permutation matrix: " + prod.to_string());
            p = std::move(prod);
        } else if (!prod.is_zero()) {
            throw NotAPermutationResidue("nonzero residue in degree " + std::to_string(k) + ": " +
                                         prod.to_string());
        }
    }
    return p;
}

}  // namespace qhilb
