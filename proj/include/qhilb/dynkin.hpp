#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qhilb/field.hpp"
#include "qhilb/matrix.hpp"
#include "qhilb/quiver.hpp"

namespace qhilb {

enum class DynkinFamily { A, D, E };

struct DynkinType {
    DynkinFamily family = DynkinFamily::A;
    std::size_t rank = 1;

    std::string name() const;
    friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

/// A_1..A_8, D_4..D_8, E_6..E_8.
std::vector<DynkinType> standard_dynkin_types();

/// The stored diagram for a type, oriented from lower to higher position.
/// Positions: A_n is the chain 1..n; D_n is the chain 1..n-2 with n-1 and n
/// attached to n-2; E_n is the chain 1..n-1 with n attached to 3.
Quiver canonical_quiver(const DynkinType& type);

enum class Verdict { Dynkin, ExtendedDynkin, Wild };

struct QuiverClass {
    Verdict verdict = Verdict::Wild;
    std::optional<DynkinType> type;
    /// vertex -> 0-based position in the canonical diagram (Dynkin only).
    std::vector<std::size_t> relabeling;

    bool is_dynkin() const { return verdict == Verdict::Dynkin; }
    std::string to_string() const;
};

/// q(d) = sum d_i^2 - sum over arrows d_tail * d_head.
long long tits_form(const Quiver& q, std::span<const long long> d);

/// Dynkin iff the Tits form is positive definite, extended Dynkin iff it is
/// positive semidefinite with a nontrivial radical, wild otherwise.
QuiverClass classify(const Quiver& q);

struct RootData {
    std::vector<std::vector<long long>> positive_roots;  // sorted
    std::size_t coxeter_number = 0;
};

/// Positive roots {d >= 0, d != 0 : q(d) = 1} and h = 2|roots|/r.
/// Throws NotDynkin.
RootData root_data(const Quiver& q);

struct NakayamaData {
    /// 0-based vertex permutation nu.
    std::vector<std::size_t> permutation;
    /// P = (delta_{nu(i), j}).
    IntMatrix matrix;
};

/// Nakayama permutation of the preprojective algebra. Throws NotDynkin.
NakayamaData nakayama_matrix(const Quiver& q);

/// Throws SizeMismatch when v has the wrong length.
bool is_sincere(const Quiver& q, const WeightVector& v);
/// True iff <v, d> != 0 in v's field for every positive root d.
bool is_regular(const Quiver& q, const WeightVector& v, const RootData& roots);

}  // namespace qhilb
