#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qhilb/field.hpp"
#include "qhilb/quiver.hpp"

namespace qhilb {

/// coefficient * (central monomial) * path. Paths compose left to right: the
/// path (a, b) traverses a and then b, and lives in block (tail(a), head(b)).
/// An empty path is the idempotent e_source.
struct NcTerm {
    Rational coeff;
    std::vector<std::size_t> path;     // indices into DoubleQuiver::arrows
    std::vector<unsigned> central;     // exponent per central generator
    std::size_t source = 0;
    std::size_t target = 0;
};

/// Element of k[central] Q-bar, as a list of terms with like terms combined.
class NcElement {
public:
    NcElement() = default;

    /// The path given by arrow indices; throws InputError when not composable.
    static NcElement path(const DoubleQuiver& q, std::vector<std::size_t> arrows,
                          std::size_t central_count, Rational coeff = 1);
    /// coeff * (central monomial) * e_vertex.
    static NcElement vertex(std::size_t vertex, std::vector<unsigned> central, Rational coeff = 1);

    const std::vector<NcTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// e_i * this * e_j.
    NcElement block(std::size_t i, std::size_t j) const;

    NcElement& operator+=(const NcElement& o);
    NcElement& operator-=(const NcElement& o);
    NcElement& operator*=(const Rational& c);
    friend NcElement operator+(NcElement a, const NcElement& b) { return a += b; }
    friend NcElement operator-(NcElement a, const NcElement& b) { return a -= b; }
    friend NcElement operator*(const Rational& c, NcElement a) { return a *= c; }
    /// Concatenation product; non-composable pairs multiply to zero.
    friend NcElement operator*(const NcElement& a, const NcElement& b);

    std::string to_string(const DoubleQuiver& q, const std::vector<std::string>& central_names) const;

private:
    void normalize();
    std::vector<NcTerm> terms_;
};

struct CentralGenerator {
    std::string name;
    int adams = 1;
};

/// Double quiver, central generators, homogeneous relations and a field: the
/// algebra k[central] Q-bar / (relations).
struct GradedPresentation {
    DoubleQuiver quiver;
    std::vector<CentralGenerator> central;
    std::vector<NcElement> relations;
    Field field = Field::rationals();

    std::string describe() const;
};

enum class PresentationKind {
    PreprojectivePerVertex,  // rho_i for each vertex
    QhaZ,                    // rho_i - v_i z e_i, with central z of Adams degree 2
    QhaEta,                  // a * varrho - varrho * a for each arrow a of Q-bar
};

/// rho_i = sum_{tail(a) = i} a a* - sum_{head(a) = i} a* a.
NcElement mesh_relation(const DoubleQuiver& q, std::size_t vertex, std::size_t central_count);

/// QhaZ and QhaEta need v (MissingWeight) with v.field() == field; QhaEta
/// needs v sincere (NotSincere).
GradedPresentation build_presentation(PresentationKind kind, const Quiver& q, Field field,
                                      const std::optional<WeightVector>& v = std::nullopt);

}  // namespace qhilb
