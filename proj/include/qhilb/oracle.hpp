#pragma once

#include <cstddef>
#include <vector>

#include "qhilb/matrix.hpp"
#include "qhilb/presentation.hpp"

namespace qhilb {

inline constexpr std::size_t kDefaultMonomialCap = 200000;

struct OracleOptions {
    /// Maximum number of monomials in one Adams degree (all blocks together).
    std::size_t monomial_cap = kDefaultMonomialCap;
    /// Worker threads; 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// QH_MONOMIAL_CAP when set to a positive integer, else the default cap.
std::size_t monomial_cap_from_env();

/// Dimension matrices [A_n], n = 0..max_degree, of A = k[central] Q-bar / (R)
/// computed directly: degree n, block (i, j) has dimension
/// #monomials - rank(span of m * r * m').
/// Throws InhomogeneousRelation and DegreeOverflow.
std::vector<IntMatrix> graded_quotient_dims(const GradedPresentation& pres, std::size_t max_degree,
                                            const OracleOptions& options = {});

/// Recovers P from h_Pi * (1 - Ct + t^2) = 1 + P t^h. Requires coefficients
/// through degree >= h; throws NotAPermutationResidue when the product has any
/// other shape.
IntMatrix infer_nakayama(const std::vector<IntMatrix>& coeffs, const IntMatrix& c, std::size_t h);

}  // namespace qhilb
