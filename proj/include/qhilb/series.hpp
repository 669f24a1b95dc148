#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qhilb/matrix.hpp"

namespace qhilb {

/// Truncated power series sum_{n=0}^{N} a_n t^n with r x r integer matrix
/// coefficients. Binary operations truncate to the smaller order.
class MatrixPowerSeries {
public:
    MatrixPowerSeries(std::size_t size, std::size_t order);
    explicit MatrixPowerSeries(std::vector<IntMatrix> coefficients);

    static MatrixPowerSeries zero(std::size_t size, std::size_t order) { return {size, order}; }
    static MatrixPowerSeries one(std::size_t size, std::size_t order);
    /// c * t^degree (zero when degree > order).
    static MatrixPowerSeries monomial(const IntMatrix& c, std::size_t degree, std::size_t order);
    /// Scalar polynomial sum_k coeffs[k] t^k embedded as coeffs[k] * I.
    static MatrixPowerSeries scalar_polynomial(std::size_t size, std::size_t order,
                                               const std::vector<long long>& coeffs);

    std::size_t size() const { return r_; }
    /// Highest degree kept.
    std::size_t order() const { return c_.size() - 1; }
    const IntMatrix& operator[](std::size_t n) const { return c_.at(n); }
    IntMatrix& operator[](std::size_t n) { return c_.at(n); }
    const std::vector<IntMatrix>& coefficients() const { return c_; }

    MatrixPowerSeries truncated(std::size_t order) const;
    /// Multiplication by t^k, keeping the same order.
    MatrixPowerSeries shifted(std::size_t k) const;
    /// Every coefficient is zero.
    bool is_zero() const;
    /// Coefficients in degrees > `degree` are zero.
    bool vanishes_above(std::size_t degree) const;

    MatrixPowerSeries& operator+=(const MatrixPowerSeries& o);
    MatrixPowerSeries& operator-=(const MatrixPowerSeries& o);

    friend MatrixPowerSeries operator+(MatrixPowerSeries a, const MatrixPowerSeries& b) {
        return a += b;
    }
    friend MatrixPowerSeries operator-(MatrixPowerSeries a, const MatrixPowerSeries& b) {
        return a -= b;
    }
    friend MatrixPowerSeries operator*(const MatrixPowerSeries& a, const MatrixPowerSeries& b);
    /// Left multiplication of every coefficient by a constant matrix.
    friend MatrixPowerSeries operator*(const IntMatrix& m, const MatrixPowerSeries& a);
    friend bool operator==(const MatrixPowerSeries&, const MatrixPowerSeries&) = default;

private:
    std::size_t r_;
    std::vector<IntMatrix> c_;
};

/// Two-sided inverse up to truncation. The constant term must be invertible
/// over the integers; otherwise throws NonInvertibleConstantTerm.
MatrixPowerSeries invert(const MatrixPowerSeries& a);

/// One summand of a graded bimodule of generators: dimension matrix placed in
/// cohomological degree `cohomological` and Adams degree `adams`.
struct GeneratorSummand {
    IntMatrix dimensions;
    int cohomological = 0;
    int adams = 1;
};

using GeneratorSpec = std::vector<GeneratorSummand>;

/// sum (-1)^coh [M] t^adams. Throws AdamsDegreeNotPositive.
MatrixPowerSeries generator_series(const GeneratorSpec& spec, std::size_t order);

/// 1 / (1 - h_M) for h_M with zero constant term; throws NonzeroConstantTerm.
MatrixPowerSeries tensor_algebra_series(const MatrixPowerSeries& h_m);

}  // namespace qhilb
