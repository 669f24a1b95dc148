#include "qhilb/series.hpp"

#include <algorithm>
#include <optional>

#include "qhilb/errors.hpp"

namespace qhilb {

namespace {

void require_same_size(const MatrixPowerSeries& a, const MatrixPowerSeries& b) {
    if (a.size() != b.size())
        throw SizeMismatch("series matrix sizes differ: " + std::to_string(a.size()) + " vs " +
                           std::to_string(b.size()));
}

// Inverse of an integer matrix with determinant +-1, via Gauss-Jordan over Q.
std::optional<IntMatrix> unimodular_inverse(const IntMatrix& m) {
    const auto n = m.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
        a[i][n + i] = 1;
    }
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return std::nullopt;
        if (p != k) {
            std::swap(a[p], a[k]);
            det = -det;
        }
        const Rational piv = a[k][k];
        det *= piv;
        for (auto& x : a[k]) x /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            const Rational f = a[i][k];
            for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    if (det != 1 && det != -1) return std::nullopt;
    IntMatrix inv(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = boost::multiprecision::numerator(a[i][n + j]);
    return inv;
}

}  // namespace

MatrixPowerSeries::MatrixPowerSeries(std::size_t size, std::size_t order)
    : r_(size), c_(order + 1, IntMatrix::zero(size)) {}

MatrixPowerSeries::MatrixPowerSeries(std::vector<IntMatrix> coefficients)
    : r_(coefficients.empty() ? 0 : coefficients.front().size()), c_(std::move(coefficients)) {
    if (c_.empty()) throw SizeMismatch("series needs at least the constant coefficient");
    for (const auto& m : c_)
        if (m.size() != r_) throw SizeMismatch("series coefficients of different sizes");
}

MatrixPowerSeries MatrixPowerSeries::one(std::size_t size, std::size_t order) {
    MatrixPowerSeries s(size, order);
    s.c_[0] = IntMatrix::identity(size);
    return s;
}

MatrixPowerSeries MatrixPowerSeries::monomial(const IntMatrix& c, std::size_t degree,
                                              std::size_t order) {
    MatrixPowerSeries s(c.size(), order);
    if (degree <= order) s.c_[degree] = c;
    return s;
}

MatrixPowerSeries MatrixPowerSeries::scalar_polynomial(std::size_t size, std::size_t order,
                                                       const std::vector<long long>& coeffs) {
    MatrixPowerSeries s(size, order);
    for (std::size_t k = 0; k < coeffs.size() && k <= order; ++k)
        s.c_[k] = IntMatrix::scalar(size, coeffs[k]);
    return s;
}

MatrixPowerSeries MatrixPowerSeries::truncated(std::size_t order) const {
    MatrixPowerSeries s(r_, order);
    for (std::size_t n = 0; n <= std::min(order, this->order()); ++n) s.c_[n] = c_[n];
    return s;
}

MatrixPowerSeries MatrixPowerSeries::shifted(std::size_t k) const {
    MatrixPowerSeries s(r_, order());
    for (std::size_t n = k; n <= order(); ++n) s.c_[n] = c_[n - k];
    return s;
}

bool MatrixPowerSeries::is_zero() const { return vanishes_above(0) && c_[0].is_zero(); }

bool MatrixPowerSeries::vanishes_above(std::size_t degree) const {
    for (std::size_t n = degree + 1; n < c_.size(); ++n)
        if (!c_[n].is_zero()) return false;
    return true;
}

MatrixPowerSeries& MatrixPowerSeries::operator+=(const MatrixPowerSeries& o) {
    require_same_size(*this, o);
    if (o.order() < order()) c_.resize(o.order() + 1);
    for (std::size_t n = 0; n < c_.size(); ++n) c_[n] += o.c_[n];
    return *this;
}

MatrixPowerSeries& MatrixPowerSeries::operator-=(const MatrixPowerSeries& o) {
    require_same_size(*this, o);
    if (o.order() < order()) c_.resize(o.order() + 1);
    for (std::size_t n = 0; n < c_.size(); ++n) c_[n] -= o.c_[n];
    return *this;
}

MatrixPowerSeries operator*(const MatrixPowerSeries& a, const MatrixPowerSeries& b) {
    require_same_size(a, b);
    const auto order = std::min(a.order(), b.order());
    MatrixPowerSeries s(a.size(), order);
    for (std::size_t i = 0; i <= order; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= order; ++j)
            if (!b.c_[j].is_zero()) s.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return s;
}

MatrixPowerSeries operator*(const IntMatrix& m, const MatrixPowerSeries& a) {
    if (m.size() != a.size()) throw SizeMismatch("matrix and series sizes differ");
    MatrixPowerSeries s(a.size(), a.order());
    for (std::size_t n = 0; n <= a.order(); ++n) s.c_[n] = m * a.c_[n];
    return s;
}

MatrixPowerSeries invert(const MatrixPowerSeries& a) {
    auto inv0 = unimodular_inverse(a[0]);
    if (!inv0) throw NonInvertibleConstantTerm("constant coefficient is not invertible over Z");
    // b_0 = a_0^{-1},  b_n = -a_0^{-1} sum_{k=1}^{n} a_k b_{n-k}.
    MatrixPowerSeries b(a.size(), a.order());
    b[0] = *inv0;
    const IntMatrix minus_inv0 = -*inv0;
    for (std::size_t n = 1; n <= a.order(); ++n) {
        IntMatrix acc(a.size());
        for (std::size_t k = 1; k <= n; ++k)
            if (!a[k].is_zero()) acc += a[k] * b[n - k];
        b[n] = minus_inv0 * acc;
    }
    return b;
}

MatrixPowerSeries generator_series(const GeneratorSpec& spec, std::size_t order) {
    if (spec.empty()) throw SizeMismatch("empty generator spec");
    const auto r = spec.front().dimensions.size();
    MatrixPowerSeries s(r, order);
    for (const auto& g : spec) {
        if (g.adams < 1)
            throw AdamsDegreeNotPositive("generator in Adams degree " + std::to_string(g.adams));
        if (g.dimensions.size() != r) throw SizeMismatch("generator dimension matrices differ in size");
        if (static_cast<std::size_t>(g.adams) > order) continue;
        if (g.cohomological % 2 == 0)
            s[g.adams] += g.dimensions;
        else
            s[g.adams] -= g.dimensions;
    }
    return s;
}

MatrixPowerSeries tensor_algebra_series(const MatrixPowerSeries& h_m) {
    if (!h_m[0].is_zero())
        throw NonzeroConstantTerm("generator series must vanish in Adams degree 0");
    return invert(MatrixPowerSeries::one(h_m.size(), h_m.order()) - h_m);
}

}  // namespace qhilb
