#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "qhilb/field.hpp"

namespace qhilb {

/// Square matrix of arbitrary-precision integers, row-major.
///
/// Used both for dimension matrices [M]_{ij} = dim e_i M e_j (nonnegative)
/// and for Euler-characteristic coefficients (any sign).
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n) : n_(n), a_(n * n) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix zero(std::size_t n) { return IntMatrix(n); }
    static IntMatrix identity(std::size_t n);
    static IntMatrix scalar(std::size_t n, const BigInt& c);
    /// P = (delta_{perm[i], j}) for a 0-based permutation.
    static IntMatrix permutation(const std::vector<std::size_t>& perm);

    std::size_t size() const { return n_; }
    BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    bool is_zero() const;
    bool is_identity() const;
    bool is_nonnegative() const;
    /// Returns the 0-based permutation when this is a permutation matrix.
    bool as_permutation(std::vector<std::size_t>& perm) const;
    BigInt entry_sum() const;
    IntMatrix transpose() const;

    IntMatrix& operator+=(const IntMatrix& o);
    IntMatrix& operator-=(const IntMatrix& o);
    IntMatrix& operator*=(const BigInt& c);

    friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
    friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
    friend IntMatrix operator-(IntMatrix a) { return a *= BigInt(-1); }
    friend IntMatrix operator*(IntMatrix a, const BigInt& c) { return a *= c; }
    friend IntMatrix operator*(const BigInt& c, IntMatrix a) { return a *= c; }
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    /// "[[0,1],[1,0]]"
    std::string to_string() const;

private:
    std::size_t n_ = 0;
    std::vector<BigInt> a_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace qhilb
