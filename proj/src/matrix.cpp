#include "qhilb/matrix.hpp"

#include "qhilb/errors.hpp"

namespace qhilb {

namespace {

void require_same_size(const IntMatrix& a, const IntMatrix& b) {
    if (a.size() != b.size())
        throw SizeMismatch("matrix sizes differ: " + std::to_string(a.size()) + " vs " +
                           std::to_string(b.size()));
}

}  // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : n_(rows.size()), a_(rows.size() * rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != n_) throw SizeMismatch("IntMatrix literal is not square");
        std::size_t j = 0;
        for (long long x : row) (*this)(i, j++) = x;
        ++i;
    }
}

IntMatrix IntMatrix::identity(std::size_t n) { return scalar(n, 1); }

IntMatrix IntMatrix::scalar(std::size_t n, const BigInt& c) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
    return m;
}

IntMatrix IntMatrix::permutation(const std::vector<std::size_t>& perm) {
    IntMatrix m(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) m(i, perm[i]) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

bool IntMatrix::is_identity() const { return *this == identity(n_); }

bool IntMatrix::is_nonnegative() const {
    for (const auto& x : a_)
        if (x < 0) return false;
    return true;
}

bool IntMatrix::as_permutation(std::vector<std::size_t>& perm) const {
    perm.assign(n_, n_);
    std::vector<bool> hit(n_, false);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            const auto& x = (*this)(i, j);
            if (x == 0) continue;
            if (x != 1 || perm[i] != n_ || hit[j]) return false;
            perm[i] = j;
            hit[j] = true;
        }
        if (perm[i] == n_) return false;
    }
    return true;
}

BigInt IntMatrix::entry_sum() const {
    BigInt s = 0;
    for (const auto& x : a_) s += x;
    return s;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& o) {
    require_same_size(*this, o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& o) {
    require_same_size(*this, o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

IntMatrix& IntMatrix::operator*=(const BigInt& c) {
    for (auto& x : a_) x *= c;
    return *this;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    require_same_size(a, b);
    const std::size_t n = a.size();
    IntMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const auto& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (b(k, j) != 0) c(i, j) += aik * b(k, j);
        }
    return c;
}

std::string IntMatrix::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < n_; ++i) {
        if (i) s += ",";
        s += "[";
        for (std::size_t j = 0; j < n_; ++j) {
            if (j) s += ",";
            s += (*this)(i, j).str();
        }
        s += "]";
    }
    return s + "]";
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) { return os << m.to_string(); }

}  // namespace qhilb
