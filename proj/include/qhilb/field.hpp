#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qhilb {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Coefficient field: the rationals or a prime field F_p (p < 2^31).
class Field {
public:
    static Field rationals() { return Field{0}; }
    static Field prime(std::uint64_t p);
    /// Accepts "q" or "fp:<p>".
    static Field parse(std::string_view spec);

    bool is_rational() const { return p_ == 0; }
    std::uint32_t characteristic() const { return p_; }

    /// Image of a rational number in F_p. Throws InvalidFieldElement when p
    /// divides the denominator.
    std::uint32_t reduce(const Rational& x) const;
    bool is_zero(const Rational& x) const;

    std::string name() const;
    std::string spec() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n);
std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

/// Vector v indexed by vertices, with entries in a concrete field.
class WeightVector {
public:
    WeightVector(Field field, std::vector<Rational> entries);
    /// Comma separated integers or fractions a/b.
    static WeightVector parse(std::string_view csv, Field field);

    const Field& field() const { return field_; }
    const std::vector<Rational>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }

    bool is_sincere() const;
    std::string to_string() const;

private:
    Field field_;
    std::vector<Rational> entries_;
};

}  // namespace qhilb
