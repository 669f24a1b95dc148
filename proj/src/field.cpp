#include "qhilb/field.hpp"

#include <charconv>
#include <sstream>

#include "qhilb/errors.hpp"

namespace qhilb {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a % p;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = t - q * new_t;
        std::swap(t, new_t);
        r = r - q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw InvalidFieldElement("element not invertible mod " + std::to_string(p));
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

Field Field::prime(std::uint64_t p) {
    if (p >= (1ULL << 31)) throw InputError("prime must be below 2^31: " + std::to_string(p));
    if (!is_prime(p)) throw InputError("not a prime: " + std::to_string(p));
    return Field{static_cast<std::uint32_t>(p)};
}

Field Field::parse(std::string_view spec) {
    if (spec == "q" || spec == "Q") return rationals();
    if (spec.substr(0, 3) == "fp:") {
        auto digits = spec.substr(3);
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
            throw InputError("bad field spec '" + std::string(spec) + "'");
        return prime(p);
    }
    throw InputError("bad field spec '" + std::string(spec) + "' (expected q or fp:<p>)");
}

std::uint32_t Field::reduce(const Rational& x) const {
    const BigInt pp = p_;
    BigInt num = boost::multiprecision::numerator(x) % pp;
    BigInt den = boost::multiprecision::denominator(x) % pp;
    if (num < 0) num += pp;
    if (den == 0)
        throw InvalidFieldElement("denominator of " + x.str() + " vanishes in " + name());
    auto n = num.convert_to<std::uint64_t>();
    auto d = den.convert_to<std::uint32_t>();
    return static_cast<std::uint32_t>(n * inverse_mod(d, p_) % p_);
}

bool Field::is_zero(const Rational& x) const {
    if (is_rational()) return x == 0;
    return reduce(x) == 0;
}

std::string Field::name() const {
    return is_rational() ? "Q" : "F_" + std::to_string(p_);
}

std::string Field::spec() const {
    return is_rational() ? "q" : "fp:" + std::to_string(p_);
}

WeightVector::WeightVector(Field field, std::vector<Rational> entries)
    : field_(field), entries_(std::move(entries)) {
    // Validates denominators against the characteristic.
    for (const auto& e : entries_) field_.is_zero(e);
}

WeightVector WeightVector::parse(std::string_view csv, Field field) {
    std::vector<Rational> out;
    std::string item;
    std::istringstream in{std::string(csv)};
    while (std::getline(in, item, ',')) {
        auto strip = [](std::string s) {
            auto b = s.find_first_not_of(" \t");
            auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        item = strip(item);
        if (item.empty()) throw InputError("empty entry in weight vector '" + std::string(csv) + "'");
        try {
            auto slash = item.find('/');
            if (slash == std::string::npos) {
                out.emplace_back(BigInt(item));
            } else {
                BigInt den(item.substr(slash + 1));
                if (den == 0) throw InputError("zero denominator in weight vector");
                out.emplace_back(BigInt(item.substr(0, slash)), den);
            }
        } catch (const std::runtime_error& e) {
            if (dynamic_cast<const InputError*>(&e)) throw;
            throw InputError("bad weight entry '" + item + "'");
        }
    }
    if (out.empty()) throw InputError("empty weight vector");
    return WeightVector(field, std::move(out));
}

bool WeightVector::is_sincere() const {
    for (const auto& e : entries_)
        if (field_.is_zero(e)) return false;
    return true;
}

std::string WeightVector::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) s += ",";
        s += entries_[i].str();
    }
    return s + ") over " + field_.name();
}

}  // namespace qhilb
