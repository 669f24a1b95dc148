#include <doctest.h>

#include "qhilb/errors.hpp"
#include "qhilb/formulas.hpp"
#include "support.hpp"

using namespace qhilb;

namespace {

BigInt total_dimension(const MatrixPowerSeries& s) {
    BigInt total = 0;
    for (const auto& m : s.coefficients()) total += m.entry_sum();
    return total;
}

MatrixPowerSeries one_minus_t_power(std::size_t r, std::size_t k, std::size_t order) {
    std::vector<long long> coeffs(k + 1, 0);
    coeffs[0] = 1;
    coeffs[k] = -1;
    return MatrixPowerSeries::scalar_polynomial(r, order, coeffs);
}

}  // namespace

TEST_CASE("algebra kind names") {
    for (auto k : {AlgebraKind::PathAlgebra, AlgebraKind::Preprojective, AlgebraKind::DerivedPreprojective,
                   AlgebraKind::Qha, AlgebraKind::DerivedQha})
        CHECK(parse_algebra_kind(to_string(k)) == k);
    CHECK_THROWS_AS(parse_algebra_kind("pi"), InputError);
}

TEST_CASE("path algebra series") {
    const auto a2 = path_algebra_series(test::data_quiver("a2"), 6);
    CHECK(a2[0].is_identity());
    CHECK(a2[1] == IntMatrix{{0, 1}, {0, 0}});
    CHECK(a2.vanishes_above(1));

    const auto a3 = path_algebra_series(test::data_quiver("a3"), 6);
    CHECK(a3[2] == IntMatrix{{0, 0, 1}, {0, 0, 0}, {0, 0, 0}});
    CHECK(a3.vanishes_above(2));

    CHECK(path_algebra_series(test::data_quiver("kronecker"), 4)[1] == IntMatrix{{0, 2}, {0, 0}});
}

TEST_CASE("preprojective series examples") {
    const auto a2 = preprojective_series(test::data_quiver("a2"), 10);
    CHECK(a2[0].is_identity());
    CHECK(a2[1] == IntMatrix{{0, 1}, {1, 0}});
    CHECK(a2.vanishes_above(1));
    CHECK(total_dimension(a2) == 4);

    CHECK(preprojective_series(test::data_quiver("a1"), 8) == MatrixPowerSeries::one(1, 8));
    CHECK(preprojective_series(test::data_quiver("kronecker"), 4)[2] == IntMatrix{{3, 0}, {0, 3}});
    CHECK(total_dimension(preprojective_series(test::data_quiver("a3"), 10)) == 10);
}

TEST_CASE("Dynkin preprojective series is a polynomial of degree h-2 with top coefficient P") {
    for (const auto& t : standard_dynkin_types()) {
        CAPTURE(t.name());
        const auto q = canonical_quiver(t);
        const auto h = root_data(q).coxeter_number;
        const auto s = preprojective_series(q, 2 * h + 2);
        for (const auto& m : s.coefficients()) CHECK(m.is_nonnegative());
        CHECK(s.vanishes_above(h - 2));
        CHECK(s[h - 2] == nakayama_matrix(q).matrix);
        // invert(1 - Ct + t^2) vanishes in degree h-1 and equals -P in degree h.
        const auto inv = invert(mesh_polynomial(q.adjacency(), h + 1));
        CHECK(inv[h - 1].is_zero());
        CHECK(inv[h] == -nakayama_matrix(q).matrix);
    }
}

TEST_CASE("numerators commute with the inverted denominators") {
    for (const auto& t : standard_dynkin_types()) {
        const auto q = canonical_quiver(t);
        const auto h = root_data(q).coxeter_number;
        const auto order = 2 * h;
        const auto r = q.vertex_count();
        const auto p = nakayama_matrix(q).matrix;
        const auto inv = invert(mesh_polynomial(q.adjacency(), order));
        const auto num = MatrixPowerSeries::one(r, order) + MatrixPowerSeries::monomial(p, h, order);
        CHECK(num * inv == inv * num);
        const auto z = one_minus_t_power(r, 2, order);
        CHECK(z * inv == inv * z);
    }
}

TEST_CASE("derived preprojective series") {
    const auto kr = test::data_quiver("kronecker");
    CHECK(derived_preprojective_series(kr, 10) == preprojective_series(kr, 10));

    const auto a2 = derived_preprojective_series(test::data_quiver("a2"), 11);
    const IntMatrix c{{0, 1}, {1, 0}};
    const std::vector<IntMatrix> period{IntMatrix::identity(2), c, IntMatrix(2), -c, -IntMatrix::identity(2),
                                        IntMatrix(2)};
    for (std::size_t n = 0; n <= 11; ++n) CHECK(a2[n] == period[n % 6]);

    for (const auto* name : {"a1", "d4", "triangle", "kronecker3"})
        CHECK(derived_preprojective_series(test::data_quiver(name), 3)[0].is_identity());
}

TEST_CASE("quiver Heisenberg series examples") {
    const auto q = Field::rationals();
    const auto kr = test::data_quiver("kronecker");
    CHECK(qha_series(kr, test::weights(q, {1, 1}), 6)[2] == IntMatrix{{4, 0}, {0, 4}});
    CHECK(qha_series(kr, std::nullopt, 6) == qha_series(kr, test::weights(q, {1, 0}), 6));

    const auto a2 = test::data_quiver("a2");
    const auto s = qha_series(a2, test::weights(q, {1, 1}), 12);
    CHECK(s[0].is_identity());
    CHECK(s[1] == IntMatrix{{0, 1}, {1, 0}});
    CHECK(s[2].is_identity());
    CHECK(s.vanishes_above(2));
    CHECK(total_dimension(s) == 6);

    CHECK_THROWS_AS(qha_series(a2, test::weights(q, {1, 0}), 6), NotRegular);
    CHECK_THROWS_AS(qha_series(a2, test::weights(Field::prime(2), {1, 1}), 6), NotRegular);
    CHECK_THROWS_AS(qha_series(a2, std::nullopt, 6), MissingWeight);
    CHECK_THROWS_AS(qha_series(a2, test::weights(q, {1, 1, 1}), 6), SizeMismatch);

    // v = 0: the relations are the mesh relations and z is free, so the series is h_Pi / (1 - t^2).
    const auto zero = qha_series(kr, test::weights(q, {0, 0}), 10);
    CHECK(zero == preprojective_series(kr, 10) * invert(one_minus_t_power(2, 2, 10)));
}

TEST_CASE("Dynkin QHA series is finite: nonnegative, zero above 2h-4") {
    for (const auto& t : standard_dynkin_types()) {
        CAPTURE(t.name());
        const auto q = canonical_quiver(t);
        const auto h = root_data(q).coxeter_number;
        const auto s = qha_series(q, test::weights(Field::rationals(), std::vector<long long>(t.rank, 1)),
                                  2 * h + 2);
        for (const auto& m : s.coefficients()) CHECK(m.is_nonnegative());
        if (h >= 2) CHECK(s.vanishes_above(2 * h - 4));
    }
}

TEST_CASE("derived QHA series") {
    const auto q = Field::rationals();
    const auto kr = test::data_quiver("kronecker");
    CHECK(derived_qha_series(kr, 10) == qha_series(kr, test::weights(q, {3, 5}), 10));

    // h_{derived} = (1 - t^{2h})^{-1} h_Lambda for A2 (h = 3).
    const auto a2 = test::data_quiver("a2");
    const auto lambda = qha_series(a2, test::weights(q, {1, 1}), 14);
    const auto derived = derived_qha_series(a2, 14);
    CHECK(derived == lambda + derived.shifted(6));

    for (const auto* name : {"a1", "a2", "a3", "d4", "kronecker", "triangle", "kronecker3"}) {
        const auto qv = test::data_quiver(name);
        const auto r = qv.vertex_count();
        const auto product = mesh_polynomial(qv.adjacency(), 10) * one_minus_t_power(r, 2, 10);
        CHECK(derived_qha_series(qv, 10) == invert(product));
    }
}

TEST_CASE("exact sequence residual") {
    const auto q = Field::rationals();
    for (const auto* name : {"a2", "a3", "d4"}) {
        CAPTURE(name);
        const auto qv = test::data_quiver(name);
        const auto h = root_data(qv).coxeter_number;
        const auto p = nakayama_matrix(qv).matrix;
        const auto pi = preprojective_series(qv, 2 * h);
        const auto lambda =
            qha_series(qv, test::weights(q, std::vector<long long>(qv.vertex_count(), 1)), 2 * h);
        CHECK(exact_sequence_residual(pi, lambda, p, h).is_zero());
        // Rearranged: (1 - t^2) h_Lambda = (1 - P t^h) h_Pi.
        const auto r = qv.vertex_count();
        const auto lhs = one_minus_t_power(r, 2, 2 * h) * lambda;
        const auto rhs = pi - (p * pi).shifted(h);
        CHECK(lhs == rhs);
    }

    const auto a2 = test::data_quiver("a2");
    const auto pi = preprojective_series(a2, 6);
    const auto lambda = qha_series(a2, test::weights(q, {1, 1}), 6);
    const auto wrong = exact_sequence_residual(pi, lambda, IntMatrix::identity(2), 3);
    CHECK_FALSE(wrong[3].is_zero());
    for (std::size_t n = 0; n < 3; ++n) CHECK(wrong[n].is_zero());

    CHECK_THROWS_AS(exact_sequence_residual(pi, MatrixPowerSeries::one(3, 6), IntMatrix::identity(2), 3),
                    SizeMismatch);
}

TEST_CASE("default truncation") {
    CHECK(default_truncation(test::data_quiver("a2")) == 12);
    CHECK(default_truncation(canonical_quiver({DynkinFamily::E, 8})) == 60);
    CHECK(default_truncation(test::data_quiver("kronecker3")) == 12);
}
