#include "qhilb/formulas.hpp"

#include <algorithm>

#include "qhilb/errors.hpp"

namespace qhilb {

AlgebraKind parse_algebra_kind(std::string_view name) {
    if (name == "path") return AlgebraKind::PathAlgebra;
    if (name == "preproj") return AlgebraKind::Preprojective;
    if (name == "dpreproj") return AlgebraKind::DerivedPreprojective;
    if (name == "qha") return AlgebraKind::Qha;
    if (name == "dqha") return AlgebraKind::DerivedQha;
    throw InputError("unknown algebra '" + std::string(name) +
                     "' (expected path|preproj|dpreproj|qha|dqha)");
}

std::string to_string(AlgebraKind kind) {
    switch (kind) {
        case AlgebraKind::PathAlgebra: return "path";
        case AlgebraKind::Preprojective: return "preproj";
        case AlgebraKind::DerivedPreprojective: return "dpreproj";
        case AlgebraKind::Qha: return "qha";
        case AlgebraKind::DerivedQha: return "dqha";
    }
    return {};
}

std::size_t default_truncation(const Quiver& q) {
    if (!classify(q).is_dynkin()) return 12;
    return std::max<std::size_t>(2 * root_data(q).coxeter_number, 12);
}

MatrixPowerSeries mesh_polynomial(const IntMatrix& c, std::size_t order) {
    auto s = MatrixPowerSeries::scalar_polynomial(c.size(), order, {1, 0, 1});
    if (order >= 1) s[1] = -c;
    return s;
}

MatrixPowerSeries path_algebra_series(const Quiver& q, std::size_t order) {
    return tensor_algebra_series(MatrixPowerSeries::monomial(q.arrow_matrix(), 1, order));
}

MatrixPowerSeries dynkin_preprojective_series(const IntMatrix& c, const IntMatrix& p, std::size_t h,
                                              std::size_t order) {
    const auto numerator =
        MatrixPowerSeries::one(c.size(), order) + MatrixPowerSeries::monomial(p, h, order);
    return numerator * invert(mesh_polynomial(c, order));
}

MatrixPowerSeries preprojective_series(const Quiver& q, std::size_t order) {
    const auto c = q.adjacency();
    if (!classify(q).is_dynkin()) return invert(mesh_polynomial(c, order));
    return dynkin_preprojective_series(c, nakayama_matrix(q).matrix, root_data(q).coxeter_number,
                                       order);
}

GeneratorSpec derived_preprojective_generators(const Quiver& q) {
    const auto v = q.arrow_matrix();
    return {
        {v, 0, 1},
        {v.transpose(), 0, 1},
        {IntMatrix::identity(q.vertex_count()), -1, 2},
    };
}

MatrixPowerSeries derived_preprojective_series(const Quiver& q, std::size_t order) {
    return tensor_algebra_series(generator_series(derived_preprojective_generators(q), order));
}

namespace {

MatrixPowerSeries qha_denominator_inverse(const IntMatrix& c, std::size_t order) {
    return invert(mesh_polynomial(c, order) *
                  MatrixPowerSeries::scalar_polynomial(c.size(), order, {1, 0, -1}));
}

}  // namespace

MatrixPowerSeries dynkin_qha_series(const IntMatrix& c, std::size_t h, std::size_t order) {
    std::vector<long long> numerator(2 * h + 1, 0);
    numerator[0] = 1;
    numerator[2 * h] = -1;
    return MatrixPowerSeries::scalar_polynomial(c.size(), order, numerator) *
           qha_denominator_inverse(c, order);
}

MatrixPowerSeries qha_series(const Quiver& q, const std::optional<WeightVector>& v,
                             std::size_t order) {
    const auto c = q.adjacency();
    if (v) is_sincere(q, *v);
    if (!classify(q).is_dynkin()) return qha_denominator_inverse(c, order);

    if (!v) throw MissingWeight("Dynkin quiver Heisenberg series needs a regular weight vector");
    const auto roots = root_data(q);
    if (!is_regular(q, *v, roots)) throw NotRegular("weight vector not regular: " + v->to_string());
    return dynkin_qha_series(c, roots.coxeter_number, order);
}

GeneratorSpec derived_qha_generators(const Quiver& q) {
    const auto v = q.arrow_matrix();
    const auto vt = v.transpose();
    return {
        {v, 0, 1},
        {vt, 0, 1},
        {vt, -1, 3},
        {v, -1, 3},
        {IntMatrix::identity(q.vertex_count()), -2, 4},
    };
}

MatrixPowerSeries derived_qha_series(const Quiver& q, std::size_t order) {
    return tensor_algebra_series(generator_series(derived_qha_generators(q), order));
}

MatrixPowerSeries exact_sequence_residual(const MatrixPowerSeries& h_pi,
                                          const MatrixPowerSeries& h_lambda, const IntMatrix& p,
                                          std::size_t h) {
    if (h_pi.size() != h_lambda.size() || p.size() != h_pi.size())
        throw SizeMismatch("exact sequence residual: incompatible sizes");
    return h_pi - h_lambda + h_lambda.shifted(2) - (p * h_pi).shifted(h);
}

}  // namespace qhilb
