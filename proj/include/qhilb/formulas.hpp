#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "qhilb/dynkin.hpp"
#include "qhilb/field.hpp"
#include "qhilb/quiver.hpp"
#include "qhilb/series.hpp"

namespace qhilb {

enum class AlgebraKind { PathAlgebra, Preprojective, DerivedPreprojective, Qha, DerivedQha };

/// "path", "preproj", "dpreproj", "qha", "dqha".
AlgebraKind parse_algebra_kind(std::string_view name);
std::string to_string(AlgebraKind kind);

/// max(2h, 12) for Dynkin quivers, 12 otherwise.
std::size_t default_truncation(const Quiver& q);

/// 1 - C t + t^2.
MatrixPowerSeries mesh_polynomial(const IntMatrix& c, std::size_t order);

/// 1/(1 - [V] t); the t^n coefficient counts paths of length n.
MatrixPowerSeries path_algebra_series(const Quiver& q, std::size_t order);

/// Non-Dynkin: 1/(1 - Ct + t^2).  Dynkin: (1 + P t^h)/(1 - Ct + t^2).
MatrixPowerSeries preprojective_series(const Quiver& q, std::size_t order);
/// The Dynkin closed form for explicit C, P, h.
MatrixPowerSeries dynkin_preprojective_series(const IntMatrix& c, const IntMatrix& p, std::size_t h,
                                              std::size_t order);

/// V(-1) + V*(-1) + A[1](-2): the loops s_i sit in cohomological degree -1.
GeneratorSpec derived_preprojective_generators(const Quiver& q);
MatrixPowerSeries derived_preprojective_series(const Quiver& q, std::size_t order);

/// Non-Dynkin (any v, or none): 1/((1 - Ct + t^2)(1 - t^2)).
/// Dynkin: (1 - t^{2h})/((1 - Ct + t^2)(1 - t^2)); v must be given and regular,
/// otherwise MissingWeight / NotRegular.
MatrixPowerSeries qha_series(const Quiver& q, const std::optional<WeightVector>& v,
                             std::size_t order);
/// The Dynkin closed form for explicit C and h, with no regularity check.
MatrixPowerSeries dynkin_qha_series(const IntMatrix& c, std::size_t h, std::size_t order);

/// V(-1) + V*(-1) + V*[1](-3) + V[1](-3) + A[2](-4). The loops t_i are placed
/// in cohomological degree -2 so that the generator series is Ct - Ct^3 + t^4.
GeneratorSpec derived_qha_generators(const Quiver& q);
MatrixPowerSeries derived_qha_series(const Quiver& q, std::size_t order);

/// h_Pi - h_Lambda + t^2 h_Lambda - t^h P h_Pi; zero when the four-term exact
/// sequence relating Pi and the quiver Heisenberg algebra is consistent with
/// the series.
MatrixPowerSeries exact_sequence_residual(const MatrixPowerSeries& h_pi,
                                          const MatrixPowerSeries& h_lambda, const IntMatrix& p,
                                          std::size_t h);

}  // namespace qhilb
