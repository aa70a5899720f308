#pragma once

// Invariant Kaehler metrics g_xi on a flag manifold and the Casimir-type
// operator
//     D = - sum_i ad(v_i)^2,   {v_i} a g_xi-orthonormal basis of m,
// restricted to the torus t. The sign makes D positive semidefinite (ad(v) is
// skew for -B); with that convention the Kaehler-Einstein metric has
// eigenvalue 2 on its own parameter.
//
// Metric convention on m = span{X_a, Y_a : a in R_m^+}:
//     g_xi(U, V) = -B([xi, U], J V),   J X_a = Y_a,  J Y_a = -X_a,
// which gives g_xi(X_a, X_a) = g_xi(Y_a, Y_a) = a(xi) * (-B(X_a, X_a)).

#include <memory>
#include <vector>

#include "flagx/algebra.hpp"
#include "flagx/flag.hpp"
#include "flagx/matrix.hpp"

namespace flagx {

/// Point xi of the center c, in coordinates on the torus basis H_1..H_rank.
template <class Scalar>
struct MetricParameter {
  std::vector<Scalar> coords;
};

template <class Scalar>
struct SpectrumReport {
  /// D on the torus in the H basis (column j = D H_j).
  Matrix<Scalar> d_matrix;
  /// Ascending eigenvalues of d_matrix.
  std::vector<double> eigenvalues;
  /// Ascending eigenvalues of D on the center c (the H-fixed part of the
  /// adjoint representation); equal to `eigenvalues` on full flags.
  std::vector<double> center_eigenvalues;
  /// Smallest eigenvalue of D on the center: an eigenvalue of the Laplacian,
  /// hence an upper bound for lambda_1. Not claimed to equal lambda_1.
  double lambda1_candidate = 0.0;
  /// det(x I - d_matrix), ascending coefficients.
  std::vector<Scalar> char_poly;
  Scalar char_poly_at_two{0};
  /// Exact pipeline and char_poly(2) == 0.
  bool eigenvalue_two_exact = false;
};

/// Precomputed algebra data for one flag; all metric and spectrum queries go
/// through here.
class InvariantMetrics {
 public:
  explicit InvariantMetrics(FlagManifold flag);

  const FlagManifold& flag() const { return flag_; }
  const AlgebraRealization& algebra() const { return *algebra_; }
  std::size_t rank() const { return algebra_->rank(); }
  /// Basis of c in torus coordinates, one vector per column.
  const Matrix<Rational>& center_basis() const { return center_basis_; }
  /// -B restricted to the torus.
  const Matrix<Rational>& torus_form() const { return torus_form_; }

  /// Ambient vector h(xi) with a(xi) = i <a, h(xi)>.
  template <class Scalar>
  std::vector<Scalar> ambient(const MetricParameter<Scalar>& xi) const;
  /// <a, h(xi)> for a root a.
  template <class Scalar>
  Scalar root_value(const AmbientVector& root, const MetricParameter<Scalar>& xi) const;

  /// -B-dual of delta_m: the Kaehler-Einstein parameter.
  MetricParameter<Rational> ke_parameter() const;

  /// Throws DomainError unless xi lies in c and in the Weyl chamber of the
  /// standard ordering (a(xi) > 0 for every a in R_m^+).
  template <class Scalar>
  void check_parameter(const MetricParameter<Scalar>& xi) const;

  /// Gram matrix of g_xi on (X_a, Y_a)_{a in R_m^+}. Throws DomainError when
  /// xi is off the center or the form is not positive definite.
  template <class Scalar>
  Matrix<Scalar> metric_gram(const MetricParameter<Scalar>& xi) const;
  /// Same form without the positive-definiteness check (still requires xi in c).
  template <class Scalar>
  Matrix<Scalar> metric_form(const MetricParameter<Scalar>& xi) const;

  template <class Scalar>
  SpectrumReport<Scalar> casimir_on_torus(const MetricParameter<Scalar>& xi) const;

  /// prod a(xi) / prod a(xi_KE) over R_m^+.
  template <class Scalar>
  Scalar volume_ratio(const MetricParameter<Scalar>& xi) const;

  /// Largest |m-component| of D H over torus basis vectors H; zero when D
  /// preserves the torus (exact for Rational).
  template <class Scalar>
  double torus_leakage(const MetricParameter<Scalar>& xi) const;

 private:
  template <class Scalar>
  std::vector<Scalar> apply_casimir(const Matrix<Scalar>& gram, const std::vector<Scalar>& v) const;

  FlagManifold flag_;
  std::shared_ptr<const AlgebraRealization> algebra_;
  std::vector<std::size_t> m_roots_;
  std::vector<Matrix<Rational>> ad_exact_;
  std::vector<Matrix<double>> ad_float_;
  Matrix<Rational> torus_form_;
  Matrix<Rational> center_basis_;
};

MetricParameter<Rational> ke_parameter(const FlagManifold& flag);
template <class Scalar>
Matrix<Scalar> metric_gram(const FlagManifold& flag, const MetricParameter<Scalar>& xi) {
  return InvariantMetrics(flag).metric_gram(xi);
}
template <class Scalar>
SpectrumReport<Scalar> casimir_on_torus(const FlagManifold& flag, const MetricParameter<Scalar>& xi) {
  return InvariantMetrics(flag).casimir_on_torus(xi);
}
template <class Scalar>
Scalar volume_ratio(const FlagManifold& flag, const MetricParameter<Scalar>& xi) {
  return InvariantMetrics(flag).volume_ratio(xi);
}

/// Ascending eigenvalues of a matrix self-adjoint for the positive definite
/// form `metric` (generalized symmetric eigenproblem).
std::vector<double> self_adjoint_eigenvalues(const Matrix<double>& op, const Matrix<double>& metric);

}  // namespace flagx
