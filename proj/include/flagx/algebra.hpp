#pragma once

// Compact real form of a classical simple Lie algebra, realized by matrices
// of the defining representation:
//   su(n), so(2n+1), sp(n), so(2n).
// Basis order: torus generators H_1..H_rank, then (X_a, Y_a) for each
// positive root a in RootSystem::positive_roots() order, with
//   X_a = E_a - E_a^T,  Y_a = i (E_a + E_a^T),  [H, E_a] = i a(h) E_a.
// Structure constants and the Killing form are exact rationals; the Killing
// form is computed from ad-traces, never taken from a table.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "flagx/matrix.hpp"
#include "flagx/root_system.hpp"

namespace flagx {

struct GaussianRational {
  Rational re{0};
  Rational im{0};
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

/// Sparse square matrix over Q(i).
class ComplexMatrix {
 public:
  using Entries = std::map<std::pair<std::size_t, std::size_t>, GaussianRational>;

  explicit ComplexMatrix(std::size_t size = 0) : size_(size) {}

  std::size_t size() const { return size_; }
  const Entries& entries() const { return entries_; }
  GaussianRational at(std::size_t i, std::size_t j) const;

  void add(std::size_t i, std::size_t j, const GaussianRational& v);

  ComplexMatrix transpose() const;
  ComplexMatrix scaled(const GaussianRational& s) const;
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) { return a.entries_ == b.entries_; }

  GaussianRational trace() const;
  bool is_zero() const { return entries_.empty(); }

 private:
  std::size_t size_;
  Entries entries_;
};

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

class AlgebraRealization {
 public:
  const RootSystem& system() const { return system_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t rank() const { return torus_weights_.size(); }

  /// Defining-representation matrix of each basis element.
  const std::vector<ComplexMatrix>& basis() const { return basis_; }
  /// Ambient coordinates h of H_j: a(H_j) = i <a, h>.
  const AmbientVector& torus_weight(std::size_t j) const { return torus_weights_[j]; }
  /// Invariant symmetric form S of the defining representation (identity for su(n)).
  const Matrix<Rational>& defining_form() const { return defining_form_; }

  std::size_t x_index(std::size_t root) const { return rank() + 2 * root; }
  std::size_t y_index(std::size_t root) const { return rank() + 2 * root + 1; }
  /// Position of a positive root in the (X, Y) pair list; throws
  /// std::invalid_argument for anything else.
  std::size_t root_index(const AmbientVector& positive_root) const;

  /// Coefficient of b_k in [b_a, b_b].
  const Rational& structure_constant(std::size_t a, std::size_t b, std::size_t k) const {
    return structure_[(a * dim() + b) * dim() + k];
  }
  /// Matrix of ad(b_a) acting on basis coordinates (column l = [b_a, b_l]).
  Matrix<Rational> ad(std::size_t a) const;
  /// Coordinates of [u, v] for coordinate vectors u, v.
  template <class Scalar>
  std::vector<Scalar> bracket(const std::vector<Scalar>& u, const std::vector<Scalar>& v) const;

  /// B(b_a, b_b) = trace(ad b_a ad b_b).
  const Matrix<Rational>& killing_gram() const { return killing_; }
  /// trace(b_a b_b) in the defining representation.
  const Matrix<Rational>& trace_gram() const { return trace_gram_; }

  /// Coordinates of a defining-representation matrix in the basis; throws
  /// ConsistencyError when the matrix is outside the real span of the basis.
  std::vector<Rational> coordinates(const ComplexMatrix& m) const;

 private:
  friend AlgebraRealization build_algebra(Family family, int n);
  RootSystem system_;
  std::vector<ComplexMatrix> basis_;
  std::vector<AmbientVector> torus_weights_;
  Matrix<Rational> defining_form_;
  Matrix<Rational> trace_gram_;
  Matrix<Rational> trace_gram_inverse_;
  std::vector<Rational> structure_;
  Matrix<Rational> killing_;
};

/// n is the classical parameter as in RootSystem::build.
AlgebraRealization build_algebra(Family family, int n);

/// Killing Gram matrix from structure constants, rows in parallel.
Matrix<Rational> killing_gram_from_structure(const AlgebraRealization& alg);
/// Single-threaded reference for killing_gram_from_structure.
Matrix<Rational> killing_gram_from_structure_serial(const AlgebraRealization& alg);

/// B([Z,X],Y) + B(X,[Z,Y]) == 0 for every basis triple (exact).
bool killing_is_ad_invariant(const AlgebraRealization& alg);

template <class Scalar>
std::vector<Scalar> AlgebraRealization::bracket(const std::vector<Scalar>& u, const std::vector<Scalar>& v) const {
  const std::size_t n = dim();
  std::vector<Scalar> out(n, Scalar(0));
  for (std::size_t a = 0; a < n; ++a) {
    if (is_zero(u[a])) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (is_zero(v[b])) continue;
      const Scalar w = u[a] * v[b];
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& c = structure_constant(a, b, k);
        if (sgn(c) == 0) continue;
        out[k] += w * from_rational<Scalar>(c);
      }
    }
  }
  return out;
}

}  // namespace flagx
