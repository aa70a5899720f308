#pragma once

// Classical root systems realized in orthonormal ambient coordinates:
//   A_{n-1}  roots e_i - e_j in R^n (sum-zero hyperplane)
//   B_n      +-w_i +- w_j, +-w_i
//   C_n      +-w_i +- w_j, +-2 w_i
//   D_n      +-w_i +- w_j
// Everything is exact. The invariant form is form_scale times the dot product.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "flagx/rational.hpp"

namespace flagx {

enum class Family { A, B, C, D };

char family_letter(Family f);
/// Accepts "A".."D" (case-insensitive); throws std::invalid_argument otherwise.
Family parse_family(std::string_view text);

/// Smallest classical parameter n accepted for a family (A: 2, B: 2, C: 3, D: 3).
int min_parameter(Family f);
/// Lie rank for the classical parameter n (n - 1 for A, n otherwise).
int rank_of(Family f, int n);
/// Classical parameter n for a Lie rank.
int parameter_for_rank(Family f, int rank);

class AmbientVector {
 public:
  AmbientVector() = default;
  explicit AmbientVector(std::size_t dim) : coords_(dim, Rational(0)) {}
  explicit AmbientVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  AmbientVector(std::initializer_list<int> coords);

  static AmbientVector unit(std::size_t dim, std::size_t i);

  std::size_t size() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  /// Plain Euclidean dot product (no form scale).
  Rational dot(const AmbientVector& other) const;

  AmbientVector& operator+=(const AmbientVector& other);
  AmbientVector& operator-=(const AmbientVector& other);
  AmbientVector& operator*=(const Rational& s);

  friend AmbientVector operator+(AmbientVector a, const AmbientVector& b) { return a += b; }
  friend AmbientVector operator-(AmbientVector a, const AmbientVector& b) { return a -= b; }
  friend AmbientVector operator-(AmbientVector a) { return a *= Rational(-1); }
  friend AmbientVector operator*(const Rational& s, AmbientVector a) { return a *= s; }

  friend bool operator==(const AmbientVector& a, const AmbientVector& b) { return a.coords_ == b.coords_; }
  /// Lexicographic on coordinates.
  friend bool operator<(const AmbientVector& a, const AmbientVector& b);

 private:
  std::vector<Rational> coords_;
};

std::string to_string(const AmbientVector& v);

class RootSystem {
 public:
  /// n is the classical parameter: A gives SU(n) (rank n - 1, ambient R^n),
  /// B gives SO(2n+1), C gives Sp(n), D gives SO(2n). Throws DomainError
  /// below min_parameter(family).
  static RootSystem build(Family family, int n, const Rational& form_scale = Rational(1));

  Family family() const { return family_; }
  int n() const { return n_; }
  int rank() const { return rank_of(family_, n_); }
  std::size_t ambient_dim() const { return static_cast<std::size_t>(n_); }
  const Rational& form_scale() const { return form_scale_; }
  /// "A2", "B3", ... (Lie rank).
  std::string name() const;

  const std::vector<AmbientVector>& roots() const { return roots_; }
  const std::vector<AmbientVector>& positive_roots() const { return positive_; }
  const std::vector<AmbientVector>& simple_roots() const { return simple_; }

  /// Same roots, form multiplied by `scale`.
  RootSystem with_form_scale(const Rational& scale) const;

  /// form_scale * sum u_i v_i. Throws std::invalid_argument on dimension mismatch.
  Rational inner(const AmbientVector& u, const AmbientVector& v) const;

  bool is_root(const AmbientVector& v) const;
  bool is_positive_root(const AmbientVector& v) const;

  /// Coefficients of a root in the simple-root basis (exact solve).
  std::vector<Rational> simple_coordinates(const AmbientVector& v) const;

  /// True for vectors of the weight space (type A: coordinate sum zero).
  bool in_weight_space(const AmbientVector& v) const;

 private:
  Family family_ = Family::A;
  int n_ = 0;
  Rational form_scale_{1};
  std::vector<AmbientVector> roots_;
  std::vector<AmbientVector> positive_;
  std::vector<AmbientVector> simple_;
};

inline Rational inner(const AmbientVector& u, const AmbientVector& v, const RootSystem& sys) {
  return sys.inner(u, v);
}

/// Componentwise exact sum; throws std::invalid_argument on an empty list or
/// mixed dimensions.
AmbientVector sum_of(std::span<const AmbientVector> vectors);

}  // namespace flagx
