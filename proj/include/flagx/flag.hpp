#pragma once

#include <cstddef>
#include <vector>

#include "flagx/root_system.hpp"

namespace flagx {

/// Generalized flag manifold G/H where R_h is spanned by the simple roots in
/// pi0. The complex structure is the one of the standard positive ordering.
class FlagManifold {
 public:
  const RootSystem& system() const { return system_; }
  /// 0-based indices into system().simple_roots(), sorted.
  const std::vector<std::size_t>& pi0() const { return pi0_; }
  const std::vector<AmbientVector>& r_h() const { return r_h_; }
  const std::vector<AmbientVector>& r_m_plus() const { return r_m_plus_; }
  const AmbientVector& delta_m() const { return delta_m_; }
  int dim_complex() const { return static_cast<int>(r_m_plus_.size()); }
  int center_dim() const { return system_.rank() - static_cast<int>(pi0_.size()); }
  bool is_full() const { return pi0_.empty(); }

  /// Same flag with the invariant form rescaled.
  FlagManifold with_form_scale(const Rational& scale) const;

 private:
  friend FlagManifold build_flag(const RootSystem& sys, std::vector<std::size_t> pi0);
  RootSystem system_;
  std::vector<std::size_t> pi0_;
  std::vector<AmbientVector> r_h_;
  std::vector<AmbientVector> r_m_plus_;
  AmbientVector delta_m_;
};

/// Throws DomainError when an index is out of range or pi0 is the whole simple
/// system.
FlagManifold build_flag(const RootSystem& sys, std::vector<std::size_t> pi0);

/// Orthogonal projection onto the complement of span(pi0) inside the weight
/// space, i.e. restriction of a functional on t to the center c.
AmbientVector project_to_center(const AmbientVector& v, const FlagManifold& flag);

struct TRootClass {
  AmbientVector rho;
  int multiplicity = 0;
  Rational beta;
  std::vector<AmbientVector> members;
};

struct TRootDecomposition {
  /// Sorted by (beta, rho).
  std::vector<TRootClass> classes;
};

/// Partitions R_m^+ by equal projection to the center. Throws
/// ConsistencyError if <alpha, delta_m> is not constant on a class.
TRootDecomposition t_root_decomposition(const FlagManifold& flag);

/// (R_h + R_m^+) cap R and (R_m^+ + R_m^+) cap R both inside R_m^+, checked
/// over all pairs.
bool satisfies_invariant_ordering(const FlagManifold& flag);

}  // namespace flagx
