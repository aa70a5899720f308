#pragma once

#include <span>
#include <string>
#include <vector>

#include "flagx/flag.hpp"

namespace flagx {

enum class Verdict { Extremal, NotExtremal, NotApplicable };

std::string to_string(Verdict v);
Verdict parse_verdict(std::string_view text);

struct ExtremalityReport {
  /// ||delta_m||^2 / dim_C M
  Rational mu;
  /// sum_j (mu / beta_j - 1) m_j rho_j, in ambient coordinates.
  AmbientVector residual;
  Verdict verdict = Verdict::NotApplicable;
  int center_dim = 0;
  /// The criterion assumes G is (locally) the full isometry group of the
  /// Kaehler-Einstein metric. Exceptions to that are not detected, so every
  /// report carries the caveat.
  bool assumes_full_isometry_group = true;
  TRootDecomposition t_roots;
};

/// Decides extremality of the Kaehler-Einstein metric on a flag with a simple
/// isometry group. NotApplicable when the center has dimension < 2 (the
/// constant-volume deformation space is then trivial).
ExtremalityReport check_extremality(const FlagManifold& flag);

/// sum over alpha in R^+ of <alpha, a> / <alpha, delta> for the simple root
/// a = simple_roots()[simple_index]. Full flags only (DomainError otherwise).
Rational pairing_sum(const FlagManifold& flag, std::size_t simple_index);

/// mu * pairing_sum - ||a||^2: pairing the extremality equation with a simple
/// root. Vanishing is necessary for extremality. Full flags only.
Rational pairing_residual(const FlagManifold& flag, std::size_t simple_index);

/// Product rule for M_1 x ... x M_k. With a single factor the factor's verdict
/// is returned unchanged. With several factors a factor whose center is
/// one-dimensional admits no volume-preserving deformation of its own and
/// counts as extremal; the product is Extremal iff no factor is NotExtremal.
/// Throws std::invalid_argument on an empty list.
Verdict check_product(std::span<const FlagManifold> factors);

struct SurveyRow {
  Family family;
  int rank = 0;
  ExtremalityReport report;
};

struct SurveyRange {
  Family family;
  int min_rank = 0;
  int max_rank = 0;
};

/// One report per (family, rank) over the full flags G/T, ordered by the
/// ranges as given and then by rank. Ranks below the family minimum are
/// skipped. Parallel over rows with OpenMP.
std::vector<SurveyRow> survey_full_flags(std::span<const SurveyRange> ranges);
/// Single-threaded reference for survey_full_flags.
std::vector<SurveyRow> survey_full_flags_serial(std::span<const SurveyRange> ranges);

/// Convenience overload: each family from its minimum rank up to max_rank.
std::vector<SurveyRow> survey_full_flags(std::span<const Family> families, int max_rank);

}  // namespace flagx
