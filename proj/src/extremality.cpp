#include "flagx/extremality.hpp"

#include <exception>
#include <stdexcept>
#include <utility>

#include "flagx/errors.hpp"
#include "flagx/parallel.hpp"

namespace flagx {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Extremal: return "EXTREMAL";
    case Verdict::NotExtremal: return "NOT_EXTREMAL";
    case Verdict::NotApplicable: return "NOT_APPLICABLE";
  }
  return "?";
}

Verdict parse_verdict(std::string_view text) {
  if (text == "EXTREMAL") return Verdict::Extremal;
  if (text == "NOT_EXTREMAL") return Verdict::NotExtremal;
  if (text == "NOT_APPLICABLE") return Verdict::NotApplicable;
  throw std::invalid_argument("unknown verdict '" + std::string(text) + "'");
}

ExtremalityReport check_extremality(const FlagManifold& flag) {
  const auto& sys = flag.system();
  ExtremalityReport rep;
  rep.center_dim = flag.center_dim();
  rep.mu = sys.inner(flag.delta_m(), flag.delta_m()) / flag.dim_complex();
  rep.t_roots = t_root_decomposition(flag);
  rep.residual = AmbientVector(sys.ambient_dim());
  for (const auto& cls : rep.t_roots.classes) {
    const Rational weight = (rep.mu / cls.beta - 1) * cls.multiplicity;
    rep.residual += weight * cls.rho;
  }
  if (rep.center_dim < 2)
    rep.verdict = Verdict::NotApplicable;
  else
    rep.verdict = rep.residual.is_zero() ? Verdict::Extremal : Verdict::NotExtremal;
  return rep;
}

Rational pairing_sum(const FlagManifold& flag, std::size_t simple_index) {
  if (!flag.is_full()) throw DomainError("pairing reduction is only defined for full flags");
  const auto& sys = flag.system();
  if (simple_index >= sys.simple_roots().size()) throw DomainError("simple root index out of range");
  const auto& bar = sys.simple_roots()[simple_index];
  Rational sum(0);
  for (const auto& a : sys.positive_roots()) {
    const Rational num = sys.inner(a, bar);
    if (sgn(num) == 0) continue;
    sum += num / sys.inner(a, flag.delta_m());
  }
  return sum;
}

Rational pairing_residual(const FlagManifold& flag, std::size_t simple_index) {
  const auto& sys = flag.system();
  const Rational sum = pairing_sum(flag, simple_index);
  const Rational mu = sys.inner(flag.delta_m(), flag.delta_m()) / flag.dim_complex();
  const auto& bar = sys.simple_roots()[simple_index];
  return mu * sum - sys.inner(bar, bar);
}

Verdict check_product(std::span<const FlagManifold> factors) {
  if (factors.empty()) throw std::invalid_argument("check_product: empty factor list");
  if (factors.size() == 1) return check_extremality(factors.front()).verdict;
  for (const auto& f : factors)
    if (check_extremality(f).verdict == Verdict::NotExtremal) return Verdict::NotExtremal;
  return Verdict::Extremal;
}

namespace {

std::vector<std::pair<Family, int>> expand(std::span<const SurveyRange> ranges) {
  std::vector<std::pair<Family, int>> tasks;
  for (const auto& r : ranges) {
    const int lo = std::max(r.min_rank, rank_of(r.family, min_parameter(r.family)));
    for (int rank = lo; rank <= r.max_rank; ++rank) tasks.emplace_back(r.family, rank);
  }
  return tasks;
}

SurveyRow survey_row(Family family, int rank) {
  const auto sys = RootSystem::build(family, parameter_for_rank(family, rank));
  return SurveyRow{family, rank, check_extremality(build_flag(sys, {}))};
}

}  // namespace

std::vector<SurveyRow> survey_full_flags(std::span<const SurveyRange> ranges) {
  const auto tasks = expand(ranges);
  std::vector<SurveyRow> rows(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  const long count = static_cast<long>(tasks.size());
  // Higher ranks dominate the cost, so hand out rows one at a time.
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_budget())
  for (long i = 0; i < count; ++i) {
    try {
      rows[i] = survey_row(tasks[i].first, tasks[i].second);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

std::vector<SurveyRow> survey_full_flags_serial(std::span<const SurveyRange> ranges) {
  std::vector<SurveyRow> rows;
  for (const auto& [family, rank] : expand(ranges)) rows.push_back(survey_row(family, rank));
  return rows;
}

std::vector<SurveyRow> survey_full_flags(std::span<const Family> families, int max_rank) {
  std::vector<SurveyRange> ranges;
  for (auto f : families) ranges.push_back({f, 0, max_rank});
  return survey_full_flags(ranges);
}

}  // namespace flagx
