#include "flagx/flag.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "flagx/errors.hpp"
#include "flagx/matrix.hpp"

namespace flagx {

namespace {

// Component of v along span(basis), via the exact normal equations.
AmbientVector span_component(const AmbientVector& v, const std::vector<AmbientVector>& basis) {
  AmbientVector out(v.size());
  if (basis.empty()) return out;
  const std::size_t k = basis.size();
  Matrix<Rational> gram(k, k);
  std::vector<Rational> rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = basis[i].dot(basis[j]);
    rhs[i] = basis[i].dot(v);
  }
  const auto coeffs = solve(gram, rhs);
  for (std::size_t i = 0; i < k; ++i) out += coeffs[i] * basis[i];
  return out;
}

std::vector<AmbientVector> pi0_roots(const FlagManifold& flag) {
  std::vector<AmbientVector> out;
  for (auto i : flag.pi0()) out.push_back(flag.system().simple_roots()[i]);
  return out;
}

}  // namespace

FlagManifold FlagManifold::with_form_scale(const Rational& scale) const {
  FlagManifold copy = *this;
  copy.system_ = system_.with_form_scale(scale);
  return copy;
}

FlagManifold build_flag(const RootSystem& sys, std::vector<std::size_t> pi0) {
  std::sort(pi0.begin(), pi0.end());
  pi0.erase(std::unique(pi0.begin(), pi0.end()), pi0.end());
  const std::size_t rank = sys.simple_roots().size();
  for (auto i : pi0)
    if (i >= rank)
      throw DomainError("parabolic index " + std::to_string(i + 1) + " out of range for " + sys.name());
  if (pi0.size() == rank) throw DomainError("parabolic set contains every simple root; the flag manifold is a point");

  FlagManifold flag;
  flag.system_ = sys;
  flag.pi0_ = std::move(pi0);
  const auto span = pi0_roots(flag);
  for (const auto& a : sys.roots())
    if (span_component(a, span) == a) flag.r_h_.push_back(a);
  for (const auto& a : sys.positive_roots())
    if (!std::binary_search(flag.r_h_.begin(), flag.r_h_.end(), a)) flag.r_m_plus_.push_back(a);
  flag.delta_m_ = sum_of(flag.r_m_plus_);
  return flag;
}

AmbientVector project_to_center(const AmbientVector& v, const FlagManifold& flag) {
  if (v.size() != flag.system().ambient_dim()) throw std::invalid_argument("project_to_center: dimension mismatch");
  if (!flag.system().in_weight_space(v)) throw DomainError("project_to_center: vector outside the weight space");
  return v - span_component(v, pi0_roots(flag));
}

TRootDecomposition t_root_decomposition(const FlagManifold& flag) {
  const auto& sys = flag.system();
  std::map<AmbientVector, TRootClass> by_rho;
  for (const auto& a : flag.r_m_plus()) {
    const AmbientVector rho = project_to_center(a, flag);
    const Rational beta = sys.inner(a, flag.delta_m());
    auto [it, inserted] = by_rho.try_emplace(rho);
    TRootClass& cls = it->second;
    if (inserted) {
      cls.rho = rho;
      cls.beta = beta;
    } else if (cls.beta != beta) {
      throw ConsistencyError("beta differs inside the T-root class of " + to_string(rho) + ": " + to_string(cls.beta) +
                             " vs " + to_string(beta));
    }
    ++cls.multiplicity;
    cls.members.push_back(a);
  }
  TRootDecomposition out;
  for (auto& [rho, cls] : by_rho) out.classes.push_back(std::move(cls));
  std::stable_sort(out.classes.begin(), out.classes.end(),
                   [](const TRootClass& x, const TRootClass& y) { return x.beta < y.beta; });
  return out;
}

bool satisfies_invariant_ordering(const FlagManifold& flag) {
  const auto& sys = flag.system();
  const auto& mplus = flag.r_m_plus();
  auto in_mplus = [&](const AmbientVector& v) { return std::binary_search(mplus.begin(), mplus.end(), v); };
  for (const auto& a : mplus) {
    for (const auto& h : flag.r_h()) {
      const auto s = a + h;
      if (sys.is_root(s) && !in_mplus(s)) return false;
    }
    for (const auto& b : mplus) {
      const auto s = a + b;
      if (sys.is_root(s) && !in_mplus(s)) return false;
    }
  }
  return true;
}

}  // namespace flagx
