#include "flagx/spectrum.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

#include "flagx/errors.hpp"

namespace flagx {

namespace {

template <class Scalar>
bool near_zero(const Scalar& x, double scale) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    (void)scale;
    return sgn(x) == 0;
  } else {
    return std::abs(x) <= 1e-12 * std::max(1.0, scale);
  }
}

template <class Scalar>
Matrix<Scalar> convert(const Matrix<Rational>& m) {
  Matrix<Scalar> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = from_rational<Scalar>(m(i, j));
  return out;
}

// Replaces each floating eigenvalue by a nearby rational when that rational
// is an exact root of `poly`. Candidates are continued-fraction convergents.
void snap_to_rational_roots(std::vector<double>& values, const std::vector<Rational>& poly) {
  for (double& x : values) {
    double rest = x;
    Rational h_prev(1), h(std::floor(rest));
    Rational k_prev(0), k(1);
    for (int depth = 0; depth < 12; ++depth) {
      const Rational cand = h / k;
      if (sgn(evaluate_polynomial(poly, cand)) == 0 && std::abs(cand.get_d() - x) <= 1e-9 * std::max(1.0, std::abs(x))) {
        x = cand.get_d();
        break;
      }
      const double frac = rest - std::floor(rest);
      if (frac < 1e-12 || k > 1000000) break;
      rest = 1.0 / frac;
      const Rational a(std::floor(rest));
      Rational h_next = a * h + h_prev, k_next = a * k + k_prev;
      h_prev = h;
      k_prev = k;
      h = h_next;
      k = k_next;
    }
  }
  std::sort(values.begin(), values.end());
}

}  // namespace

std::vector<double> self_adjoint_eigenvalues(const Matrix<double>& op, const Matrix<double>& metric) {
  const auto n = static_cast<Eigen::Index>(op.rows());
  if (n == 0) return {};
  Eigen::MatrixXd g(n, n);
  Eigen::MatrixXd a(n, n);
  const Matrix<double> sym = metric * op;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      g(i, j) = metric(i, j);
      a(i, j) = 0.5 * (sym(i, j) + sym(j, i));
    }
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, g, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ConsistencyError("generalized eigensolver failed");
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(out.begin(), out.end());
  return out;
}

InvariantMetrics::InvariantMetrics(FlagManifold flag)
    : flag_(std::move(flag)),
      algebra_(std::make_shared<AlgebraRealization>(build_algebra(flag_.system().family(), flag_.system().n()))) {
  const auto& alg = *algebra_;
  for (const auto& a : flag_.r_m_plus()) m_roots_.push_back(alg.root_index(a));
  for (std::size_t b = 0; b < alg.dim(); ++b) {
    ad_exact_.push_back(alg.ad(b));
    ad_float_.push_back(to_double(ad_exact_.back()));
  }
  const std::size_t r = alg.rank();
  torus_form_ = Matrix<Rational>(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) torus_form_(i, j) = -alg.killing_gram()(i, j);

  Matrix<Rational> constraints(flag_.pi0().size(), r);
  for (std::size_t row = 0; row < flag_.pi0().size(); ++row) {
    const auto& beta = flag_.system().simple_roots()[flag_.pi0()[row]];
    for (std::size_t j = 0; j < r; ++j) constraints(row, j) = beta.dot(alg.torus_weight(j));
  }
  center_basis_ = null_space(constraints);
  if (static_cast<int>(center_basis_.cols()) != flag_.center_dim())
    throw ConsistencyError("center dimension mismatch");
}

template <class Scalar>
std::vector<Scalar> InvariantMetrics::ambient(const MetricParameter<Scalar>& xi) const {
  if (xi.coords.size() != rank())
    throw DomainError("parameter needs " + std::to_string(rank()) + " torus coordinates, got " +
                      std::to_string(xi.coords.size()));
  std::vector<Scalar> h(flag_.system().ambient_dim(), Scalar(0));
  for (std::size_t j = 0; j < rank(); ++j)
    for (std::size_t c = 0; c < h.size(); ++c) {
      const Rational& w = algebra_->torus_weight(j)[c];
      if (sgn(w) != 0) h[c] += xi.coords[j] * from_rational<Scalar>(w);
    }
  return h;
}

template <class Scalar>
Scalar InvariantMetrics::root_value(const AmbientVector& root, const MetricParameter<Scalar>& xi) const {
  const auto h = ambient(xi);
  Scalar s(0);
  for (std::size_t c = 0; c < h.size(); ++c)
    if (sgn(root[c]) != 0) s += from_rational<Scalar>(root[c]) * h[c];
  return s;
}

MetricParameter<Rational> InvariantMetrics::ke_parameter() const {
  std::vector<Rational> rhs(rank());
  for (std::size_t j = 0; j < rank(); ++j) rhs[j] = flag_.delta_m().dot(algebra_->torus_weight(j));
  return {solve(torus_form_, rhs)};
}

template <class Scalar>
void InvariantMetrics::check_parameter(const MetricParameter<Scalar>& xi) const {
  double scale = 0.0;
  for (const auto& x : xi.coords) scale = std::max(scale, std::abs(to_double(x)));
  for (auto i : flag_.pi0()) {
    const Scalar v = root_value(flag_.system().simple_roots()[i], xi);
    if (!near_zero(v, scale))
      throw DomainError("parameter is not in the center: simple root " + std::to_string(i + 1) +
                        " takes a nonzero value on it");
  }
  for (const auto& a : flag_.r_m_plus())
    if (!(root_value(a, xi) > Scalar(0)))
      throw DomainError("parameter is outside the Weyl chamber: root " + to_string(a) +
                        " is not positive on it (metric not positive definite)");
}

template <class Scalar>
Matrix<Scalar> InvariantMetrics::metric_gram(const MetricParameter<Scalar>& xi) const {
  Matrix<Scalar> gram = metric_form(xi);
  if (!is_positive_definite(gram))
    throw DomainError("metric is not positive definite: parameter outside the Weyl chamber");
  return gram;
}

template <class Scalar>
Matrix<Scalar> InvariantMetrics::metric_form(const MetricParameter<Scalar>& xi) const {
  double scale = 0.0;
  for (const auto& x : xi.coords) scale = std::max(scale, std::abs(to_double(x)));
  for (auto i : flag_.pi0())
    if (!near_zero(root_value(flag_.system().simple_roots()[i], xi), scale))
      throw DomainError("parameter is not in the center of h");

  const auto& alg = *algebra_;
  const std::size_t dim = alg.dim();
  Matrix<Scalar> ad_xi(dim, dim);
  for (std::size_t j = 0; j < rank(); ++j) {
    if (is_zero(xi.coords[j])) continue;
    ad_xi = ad_xi + xi.coords[j] * convert<Scalar>(ad_exact_[j]);
  }
  const Matrix<Scalar> killing = convert<Scalar>(alg.killing_gram());

  // m-basis: (X_a, Y_a) for each a in R_m^+; J X = Y, J Y = -X.
  std::vector<std::size_t> basis;
  std::vector<std::size_t> j_index;
  std::vector<int> j_sign;
  for (auto r : m_roots_) {
    basis.push_back(alg.x_index(r));
    j_index.push_back(alg.y_index(r));
    j_sign.push_back(1);
    basis.push_back(alg.y_index(r));
    j_index.push_back(alg.x_index(r));
    j_sign.push_back(-1);
  }
  const std::size_t m = basis.size();
  Matrix<Scalar> gram(m, m);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) {
      Scalar s(0);
      for (std::size_t k = 0; k < dim; ++k) {
        const Scalar& c = ad_xi(k, basis[u]);
        if (is_zero(c)) continue;
        s += c * killing(k, j_index[v]);
      }
      gram(u, v) = -Scalar(j_sign[v]) * s;
    }
  if constexpr (std::is_same_v<Scalar, Rational>) {
    if (!gram.is_symmetric()) throw ConsistencyError("metric Gram matrix is not symmetric");
  }
  return gram;
}

template <class Scalar>
std::vector<Scalar> InvariantMetrics::apply_casimir(const Matrix<Scalar>& gram, const std::vector<Scalar>& v) const {
  const auto& alg = *algebra_;
  const auto& ads = [&]() -> const std::vector<Matrix<Scalar>>& {
    if constexpr (std::is_same_v<Scalar, Rational>)
      return ad_exact_;
    else
      return ad_float_;
  }();
  std::vector<Scalar> out(alg.dim(), Scalar(0));
  for (std::size_t i = 0; i < m_roots_.size(); ++i) {
    // Inverse of the 2x2 block of (X_a, Y_a).
    const Scalar gxx = gram(2 * i, 2 * i), gxy = gram(2 * i, 2 * i + 1), gyy = gram(2 * i + 1, 2 * i + 1);
    const Scalar det = gxx * gyy - gxy * gxy;
    const Scalar p = gyy / det, q = -gxy / det, r = gxx / det;
    const auto& adx = ads[alg.x_index(m_roots_[i])];
    const auto& ady = ads[alg.y_index(m_roots_[i])];
    const auto xv = adx.apply(v);
    const auto yv = ady.apply(v);
    const auto xxv = adx.apply(xv);
    const auto yyv = ady.apply(yv);
    const auto xyv = adx.apply(yv);
    const auto yxv = ady.apply(xv);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] -= p * xxv[k] + q * (xyv[k] + yxv[k]) + r * yyv[k];
  }
  return out;
}

template <class Scalar>
SpectrumReport<Scalar> InvariantMetrics::casimir_on_torus(const MetricParameter<Scalar>& xi) const {
  check_parameter(xi);
  const Matrix<Scalar> gram = metric_gram(xi);
  // Inequivalent modules are g-orthogonal, so the Gram is block diagonal.
  double gmax = 0.0;
  for (std::size_t i = 0; i < gram.rows(); ++i) gmax = std::max(gmax, std::abs(to_double(gram(i, i))));
  for (std::size_t u = 0; u < gram.rows(); ++u)
    for (std::size_t v = 0; v < gram.cols(); ++v)
      if (u / 2 != v / 2 && !near_zero(gram(u, v), gmax))
        throw ConsistencyError("metric Gram matrix is not block diagonal");

  const std::size_t r = rank();
  const std::size_t dim = algebra_->dim();
  SpectrumReport<Scalar> rep;
  rep.d_matrix = Matrix<Scalar>(r, r);
  double dmax = 0.0;
  double leak = 0.0;
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<Scalar> e(dim, Scalar(0));
    e[j] = Scalar(1);
    const auto image = apply_casimir(gram, e);
    for (std::size_t i = 0; i < r; ++i) {
      rep.d_matrix(i, j) = image[i];
      dmax = std::max(dmax, std::abs(to_double(image[i])));
    }
    for (std::size_t k = r; k < dim; ++k) leak = std::max(leak, std::abs(to_double(image[k])));
    if constexpr (std::is_same_v<Scalar, Rational>) {
      for (std::size_t k = r; k < dim; ++k)
        if (sgn(image[k]) != 0) throw ConsistencyError("Casimir operator does not preserve the torus");
    }
  }
  if constexpr (!std::is_same_v<Scalar, Rational>) {
    if (leak > 1e-9 * std::max(1.0, dmax)) throw ConsistencyError("Casimir operator does not preserve the torus");
  }

  const Matrix<Scalar> k = convert<Scalar>(torus_form_);
  rep.eigenvalues = self_adjoint_eigenvalues(to_double(rep.d_matrix), to_double(k));

  const Matrix<Scalar> c = convert<Scalar>(center_basis_);
  const Matrix<Scalar> ct = c.transpose();
  const Matrix<Scalar> kc = ct * k * c;
  const Matrix<Scalar> ac = ct * k * rep.d_matrix * c;
  const Matrix<Scalar> dc = solve(kc, ac);
  if constexpr (std::is_same_v<Scalar, Rational>) {
    if (!(rep.d_matrix * c == c * dc)) throw ConsistencyError("Casimir operator does not preserve the center");
  }
  if (c.cols() == r)
    rep.center_eigenvalues = rep.eigenvalues;
  else
    rep.center_eigenvalues = self_adjoint_eigenvalues(to_double(dc), to_double(kc));

  rep.char_poly = characteristic_polynomial(rep.d_matrix);
  if constexpr (std::is_same_v<Scalar, Rational>) {
    snap_to_rational_roots(rep.eigenvalues, rep.char_poly);
    snap_to_rational_roots(rep.center_eigenvalues, characteristic_polynomial(dc));
  }
  rep.lambda1_candidate = rep.center_eigenvalues.front();
  rep.char_poly_at_two = evaluate_polynomial(rep.char_poly, Scalar(2));
  if constexpr (std::is_same_v<Scalar, Rational>) rep.eigenvalue_two_exact = sgn(rep.char_poly_at_two) == 0;
  return rep;
}

template <class Scalar>
Scalar InvariantMetrics::volume_ratio(const MetricParameter<Scalar>& xi) const {
  check_parameter(xi);
  const auto ke = ke_parameter();
  MetricParameter<Scalar> ke_s;
  for (const auto& x : ke.coords) ke_s.coords.push_back(from_rational<Scalar>(x));
  Scalar num(1), den(1);
  for (const auto& a : flag_.r_m_plus()) {
    num *= root_value(a, xi);
    den *= root_value(a, ke_s);
  }
  return num / den;
}

template <class Scalar>
double InvariantMetrics::torus_leakage(const MetricParameter<Scalar>& xi) const {
  const Matrix<Scalar> gram = metric_gram(xi);
  const std::size_t dim = algebra_->dim();
  double leak = 0.0;
  for (std::size_t j = 0; j < rank(); ++j) {
    std::vector<Scalar> e(dim, Scalar(0));
    e[j] = Scalar(1);
    const auto image = apply_casimir(gram, e);
    for (std::size_t k = rank(); k < dim; ++k) leak = std::max(leak, std::abs(to_double(image[k])));
  }
  return leak;
}

MetricParameter<Rational> ke_parameter(const FlagManifold& flag) { return InvariantMetrics(flag).ke_parameter(); }

#define FLAGX_INSTANTIATE(S)                                                                             \
  template std::vector<S> InvariantMetrics::ambient(const MetricParameter<S>&) const;                    \
  template S InvariantMetrics::root_value(const AmbientVector&, const MetricParameter<S>&) const;        \
  template void InvariantMetrics::check_parameter(const MetricParameter<S>&) const;                      \
  template Matrix<S> InvariantMetrics::metric_gram(const MetricParameter<S>&) const;                     \
  template Matrix<S> InvariantMetrics::metric_form(const MetricParameter<S>&) const;                     \
  template SpectrumReport<S> InvariantMetrics::casimir_on_torus(const MetricParameter<S>&) const;        \
  template S InvariantMetrics::volume_ratio(const MetricParameter<S>&) const;                            \
  template double InvariantMetrics::torus_leakage(const MetricParameter<S>&) const;

FLAGX_INSTANTIATE(Rational)
FLAGX_INSTANTIATE(double)

#undef FLAGX_INSTANTIATE

}  // namespace flagx
