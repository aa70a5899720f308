#include "flagx/algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "flagx/errors.hpp"
#include "flagx/parallel.hpp"

namespace flagx {

namespace {

GaussianRational mul(const GaussianRational& a, const GaussianRational& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

bool gauss_is_zero(const GaussianRational& z) { return sgn(z.re) == 0 && sgn(z.im) == 0; }

const GaussianRational kOne{Rational(1), Rational(0)};
const GaussianRational kI{Rational(0), Rational(1)};

}  // namespace

GaussianRational ComplexMatrix::at(std::size_t i, std::size_t j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? GaussianRational{} : it->second;
}

void ComplexMatrix::add(std::size_t i, std::size_t j, const GaussianRational& v) {
  if (i >= size_ || j >= size_) throw std::out_of_range("ComplexMatrix::add: index out of range");
  auto& slot = entries_[{i, j}];
  slot.re += v.re;
  slot.im += v.im;
  if (gauss_is_zero(slot)) entries_.erase({i, j});
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix t(size_);
  for (const auto& [pos, v] : entries_) t.entries_[{pos.second, pos.first}] = v;
  return t;
}

ComplexMatrix ComplexMatrix::scaled(const GaussianRational& s) const {
  ComplexMatrix out(size_);
  for (const auto& [pos, v] : entries_) out.add(pos.first, pos.second, mul(s, v));
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.size_ != b.size_) throw std::invalid_argument("ComplexMatrix product: size mismatch");
  ComplexMatrix c(a.size_);
  for (const auto& [pa, va] : a.entries_) {
    auto it = b.entries_.lower_bound({pa.second, 0});
    for (; it != b.entries_.end() && it->first.first == pa.second; ++it)
      c.add(pa.first, it->first.second, mul(va, it->second));
  }
  return c;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c = a;
  for (const auto& [pos, v] : b.entries_) c.add(pos.first, pos.second, v);
  return c;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c = a;
  for (const auto& [pos, v] : b.entries_) c.add(pos.first, pos.second, {-v.re, -v.im});
  return c;
}

GaussianRational ComplexMatrix::trace() const {
  GaussianRational t;
  for (const auto& [pos, v] : entries_)
    if (pos.first == pos.second) {
      t.re += v.re;
      t.im += v.im;
    }
  return t;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

namespace {

struct RootVector {
  AmbientVector root;
  ComplexMatrix e;
};

// Matrix size, torus weights, positive root vectors and invariant form of the
// defining representation.
struct DefiningData {
  std::size_t size = 0;
  std::vector<std::pair<ComplexMatrix, AmbientVector>> torus;
  std::vector<RootVector> roots;
  Matrix<Rational> form;
};

ComplexMatrix unit(std::size_t size, std::size_t i, std::size_t j, const GaussianRational& v = kOne) {
  ComplexMatrix m(size);
  m.add(i, j, v);
  return m;
}

AmbientVector e_combo(std::size_t dim, std::size_t i, int si, std::size_t j, int sj) {
  AmbientVector v(dim);
  v[i] += si;
  v[j] += sj;
  return v;
}

DefiningData defining_data(Family family, std::size_t n) {
  DefiningData d;
  const GaussianRational minus{Rational(-1), Rational(0)};
  if (family == Family::A) {
    d.size = n;
    d.form = Matrix<Rational>::identity(n);
    for (std::size_t j = 0; j + 1 < n; ++j)
      d.torus.emplace_back(unit(n, j, j, kI) + unit(n, n - 1, n - 1, {Rational(0), Rational(-1)}),
                           e_combo(n, j, 1, n - 1, -1));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) d.roots.push_back({e_combo(n, i, 1, j, -1), unit(n, i, j)});
    return d;
  }

  // B, C, D: index p(i) carries +w_i, q(i) carries -w_i; B adds a zero-weight
  // index 0 in front.
  const std::size_t off = family == Family::B ? 1 : 0;
  d.size = 2 * n + off;
  auto p = [&](std::size_t i) { return off + i; };
  auto q = [&](std::size_t i) { return off + n + i; };
  d.form = Matrix<Rational>(d.size, d.size);
  if (family == Family::B) d.form(0, 0) = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (family == Family::C) {
      d.form(p(i), q(i)) = 1;
      d.form(q(i), p(i)) = -1;
    } else {
      d.form(p(i), q(i)) = 1;
      d.form(q(i), p(i)) = 1;
    }
  }
  for (std::size_t j = 0; j < n; ++j)
    d.torus.emplace_back(unit(d.size, p(j), p(j), kI) + unit(d.size, q(j), q(j), {Rational(0), Rational(-1)}),
                         AmbientVector::unit(n, j));
  const int plus_sign = family == Family::C ? 1 : -1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      d.roots.push_back({e_combo(n, i, 1, j, -1), unit(d.size, p(i), p(j)) + unit(d.size, q(j), q(i), minus)});
      d.roots.push_back({e_combo(n, i, 1, j, 1),
                         unit(d.size, p(i), q(j)) +
                             unit(d.size, p(j), q(i), {Rational(plus_sign), Rational(0)})});
    }
  if (family == Family::B)
    for (std::size_t i = 0; i < n; ++i)
      d.roots.push_back({AmbientVector::unit(n, i), unit(d.size, p(i), 0) + unit(d.size, 0, q(i), minus)});
  if (family == Family::C)
    for (std::size_t i = 0; i < n; ++i)
      d.roots.push_back({Rational(2) * AmbientVector::unit(n, i), unit(d.size, p(i), q(i))});
  return d;
}

Rational real_trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  const auto t = (a * b).trace();
  if (sgn(t.im) != 0) throw ConsistencyError("trace form is not real on the compact basis");
  return t.re;
}

}  // namespace

std::size_t AlgebraRealization::root_index(const AmbientVector& positive_root) const {
  const auto& pos = system_.positive_roots();
  auto it = std::lower_bound(pos.begin(), pos.end(), positive_root);
  if (it == pos.end() || !(*it == positive_root))
    throw std::invalid_argument("not a positive root of " + system_.name() + ": " + to_string(positive_root));
  return static_cast<std::size_t>(it - pos.begin());
}

Matrix<Rational> AlgebraRealization::ad(std::size_t a) const {
  const std::size_t n = dim();
  Matrix<Rational> m(n, n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t k = 0; k < n; ++k) m(k, l) = structure_constant(a, l, k);
  return m;
}

std::vector<Rational> AlgebraRealization::coordinates(const ComplexMatrix& m) const {
  const std::size_t n = dim();
  std::vector<Rational> traces(n);
  for (std::size_t k = 0; k < n; ++k) {
    GaussianRational t;
    for (const auto& [pos, v] : m.entries()) {
      const auto w = basis_[k].at(pos.second, pos.first);
      if (gauss_is_zero(w)) continue;
      const auto prod = mul(v, w);
      t.re += prod.re;
      t.im += prod.im;
    }
    if (sgn(t.im) != 0) throw ConsistencyError("matrix is outside the compact real form");
    traces[k] = t.re;
  }
  std::vector<Rational> coords(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (sgn(traces[k]) != 0) coords[i] += trace_gram_inverse_(i, k) * traces[k];

  ComplexMatrix rebuilt(m.size());
  for (std::size_t k = 0; k < n; ++k)
    if (sgn(coords[k]) != 0) rebuilt = rebuilt + basis_[k].scaled({coords[k], Rational(0)});
  if (!(rebuilt == m)) throw ConsistencyError("matrix is not in the real span of the basis");
  return coords;
}

AlgebraRealization build_algebra(Family family, int n) {
  AlgebraRealization alg;
  alg.system_ = RootSystem::build(family, n);
  const auto data = defining_data(family, static_cast<std::size_t>(n));
  alg.defining_form_ = data.form;

  for (const auto& [h, weight] : data.torus) {
    alg.basis_.push_back(h);
    alg.torus_weights_.push_back(weight);
  }
  const auto& pos = alg.system_.positive_roots();
  if (data.roots.size() != pos.size()) throw ConsistencyError("root vector count mismatch");
  std::vector<const ComplexMatrix*> ordered(pos.size(), nullptr);
  for (const auto& rv : data.roots) ordered[alg.root_index(rv.root)] = &rv.e;
  for (const auto* e : ordered) {
    const ComplexMatrix et = e->transpose();
    alg.basis_.push_back(*e - et);
    alg.basis_.push_back((*e + et).scaled(kI));
  }

  const std::size_t dim = alg.basis_.size();
  alg.trace_gram_ = Matrix<Rational>(dim, dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = a; b < dim; ++b) {
      alg.trace_gram_(a, b) = real_trace_product(alg.basis_[a], alg.basis_[b]);
      alg.trace_gram_(b, a) = alg.trace_gram_(a, b);
    }
  alg.trace_gram_inverse_ = inverse(alg.trace_gram_);

  alg.structure_.assign(dim * dim * dim, Rational(0));
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = a + 1; b < dim; ++b) {
      const auto c = alg.coordinates(commutator(alg.basis_[a], alg.basis_[b]));
      for (std::size_t k = 0; k < dim; ++k) {
        if (sgn(c[k]) == 0) continue;
        alg.structure_[(a * dim + b) * dim + k] = c[k];
        alg.structure_[(b * dim + a) * dim + k] = -c[k];
      }
    }
  alg.killing_ = killing_gram_from_structure(alg);
  return alg;
}

namespace {

// Row a of the Killing Gram: B(b_a, b_b) = sum_{k,l} c_{a l}^k c_{b k}^l.
void killing_row(const AlgebraRealization& alg, std::size_t a, Matrix<Rational>& out) {
  const std::size_t n = alg.dim();
  for (std::size_t b = 0; b < n; ++b) {
    Rational s(0);
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& x = alg.structure_constant(a, l, k);
        if (sgn(x) == 0) continue;
        const Rational& y = alg.structure_constant(b, k, l);
        if (sgn(y) == 0) continue;
        s += x * y;
      }
    out(a, b) = s;
  }
}

}  // namespace

Matrix<Rational> killing_gram_from_structure(const AlgebraRealization& alg) {
  const long n = static_cast<long>(alg.dim());
  Matrix<Rational> out(alg.dim(), alg.dim());
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_budget())
  for (long a = 0; a < n; ++a) killing_row(alg, static_cast<std::size_t>(a), out);
  return out;
}

Matrix<Rational> killing_gram_from_structure_serial(const AlgebraRealization& alg) {
  Matrix<Rational> out(alg.dim(), alg.dim());
  for (std::size_t a = 0; a < alg.dim(); ++a) killing_row(alg, a, out);
  return out;
}

bool killing_is_ad_invariant(const AlgebraRealization& alg) {
  const auto& k = alg.killing_gram();
  for (std::size_t z = 0; z < alg.dim(); ++z) {
    const auto adz = alg.ad(z);
    const auto lhs = adz.transpose() * k + k * adz;
    for (std::size_t i = 0; i < lhs.rows(); ++i)
      for (std::size_t j = 0; j < lhs.cols(); ++j)
        if (sgn(lhs(i, j)) != 0) return false;
  }
  return true;
}

}  // namespace flagx
