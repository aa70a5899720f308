#include <doctest.h>

#include "flagx/algebra.hpp"

using namespace flagx;

namespace {

const std::vector<std::pair<Family, int>> kCases{{Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::B, 2},
                                                 {Family::B, 3}, {Family::C, 3}, {Family::D, 3}, {Family::D, 4}};

Rational killing_over_trace(Family f, int n) {
  switch (f) {
    case Family::A: return 2 * n;
    case Family::B: return 2 * n + 1 - 2;
    case Family::C: return 2 * n + 2;
    case Family::D: return 2 * n - 2;
  }
  return 0;
}

}  // namespace

TEST_CASE("su(3) against the explicit basis") {
  auto alg = build_algebra(Family::A, 3);
  CHECK(alg.dim() == 8);
  CHECK(alg.rank() == 2);
  const auto x1 = alg.x_index(alg.root_index(AmbientVector{1, -1, 0}));
  CHECK(alg.killing_gram()(x1, x1) == -12);
  // X_1 is the real antisymmetric unit in the (1,2) slot.
  const auto& m = alg.basis()[x1];
  CHECK(m.at(0, 1) == GaussianRational{1, 0});
  CHECK(m.at(1, 0) == GaussianRational{-1, 0});
  CHECK(m.entries().size() == 2);
  const auto& y = alg.basis()[alg.y_index(alg.root_index(AmbientVector{1, -1, 0}))];
  CHECK(y.at(0, 1) == GaussianRational{0, 1});
  CHECK(y.at(1, 0) == GaussianRational{0, 1});
}

TEST_CASE("Killing form is a fixed multiple of the trace form") {
  for (auto [f, n] : kCases) {
    auto alg = build_algebra(f, n);
    CAPTURE(alg.system().name());
    CHECK(alg.killing_gram() == killing_over_trace(f, n) * alg.trace_gram());
  }
}

TEST_CASE("Killing form structure") {
  for (auto [f, n] : kCases) {
    auto alg = build_algebra(f, n);
    CAPTURE(alg.system().name());
    const auto& k = alg.killing_gram();
    CHECK(k.is_symmetric());
    CHECK(is_positive_definite(Rational(-1) * k));
    CHECK(killing_is_ad_invariant(alg));
    for (std::size_t j = 0; j < alg.rank(); ++j)
      for (std::size_t b = alg.rank(); b < alg.dim(); ++b) CHECK(k(j, b) == 0);
    CHECK(killing_gram_from_structure_serial(alg) == k);
  }
}

TEST_CASE("basis matrices lie in the compact real form") {
  for (auto [f, n] : kCases) {
    auto alg = build_algebra(f, n);
    CAPTURE(alg.system().name());
    ComplexMatrix s(alg.defining_form().rows());
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 0; j < s.size(); ++j)
        if (alg.defining_form()(i, j) != 0) s.add(i, j, {alg.defining_form()(i, j), 0});
    for (const auto& m : alg.basis()) {
      // anti-Hermitian
      for (const auto& [pos, v] : m.entries()) {
        const auto w = m.at(pos.second, pos.first);
        CHECK(w.re == -v.re);
        CHECK(w.im == v.im);
      }
      if (f == Family::A)
        CHECK(m.trace() == GaussianRational{});
      else
        CHECK((m.transpose() * s + s * m).is_zero());
    }
  }
}

TEST_CASE("torus brackets follow the roots") {
  for (auto [f, n] : kCases) {
    auto alg = build_algebra(f, n);
    const auto& pos = alg.system().positive_roots();
    for (std::size_t j = 0; j < alg.rank(); ++j)
      for (std::size_t r = 0; r < pos.size(); ++r) {
        const Rational a = pos[r].dot(alg.torus_weight(j));
        CHECK(alg.structure_constant(j, alg.x_index(r), alg.y_index(r)) == a);
        CHECK(alg.structure_constant(j, alg.y_index(r), alg.x_index(r)) == -a);
        for (std::size_t k = 0; k < alg.rank(); ++k) CHECK(alg.structure_constant(j, k, alg.x_index(r)) == 0);
      }
  }
}

TEST_CASE("structure constants reproduce commutators") {
  auto alg = build_algebra(Family::C, 3);
  const auto& b = alg.basis();
  for (std::size_t a = 0; a < alg.dim(); a += 3)
    for (std::size_t c = 0; c < alg.dim(); c += 2) {
      ComplexMatrix sum(b[0].size());
      for (std::size_t k = 0; k < alg.dim(); ++k) {
        const auto& x = alg.structure_constant(a, c, k);
        if (x != 0) sum = sum + b[k].scaled({x, 0});
      }
      CHECK(sum == commutator(b[a], b[c]));
    }
}

TEST_CASE("ad is a representation") {
  auto alg = build_algebra(Family::B, 2);
  for (std::size_t a = 0; a < alg.dim(); ++a)
    for (std::size_t c = a + 1; c < alg.dim(); ++c) {
      auto lhs = alg.ad(a) * alg.ad(c) - alg.ad(c) * alg.ad(a);
      Matrix<Rational> rhs(alg.dim(), alg.dim());
      for (std::size_t k = 0; k < alg.dim(); ++k) {
        const auto& x = alg.structure_constant(a, c, k);
        if (x != 0) rhs = rhs + x * alg.ad(k);
      }
      CHECK(lhs == rhs);
    }
}

TEST_CASE("coordinates reject matrices outside the algebra") {
  auto alg = build_algebra(Family::A, 3);
  ComplexMatrix m(3);
  m.add(0, 0, {1, 0});
  CHECK_THROWS(alg.coordinates(m));
}
