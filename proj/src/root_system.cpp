#include "flagx/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "flagx/errors.hpp"
#include "flagx/matrix.hpp"

namespace flagx {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  auto fail = [&] { throw std::invalid_argument("malformed rational: '" + std::string(text) + "'"); };
  if (text.empty()) fail();
  const auto slash = text.find('/');
  auto check_int = [&](std::string_view part, bool allow_sign) {
    if (part.empty()) fail();
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) ++i;
    if (i == part.size()) fail();
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) fail();
  };
  std::string num(text.substr(0, slash));
  std::string den = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  check_int(num, true);
  check_int(den, false);
  if (num[0] == '+') num.erase(0, 1);
  mpz_class p(num, 10);
  mpz_class q(den, 10);
  if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

Family parse_family(std::string_view text) {
  if (text.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
      case 'A': return Family::A;
      case 'B': return Family::B;
      case 'C': return Family::C;
      case 'D': return Family::D;
      default: break;
    }
  }
  throw std::invalid_argument("unsupported family '" + std::string(text) + "' (expected A, B, C or D)");
}

int min_parameter(Family f) {
  switch (f) {
    case Family::A: return 2;
    case Family::B: return 2;
    case Family::C: return 3;
    case Family::D: return 3;
  }
  return 0;
}

int rank_of(Family f, int n) { return f == Family::A ? n - 1 : n; }
int parameter_for_rank(Family f, int rank) { return f == Family::A ? rank + 1 : rank; }

AmbientVector::AmbientVector(std::initializer_list<int> coords) {
  coords_.reserve(coords.size());
  for (int c : coords) coords_.emplace_back(c);
}

AmbientVector AmbientVector::unit(std::size_t dim, std::size_t i) {
  AmbientVector v(dim);
  v[i] = 1;
  return v;
}

bool AmbientVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Rational AmbientVector::dot(const AmbientVector& other) const {
  if (other.size() != size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < size(); ++i) s += coords_[i] * other.coords_[i];
  return s;
}

AmbientVector& AmbientVector::operator+=(const AmbientVector& other) {
  if (other.size() != size()) throw std::invalid_argument("vector sum: dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

AmbientVector& AmbientVector::operator-=(const AmbientVector& other) {
  if (other.size() != size()) throw std::invalid_argument("vector difference: dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

AmbientVector& AmbientVector::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

bool operator<(const AmbientVector& a, const AmbientVector& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end());
}

std::string to_string(const AmbientVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

namespace {

AmbientVector e_combo(std::size_t dim, std::size_t i, int si, std::size_t j, int sj) {
  AmbientVector v(dim);
  v[i] += si;
  v[j] += sj;
  return v;
}

}  // namespace

RootSystem RootSystem::build(Family family, int n, const Rational& form_scale) {
  if (n < min_parameter(family))
    throw DomainError(std::string("family ") + family_letter(family) + " requires n >= " +
                      std::to_string(min_parameter(family)) + ", got " + std::to_string(n));
  if (sgn(form_scale) <= 0) throw DomainError("form scale must be positive");

  RootSystem sys;
  sys.family_ = family;
  sys.n_ = n;
  sys.form_scale_ = form_scale;
  const std::size_t dim = static_cast<std::size_t>(n);
  const std::size_t un = dim;

  auto& pos = sys.positive_;
  auto& simple = sys.simple_;
  switch (family) {
    case Family::A:
      for (std::size_t i = 0; i < un; ++i)
        for (std::size_t j = i + 1; j < un; ++j) pos.push_back(e_combo(dim, i, 1, j, -1));
      for (std::size_t i = 0; i + 1 < un; ++i) simple.push_back(e_combo(dim, i, 1, i + 1, -1));
      break;
    case Family::B:
    case Family::C:
    case Family::D:
      for (std::size_t i = 0; i < un; ++i)
        for (std::size_t j = i + 1; j < un; ++j) {
          pos.push_back(e_combo(dim, i, 1, j, -1));
          pos.push_back(e_combo(dim, i, 1, j, 1));
        }
      if (family == Family::B)
        for (std::size_t i = 0; i < un; ++i) pos.push_back(AmbientVector::unit(dim, i));
      if (family == Family::C)
        for (std::size_t i = 0; i < un; ++i) pos.push_back(Rational(2) * AmbientVector::unit(dim, i));
      for (std::size_t i = 0; i + 1 < un; ++i) simple.push_back(e_combo(dim, i, 1, i + 1, -1));
      if (family == Family::B) simple.push_back(AmbientVector::unit(dim, un - 1));
      if (family == Family::C) simple.push_back(Rational(2) * AmbientVector::unit(dim, un - 1));
      if (family == Family::D) simple.push_back(e_combo(dim, un - 2, 1, un - 1, 1));
      break;
  }
  std::sort(pos.begin(), pos.end());
  sys.roots_ = pos;
  for (const auto& a : pos) sys.roots_.push_back(-a);
  std::sort(sys.roots_.begin(), sys.roots_.end());
  return sys;
}

std::string RootSystem::name() const { return std::string(1, family_letter(family_)) + std::to_string(rank()); }

RootSystem RootSystem::with_form_scale(const Rational& scale) const {
  if (sgn(scale) <= 0) throw DomainError("form scale must be positive");
  RootSystem copy = *this;
  copy.form_scale_ = scale;
  return copy;
}

Rational RootSystem::inner(const AmbientVector& u, const AmbientVector& v) const {
  if (u.size() != ambient_dim() || v.size() != ambient_dim())
    throw std::invalid_argument("inner: dimension mismatch with root system " + name());
  return form_scale_ * u.dot(v);
}

bool RootSystem::is_root(const AmbientVector& v) const { return std::binary_search(roots_.begin(), roots_.end(), v); }

bool RootSystem::is_positive_root(const AmbientVector& v) const {
  return std::binary_search(positive_.begin(), positive_.end(), v);
}

std::vector<Rational> RootSystem::simple_coordinates(const AmbientVector& v) const {
  // Least-squares normal equations on the simple roots; exact because the
  // simple roots are linearly independent.
  const std::size_t r = simple_.size();
  Matrix<Rational> gram(r, r);
  std::vector<Rational> rhs(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) gram(i, j) = simple_[i].dot(simple_[j]);
    rhs[i] = simple_[i].dot(v);
  }
  return solve(gram, rhs);
}

bool RootSystem::in_weight_space(const AmbientVector& v) const {
  if (v.size() != ambient_dim()) return false;
  if (family_ != Family::A) return true;
  Rational s(0);
  for (const auto& c : v.coords()) s += c;
  return sgn(s) == 0;
}

AmbientVector sum_of(std::span<const AmbientVector> vectors) {
  if (vectors.empty()) throw std::invalid_argument("sum_of: empty list");
  AmbientVector acc = vectors.front();
  for (std::size_t i = 1; i < vectors.size(); ++i) acc += vectors[i];
  return acc;
}

}  // namespace flagx
