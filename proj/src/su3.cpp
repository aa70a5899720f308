#include "flagx/su3.hpp"

#include <cmath>
#include <string>

#include "flagx/errors.hpp"
#include "flagx/parallel.hpp"

namespace flagx::su3 {

double curve_t(double s) {
  if (!(s > 0.0)) throw DomainError("curve_t: s must be positive");
  // Root of s t^2 + s^2 t - 2/27 = 0 written without cancellation.
  return (4.0 / 27.0) / (s * s + std::sqrt(s * s * s * s + 8.0 * s / 27.0));
}

std::pair<double, double> closed_form_eigenvalues(double s, double t) {
  const double base = t * t + s * s + 3.0 * s * t;
  const double root = std::sqrt(t * t * t * t + s * s * s * s - s * s * t * t);
  return {4.5 * (base - root), 4.5 * (base + root)};
}

double lambda1_on_curve(double s) { return closed_form_eigenvalues(s, curve_t(s)).first; }

MetricParameter<double> parameter_from_st(double s, double t) {
  const double b = (t - s) / 3.0;
  return {{s + b, b}};
}

namespace {

void check_range(std::size_t n, double s_min, double s_max) {
  if (n < 2) throw DomainError("scan needs at least 2 samples");
  if (!(s_min > 0.0) || !(s_min < s_max)) throw DomainError("scan range must satisfy 0 < s_min < s_max");
}

Sample sample_at(std::size_t i, std::size_t n, double s_min, double s_max) {
  Sample out;
  out.s = s_min + (s_max - s_min) * static_cast<double>(i) / static_cast<double>(n - 1);
  out.t = curve_t(out.s);
  out.f = closed_form_eigenvalues(out.s, out.t).first;
  return out;
}

ScanResult finish(std::vector<Sample> samples) {
  ScanResult r;
  std::size_t best = 0;
  for (std::size_t i = 1; i < samples.size(); ++i)
    if (samples[i].f > samples[best].f) best = i;
  r.max_value = samples[best].f;
  r.argmax_s = samples[best].s;
  r.samples = std::move(samples);
  return r;
}

}  // namespace

ScanResult lambda1_scan(std::size_t n_samples, double s_min, double s_max) {
  check_range(n_samples, s_min, s_max);
  std::vector<Sample> samples(n_samples);
  const long n = static_cast<long>(n_samples);
#pragma omp parallel for schedule(static) num_threads(thread_budget())
  for (long i = 0; i < n; ++i) samples[i] = sample_at(static_cast<std::size_t>(i), n_samples, s_min, s_max);
  return finish(std::move(samples));
}

ScanResult lambda1_scan_serial(std::size_t n_samples, double s_min, double s_max) {
  check_range(n_samples, s_min, s_max);
  std::vector<Sample> samples(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i) samples[i] = sample_at(i, n_samples, s_min, s_max);
  return finish(std::move(samples));
}

Optimum maximize_lambda1_on_curve(double tol, double lo, double hi) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  if (!(lo > 0.0) || !(lo < hi)) throw DomainError("bracket must satisfy 0 < lo < hi");

  constexpr std::size_t kGrid = 33;
  const auto coarse = lambda1_scan_serial(kGrid, lo, hi);
  std::size_t best = 0;
  for (std::size_t i = 0; i < kGrid; ++i)
    if (coarse.samples[i].s == coarse.argmax_s) best = i;
  if (best == 0 || best + 1 == kGrid)
    throw DomainError("failed to bracket the maximum inside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");

  Optimum opt;
  double a = coarse.samples[best - 1].s;
  double b = coarse.samples[best + 1].s;
  opt.bracket_lo = a;
  opt.bracket_hi = b;

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = lambda1_on_curve(c);
  double fd = lambda1_on_curve(d);
  while (b - a > tol && opt.iterations < 500) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = lambda1_on_curve(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = lambda1_on_curve(d);
    }
    ++opt.iterations;
  }
  opt.s_star = 0.5 * (a + b);
  opt.t_star = curve_t(opt.s_star);
  opt.f_star = lambda1_on_curve(opt.s_star);
  return opt;
}

}  // namespace flagx::su3
