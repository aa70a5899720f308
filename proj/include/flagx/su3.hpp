#pragma once

// SU(3)/T^2 in the metric coordinates s = a - b, t = a + 2b, where
// xi = diag(ia, ib, -i(a+b)). Kaehler metrics with the volume of the
// Kaehler-Einstein one form the curve s t (s + t) = 2/27; along it the
// torus-restricted Casimir has eigenvalues
//     9/2 (t^2 + s^2 + 3st -+ sqrt(t^4 + s^4 - s^2 t^2)).

#include <cstddef>
#include <utility>
#include <vector>

#include "flagx/spectrum.hpp"

namespace flagx::su3 {

/// Unique t > 0 with s t (s + t) = 2/27. Throws DomainError for s <= 0.
double curve_t(double s);

/// (lower, upper) closed-form eigenvalues at a point of the curve.
std::pair<double, double> closed_form_eigenvalues(double s, double t);

/// Lower closed-form eigenvalue f(s, t(s)) along the curve.
double lambda1_on_curve(double s);

/// Torus parameter (a, b) for metric coordinates (s, t).
MetricParameter<double> parameter_from_st(double s, double t);

struct Sample {
  double s = 0.0;
  double t = 0.0;
  double f = 0.0;
};

struct ScanResult {
  std::vector<Sample> samples;
  double max_value = 0.0;
  double argmax_s = 0.0;
};

/// f on n_samples equally spaced s in [s_min, s_max]. Samples evaluated in
/// parallel; the maximum is the first sample attaining it. Throws DomainError
/// unless 0 < s_min < s_max and n_samples >= 2.
ScanResult lambda1_scan(std::size_t n_samples, double s_min, double s_max);
/// Single-threaded reference for lambda1_scan.
ScanResult lambda1_scan_serial(std::size_t n_samples, double s_min, double s_max);

struct Optimum {
  double s_star = 0.0;
  double t_star = 0.0;
  double f_star = 0.0;
  int iterations = 0;
  // coarse-grid bracket that seeded the golden-section search
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

/// Coarse grid bracketing on [lo, hi] followed by golden-section refinement of
/// f along the curve, stopping when the bracket is narrower than tol. Throws
/// DomainError for tol <= 0 or an invalid range and when the coarse maximum
/// sits on an end of the range (no interior bracket).
Optimum maximize_lambda1_on_curve(double tol, double lo = 0.1, double hi = 1.0);

}  // namespace flagx::su3
