// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "flagx/extremality.hpp"
#include "flagx/spectrum.hpp"
#include "flagx/su3.hpp"
#include "frac.hpp"

using namespace flagx;

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

FlagManifold full(Family f, int n) { return build_flag(RootSystem::build(f, n), {}); }

std::vector<std::size_t> su3n_pi0(int n) {
  std::vector<std::size_t> pi0;
  for (int i = 0; i < 3 * n - 1; ++i)
    if (i != n - 1 && i != 2 * n - 1) pi0.push_back(i);
  return pi0;
}

std::string name(Family f, int n) { return RootSystem::build(f, n).name(); }

// 1. Full-flag survey.
std::string survey() {
  std::vector<SurveyRange> ranges{{Family::A, 1, 9}, {Family::B, 2, 8}, {Family::C, 3, 8}, {Family::D, 3, 8}};
  const auto rows = survey_full_flags(ranges);
  expect(rows.size() == 9 + 7 + 6 + 6, "row count");
  int extremal = 0;
  for (const auto& r : rows) {
    const std::string label = std::string(1, family_letter(r.family)) + std::to_string(r.rank);
    Verdict want = Verdict::NotExtremal;
    if (r.family == Family::A && r.rank == 1) want = Verdict::NotApplicable;
    if (r.family == Family::A && r.rank == 2) want = Verdict::Extremal;
    expect(r.report.verdict == want, label + " is " + to_string(r.report.verdict));
    if (r.report.verdict == Verdict::Extremal) ++extremal;
  }
  return std::to_string(rows.size()) + " full flags, EXTREMAL only A2, A1 NOT_APPLICABLE";
}

// 2. SU(3n)/S(U(n)^3).
std::string su3n() {
  for (int n = 1; n <= 4; ++n) {
    const auto flag = build_flag(RootSystem::build(Family::A, 3 * n), su3n_pi0(n));
    const auto rep = check_extremality(flag);
    const std::string tag = "n=" + std::to_string(n);
    expect(rep.verdict == Verdict::Extremal, tag + " verdict");
    expect(rep.mu == frac(8 * n, 3), tag + " mu");
    expect(rep.t_roots.classes.size() == 3, tag + " class count");
    std::multiset<Rational> betas;
    for (const auto& c : rep.t_roots.classes) {
      expect(c.multiplicity == n * n, tag + " multiplicity");
      betas.insert(c.beta);
    }
    expect(betas == std::multiset<Rational>{Rational(2 * n), Rational(2 * n), Rational(4 * n)}, tag + " betas");
  }
  return "n=1..4 EXTREMAL, mu=8n/3, m=n^2, beta={2n,4n,2n}";
}

// 3. Scalar reductions against the closed forms.
std::string scalar_reductions() {
  int checked = 0;
  for (int n = 3; rank_of(Family::A, n) <= 8; ++n) {
    const auto flag = full(Family::A, n);
    expect(pairing_sum(flag, 0) == frac(n, 2 * (n - 1)), name(Family::A, n) + " sum");
    expect((pairing_residual(flag, 0) == 0) == (6 * (n - 1) == n * (n + 1)), name(Family::A, n) + " zero set");
    ++checked;
  }
  for (int n = 2; n <= 8; ++n) {
    const auto flag = full(Family::B, n);
    expect(pairing_sum(flag, n - 1) == frac(1, 2) * (1 + frac(1, n)), name(Family::B, n) + " sum");
    expect((pairing_residual(flag, n - 1) == 0) == (6 * n * n == (4 * n * n - 1) * (1 + n)),
           name(Family::B, n) + " zero set");
    ++checked;
  }
  for (int n = 3; n <= 8; ++n) {
    const auto flag = full(Family::C, n);
    const Rational sum = frac(1, n + 1) + frac(1, n) - frac(1, 2);
    expect(pairing_sum(flag, n - 1) == sum, name(Family::C, n) + " sum");
    // residual = mu * sum - 4, mu = n^2 / ||delta||^2
    const Rational delta2 = frac(2 * n * (n + 1) * (2 * n + 1), 3);
    expect((pairing_residual(flag, n - 1) == 0) == (sum * delta2 == 4 * n * n), name(Family::C, n) + " zero set");
    ++checked;
  }
  for (int n = 3; n <= 8; ++n) {
    const auto flag = full(Family::D, n);
    expect((pairing_residual(flag, 0) == 0) == (3 * (n - 1) * (2 * n - 5) == (2 * n - 1) * (n * n - n - 3)),
           name(Family::D, n) + " equivalence");
    ++checked;
  }
  return std::to_string(checked) + " full flags, A/B/C sums and A/B/C/D zero sets";
}

// 4. delta identities.
std::string delta_identities() {
  int checked = 0;
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int n = min_parameter(f); rank_of(f, n) <= 8; ++n) {
      const auto sys = RootSystem::build(f, n);
      const auto delta = sum_of(sys.positive_roots());
      for (const auto& a : sys.simple_roots()) expect(sys.inner(delta, a) == sys.inner(a, a), sys.name() + " <delta,a>");
      Rational want;
      switch (f) {
        case Family::A: want = frac(n * (n - 1) * (n + 1), 3); break;
        case Family::B: want = frac(n * (4 * n * n - 1), 3); break;
        case Family::C: want = frac(2 * n * (n + 1) * (2 * n + 1), 3); break;
        case Family::D: want = frac(2 * n * (n - 1) * (2 * n - 1), 3); break;
      }
      expect(sys.inner(delta, delta) == want, sys.name() + " ||delta||^2");
      ++checked;
    }
  return std::to_string(checked) + " systems of rank <= 8";
}

// 5. SU(3) spectrum.
std::string su3_spectrum() {
  InvariantMetrics im(full(Family::A, 3));
  // (s, t) = (1/3, 1/3) is (a, b) = (1/3, 0).
  const auto rep = im.casimir_on_torus(MetricParameter<Rational>{{frac(1, 3), Rational(0)}});
  expect(rep.char_poly == std::vector<Rational>{6, -5, 1}, "char poly at (1/3,1/3) is not (x-2)(x-3)");
  expect(evaluate_polynomial(rep.char_poly, Rational(2)) == 0 && evaluate_polynomial(rep.char_poly, Rational(3)) == 0,
         "2 and 3 are not exact roots");
  std::mt19937 rng(20240611);
  std::uniform_real_distribution<double> u(std::log(0.02), std::log(5.0));
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double s = std::exp(u(rng));
    const double t = su3::curve_t(s);
    const auto r = im.casimir_on_torus(su3::parameter_from_st(s, t));
    const auto [lo, hi] = su3::closed_form_eigenvalues(s, t);
    worst = std::max({worst, std::abs(r.eigenvalues[0] - lo), std::abs(r.eigenvalues[1] - hi)});
  }
  expect(worst <= 1e-10, "curve mismatch " + std::to_string(worst));
  char buf[96];
  std::snprintf(buf, sizeof buf, "exact {2,3} at KE; 100 curve points, max deviation %.2e", worst);
  return buf;
}

// 6. Constrained maximization.
std::string su3_maximum() {
  const auto scan = su3::lambda1_scan(10000, 0.05, 2.0);
  for (const auto& x : scan.samples) expect(x.f <= 2.0 + 1e-12, "sample above 2 at s=" + std::to_string(x.s));
  const auto opt = su3::maximize_lambda1_on_curve(1e-10);
  expect(std::abs(opt.f_star - 2.0) <= 1e-9, "f* off");
  expect(std::abs(opt.s_star - 1.0 / 3) <= 1e-6, "s* off");
  char buf[128];
  std::snprintf(buf, sizeof buf, "scan max %.15f; optimizer s*=%.9f f*=%.12f", scan.max_value, opt.s_star, opt.f_star);
  return buf;
}

// 7. Eigenvalue 2 at the Kaehler-Einstein metric.
std::string eigenvalue_two() {
  std::vector<FlagManifold> flags;
  for (int n = 3; n <= 5; ++n) flags.push_back(full(Family::A, n));
  for (int n = 2; n <= 4; ++n) flags.push_back(full(Family::B, n));
  for (int n = 3; n <= 4; ++n) flags.push_back(full(Family::C, n));
  flags.push_back(full(Family::D, 4));
  flags.push_back(build_flag(RootSystem::build(Family::A, 6), su3n_pi0(2)));
  for (const auto& flag : flags) {
    InvariantMetrics im(flag);
    const auto rep = im.casimir_on_torus(im.ke_parameter());
    expect(rep.eigenvalue_two_exact && rep.char_poly_at_two == 0, flag.system().name() + ": p(2) != 0");
  }
  return std::to_string(flags.size()) + " flags, p(2) = 0 exactly";
}

// 8. Property suites.
std::string properties() {
  std::vector<FlagManifold> flags;
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int n = min_parameter(f); rank_of(f, n) <= 4; ++n) {
      const auto sys = RootSystem::build(f, n);
      for (int mask = 0; mask < (1 << sys.rank()) - 1; ++mask) {
        std::vector<std::size_t> pi0;
        for (int i = 0; i < sys.rank(); ++i)
          if (mask & (1 << i)) pi0.push_back(i);
        flags.push_back(build_flag(sys, pi0));
      }
    }
  for (int n = 1; n <= 3; ++n) flags.push_back(build_flag(RootSystem::build(Family::A, 3 * n), su3n_pi0(n)));

  for (const auto& flag : flags) {
    const auto& sys = flag.system();
    const std::string tag = sys.name() + " pi0 size " + std::to_string(flag.pi0().size());
    const auto base = check_extremality(flag);
    for (const Rational& c : {Rational(2), frac(7, 3)}) {
      const auto scaled = check_extremality(flag.with_form_scale(c));
      expect(scaled.verdict == base.verdict && scaled.residual == base.residual, tag + " scale");
    }
    const auto d = t_root_decomposition(flag);
    for (const auto& cls : d.classes)
      for (const auto& m : cls.members) expect(sys.inner(m, flag.delta_m()) == cls.beta, tag + " beta constancy");
    expect(satisfies_invariant_ordering(flag), tag + " invariant ordering");
    for (const auto& r : sys.roots()) {
      const auto p = project_to_center(r, flag);
      expect(project_to_center(p, flag) == p, tag + " idempotence");
    }
  }

  std::mt19937 rng(99);
  std::uniform_int_distribution<std::size_t> pick(0, flags.size() - 1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto& a = flags[pick(rng)];
    const auto& b = flags[pick(rng)];
    const auto va = check_extremality(a).verdict;
    const auto vb = check_extremality(b).verdict;
    const Verdict want = (va == Verdict::NotExtremal || vb == Verdict::NotExtremal) ? Verdict::NotExtremal : Verdict::Extremal;
    expect(check_product(std::vector<FlagManifold>{a, b}) == want, "product rule");
  }
  return std::to_string(flags.size()) + " flags, scales {1,2,7/3}, 20 random products";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
      {"full-flag survey", survey},
      {"SU(3n)/S(U(n)^3)", su3n},
      {"scalar reductions", scalar_reductions},
      {"delta identities", delta_identities},
      {"SU(3) spectrum", su3_spectrum},
      {"constrained maximum", su3_maximum},
      {"eigenvalue 2 at KE", eigenvalue_two},
      {"property suites", properties},
  };
  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      detail = criteria[i].second();
      ok = true;
    } catch (const Failure& f) {
      detail = f.what;
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failed;
    std::printf("%s %zu %-20s %s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), detail.c_str());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%zu criteria passed in %.2f s\n", static_cast<int>(criteria.size()) - failed, criteria.size(), secs);
  return failed == 0 ? 0 : 1;
}
