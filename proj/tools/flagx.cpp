// flagx: command-line front end.
//
//   flagx roots    <family> <n>
//   flagx flag     <family> <n> [--parabolic i,j,...]
//   flagx extremal <family> <n> [--parabolic i,j,...]
//   flagx survey   [--families A,B,C,D] [--min-rank r] [--max-rank r]
//   flagx spectrum <family> <n> [--parabolic ...] [--xi r1,...] [--float]
//   flagx su3      scan|optimize [...]
//
// n is the classical parameter: A n = SU(n), B n = SO(2n+1), C n = Sp(n),
// D n = SO(2n). --parabolic lists the 1-based simple roots kept in the
// isotropy (the set Pi_0). Exit codes: 0 ok, 1 usage, 2 domain error.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "flagx/errors.hpp"
#include "flagx/extremality.hpp"
#include "flagx/report.hpp"
#include "flagx/spectrum.hpp"
#include "flagx/su3.hpp"

namespace {

using namespace flagx;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Left-aligned columns separated by two spaces.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  std::string str() const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_)
      for (std::size_t c = 0; c < r.size(); ++c) {
        if (width.size() <= c) width.push_back(0);
        width[c] = std::max(width[c], r[c].size());
      }
    std::ostringstream out;
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t c = 0; c < r.size(); ++c) {
        line += r[c];
        if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
      }
      out << line << '\n';
    }
    return out.str();
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string kv(const std::string& key, const std::string& value) { return key + ": " + value + "\n"; }

template <class T>
std::string list_str(const std::vector<T>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    if constexpr (std::is_same_v<T, double>)
      s += fmt_double(xs[i]);
    else if constexpr (std::is_same_v<T, Rational>)
      s += to_string(xs[i]);
    else
      s += std::to_string(xs[i]);
  }
  return s + "]";
}

// Shared argument state for the family/n commands.
struct Target {
  std::string family;
  int n = 0;
  std::vector<int> parabolic;
  std::string scale = "1";
};

Family family_arg(const std::string& text) {
  try {
    return parse_family(text);
  } catch (const std::exception&) {
    throw UsageError("unknown family '" + text + "' (expected A, B, C or D)");
  }
}

Rational rational_arg(const std::string& text, const std::string& what) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw UsageError("malformed " + what + " '" + text + "' (expected p or p/q)");
  }
}

RootSystem system_of(const Target& t) {
  const Family f = family_arg(t.family);
  if (t.n < min_parameter(f))
    throw UsageError(std::string("family ") + family_letter(f) + " needs n >= " + std::to_string(min_parameter(f)));
  const Rational scale = rational_arg(t.scale, "scale");
  if (sgn(scale) <= 0) throw UsageError("scale must be positive");
  return RootSystem::build(f, t.n, scale);
}

FlagManifold flag_of(const Target& t) {
  const auto sys = system_of(t);
  std::vector<std::size_t> pi0;
  for (int i : t.parabolic) {
    if (i < 1 || i > sys.rank())
      throw DomainError("parabolic index " + std::to_string(i) + " outside 1.." + std::to_string(sys.rank()));
    pi0.push_back(static_cast<std::size_t>(i - 1));
  }
  return build_flag(sys, pi0);
}

json target_inputs(const Target& t, const FlagManifold* flag) {
  json in = {{"family", t.family}, {"n", t.n}};
  if (flag) {
    in["rank"] = flag->system().rank();
    json p = json::array();
    for (auto i : flag->pi0()) p.push_back(i + 1);
    in["parabolic"] = p;
    in["scale"] = to_json(flag->system().form_scale());
  }
  return in;
}

std::vector<int> pi0_one_based(const FlagManifold& flag) {
  std::vector<int> out;
  for (auto i : flag.pi0()) out.push_back(static_cast<int>(i) + 1);
  return out;
}

std::string flag_header(const FlagManifold& flag) {
  std::string s = kv("system", flag.system().name());
  s += kv("parabolic", list_str(pi0_one_based(flag)));
  s += kv("scale", to_string(flag.system().form_scale()));
  s += kv("dim_complex", std::to_string(flag.dim_complex()));
  s += kv("center_dim", std::to_string(flag.center_dim()));
  s += kv("delta_m", to_string(flag.delta_m()));
  return s;
}

std::string t_root_table(const TRootDecomposition& d, const Rational* mu) {
  std::vector<std::string> head{"j", "rho", "m", "beta"};
  if (mu) head.push_back("mu/beta");
  Table tab(head);
  for (std::size_t j = 0; j < d.classes.size(); ++j) {
    const auto& c = d.classes[j];
    std::vector<std::string> row{std::to_string(j + 1), to_string(c.rho), std::to_string(c.multiplicity),
                                 to_string(c.beta)};
    if (mu) row.push_back(to_string(Rational(*mu / c.beta)));
    tab.add(row);
  }
  return tab.str();
}

std::string cmd_roots(const Target& t, bool as_json) {
  const auto sys = system_of(t);
  if (as_json) {
    json in = target_inputs(t, nullptr);
    in["rank"] = sys.rank();
    in["scale"] = to_json(sys.form_scale());
    return dump(envelope("roots", in, root_system_json(sys)));
  }
  std::string s = kv("system", sys.name());
  s += kv("rank", std::to_string(sys.rank()));
  s += kv("ambient_dim", std::to_string(sys.ambient_dim()));
  s += kv("root_count", std::to_string(sys.roots().size()));
  s += kv("delta", to_string(sum_of(sys.positive_roots())));
  Table tab({"root", "kind", "norm2"});
  for (const auto& r : sys.positive_roots()) {
    bool simple = false;
    for (const auto& a : sys.simple_roots()) simple |= (a == r);
    tab.add({to_string(r), simple ? "simple" : "positive", to_string(sys.inner(r, r))});
  }
  return s + tab.str();
}

std::string cmd_flag(const Target& t, bool as_json) {
  const auto flag = flag_of(t);
  const auto d = t_root_decomposition(flag);
  if (as_json) {
    json out = {{"name", flag.system().name()}};
    out.update(flag_json(flag, d));
    return dump(envelope("flag", target_inputs(t, &flag), out));
  }
  return flag_header(flag) + t_root_table(d, nullptr);
}

std::string cmd_extremal(const Target& t, bool as_json) {
  const auto flag = flag_of(t);
  const auto rep = check_extremality(flag);
  std::vector<Rational> pairing;
  if (flag.is_full())
    for (std::size_t k = 0; k < flag.system().simple_roots().size(); ++k) pairing.push_back(pairing_residual(flag, k));
  if (as_json) {
    json out = {{"name", flag.system().name()}, {"dim_complex", flag.dim_complex()}};
    out.update(to_json(rep));
    if (flag.is_full()) {
      json p = json::array();
      for (const auto& x : pairing) p.push_back(to_json(x));
      out["pairing_residuals"] = p;
    }
    return dump(envelope("extremal", target_inputs(t, &flag), out));
  }
  std::string s = flag_header(flag);
  s += kv("verdict", to_string(rep.verdict));
  s += kv("mu", to_string(rep.mu));
  s += kv("residual", to_string(rep.residual));
  if (flag.is_full()) s += kv("pairing_residuals", list_str(pairing));
  s += kv("assumes_full_isometry_group", rep.assumes_full_isometry_group ? "true" : "false");
  return s + t_root_table(rep.t_roots, &rep.mu);
}

struct SurveyArgs {
  std::vector<std::string> families{"A", "B", "C", "D"};
  std::optional<int> min_rank;
  std::optional<int> max_rank;
};

int default_max_rank(Family f) { return f == Family::A ? 9 : 8; }

std::string cmd_survey(const SurveyArgs& a, bool as_json) {
  if (a.families.empty()) throw UsageError("empty family set");
  std::vector<SurveyRange> ranges;
  std::vector<std::string> seen;
  for (const auto& text : a.families) {
    if (text.empty()) throw UsageError("empty family name");
    const Family f = family_arg(text);
    const std::string letter(1, family_letter(f));
    if (std::find(seen.begin(), seen.end(), letter) != seen.end()) throw UsageError("family " + letter + " listed twice");
    seen.push_back(letter);
    const int lowest = rank_of(f, min_parameter(f));
    const int lo = std::max(a.min_rank.value_or(std::max(2, lowest)), lowest);
    const int hi = a.max_rank.value_or(default_max_rank(f));
    if (hi < lo) throw UsageError("max-rank " + std::to_string(hi) + " below the minimum rank " + std::to_string(lo) + " of family " + letter);
    ranges.push_back({f, lo, hi});
  }
  if (a.min_rank && *a.min_rank < 1) throw UsageError("min-rank must be positive");
  const auto rows = survey_full_flags(ranges);
  if (as_json) {
    json fams = json::array();
    json rj = json::array();
    for (const auto& r : ranges) {
      fams.push_back(std::string(1, family_letter(r.family)));
      rj.push_back({{"family", std::string(1, family_letter(r.family))}, {"min_rank", r.min_rank}, {"max_rank", r.max_rank}});
    }
    return dump(envelope("survey", {{"families", fams}, {"ranges", rj}}, survey_json(rows)));
  }
  Table tab({"system", "n", "center_dim", "mu", "verdict", "residual"});
  int extremal = 0;
  for (const auto& r : rows) {
    if (r.report.verdict == Verdict::Extremal) ++extremal;
    tab.add({std::string(1, family_letter(r.family)) + std::to_string(r.rank),
             std::to_string(parameter_for_rank(r.family, r.rank)), std::to_string(r.report.center_dim),
             to_string(r.report.mu), to_string(r.report.verdict), to_string(r.report.residual)});
  }
  return tab.str() + kv("extremal_count", std::to_string(extremal));
}

struct SpectrumArgs {
  Target target;
  std::vector<std::string> xi;
  bool use_float = false;
};

template <class Scalar>
std::string spectrum_text(const FlagManifold& flag, const MetricParameter<Scalar>& xi, const SpectrumReport<Scalar>& rep,
                          const Scalar& volume) {
  auto sc = [](const Scalar& x) {
    if constexpr (std::is_same_v<Scalar, Rational>)
      return to_string(x);
    else
      return fmt_double(x);
  };
  std::string s = flag_header(flag);
  std::string xs = "[";
  for (std::size_t i = 0; i < xi.coords.size(); ++i) xs += (i ? ", " : "") + sc(xi.coords[i]);
  s += kv("xi", xs + "]");
  s += kv("volume_ratio", sc(volume));
  s += "D on the torus:\n";
  Table tab({});
  for (std::size_t i = 0; i < rep.d_matrix.rows(); ++i) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j < rep.d_matrix.cols(); ++j) row.push_back(sc(rep.d_matrix(i, j)));
    tab.add(row);
  }
  std::string body = tab.str();
  s += body.substr(body.find('\n') + 1);
  s += kv("eigenvalues", list_str(rep.eigenvalues));
  s += kv("center_eigenvalues", list_str(rep.center_eigenvalues));
  s += kv("lambda1_candidate", fmt_double(rep.lambda1_candidate));
  std::vector<Scalar> poly = rep.char_poly;
  std::string ps = "[";
  for (std::size_t i = 0; i < poly.size(); ++i) ps += (i ? ", " : "") + sc(poly[i]);
  s += kv("char_poly", ps + "]");
  s += kv("char_poly_at_two", sc(rep.char_poly_at_two));
  s += kv("eigenvalue_two_exact", rep.eigenvalue_two_exact ? "true" : "false");
  return s;
}

template <class Scalar>
std::string run_spectrum(const SpectrumArgs& a, const FlagManifold& flag, const InvariantMetrics& im,
                         const MetricParameter<Scalar>& xi, bool is_ke, bool as_json) {
  const auto rep = im.casimir_on_torus(xi);
  const Scalar volume = im.volume_ratio(xi);
  if (!as_json) return spectrum_text(flag, xi, rep, volume);
  json in = target_inputs(a.target, &flag);
  json xj = json::array();
  for (const auto& x : xi.coords) {
    if constexpr (std::is_same_v<Scalar, Rational>)
      xj.push_back(to_json(x));
    else
      xj.push_back(x);
  }
  in["xi"] = is_ke ? json(nullptr) : xj;
  json out = {{"name", flag.system().name()}, {"xi", xj}, {"xi_is_ke", is_ke}};
  if constexpr (std::is_same_v<Scalar, Rational>)
    out["volume_ratio"] = to_json(volume);
  else
    out["volume_ratio"] = volume;
  out["spectrum"] = to_json(rep);
  return dump(envelope("spectrum", in, out));
}

std::string cmd_spectrum(const SpectrumArgs& a, bool as_json) {
  if (a.target.scale != "1") rational_arg(a.target.scale, "scale");
  const auto flag = flag_of(a.target);
  InvariantMetrics im(flag);
  if (a.xi.empty()) {
    if (a.use_float) throw UsageError("--float needs --xi");
    return run_spectrum(a, flag, im, im.ke_parameter(), true, as_json);
  }
  if (a.use_float) {
    MetricParameter<double> xi;
    for (const auto& text : a.xi) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(text, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != text.size() || !std::isfinite(v)) throw UsageError("malformed float '" + text + "' in --xi");
      xi.coords.push_back(v);
    }
    return run_spectrum(a, flag, im, xi, false, as_json);
  }
  MetricParameter<Rational> xi;
  for (const auto& text : a.xi) xi.coords.push_back(rational_arg(text, "--xi entry"));
  return run_spectrum(a, flag, im, xi, false, as_json);
}

struct Su3Args {
  std::string mode;
  std::size_t samples = 10000;
  double s_min = 0.05;
  double s_max = 2.0;
  double tol = 1e-10;
  std::vector<double> bracket{0.1, 1.0};
  bool emit_samples = false;
};

std::string cmd_su3(const Su3Args& a, bool as_json) {
  if (a.mode == "scan") {
    if (!(a.s_min > 0.0)) throw UsageError("s-min must be positive");
    if (!(a.s_min < a.s_max)) throw UsageError("s-min must be below s-max");
    if (a.samples < 2) throw UsageError("samples must be at least 2");
    const auto scan = su3::lambda1_scan(a.samples, a.s_min, a.s_max);
    if (as_json) {
      json in = {{"mode", "scan"}, {"samples", a.samples}, {"s_min", a.s_min}, {"s_max", a.s_max}};
      return dump(envelope("su3", in, to_json(scan, a.emit_samples)));
    }
    std::string s = kv("sample_count", std::to_string(scan.samples.size()));
    s += kv("max_value", fmt_double(scan.max_value));
    s += kv("argmax_s", fmt_double(scan.argmax_s));
    s += kv("max_excess_over_two", fmt_double(scan.max_value - 2.0));
    if (a.emit_samples) {
      Table tab({"s", "t", "f"});
      for (const auto& x : scan.samples) tab.add({fmt_double(x.s), fmt_double(x.t), fmt_double(x.f)});
      s += tab.str();
    }
    return s;
  }
  if (!(a.tol > 0.0)) throw UsageError("tol must be positive");
  if (a.bracket.size() != 2 || !(a.bracket[0] > 0.0) || !(a.bracket[0] < a.bracket[1]))
    throw UsageError("bracket must be lo,hi with 0 < lo < hi");
  const auto opt = su3::maximize_lambda1_on_curve(a.tol, a.bracket[0], a.bracket[1]);
  if (as_json) {
    json in = {{"mode", "optimize"}, {"tol", a.tol}, {"bracket", a.bracket}};
    return dump(envelope("su3", in, to_json(opt)));
  }
  std::string s = kv("s_star", fmt_double(opt.s_star));
  s += kv("t_star", fmt_double(opt.t_star));
  s += kv("f_star", fmt_double(opt.f_star));
  s += kv("iterations", std::to_string(opt.iterations));
  s += kv("bracket", "[" + fmt_double(opt.bracket_lo) + ", " + fmt_double(opt.bracket_hi) + "]");
  return s;
}

void add_target(CLI::App* sub, Target& t, bool with_parabolic, bool with_scale) {
  sub->add_option("family", t.family, "A, B, C or D")->required();
  sub->add_option("n", t.n, "classical parameter: SU(n), SO(2n+1), Sp(n), SO(2n)")->required();
  if (with_parabolic)
    sub->add_option("--parabolic", t.parabolic, "1-based simple roots kept in the isotropy")->delimiter(',');
  if (with_scale) sub->add_option("--scale", t.scale, "invariant form scale p/q");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremality of Kaehler-Einstein metrics on classical flag manifolds"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

  Target roots_t, flag_t, extremal_t;
  SpectrumArgs spectrum_a;
  SurveyArgs survey_a;
  Su3Args su3_a;

  auto* roots = app.add_subcommand("roots", "list the root system");
  add_target(roots, roots_t, false, true);
  auto* flag = app.add_subcommand("flag", "flag manifold and T-root classes");
  add_target(flag, flag_t, true, true);
  auto* extremal = app.add_subcommand("extremal", "extremality verdict");
  add_target(extremal, extremal_t, true, true);
  auto* survey = app.add_subcommand("survey", "verdicts over full flags");
  survey->add_option("--families", survey_a.families, "families to include")->delimiter(',');
  survey->add_option("--min-rank", survey_a.min_rank, "smallest rank (default 2, or the family minimum)");
  survey->add_option("--max-rank", survey_a.max_rank, "largest rank (default 9 for A, 8 otherwise)");
  auto* spectrum = app.add_subcommand("spectrum", "Casimir operator on the torus");
  add_target(spectrum, spectrum_a.target, true, false);
  spectrum->add_option("--xi", spectrum_a.xi, "torus coordinates of xi (default: Kaehler-Einstein)")->delimiter(',');
  spectrum->add_flag("--float", spectrum_a.use_float, "read --xi as floating point");
  auto* su3 = app.add_subcommand("su3", "SU(3)/T^2 eigenvalue along the constant-volume curve");
  su3->add_option("mode", su3_a.mode, "scan or optimize")->required()->check(CLI::IsMember({"scan", "optimize"}));
  su3->add_option("--samples", su3_a.samples, "scan sample count");
  su3->add_option("--s-min", su3_a.s_min, "scan lower end");
  su3->add_option("--s-max", su3_a.s_max, "scan upper end");
  su3->add_option("--tol", su3_a.tol, "optimizer bracket width");
  su3->add_option("--bracket", su3_a.bracket, "optimizer search range lo,hi")->delimiter(',')->expected(2);
  su3->add_flag("--emit-samples", su3_a.emit_samples, "include every sample");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "flagx: " << e.what() << "\n";
    return 1;
  }

  const bool as_json = format == "json";
  try {
    std::string out;
    if (*roots) out = cmd_roots(roots_t, as_json);
    else if (*flag) out = cmd_flag(flag_t, as_json);
    else if (*extremal) out = cmd_extremal(extremal_t, as_json);
    else if (*survey) out = cmd_survey(survey_a, as_json);
    else if (*spectrum) out = cmd_spectrum(spectrum_a, as_json);
    else if (*su3) out = cmd_su3(su3_a, as_json);
    std::cout << out;
    std::cout.flush();
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "flagx: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "flagx: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "flagx: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "flagx: internal error: " << e.what() << "\n";
    return 2;
  }
}
