#include "flagx/report.hpp"

#include <stdexcept>

namespace flagx {

json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j) { return parse_rational(j.get<std::string>()); }

json to_json(const AmbientVector& v) {
  json out = json::array();
  for (const auto& c : v.coords()) out.push_back(to_json(c));
  return out;
}

AmbientVector vector_from_json(const json& j) {
  std::vector<Rational> coords;
  for (const auto& c : j) coords.push_back(rational_from_json(c));
  return AmbientVector(std::move(coords));
}

json to_json(const TRootDecomposition& d) {
  json out = json::array();
  for (const auto& cls : d.classes) {
    json members = json::array();
    for (const auto& m : cls.members) members.push_back(to_json(m));
    out.push_back({{"rho", to_json(cls.rho)},
                   {"multiplicity", cls.multiplicity},
                   {"beta", to_json(cls.beta)},
                   {"members", members}});
  }
  return out;
}

TRootDecomposition t_roots_from_json(const json& j) {
  TRootDecomposition d;
  for (const auto& c : j) {
    TRootClass cls;
    cls.rho = vector_from_json(c.at("rho"));
    cls.multiplicity = c.at("multiplicity").get<int>();
    cls.beta = rational_from_json(c.at("beta"));
    for (const auto& m : c.at("members")) cls.members.push_back(vector_from_json(m));
    d.classes.push_back(std::move(cls));
  }
  return d;
}

json to_json(const ExtremalityReport& rep) {
  return {{"verdict", to_string(rep.verdict)},
          {"mu", to_json(rep.mu)},
          {"residual", to_json(rep.residual)},
          {"residual_is_zero", rep.residual.is_zero()},
          {"center_dim", rep.center_dim},
          {"assumes_full_isometry_group", rep.assumes_full_isometry_group},
          {"t_roots", to_json(rep.t_roots)}};
}

ExtremalityReport extremality_from_json(const json& j) {
  ExtremalityReport rep;
  rep.verdict = parse_verdict(j.at("verdict").get<std::string>());
  rep.mu = rational_from_json(j.at("mu"));
  rep.residual = vector_from_json(j.at("residual"));
  rep.center_dim = j.at("center_dim").get<int>();
  rep.assumes_full_isometry_group = j.at("assumes_full_isometry_group").get<bool>();
  rep.t_roots = t_roots_from_json(j.at("t_roots"));
  return rep;
}

namespace {

template <class Scalar>
json scalar_json(const Scalar& x) {
  if constexpr (std::is_same_v<Scalar, Rational>)
    return to_json(x);
  else
    return x;
}

template <class Scalar>
Scalar scalar_from_json(const json& j) {
  if constexpr (std::is_same_v<Scalar, Rational>)
    return rational_from_json(j);
  else
    return j.get<double>();
}

json floats(const std::vector<double>& xs) {
  json out = json::array();
  for (double x : xs) out.push_back(x);
  return out;
}

}  // namespace

template <class Scalar>
json to_json(const SpectrumReport<Scalar>& rep) {
  json matrix = json::array();
  for (std::size_t i = 0; i < rep.d_matrix.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < rep.d_matrix.cols(); ++j) row.push_back(scalar_json(rep.d_matrix(i, j)));
    matrix.push_back(row);
  }
  json poly = json::array();
  for (const auto& c : rep.char_poly) poly.push_back(scalar_json(c));
  return {{"exact", std::is_same_v<Scalar, Rational>},
          {"d_matrix", matrix},
          {"eigenvalues", floats(rep.eigenvalues)},
          {"center_eigenvalues", floats(rep.center_eigenvalues)},
          {"lambda1_candidate", rep.lambda1_candidate},
          {"char_poly", poly},
          {"char_poly_at_two", scalar_json(rep.char_poly_at_two)},
          {"eigenvalue_two_exact", rep.eigenvalue_two_exact}};
}

template <class Scalar>
SpectrumReport<Scalar> spectrum_from_json(const json& j) {
  if (j.at("exact").get<bool>() != std::is_same_v<Scalar, Rational>)
    throw std::invalid_argument("spectrum report scalar kind mismatch");
  SpectrumReport<Scalar> rep;
  const auto& m = j.at("d_matrix");
  rep.d_matrix = Matrix<Scalar>(m.size(), m.empty() ? 0 : m.front().size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t k = 0; k < m[i].size(); ++k) rep.d_matrix(i, k) = scalar_from_json<Scalar>(m[i][k]);
  rep.eigenvalues = j.at("eigenvalues").get<std::vector<double>>();
  rep.center_eigenvalues = j.at("center_eigenvalues").get<std::vector<double>>();
  rep.lambda1_candidate = j.at("lambda1_candidate").get<double>();
  for (const auto& c : j.at("char_poly")) rep.char_poly.push_back(scalar_from_json<Scalar>(c));
  rep.char_poly_at_two = scalar_from_json<Scalar>(j.at("char_poly_at_two"));
  rep.eigenvalue_two_exact = j.at("eigenvalue_two_exact").get<bool>();
  return rep;
}

template json to_json(const SpectrumReport<Rational>&);
template json to_json(const SpectrumReport<double>&);
template SpectrumReport<Rational> spectrum_from_json(const json&);
template SpectrumReport<double> spectrum_from_json(const json&);

json to_json(const su3::ScanResult& scan, bool with_samples) {
  json out = {{"sample_count", scan.samples.size()},
              {"max_value", scan.max_value},
              {"argmax_s", scan.argmax_s},
              {"max_excess_over_two", scan.max_value - 2.0}};
  if (with_samples) {
    json samples = json::array();
    for (const auto& s : scan.samples) samples.push_back({{"s", s.s}, {"t", s.t}, {"f", s.f}});
    out["samples"] = samples;
  }
  return out;
}

json to_json(const su3::Optimum& opt) {
  return {{"s_star", opt.s_star},
          {"t_star", opt.t_star},
          {"f_star", opt.f_star},
          {"iterations", opt.iterations},
          {"bracket", json::array({opt.bracket_lo, opt.bracket_hi})}};
}

json root_system_json(const RootSystem& sys) {
  auto list = [](const std::vector<AmbientVector>& vs) {
    json out = json::array();
    for (const auto& v : vs) out.push_back(to_json(v));
    return out;
  };
  return {{"name", sys.name()},
          {"rank", sys.rank()},
          {"ambient_dim", sys.ambient_dim()},
          {"root_count", sys.roots().size()},
          {"simple_roots", list(sys.simple_roots())},
          {"positive_roots", list(sys.positive_roots())},
          {"delta", to_json(sum_of(sys.positive_roots()))},
          {"roots", list(sys.roots())}};
}

json flag_json(const FlagManifold& flag, const TRootDecomposition& t_roots) {
  return {{"dim_complex", flag.dim_complex()},
          {"center_dim", flag.center_dim()},
          {"r_h_count", flag.r_h().size()},
          {"r_m_plus_count", flag.r_m_plus().size()},
          {"delta_m", to_json(flag.delta_m())},
          {"t_roots", to_json(t_roots)}};
}

json survey_json(std::span<const SurveyRow> rows) {
  json list = json::array();
  int extremal = 0;
  for (const auto& row : rows) {
    if (row.report.verdict == Verdict::Extremal) ++extremal;
    list.push_back({{"family", std::string(1, family_letter(row.family))},
                    {"rank", row.rank},
                    {"n", parameter_for_rank(row.family, row.rank)},
                    {"verdict", to_string(row.report.verdict)},
                    {"mu", to_json(row.report.mu)},
                    {"residual", to_json(row.report.residual)},
                    {"residual_is_zero", row.report.residual.is_zero()},
                    {"center_dim", row.report.center_dim}});
  }
  return {{"rows", list}, {"extremal_count", extremal}};
}

json envelope(const std::string& command, json inputs, json outputs) {
  return {{"schema_version", kSchemaVersion},
          {"command", command},
          {"inputs", std::move(inputs)},
          {"outputs", std::move(outputs)}};
}

std::string dump(const json& report) { return report.dump(2) + "\n"; }

}  // namespace flagx
