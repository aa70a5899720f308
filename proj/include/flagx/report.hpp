#pragma once

// JSON encoding of reports. Rationals are "p/q" strings, floats are JSON
// numbers in shortest round-trip form; every report carries schema_version.
// The layout is described by schemas/report-v1.json.

#include <json.hpp>

#include <string>

#include "flagx/extremality.hpp"
#include "flagx/flag.hpp"
#include "flagx/spectrum.hpp"
#include "flagx/su3.hpp"

namespace flagx {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const AmbientVector& v);
AmbientVector vector_from_json(const json& j);

json to_json(const TRootDecomposition& d);
TRootDecomposition t_roots_from_json(const json& j);

json to_json(const ExtremalityReport& rep);
ExtremalityReport extremality_from_json(const json& j);

template <class Scalar>
json to_json(const SpectrumReport<Scalar>& rep);
template <class Scalar>
SpectrumReport<Scalar> spectrum_from_json(const json& j);

json to_json(const su3::ScanResult& scan, bool with_samples);
json to_json(const su3::Optimum& opt);

json root_system_json(const RootSystem& sys);
json flag_json(const FlagManifold& flag, const TRootDecomposition& t_roots);
json survey_json(std::span<const SurveyRow> rows);

/// {"schema_version", "command", "inputs", "outputs"}.
json envelope(const std::string& command, json inputs, json outputs);

/// Canonical text form: two-space indentation and a trailing newline.
std::string dump(const json& report);

}  // namespace flagx
