#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "rbw/grouprep.hpp"
#include "rbw/mzi.hpp"
#include "rbw/relsim.hpp"
#include "rbw/symmetry_state.hpp"

namespace rbw::io {

using nlohmann::json;

/// A group together with the irreps declared for it, by name.
struct GroupDocument {
  std::shared_ptr<const Group> group;
  std::map<std::string, std::shared_ptr<const Irrep>> irreps;

  /// Throws InvalidArgument naming the available irreps.
  std::shared_ptr<const Irrep> irrep(const std::string& name) const;
};

/// Throws ParseError.
json read_json_file(const std::filesystem::path& path);

/// Printf-style %.{precision}g.
std::string format_number(double v, int precision = 12);
/// v rounded to `precision` significant digits.
double round_significant(double v, int precision = 12);

Complex parse_complex(const json& j);
json complex_to_json(Complex z, int precision = 12);
CMatrix parse_matrix(const json& j);
json matrix_to_json(const CMatrix& m, int precision = 12);

/// {elements: [...], mul: {"g,h": "gh"}, irreps: {name: {n, matrices: {g: [[[re,im],...]]}}}}
GroupDocument parse_group_document(const json& j);
json group_document_to_json(const GroupDocument& doc, int precision = 17);

/// {irrep: name, values: {g: [re, im]}}
ExpectationSet parse_expectations(const json& j, const GroupDocument& doc);
json expectations_to_json(const ExpectationSet& e, int precision = 12);

/// {n, matrix, eigenvalues, eigenvectors}
json density_to_json(const DensityMatrix& rho, const std::vector<Eigenpair>& eig, int precision = 12);

struct PipelineConfig {
  double k0 = 0.0;
  std::vector<mzi::OpticalElement> elements;
};

/// {k0: real, elements: ["source","bs","mirrors","phase:0.3","bs","detector"]}
PipelineConfig parse_pipeline(const json& j);
json pipeline_to_json(const PipelineConfig& cfg);

/// {frame: "boys", events: [{label, t, x}]}
std::vector<relsim::SpacetimeEvent> parse_events(const json& j);
json events_to_json(const std::vector<relsim::SpacetimeEvent>& events, int precision = 12);

}  // namespace rbw::io
