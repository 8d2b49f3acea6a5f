#include "rbw/io.hpp"

#include <cstdio>
#include <fstream>

namespace rbw::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const json& field(const json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string(where) + ": missing field '" + key + "'");
  return j.at(key);
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) parse_error(where + ": expected a number");
  return j.get<double>();
}

std::string text(const json& j, const std::string& where) {
  if (!j.is_string()) parse_error(where + ": expected a string");
  return j.get<std::string>();
}

}  // namespace

std::shared_ptr<const Irrep> GroupDocument::irrep(const std::string& name) const {
  auto it = irreps.find(name);
  if (it != irreps.end()) return it->second;
  std::string known;
  for (const auto& [k, v] : irreps) known += (known.empty() ? "" : ", ") + k;
  throw Error(ErrorKind::InvalidArgument, "no irrep '" + name + "' (have: " + known + ")");
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    parse_error(path.string() + ": " + e.what());
  }
}

std::string format_number(double v, int precision) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

double round_significant(double v, int precision) { return std::stod(format_number(v, precision)); }

Complex parse_complex(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    parse_error("complex numbers are written [re, im], got " + j.dump());
  return {j[0].get<double>(), j[1].get<double>()};
}

json complex_to_json(Complex z, int precision) {
  return json::array({round_significant(z.real(), precision), round_significant(z.imag(), precision)});
}

CMatrix parse_matrix(const json& j) {
  if (!j.is_array() || j.empty()) parse_error("matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array()) parse_error("matrix rows must be arrays");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  CMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw Error(ErrorKind::DimensionMismatch, "matrix rows have different lengths");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = parse_complex(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

json matrix_to_json(const CMatrix& m, int precision) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c), precision));
    out.push_back(std::move(row));
  }
  return out;
}

GroupDocument parse_group_document(const json& j) {
  const json& elements = field(j, "elements", "group document");
  if (!elements.is_array()) parse_error("group document: 'elements' must be an array");
  std::vector<std::string> labels;
  for (const auto& e : elements) labels.push_back(text(e, "elements"));

  MultiplicationTable mul;
  const json& mj = field(j, "mul", "group document");
  if (!mj.is_object()) parse_error("group document: 'mul' must be an object");
  for (const auto& [key, value] : mj.items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos || key.find(',', comma + 1) != std::string::npos)
      parse_error("group document: multiplication key '" + key + "' must be \"g,h\"");
    mul[{key.substr(0, comma), key.substr(comma + 1)}] = text(value, "mul[" + key + "]");
  }

  GroupDocument doc;
  doc.group = std::make_shared<const Group>(Group::from_table(std::move(labels), mul));
  if (j.contains("irreps")) {
    const json& ij = j.at("irreps");
    if (!ij.is_object()) parse_error("group document: 'irreps' must be an object");
    for (const auto& [name, body] : ij.items()) {
      const double n = number(field(body, "n", "irrep"), "irrep " + name + ".n");
      if (n < 1 || n != static_cast<double>(static_cast<std::size_t>(n)))
        parse_error("irrep " + name + ": n must be a positive integer");
      const json& mats = field(body, "matrices", "irrep");
      if (!mats.is_object()) parse_error("irrep " + name + ": 'matrices' must be an object");
      std::map<std::string, CMatrix> matrices;
      for (const auto& [label, m] : mats.items()) matrices[label] = parse_matrix(m);
      doc.irreps[name] =
          std::make_shared<const Irrep>(name, doc.group, static_cast<std::size_t>(n), matrices);
    }
  }
  return doc;
}

json group_document_to_json(const GroupDocument& doc, int precision) {
  const Group& g = *doc.group;
  json out;
  out["elements"] = g.elements();
  json mul = json::object();
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) mul[g.label(a) + "," + g.label(b)] = g.label(g.mul(a, b));
  out["mul"] = std::move(mul);
  json irreps = json::object();
  for (const auto& [name, irrep] : doc.irreps) {
    json mats = json::object();
    for (std::size_t e = 0; e < g.order(); ++e) mats[g.label(e)] = matrix_to_json(irrep->matrix(e), precision);
    irreps[name] = {{"n", irrep->dim()}, {"matrices", std::move(mats)}};
  }
  out["irreps"] = std::move(irreps);
  return out;
}

ExpectationSet parse_expectations(const json& j, const GroupDocument& doc) {
  const auto irrep = doc.irrep(text(field(j, "irrep", "expectation document"), "irrep"));
  const json& vj = field(j, "values", "expectation document");
  if (!vj.is_object()) parse_error("expectation document: 'values' must be an object");
  std::map<std::string, Complex> values;
  for (const auto& [label, v] : vj.items()) values[label] = parse_complex(v);
  return ExpectationSet::from_labels(irrep, values);
}

json expectations_to_json(const ExpectationSet& e, int precision) {
  json values = json::object();
  const Group& g = e.irrep().group();
  for (std::size_t i = 0; i < g.order(); ++i) values[g.label(i)] = complex_to_json(e.value(i), precision);
  return {{"irrep", e.irrep().name()}, {"values", std::move(values)}};
}

json density_to_json(const DensityMatrix& rho, const std::vector<Eigenpair>& eig, int precision) {
  json eigenvalues = json::array();
  json eigenvectors = json::array();
  for (const auto& p : eig) {
    eigenvalues.push_back(round_significant(p.weight, precision));
    json ket = json::array();
    for (Eigen::Index i = 0; i < p.ket.size(); ++i) ket.push_back(complex_to_json(p.ket(i), precision));
    eigenvectors.push_back(std::move(ket));
  }
  return {{"n", rho.dim()},
          {"matrix", matrix_to_json(rho.matrix(), precision)},
          {"eigenvalues", std::move(eigenvalues)},
          {"eigenvectors", std::move(eigenvectors)}};
}

PipelineConfig parse_pipeline(const json& j) {
  PipelineConfig cfg;
  cfg.k0 = number(field(j, "k0", "pipeline document"), "k0");
  const json& el = field(j, "elements", "pipeline document");
  if (!el.is_array()) parse_error("pipeline document: 'elements' must be an array");
  for (const auto& e : el) cfg.elements.push_back(mzi::parse_element(text(e, "elements")));
  return cfg;
}

json pipeline_to_json(const PipelineConfig& cfg) {
  json el = json::array();
  for (const auto& e : cfg.elements) el.push_back(mzi::to_string(e));
  return {{"k0", cfg.k0}, {"elements", std::move(el)}};
}

std::vector<relsim::SpacetimeEvent> parse_events(const json& j) {
  const std::string frame = text(field(j, "frame", "event document"), "frame");
  const json& ev = field(j, "events", "event document");
  if (!ev.is_array()) parse_error("event document: 'events' must be an array");
  std::vector<relsim::SpacetimeEvent> out;
  for (const auto& e : ev) {
    relsim::SpacetimeEvent s;
    s.label = text(field(e, "label", "event"), "label");
    s.t = number(field(e, "t", "event"), "event " + s.label + ".t");
    s.x = number(field(e, "x", "event"), "event " + s.label + ".x");
    s.frame = e.contains("frame") ? text(e.at("frame"), "frame") : frame;
    out.push_back(std::move(s));
  }
  return out;
}

json events_to_json(const std::vector<relsim::SpacetimeEvent>& events, int precision) {
  json ev = json::array();
  for (const auto& e : events)
    ev.push_back({{"label", e.label},
                  {"t", round_significant(e.t, precision)},
                  {"x", round_significant(e.x, precision)},
                  {"frame", e.frame}});
  return {{"frame", events.empty() ? std::string() : events.front().frame}, {"events", std::move(ev)}};
}

}  // namespace rbw::io
