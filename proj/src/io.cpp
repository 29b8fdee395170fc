#include "ambiq/io.hpp"

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <utility>

#include "ambiq/errors.hpp"

namespace ambiq {

using nlohmann::json;

namespace {

// Shortest-round-trip decimal form of a double, for stashing numeric facts
// inside the string-valued metadata map.
std::string decimal(double x) { return json(x).dump(); }

double parse_decimal(const std::string& s) {
  const json j = json::parse(s, nullptr, false);
  if (!j.is_number()) throw InvalidArgument("expected a decimal number, got '" + s + "'");
  return j.get<double>();
}

json axis_to_json(const std::string& label, const Grid1D& axis) {
  return json{{"label", label}, {"count", axis.count}, {"step", axis.step}};
}

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InvalidArgument("data entries must be [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const json& j, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    throw InvalidArgument("data row count does not match axis1");
  CMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw InvalidArgument("data column count does not match axis2");
    for (int c = 0; c < cols; ++c) m(i, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

struct AxisSpec {
  std::string label;
  int count = 0;
  double step = 0.0;
};

AxisSpec axis_from_json(const json& j) {
  if (!j.is_object() || !j.contains("label") || !j.contains("count") || !j.contains("step"))
    throw InvalidArgument("each axis needs label, count, and step");
  AxisSpec spec;
  spec.label = j["label"].get<std::string>();
  spec.count = j["count"].get<int>();
  spec.step = j["step"].get<double>();
  return spec;
}

// Rebuilds an axis from its on-disk description.  The centering is read from
// the metadata when stashed there (save_document always stashes it); without
// it the kind decides: position axes are symmetric, transform axes anchored,
// and a Wigner q axis keeps the symmetric position centering it inherits.
Grid1D rebuild_axis(const AxisSpec& spec, const std::map<std::string, std::string>& metadata,
                    const std::string& key, bool symmetric_default) {
  const auto it = metadata.find(key);
  Grid1D g = symmetric_default ? make_centered_grid(spec.count, spec.step)
                               : make_fourier_grid(spec.count, spec.step);
  if (it != metadata.end()) g.origin_index = parse_decimal(it->second);
  return g;
}

const char* csv_format = "%.17g,%.17g,%.17g,%.17g\n";

}  // namespace

std::string to_string(DocumentKind k) {
  switch (k) {
    case DocumentKind::psi: return "psi";
    case DocumentKind::rho: return "rho";
    case DocumentKind::ambiguity: return "ambiguity";
    case DocumentKind::wigner: return "wigner";
  }
  throw InvalidArgument("unknown document kind");
}

DocumentKind document_kind_from_string(const std::string& s) {
  if (s == "psi") return DocumentKind::psi;
  if (s == "rho") return DocumentKind::rho;
  if (s == "ambiguity") return DocumentKind::ambiguity;
  if (s == "wigner") return DocumentKind::wigner;
  throw InvalidArgument("unknown document kind '" + s + "'");
}

DocumentKind FieldDocument::kind() const {
  if (std::holds_alternative<WaveFunction>(payload)) return DocumentKind::psi;
  if (std::holds_alternative<DensityMatrix>(payload)) return DocumentKind::rho;
  return std::get<ComplexField>(payload).kind == FieldKind::ambiguity ? DocumentKind::ambiguity
                                                                      : DocumentKind::wigner;
}

const PhysicalConstants& FieldDocument::constants() const {
  if (const auto* w = std::get_if<WaveFunction>(&payload)) return w->constants;
  if (const auto* r = std::get_if<DensityMatrix>(&payload)) return r->constants;
  return std::get<ComplexField>(payload).constants;
}

const WaveFunction& FieldDocument::psi() const {
  if (const auto* w = std::get_if<WaveFunction>(&payload)) return *w;
  throw InvalidArgument("document holds a " + to_string(kind()) + ", not a wavefunction");
}

const DensityMatrix& FieldDocument::rho() const {
  if (const auto* r = std::get_if<DensityMatrix>(&payload)) return *r;
  throw InvalidArgument("document holds a " + to_string(kind()) + ", not a density matrix");
}

const ComplexField& FieldDocument::field() const {
  if (const auto* f = std::get_if<ComplexField>(&payload)) return *f;
  throw InvalidArgument("document holds a " + to_string(kind()) + ", not a phase-space field");
}

void FieldDocument::validate() const {
  if (schema_version != kSchemaVersion) throw InvalidArgument("unsupported schema version");
  std::visit([](const auto& p) { p.validate(); }, payload);
}

FieldDocument make_document(WaveFunction psi, std::map<std::string, std::string> metadata) {
  return {kSchemaVersion, std::move(psi), std::move(metadata)};
}

FieldDocument make_document(DensityMatrix rho, std::map<std::string, std::string> metadata) {
  return {kSchemaVersion, std::move(rho), std::move(metadata)};
}

FieldDocument make_document(ComplexField field, std::map<std::string, std::string> metadata) {
  return {kSchemaVersion, std::move(field), std::move(metadata)};
}

std::string document_to_json(const FieldDocument& doc) {
  doc.validate();
  json j;
  j["schema_version"] = doc.schema_version;
  j["hbar"] = doc.constants().hbar;
  j["kind"] = to_string(doc.kind());

  std::map<std::string, std::string> metadata = doc.metadata;
  json axes = json::array();
  switch (doc.kind()) {
    case DocumentKind::psi: {
      const WaveFunction& psi = doc.psi();
      axes.push_back(axis_to_json("q", psi.grid));
      metadata["axis1_origin_index"] = decimal(psi.grid.origin_index);
      json data = json::array();
      for (int c = 0; c < psi.grid.count; ++c) data.push_back(complex_to_json(psi.samples(c)));
      j["data"] = std::move(data);
      break;
    }
    case DocumentKind::rho: {
      const DensityMatrix& rho = doc.rho();
      axes.push_back(axis_to_json("q", rho.grid));
      axes.push_back(axis_to_json("q'", rho.grid));
      metadata["axis1_origin_index"] = decimal(rho.grid.origin_index);
      metadata["axis2_origin_index"] = decimal(rho.grid.origin_index);
      j["data"] = matrix_to_json(rho.entries);
      break;
    }
    case DocumentKind::ambiguity:
    case DocumentKind::wigner: {
      const ComplexField& f = doc.field();
      axes.push_back(axis_to_json(f.grid.labels[0], f.grid.axis1));
      axes.push_back(axis_to_json(f.grid.labels[1], f.grid.axis2));
      metadata["axis1_origin_index"] = decimal(f.grid.axis1.origin_index);
      metadata["axis2_origin_index"] = decimal(f.grid.axis2.origin_index);
      j["data"] = matrix_to_json(f.values);
      break;
    }
  }
  j["axes"] = std::move(axes);
  j["metadata"] = metadata;
  return j.dump(2);
}

FieldDocument document_from_json(const std::string& text) {
  const json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InvalidArgument("malformed JSON document");
  for (const char* key : {"schema_version", "hbar", "kind", "axes", "data"})
    if (!j.contains(key)) throw InvalidArgument(std::string("document is missing '") + key + "'");

  const int version = j["schema_version"].get<int>();
  if (version != kSchemaVersion) throw InvalidArgument("unsupported schema version");
  PhysicalConstants constants{j["hbar"].get<double>()};
  constants.validate();
  const DocumentKind kind = document_kind_from_string(j["kind"].get<std::string>());

  std::map<std::string, std::string> metadata;
  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) throw InvalidArgument("metadata must be a map");
    for (const auto& [key, value] : j["metadata"].items()) {
      if (!value.is_string()) throw InvalidArgument("metadata values must be strings");
      metadata[key] = value.get<std::string>();
    }
  }

  const json& axes = j["axes"];
  const std::size_t expected_axes = kind == DocumentKind::psi ? 1 : 2;
  if (!axes.is_array() || axes.size() != expected_axes)
    throw InvalidArgument(to_string(kind) + " documents need " +
                          std::to_string(expected_axes) + " axes");

  FieldDocument doc;
  doc.schema_version = version;
  doc.metadata = metadata;

  const AxisSpec spec1 = axis_from_json(axes[0]);
  switch (kind) {
    case DocumentKind::psi: {
      WaveFunction psi;
      psi.grid = rebuild_axis(spec1, metadata, "axis1_origin_index", true);
      psi.constants = constants;
      const json& data = j["data"];
      if (!data.is_array() || static_cast<int>(data.size()) != spec1.count)
        throw InvalidArgument("data length does not match the axis");
      psi.samples.resize(spec1.count);
      for (int c = 0; c < spec1.count; ++c)
        psi.samples(c) = complex_from_json(data[static_cast<std::size_t>(c)]);
      doc.payload = std::move(psi);
      break;
    }
    case DocumentKind::rho: {
      const AxisSpec spec2 = axis_from_json(axes[1]);
      if (spec2.count != spec1.count || spec2.step != spec1.step)
        throw InvalidArgument("density matrix axes must match");
      DensityMatrix rho;
      rho.grid = rebuild_axis(spec1, metadata, "axis1_origin_index", true);
      rho.constants = constants;
      rho.entries = matrix_from_json(j["data"], spec1.count, spec2.count);
      doc.payload = std::move(rho);
      break;
    }
    case DocumentKind::ambiguity:
    case DocumentKind::wigner: {
      const AxisSpec spec2 = axis_from_json(axes[1]);
      ComplexField f;
      const bool symmetric1 = kind == DocumentKind::wigner;
      f.grid.axis1 = rebuild_axis(spec1, metadata, "axis1_origin_index", symmetric1);
      f.grid.axis2 = rebuild_axis(spec2, metadata, "axis2_origin_index", false);
      f.grid.labels = {spec1.label, spec2.label};
      f.kind = kind == DocumentKind::ambiguity ? FieldKind::ambiguity : FieldKind::wigner;
      f.constants = constants;
      f.values = matrix_from_json(j["data"], spec1.count, spec2.count);
      doc.payload = std::move(f);
      break;
    }
  }
  doc.validate();
  return doc;
}

void save_document(const FieldDocument& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot open '" + path + "' for writing");
  out << document_to_json(doc) << '\n';
  if (!out) throw InvalidArgument("failed writing '" + path + "'");
}

FieldDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return document_from_json(buffer.str());
}

std::string document_to_csv(const FieldDocument& doc) {
  doc.validate();
  std::string out = "axis1,axis2,re,im\n";
  char line[128];
  const auto emit = [&](double a1, double a2, const Complex& z) {
    std::snprintf(line, sizeof(line), csv_format, a1, a2, z.real(), z.imag());
    out += line;
  };
  switch (doc.kind()) {
    case DocumentKind::psi: {
      const WaveFunction& psi = doc.psi();
      for (int c = 0; c < psi.grid.count; ++c) emit(psi.grid.value(c), 0.0, psi.samples(c));
      break;
    }
    case DocumentKind::rho: {
      const DensityMatrix& rho = doc.rho();
      for (int r = 0; r < rho.grid.count; ++r)
        for (int c = 0; c < rho.grid.count; ++c)
          emit(rho.grid.value(r), rho.grid.value(c), rho.entries(r, c));
      break;
    }
    case DocumentKind::ambiguity:
    case DocumentKind::wigner: {
      const ComplexField& f = doc.field();
      for (int r = 0; r < f.grid.axis1.count; ++r)
        for (int c = 0; c < f.grid.axis2.count; ++c)
          emit(f.grid.axis1.value(r), f.grid.axis2.value(c), f.values(r, c));
      break;
    }
  }
  return out;
}

std::string report_to_json(const IdentityReport& rep) {
  const auto check = [](double error, bool pass) {
    return json{{"max_error", error}, {"pass", pass}};
  };
  json j;
  j["dim"] = rep.dim;
  j["tolerance"] = rep.tolerance;
  j["all_ok"] = rep.all_ok;
  j["negative_adjoint_pairs"] = rep.negative_adjoint_pairs;
  j["checks"] = json{{"unitarity", check(rep.unitarity_error, rep.unitarity_ok())},
                     {"orthogonality", check(rep.orthogonality_error, rep.orthogonality_ok())},
                     {"composition", check(rep.composition_error, rep.composition_ok())},
                     {"parity", check(rep.parity_error, rep.parity_ok())},
                     {"conjugation", check(rep.conjugation_error, rep.conjugation_ok())},
                     {"adjoint_pairing",
                      check(rep.adjoint_pairing_error, rep.adjoint_pairing_ok())}};
  return j.dump(2);
}

std::string report_to_json(const ContinuumReport& rep) {
  const auto check = [](double error, double tolerance, bool pass) {
    return json{{"max_error", error}, {"tolerance", tolerance}, {"pass", pass}};
  };
  json j;
  j["grid"] = json{{"count", rep.grid.count}, {"step", rep.grid.step}};
  j["all_ok"] = rep.all_ok;
  j["checks"] =
      json{{"composition",
            check(rep.composition_error, rep.composition_tolerance, rep.composition_ok())},
           {"conjugation",
            check(rep.conjugation_error, rep.conjugation_tolerance, rep.conjugation_ok())},
           {"orthogonality",
            check(rep.orthogonality_error, rep.orthogonality_tolerance, rep.orthogonality_ok())}};
  return j.dump(2);
}

}  // namespace ambiq
