#pragma once

#include <map>
#include <string>
#include <variant>

#include "ambiq/discrete.hpp"
#include "ambiq/field.hpp"
#include "ambiq/oracle.hpp"
#include "ambiq/states.hpp"

namespace ambiq {

inline constexpr int kSchemaVersion = 1;

// On-disk names for what a document holds.  Wavefunctions and density kernels
// live on position axes; the two phase-space kinds reuse ComplexField and are
// told apart by its own kind tag.
enum class DocumentKind { psi, rho, ambiguity, wigner };

std::string to_string(DocumentKind k);
DocumentKind document_kind_from_string(const std::string& s);

// A field plus enough context to reload it: schema version, hbar, axis
// descriptions, and a free-form string map for provenance (state parameters,
// evolution settings, and the axis centerings, which the axis triple
// label/count/step alone does not pin down for even counts).
struct FieldDocument {
  int schema_version = kSchemaVersion;
  std::variant<WaveFunction, DensityMatrix, ComplexField> payload;
  std::map<std::string, std::string> metadata;

  DocumentKind kind() const;
  const PhysicalConstants& constants() const;

  // Checked accessors; the wrong alternative throws InvalidArgument.
  const WaveFunction& psi() const;
  const DensityMatrix& rho() const;
  const ComplexField& field() const;

  void validate() const;
};

FieldDocument make_document(WaveFunction psi,
                            std::map<std::string, std::string> metadata = {});
FieldDocument make_document(DensityMatrix rho,
                            std::map<std::string, std::string> metadata = {});
FieldDocument make_document(ComplexField field,
                            std::map<std::string, std::string> metadata = {});

// JSON serialization.  Numbers are written in shortest-round-trip decimal
// form, so write -> read restores every double bit for bit.
std::string document_to_json(const FieldDocument& doc);
FieldDocument document_from_json(const std::string& text);

void save_document(const FieldDocument& doc, const std::string& path);
FieldDocument load_document(const std::string& path);

// Flat export for plotting: header "axis1,axis2,re,im", one row per sample in
// row-major axis1-outer order.  One-axis documents write 0 for axis2.
std::string document_to_csv(const FieldDocument& doc);

// Machine-readable renderings of the identity reports.
std::string report_to_json(const IdentityReport& rep);
std::string report_to_json(const ContinuumReport& rep);

}  // namespace ambiq
