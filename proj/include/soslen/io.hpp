#pragma once

// JSON, CSV and text renderings of every record the CLI emits.
//
// JSON objects use sorted keys, so serialize -> parse -> serialize is the
// identity. Big integers (basis and witness coefficients) are decimal
// strings; rationals use "p/q".

#include <string>
#include <vector>

#include "json.hpp"
#include "soslen/bounds.hpp"
#include "soslen/generic.hpp"
#include "soslen/witness.hpp"

namespace soslen::io {

using Json = nlohmann::json;

inline constexpr const char* kCertificateFormat = "soslen-certificate-v1";
inline constexpr const char* kRepresentationFormat = "soslen-representation-v1";

Json to_json(const bounds::BoundsRow& row);
Json to_json(const generic::DimensionReport& rep);
Json to_json(const generic::TypicalLengthResult& res);
Json to_json(const witness::LengthCertificate& cert);
Json to_json(const witness::SosRepresentation& rep);

/// Throws ArgumentError on a malformed record.
witness::LengthCertificate certificate_from_json(const Json& j);
/// Accepts a representation record or a certificate (its basis representation).
witness::SosRepresentation representation_from_json(const Json& j);

std::string csv_header_bounds();
std::string csv_row(const bounds::BoundsRow& row);
std::string csv_header_report();
std::string csv_row(const generic::DimensionReport& rep);
std::string csv_header_typical();
std::string csv_row(const generic::TypicalLengthResult& res);

/// Rows "s_min(n,d): ...", "p(n,2d)≥: ...", "p(n,2d)≤: ..." per n, under a
/// "d: ..." header; groups separated by a blank line.
std::string render_table(const std::vector<bounds::BoundsRow>& rows);
std::string render_bounds(const bounds::BoundsRow& row);
std::string render_report(const generic::DimensionReport& rep);
std::string render_typical(const generic::TypicalLengthResult& res);

}  // namespace soslen::io
