#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "schurkit/conjectures.hpp"
#include "schurkit/identity.hpp"
#include "schurkit/structure.hpp"
#include "schurkit/tensor.hpp"

namespace schurkit {

using Json = nlohmann::ordered_json;

constexpr const char* scan_schema = "schurkit.scan/1";
constexpr const char* structure_schema = "schurkit.structure/1";
constexpr const char* tensor_schema = "schurkit.tensor/1";
constexpr const char* identity_schema = "schurkit.identities/1";

Json to_json(const StructureReport& s);
Json to_json(const TensorSquareResult& r);
Json to_json(const VerificationReport& r);
Json to_json(const ConjectureVerdict& v);
Json to_json(const TheoremRecord& t);
Json to_json(const CheckResult& c);
Json to_json(const ScanRow& row);
Json to_json(const ScanReport& rep);

// Pretty-printed with a trailing newline; equal inputs give equal bytes.
std::string dump(const Json& j);

std::string structure_text(const StructureReport& s);
std::string tensor_text(const TensorSquareResult& r);
std::string scan_text(const ScanReport& rep);
// One header line and one line per row; nested fields are flattened or dropped.
std::string scan_csv(const ScanReport& rep);

}  // namespace schurkit
