#pragma once

// Machine-readable views of results. Keys are emitted in a fixed order so that
// identical runs serialize to identical bytes.

#include <string>

#include <json.hpp>

#include "altermatic/altermatic.hpp"
#include "altermatic/proofengine.hpp"

namespace altermatic {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";

Json to_json(const SignVector& x);
Json to_json(const Hypergraph& h, const Witness& w, const LinearOrder& sigma);
Json to_json(const AltReport& r);
Json to_json(const TheoremCheck& t);
Json to_json(const Hypergraph& h, const AuditResult& a, const LinearOrder& sigma);

/// One-line description of a witness for text reports.
std::string describe(const Hypergraph& h, const Witness& w, const LinearOrder& sigma);

} // namespace altermatic
