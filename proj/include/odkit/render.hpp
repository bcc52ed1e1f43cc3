#pragma once

// Text, JSON and DOT renderings shared by the CLI and the Python bindings.
// JSON field names are part of the public interface; see README.md.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "odkit/descriptors.hpp"
#include "odkit/numtheory.hpp"
#include "odkit/primegraph.hpp"
#include "odkit/theorem.hpp"

namespace odkit {

using Json = nlohmann::json;

Json to_json(const PrimeGraph& g);
Json to_json(const DegreePattern& d);
Json to_json(const FactoredInteger& f);
Json to_json(const GraphSummary& s);
Json to_json(const CandidateWitness& w);
Json to_json(const VerificationReport& r);
Json od_class_json(std::uint32_t alpha, Family family, const std::vector<GroupExpr>& members);
Json search_json(const std::vector<CandidateWitness>& rows);

PrimeGraph graph_from_json(const Json& j);
DegreePattern pattern_from_json(const Json& j);
FactoredInteger order_from_json(const Json& j);
CandidateWitness candidate_from_json(const Json& j);
VerificationReport report_from_json(const Json& j);

/// Undirected DOT: vertices ascending, then edges in lexicographic order.
std::string to_dot(const PrimeGraph& g);

/// "2:2 3:3 5:2 7:1".
std::string pattern_text(const DegreePattern& d);
std::string graph_text(const PrimeGraph& g);
std::string search_text(const std::vector<CandidateWitness>& rows);
std::string report_text(const VerificationReport& r);

}  // namespace odkit
