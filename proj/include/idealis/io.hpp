#pragma once

#include <string>

#include "json.hpp"

#include "idealis/closure.hpp"
#include "idealis/format.hpp"
#include "idealis/graphs.hpp"
#include "idealis/homology.hpp"
#include "idealis/verify.hpp"

namespace idealis {

using Json = nlohmann::ordered_json;

/// {"blocks":[m1,...,mn], "edges":"complete"|[["x1_1","x2_1"],...],
///  "loops":"all"|"none"|["x1_1",...]}.  With adjacent_only, "complete"
/// places edges between consecutive blocks only.
PartitionedGraph graph_from_json(const std::string& text,
                                 bool adjacent_only = false);

/// Generators as a JSON array of monomial strings, or plain text with one
/// monomial per line.
MonomialIdeal ideal_from_text(const VariableSetPtr& vars,
                              const std::string& text);

/// "@path" reads the named file; anything else passes through.
std::string resolve_at_file(const std::string& spec);

Json closure_to_json(const ClosureResult& result);
Json report_to_json(const InvariantReport& report);
Json verification_to_json(const VerificationReport& report);

std::string report_to_text(const InvariantReport& report);
std::string verification_to_text(const VerificationReport& report);

std::string invariants_csv_header();
std::string invariants_csv_row(const std::string& instance,
                               const InvariantReport& report);

}  // namespace idealis
