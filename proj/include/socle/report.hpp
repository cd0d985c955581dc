#pragma once

#include <socle/verify.hpp>

#include <optional>
#include <string>

namespace socle {

// Canonical JSON for a verification report: object keys sorted, integer and
// string values only, layers listed outermost (socle) first. Byte-identical
// across runs for the same input.
std::string report_to_json(const VerifyReport& rep);

// Human-readable rendering: a PASS/FAIL line followed by the filtration and
// any notes.
std::string report_to_text(const VerifyReport& rep);

// File name a report is cached under: {check}_p{p}_r{r}_N{level}_{group}.json
std::string cache_file_name(const VerifyReport& rep);

// Parse a cached JSON report. Returns nothing when the text is not valid JSON
// or does not carry the expected fields.
std::optional<VerifyReport> report_from_json(const std::string& text);

}  // namespace socle
