#pragma once

// Rendering of command documents.  Every subcommand builds one ordered JSON
// document with frozen field names; the text and csv forms are derived from
// it generically so the three formats can never drift apart.

#include <json.hpp>

#include <string>
#include <string_view>

namespace cli {

using Doc = nlohmann::ordered_json;

inline constexpr const char* kSchema = "cohsys_strata_report_v1";

enum class OutputFormat { Text, Json, Csv };

OutputFormat parse_format(std::string_view s);  // "text" | "json" | "csv"
const char* format_name(OutputFormat f);

// scalar_key, when present in the document, makes the text form print just
// that value (plus the approx companion if any): value-style commands stay
// pipeable.  Json and csv always render the whole document.
std::string render(const Doc& doc, OutputFormat f, std::string_view scalar_key = {});

}  // namespace cli
