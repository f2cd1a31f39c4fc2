#pragma once

// JSON-lines traces and the verdict document. Exact scalars are written as
// "p/q" strings; float scalars as JSON numbers, or as the strings "inf",
// "-inf", "nan" when not finite.

#include <filesystem>
#include <string>
#include <utility>

#include <json.hpp>

#include "ufp/analysis.hpp"
#include "ufp/protocol.hpp"

namespace ufp {

using Json = nlohmann::ordered_json;

Json scalar_to_json(const Scalar& value);
/// The mode is recovered from the JSON type: strings holding rational
/// literals are exact, numbers and non-finite markers are float.
Scalar scalar_from_json(const Json& value);

std::string status_to_string(const GameStatus& status);
GameStatus status_from_string(const std::string& text);

Json record_to_json(const RoundRecord& record);
RoundRecord record_from_json(const Json& object);

/// One compact JSON object per line, newline-terminated.
std::string trace_to_jsonl(std::span<const RoundRecord> trace);
Trace trace_from_jsonl(const std::string& text);

/// Both throw ProtocolError(IoError) on filesystem failure; reading throws
/// ProtocolError(MalformedTrace) on unparsable content.
void write_trace(const std::filesystem::path& path, std::span<const RoundRecord> trace);
Trace read_trace(const std::filesystem::path& path);

Json verdict_to_json(const Verdict& verdict, const PropertyReport& report);
std::pair<Verdict, PropertyReport> verdict_from_json(const Json& document);

/// Pretty-printed document, newline-terminated.
std::string verdict_document(const Verdict& verdict, const PropertyReport& report);

void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace ufp
