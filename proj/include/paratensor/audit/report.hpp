#pragma once

#include <optional>
#include <string>

#include "paratensor/audit/audit.hpp"

namespace paratensor::audit {

inline constexpr const char* kReportSchemaVersion = "1.0.0";
inline constexpr const char* kEngineVersion = "0.1.0";

enum class ReportFormat { Text, Json };

std::string render_text(const AuditReport& report);

/// Versioned JSON document. `timestamp` is the only field that varies
/// between runs; it is omitted when not given.
std::string render_json(const AuditReport& report, const std::optional<std::string>& timestamp = std::nullopt);

/// Current UTC time as ISO 8601.
std::string utc_timestamp();

/// Writes to `path`, or to stdout when it is empty. Throws Error on I/O failure.
void emit_report(const AuditReport& report, ReportFormat format, const std::string& path = {});

}  // namespace paratensor::audit
