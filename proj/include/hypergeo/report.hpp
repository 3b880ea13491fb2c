#pragma once

#include <string>
#include <string_view>

#include "hypergeo/verify.hpp"

namespace hypergeo {

/// Shortest representation that round-trips, locale independent (never more
/// than 17 significant digits).
std::string format_double(double value);

/// RFC 4180 field quoting.
std::string csv_field(std::string_view field);

/// Header plus one CRLF-terminated line per row.
std::string render_csv(const VerifyReport& report);

/// {"side": ..., "rows": [...], "summary": {...}} followed by a newline.
std::string render_json(const VerifyReport& report);

/// Human-readable summary block.
std::string render_summary_text(const VerifyReport& report);

}  // namespace hypergeo
