#pragma once

#include <string>

#include "io.hpp"

namespace scg::cli {

enum class Format { json, csv, table };

Format parse_format(const std::string& text);

/// Full report (command, input, status, result) in the requested format.
std::string render(const Json& report, Format format);

}  // namespace scg::cli
