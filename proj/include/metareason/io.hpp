#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "metareason/document.hpp"

namespace metareason {

/// Parses an instance document. Throws ParseError naming the offending field.
InstanceDocument parse_instance(std::string_view text);

/// Canonical text form: sorted keys, two-space indent, rationals as lowest-term
/// strings, trailing newline. Byte-identical across runs and platforms.
std::string serialize_instance(const InstanceDocument& doc);

/// File helpers; wrap filesystem failures in ParseError.
InstanceDocument load_instance(const std::filesystem::path& path);
void store_instance(const InstanceDocument& doc, const std::filesystem::path& path);

}  // namespace metareason
