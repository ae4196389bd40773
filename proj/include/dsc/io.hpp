#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "dsc/concept_class.hpp"

namespace dsc {

// Class files:   {"domain_size": n, "kind": "partial"|"total", "concepts": [[0, "*", 2], ...]}
// Sample files:  [[index, label], ...]
//
// Parse errors and contract breaches raise std::invalid_argument.

ConceptClass parse_class(std::string_view json_text);

/// Canonical text: concepts sorted, one per line, LF endings, trailing newline.
/// parse_class(serialize_class(c)) == c.canonical().
std::string serialize_class(const ConceptClass& cls);

Sample parse_sample(std::string_view json_text);
std::string serialize_sample(const Sample& s);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

ConceptClass read_class_file(const std::filesystem::path& path);

}  // namespace dsc
