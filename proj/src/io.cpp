#include "dsc/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace dsc {

using nlohmann::json;

namespace {

Label parse_label(const json& v) {
  if (v.is_string()) {
    if (v.get<std::string>() != "*") throw std::invalid_argument("label strings must be \"*\"");
    return Label::star();
  }
  if (!v.is_number_integer()) throw std::invalid_argument("labels must be integers or \"*\"");
  auto n = v.get<std::int64_t>();
  if (n < 0 || static_cast<std::uint64_t>(n) > Label::kMaxValue)
    throw std::invalid_argument("label out of range: " + std::to_string(n));
  return Label(static_cast<Label::value_type>(n));
}

void write_label(std::ostream& os, Label l) {
  if (l.is_star())
    os << "\"*\"";
  else
    os << l.value();
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

ConceptClass parse_class(std::string_view json_text) {
  json doc = parse_json(json_text);
  if (!doc.is_object()) throw std::invalid_argument("class file must be a JSON object");
  for (const char* key : {"domain_size", "kind", "concepts"})
    if (!doc.contains(key)) throw std::invalid_argument(std::string("class file missing \"") + key + "\"");
  if (!doc["domain_size"].is_number_unsigned())
    throw std::invalid_argument("domain_size must be a non-negative integer");
  auto n = doc["domain_size"].get<std::size_t>();
  if (!doc["kind"].is_string()) throw std::invalid_argument("kind must be a string");
  auto kind_text = doc["kind"].get<std::string>();
  ClassKind kind;
  if (kind_text == "partial")
    kind = ClassKind::Partial;
  else if (kind_text == "total")
    kind = ClassKind::Total;
  else
    throw std::invalid_argument("kind must be \"partial\" or \"total\"");
  if (!doc["concepts"].is_array()) throw std::invalid_argument("concepts must be an array");
  std::vector<Concept> concepts;
  for (const auto& row : doc["concepts"]) {
    if (!row.is_array()) throw std::invalid_argument("each concept must be an array");
    Concept c;
    for (const auto& v : row) c.push_back(parse_label(v));
    concepts.push_back(std::move(c));
  }
  return ConceptClass(n, std::move(concepts), kind);
}

std::string serialize_class(const ConceptClass& cls) {
  auto canon = cls.canonical();
  std::ostringstream os;
  os << "{\n  \"domain_size\": " << canon.domain_size() << ",\n  \"kind\": \""
     << (canon.is_total() ? "total" : "partial") << "\",\n  \"concepts\": [";
  for (std::size_t i = 0; i < canon.size(); ++i) {
    os << (i == 0 ? "\n    [" : ",\n    [");
    for (std::size_t x = 0; x < canon.domain_size(); ++x) {
      if (x) os << ", ";
      write_label(os, canon[i][x]);
    }
    os << ']';
  }
  os << (canon.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return os.str();
}

Sample parse_sample(std::string_view json_text) {
  json doc = parse_json(json_text);
  if (!doc.is_array()) throw std::invalid_argument("sample must be a JSON array");
  std::vector<Entry> entries;
  for (const auto& pair : doc) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned())
      throw std::invalid_argument("sample entries must be [index, label]");
    Label l = parse_label(pair[1]);
    if (l.is_star()) throw std::invalid_argument("sample entries cannot carry *");
    entries.push_back(Entry{pair[0].get<std::size_t>(), l});
  }
  return Sample(std::move(entries));
}

std::string serialize_sample(const Sample& s) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ", ";
    os << '[' << s[i].index << ", " << s[i].label.value() << ']';
  }
  os << ']';
  return os.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path.string());
  out << text;
}

ConceptClass read_class_file(const std::filesystem::path& path) {
  return parse_class(read_text_file(path));
}

}  // namespace dsc
