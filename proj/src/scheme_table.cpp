#include "dsc/scheme_table.hpp"

#include <stdexcept>

#include "dsc/io.hpp"
#include "json.hpp"

namespace dsc {

using nlohmann::json;

TableScheme::TableScheme(std::size_t domain_size, Concept fallback)
    : domain_size_(domain_size), fallback_(std::move(fallback)) {
  if (fallback_.size() != domain_size_ || !is_total(fallback_))
    throw std::invalid_argument("fallback must be a total concept over the domain");
}

void TableScheme::set_key(const Sample& sample, CompressionKey key) {
  keys_[sample.canonical()] = std::move(key);
}

void TableScheme::set_reconstruction(CompressionKey key, Concept h) {
  if (h.size() != domain_size_ || !is_total(h))
    throw std::invalid_argument("reconstructions must be total concepts over the domain");
  reconstructions_[std::move(key)] = std::move(h);
}

CompressionScheme TableScheme::scheme(std::string name) const {
  auto tables = std::make_shared<const TableScheme>(*this);
  CompressionScheme out;
  out.name = std::move(name);
  out.compress = [tables](const Sample& s) {
    auto it = tables->keys_.find(s.canonical());
    if (it == tables->keys_.end()) throw std::out_of_range("sample " + serialize_sample(s) + " not in table");
    return it->second;
  };
  out.reconstruct = [tables](const CompressionKey& key) {
    auto it = tables->reconstructions_.find(key);
    return it == tables->reconstructions_.end() ? tables->fallback_ : it->second;
  };
  return out;
}

namespace {

json sample_json(const Sample& s) {
  json arr = json::array();
  for (const auto& e : s) arr.push_back({e.index, e.label.value()});
  return arr;
}

json concept_json(const Concept& c) {
  json arr = json::array();
  for (Label l : c) arr.push_back(l.value());
  return arr;
}

Concept concept_from(const json& j) {
  Concept c;
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) throw std::invalid_argument("scheme concepts must hold non-negative integers");
    c.push_back(Label(v.get<Label::value_type>()));
  }
  return c;
}

}  // namespace

std::string TableScheme::to_json() const {
  nlohmann::ordered_json doc;
  doc["domain_size"] = domain_size_;
  doc["fallback"] = concept_json(fallback_);
  doc["compress"] = json::array();
  for (const auto& [sample, key] : keys_)
    doc["compress"].push_back(
        {{"sample", sample_json(sample)}, {"subsample", sample_json(key.subsample)}, {"bits", to_string(key.bits)}});
  doc["reconstruct"] = json::array();
  for (const auto& [key, h] : reconstructions_)
    doc["reconstruct"].push_back(
        {{"subsample", sample_json(key.subsample)}, {"bits", to_string(key.bits)}, {"concept", concept_json(h)}});
  return doc.dump(1) + "\n";
}

TableScheme TableScheme::from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
    auto n = doc.at("domain_size").get<std::size_t>();
    TableScheme out(n, concept_from(doc.at("fallback")));
    for (const auto& row : doc.at("compress"))
      out.set_key(parse_sample(row.at("sample").dump()),
                  CompressionKey{parse_sample(row.at("subsample").dump()), parse_bits(row.at("bits").get<std::string>())});
    for (const auto& row : doc.at("reconstruct"))
      out.set_reconstruction(
          CompressionKey{parse_sample(row.at("subsample").dump()), parse_bits(row.at("bits").get<std::string>())},
          concept_from(row.at("concept")));
    return out;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed scheme file: ") + e.what());
  }
}

}  // namespace dsc
