#include "lel/store.hpp"

#include <json.hpp>

#include "lel/errors.hpp"

namespace lel {

using nlohmann::json;

Store::Store(std::string path, bool lenient) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (in.good()) {
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      try {
        CacheRecord r = parse_line(line, lineno);
        map_[r.shape_key] = std::move(r);
      } catch (const DomainError&) {
        if (!lenient) throw;
      }
    }
  }
  out_.open(path_, std::ios::app);
  if (!out_.good()) fail(Errc::bad_input, "cannot open cache file " + path_);
}

const CacheRecord* Store::lookup(const std::string& shape_key) const {
  auto it = map_.find(shape_key);
  return it == map_.end() ? nullptr : &it->second;
}

void Store::append(const CacheRecord& r) {
  out_ << format_line(r) << '\n';
  out_.flush();
  map_[r.shape_key] = r;
}

CacheRecord Store::parse_line(const std::string& line, long line_number) {
  json j = json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object())
    fail(Errc::corrupt_record, "line " + std::to_string(line_number) + ": not a JSON object");
  try {
    CacheRecord r;
    r.shape_key = j.at("shape_key").get<std::string>();
    r.ell = j.at("ell").get<int>();
    r.multiplicity = j.at("multiplicity").get<long>();
    if (j.contains("exact") && !j["exact"].is_null())
      r.exact = j["exact"].get<std::string>();
    r.numeric = j.at("numeric").get<std::string>();
    r.precision = j.at("precision").get<long>();
    r.engine_version = j.at("engine_version").get<std::string>();
    return r;
  } catch (const json::exception& e) {
    fail(Errc::corrupt_record, "line " + std::to_string(line_number) + ": " + e.what());
  }
}

std::string Store::format_line(const CacheRecord& r) {
  json j;
  j["shape_key"] = r.shape_key;
  j["ell"] = r.ell;
  j["multiplicity"] = r.multiplicity;
  if (r.exact)
    j["exact"] = *r.exact;
  else
    j["exact"] = nullptr;
  j["numeric"] = r.numeric;
  j["precision"] = r.precision;
  j["engine_version"] = r.engine_version;
  return j.dump();
}

}  // namespace lel
