#ifndef LEL_STORE_HPP
#define LEL_STORE_HPP

#include <fstream>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace lel {

struct CacheRecord {
  std::string shape_key;
  int ell = 0;
  long multiplicity = 0;
  std::optional<std::string> exact;  // PiPoly text, absent for numeric-only sweeps
  std::string numeric;               // decimal string, round-trips at `precision`
  long precision = 0;
  std::string engine_version;
};

// Append-only line-JSON cache (*.lel.jsonl). One writer, any number of
// readers; a sweep killed halfway leaves a loadable prefix and the next
// run recomputes only what is missing.
class Store {
public:
  // Loads existing records. Malformed lines throw CorruptRecord with the
  // line number unless `lenient`, in which case they are skipped.
  explicit Store(std::string path, bool lenient = false);

  const CacheRecord* lookup(const std::string& shape_key) const;
  void append(const CacheRecord& r);

  size_t size() const { return map_.size(); }
  const std::string& path() const { return path_; }

  static CacheRecord parse_line(const std::string& line, long line_number);
  static std::string format_line(const CacheRecord& r);

private:
  std::string path_;
  std::unordered_map<std::string, CacheRecord> map_;
  std::ofstream out_;
};

}  // namespace lel

#endif
