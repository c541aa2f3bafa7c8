#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "davlab/solvers.hpp"

namespace davlab {

inline constexpr const char* kSolverVersion = "0.1.0";

/// One persisted computation, the JSON-lines record of the result cache.
struct ResultRecord {
  std::string group;  // canonical spec string
  std::string kind;   // d, e, f, d_k
  int k = 1;
  long long lo = 0;
  long long hi = 0;
  bool exact = false;
  std::vector<std::string> witnesses;  // sequence literals
  std::string provenance = "computed";
  std::string timestamp;
  std::string version = kSolverVersion;
  long long nodes = 0;
  double seconds = 0.0;

  std::string to_json() const;
  static ResultRecord from_json(const std::string& line);  // throws ParseError

  static ResultRecord from_result(const Group& g, const SolverResult& r);
};

/// Append-only JSON-lines cache, last write wins per (group, kind, k).
/// Records from other solver versions are ignored on lookup, so they get
/// recomputed and re-appended.
class CacheStore {
 public:
  explicit CacheStore(std::string path);

  /// Reads every parseable line; corrupt lines are skipped with a warning
  /// on stderr.  A missing file is an empty cache.
  void load();
  std::optional<ResultRecord> lookup(const std::string& group,
                                     const std::string& kind, int k) const;
  /// Appends to the file and updates the in-memory view.  Throws IoError.
  void store(const ResultRecord& rec);

  const std::string& path() const { return path_; }
  size_t size() const { return records_.size(); }

 private:
  std::string path_;
  std::map<std::string, ResultRecord> records_;  // key -> latest record
  static std::string key(const std::string& group, const std::string& kind,
                         int k);
};

/// Cache path resolution: DAVLAB_CACHE env var, else ~/.davlab_cache.jsonl,
/// else ./davlab_cache.jsonl.
std::string default_cache_path();

}  // namespace davlab
