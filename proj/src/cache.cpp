#include "davlab/cache.hpp"

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>

#include "json.hpp"

namespace davlab {

using nlohmann::json;

std::string ResultRecord::to_json() const {
  json j;
  j["group"] = group;
  j["kind"] = kind;
  if (kind == "d_k") j["k"] = k;
  if (exact) j["value"] = lo;
  else j["interval"] = {lo, hi};
  j["exact"] = exact;
  j["witness"] = witnesses;
  j["provenance"] = provenance;
  j["timestamp"] = timestamp;
  j["version"] = version;
  j["nodes"] = nodes;
  j["seconds"] = seconds;
  return j.dump();
}

ResultRecord ResultRecord::from_json(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad cache line: ") + e.what());
  }
  ResultRecord r;
  try {
    r.group = j.at("group").get<std::string>();
    r.kind = j.at("kind").get<std::string>();
    r.k = j.value("k", 1);
    r.exact = j.at("exact").get<bool>();
    if (j.contains("value")) {
      r.lo = r.hi = j.at("value").get<long long>();
    } else {
      auto iv = j.at("interval");
      r.lo = iv.at(0).get<long long>();
      r.hi = iv.at(1).get<long long>();
    }
    r.witnesses = j.value("witness", std::vector<std::string>{});
    r.provenance = j.value("provenance", std::string("computed"));
    r.timestamp = j.value("timestamp", std::string());
    r.version = j.value("version", std::string());
    r.nodes = j.value("nodes", 0ll);
    r.seconds = j.value("seconds", 0.0);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad cache record: ") + e.what());
  }
  return r;
}

ResultRecord ResultRecord::from_result(const Group& g, const SolverResult& r) {
  ResultRecord rec;
  rec.group = g.spec() ? g.spec()->str() : g.name();
  rec.kind = kind_name(r.kind);
  rec.k = r.k;
  rec.lo = r.lo;
  rec.hi = r.hi;
  rec.exact = r.exact;
  for (const auto& w : r.witnesses) rec.witnesses.push_back(w.format(g));
  rec.nodes = r.nodes;
  rec.seconds = r.seconds;
  char buf[32];
  std::time_t t = std::time(nullptr);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  rec.timestamp = buf;
  return rec;
}

std::string CacheStore::key(const std::string& group, const std::string& kind,
                            int k) {
  return group + "|" + kind + (kind == "d_k" ? "|" + std::to_string(k) : "");
}

CacheStore::CacheStore(std::string path) : path_(std::move(path)) {}

void CacheStore::load() {
  records_.clear();
  std::ifstream in(path_);
  if (!in) return;  // no cache yet
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      ResultRecord r = ResultRecord::from_json(line);
      records_[key(r.group, r.kind, r.k)] = std::move(r);  // last write wins
    } catch (const ParseError& e) {
      std::cerr << "warning: skipping corrupt cache line " << lineno << " in "
                << path_ << ": " << e.what() << "\n";
    }
  }
}

std::optional<ResultRecord> CacheStore::lookup(const std::string& group,
                                               const std::string& kind,
                                               int k) const {
  auto it = records_.find(key(group, kind, k));
  if (it == records_.end()) return std::nullopt;
  if (it->second.version != kSolverVersion) return std::nullopt;  // recompute
  return it->second;
}

void CacheStore::store(const ResultRecord& rec) {
  std::ofstream out(path_, std::ios::app);
  if (!out) throw IoError("cannot open cache file for append: " + path_);
  out << rec.to_json() << "\n";
  if (!out) throw IoError("write failed: " + path_);
  records_[key(rec.group, rec.kind, rec.k)] = rec;
}

std::string default_cache_path() {
  if (const char* env = std::getenv("DAVLAB_CACHE")) return env;
  if (const char* home = std::getenv("HOME"))
    return std::string(home) + "/.davlab_cache.jsonl";
  return "davlab_cache.jsonl";
}

}  // namespace davlab
