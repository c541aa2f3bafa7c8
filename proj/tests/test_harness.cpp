#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "davlab/cache.hpp"
#include "davlab/catalog.hpp"
#include "doctest.h"

using namespace davlab;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) {
    path = std::string("/tmp/davlab_test_") + name + "_" +
           std::to_string(::getpid()) + ".jsonl";
    std::remove(path.c_str());
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("result record JSON round-trip") {
  ResultRecord r;
  r.group = "dihedral:5";
  r.kind = "d";
  r.lo = r.hi = 6;
  r.exact = true;
  r.witnesses = {"x*4, y"};
  r.timestamp = "2026-01-01T00:00:00Z";
  r.nodes = 123;
  r.seconds = 0.5;
  ResultRecord back = ResultRecord::from_json(r.to_json());
  CHECK(back.group == r.group);
  CHECK(back.kind == r.kind);
  CHECK(back.lo == 6);
  CHECK(back.hi == 6);
  CHECK(back.exact);
  CHECK(back.witnesses == r.witnesses);
  CHECK(back.version == kSolverVersion);
  CHECK(back.nodes == 123);
}

TEST_CASE("interval records keep lo and hi") {
  ResultRecord r;
  r.group = "metacyclic:3,7,2";
  r.kind = "f";
  r.lo = 7;
  r.hi = 9;
  r.exact = false;
  ResultRecord back = ResultRecord::from_json(r.to_json());
  CHECK(back.lo == 7);
  CHECK(back.hi == 9);
  CHECK(!back.exact);
}

TEST_CASE("d_k records carry k in the key") {
  TempFile tf("dk");
  CacheStore cache(tf.path);
  ResultRecord r;
  r.group = "dihedral:3";
  r.kind = "d_k";
  r.k = 2;
  r.lo = r.hi = 7;
  r.exact = true;
  cache.store(r);
  CHECK(cache.lookup("dihedral:3", "d_k", 2).has_value());
  CHECK(!cache.lookup("dihedral:3", "d_k", 3).has_value());
  CHECK(!cache.lookup("dihedral:3", "d", 1).has_value());
}

TEST_CASE("cache round-trip, last write wins") {
  TempFile tf("roundtrip");
  {
    CacheStore cache(tf.path);
    ResultRecord r;
    r.group = "cyclic:5";
    r.kind = "d";
    r.lo = r.hi = 4;  // wrong on purpose, superseded below
    r.exact = true;
    cache.store(r);
    r.lo = r.hi = 5;
    cache.store(r);
  }
  CacheStore cache(tf.path);
  cache.load();
  auto hit = cache.lookup("cyclic:5", "d", 1);
  REQUIRE(hit.has_value());
  CHECK(hit->lo == 5);
}

TEST_CASE("corrupt cache lines are skipped, valid ones kept") {
  TempFile tf("corrupt");
  {
    std::ofstream out(tf.path);
    ResultRecord r;
    r.group = "cyclic:3";
    r.kind = "d";
    r.lo = r.hi = 3;
    r.exact = true;
    out << "this is not json\n";
    out << r.to_json() << "\n";
    out << "{\"group\": \"cyclic:4\"}\n";  // parseable json, missing fields
  }
  CacheStore cache(tf.path);
  cache.load();
  CHECK(cache.size() == 1);
  CHECK(cache.lookup("cyclic:3", "d", 1).has_value());
}

TEST_CASE("version mismatch forces recompute") {
  TempFile tf("version");
  {
    std::ofstream out(tf.path);
    ResultRecord r;
    r.group = "cyclic:3";
    r.kind = "d";
    r.lo = r.hi = 3;
    r.exact = true;
    r.version = "0.0.1-old";
    out << r.to_json() << "\n";
  }
  CacheStore cache(tf.path);
  cache.load();
  CHECK(cache.size() == 1);
  CHECK(!cache.lookup("cyclic:3", "d", 1).has_value());
}

TEST_CASE("missing cache file is an empty cache") {
  CacheStore cache("/tmp/davlab_definitely_missing_cache.jsonl");
  cache.load();
  CHECK(cache.size() == 0);
}

TEST_CASE("catalog tiers") {
  auto fast = catalog(false);
  auto full = catalog(true);
  CHECK(fast.size() > 0);
  CHECK(full.size() > fast.size());
  for (const auto& e : fast) {
    e.spec.validate();
    CHECK(!e.full_tier_only);
    CHECK(e.expected >= 1);
    CHECK(!e.source.empty());
  }
}
