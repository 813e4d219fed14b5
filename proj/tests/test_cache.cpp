#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "cswhit/cache.hpp"
#include "cswhit/serialization.hpp"

using namespace cswhit;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("cswhit_cache_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(reinterpret_cast<uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("put then get round trips byte identically") {
  TempDir tmp;
  RootDatum a2(CartanType::parse("A2"));
  MultiplicityCache cache(tmp.path);
  const WeightMultiset w = freudenthal_multiplicities(a2, Coweight({2, 2}));
  cache.put(w);

  const fs::path entry = cache.entry_path(a2.type(), w.lambda);
  REQUIRE(fs::exists(entry));
  CHECK(slurp(entry) == MultiplicityCache::canonical_bytes(w));

  auto hit = cache.get(a2.type(), Coweight({2, 2}));
  REQUIRE(hit.has_value());
  CHECK(hit->dominant_mults == w.dominant_mults);
  cache.put(*hit);
  CHECK(slurp(entry) == MultiplicityCache::canonical_bytes(w));
}

TEST_CASE("misses, corrupt entries and version mismatches recompute") {
  TempDir tmp;
  RootDatum a1(CartanType::parse("A1"));
  MultiplicityCache cache(tmp.path);
  CHECK_FALSE(cache.get(a1.type(), Coweight({3})).has_value());

  // corrupt bytes are ignored with a warning
  const Coweight lambda({3});
  {
    std::ofstream out(cache.entry_path(a1.type(), lambda));
    out << "{ not json";
  }
  CHECK_FALSE(cache.get(a1.type(), lambda).has_value());

  // version mismatch is a miss too
  const WeightMultiset w = freudenthal_multiplicities(a1, lambda);
  nlohmann::json doc = multiset_to_json(w);
  doc["schema_version"] = 999;
  {
    std::ofstream out(cache.entry_path(a1.type(), lambda));
    out << doc.dump(2) << "\n";
  }
  CHECK_FALSE(cache.get(a1.type(), lambda).has_value());

  // cached_multiplicities repairs the entry
  const WeightMultiset again = cached_multiplicities(a1, lambda, &cache);
  CHECK(again.dominant_mults == w.dominant_mults);
  CHECK(slurp(cache.entry_path(a1.type(), lambda)) == MultiplicityCache::canonical_bytes(w));
}

TEST_CASE("concurrent puts of one key leave a single canonical entry") {
  TempDir tmp;
  RootDatum b2(CartanType::parse("B2"));
  MultiplicityCache cache(tmp.path);
  const WeightMultiset w = freudenthal_multiplicities(b2, Coweight({1, 2}));
  std::vector<std::thread> workers;
  for (int t = 0; t < 8; ++t)
    workers.emplace_back([&] {
      for (int k = 0; k < 20; ++k) cache.put(w);
    });
  for (auto& th : workers) th.join();
  CHECK(slurp(cache.entry_path(b2.type(), w.lambda)) == MultiplicityCache::canonical_bytes(w));
  // no temp files left behind
  size_t entries = 0;
  for (const auto& p : fs::directory_iterator(tmp.path)) {
    (void)p;
    ++entries;
  }
  CHECK(entries == 1);
}

TEST_CASE("cold and warm lookups agree") {
  TempDir tmp;
  RootDatum g2(CartanType::parse("G2"));
  MultiplicityCache cache(tmp.path);
  const WeightMultiset cold = cached_multiplicities(g2, Coweight({1, 1}), &cache);
  const WeightMultiset warm = cached_multiplicities(g2, Coweight({1, 1}), &cache);
  CHECK(multiset_to_json(cold).dump() == multiset_to_json(warm).dump());
}
