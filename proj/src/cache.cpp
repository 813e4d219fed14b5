#include "cswhit/cache.hpp"

#include <atomic>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "cswhit/serialization.hpp"

namespace cswhit {

namespace fs = std::filesystem;

MultiplicityCache::MultiplicityCache(fs::path dir) : dir_(std::move(dir)) {
  fs::create_directories(dir_);
}

fs::path MultiplicityCache::entry_path(const CartanType& type, const Coweight& lambda) const {
  std::ostringstream name;
  name << type.to_string();
  for (int i = 0; i < lambda.rank(); ++i) name << "_" << lambda[i];
  name << ".json";
  return dir_ / name.str();
}

std::string MultiplicityCache::canonical_bytes(const WeightMultiset& weights) {
  return multiset_to_json(weights).dump(2) + "\n";
}

std::optional<WeightMultiset> MultiplicityCache::get(const CartanType& type,
                                                     const Coweight& lambda) const {
  const fs::path path = entry_path(type, lambda);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    WeightMultiset w = multiset_from_json(j);
    if (!(w.type == type) || !(w.lambda == lambda))
      throw ParseError("cache entry key mismatch");
    return w;
  } catch (const std::exception& e) {
    std::cerr << "warning: ignoring unusable cache entry " << path.string() << ": " << e.what()
              << "\n";
    return std::nullopt;
  }
}

void MultiplicityCache::put(const WeightMultiset& weights) const {
  const fs::path path = entry_path(weights.type, weights.lambda);
  static std::atomic<unsigned> counter{0};
  std::random_device rd;
  std::ostringstream tmp_name;
  tmp_name << path.filename().string() << ".tmp." << rd() << "." << counter.fetch_add(1);
  const fs::path tmp = path.parent_path() / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DomainError("cache directory is not writable: " + dir_.string());
    out << canonical_bytes(weights);
  }
  fs::rename(tmp, path);  // atomic on POSIX within one filesystem
}

WeightMultiset cached_multiplicities(const RootDatum& datum, const Coweight& lambda,
                                     const MultiplicityCache* cache) {
  if (cache) {
    if (auto hit = cache->get(datum.type(), lambda)) return *hit;
  }
  WeightMultiset w = freudenthal_multiplicities(datum, lambda);
  if (cache) cache->put(w);
  return w;
}

}  // namespace cswhit
