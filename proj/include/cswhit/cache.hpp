#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "cswhit/characters.hpp"

namespace cswhit {

// On-disk cache of weight multisets, one canonical JSON file per
// (type, lambda) key. Writes are atomic (write-temp-then-rename), so
// concurrent producers of the same key leave one valid canonical file.
// Corrupt or version-mismatched entries are treated as misses.
class MultiplicityCache {
 public:
  explicit MultiplicityCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path entry_path(const CartanType& type, const Coweight& lambda) const;

  std::optional<WeightMultiset> get(const CartanType& type, const Coweight& lambda) const;
  void put(const WeightMultiset& weights) const;

  // The exact bytes put() writes for this multiset.
  static std::string canonical_bytes(const WeightMultiset& weights);

 private:
  std::filesystem::path dir_;
};

// Cache-through wrapper around freudenthal_multiplicities; with a null
// cache it simply computes.
WeightMultiset cached_multiplicities(const RootDatum& datum, const Coweight& lambda,
                                     const MultiplicityCache* cache);

}  // namespace cswhit
